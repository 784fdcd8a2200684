#include "genuskit_cli/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "genuskit/errors.hpp"
#include "genuskit/eta.hpp"
#include "genuskit/genus.hpp"
#include "genuskit/io.hpp"
#include "genuskit/named_series.hpp"
#include "genuskit_cli/checks.hpp"
#include "genuskit_cli/table.hpp"

namespace genuskit::cli {

namespace {

using Cell = nlohmann::ordered_json;

struct Globals {
  std::string format = "pretty";
  int workers = std::max(1, static_cast<int>(std::thread::hardware_concurrency()));
  std::string out_path;
  bool approx = false;
};

struct SeriesSource {
  std::string name;
  std::string file;

  RationalSeries load(int order) const {
    if (!file.empty()) {
      RationalSeries s = read_series_file(file);
      if (s.order() < order)
        throw TruncationError("series file is known to order " + std::to_string(s.order()) + ", need " +
                              std::to_string(order));
      return s.truncated(order);
    }
    return named_series(name, order);
  }
};

/// nullopt for "symbolic".
std::optional<Rational> parse_rho(const std::string& text) {
  if (text == "symbolic") return std::nullopt;
  return Rational::parse(text);
}

std::string decimal(const Rational& r) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", r.to_double());
  return buf;
}

Format parse_format(const std::string& f) {
  if (f == "json") return Format::json;
  if (f == "csv") return Format::csv;
  return Format::pretty;
}

void add_series_options(CLI::App* cmd, SeriesSource& src) {
  auto* name = cmd->add_option("--series", src.name, "Named series: " + [] {
    std::string s;
    for (const auto& n : rational_series_names()) s += (s.empty() ? "" : ", ") + n;
    return s;
  }());
  auto* file = cmd->add_option("--series-file", src.file, "Series text file (header 'series <var> <order>')");
  name->excludes(file);
  file->excludes(name);
}

void require_series(const SeriesSource& src) {
  if (src.name.empty() && src.file.empty()) throw DomainError("one of --series or --series-file is required");
}

struct Outcome {
  Table table{{}};
  std::string summary;  // pretty format only
  bool failed = false;
};

Outcome genus_cp(const SeriesSource& src, int max_n, bool approx) {
  require_series(src);
  const Genus F(src.load(max_n));
  Outcome o;
  o.table = Table({"n", "value"});
  if (approx) o.table.add_column("approx");
  for (int n = 1; n <= max_n; ++n) {
    const Rational v = cp_value(F, n);
    std::vector<Cell> row{n, v.to_string()};
    if (approx) row.emplace_back(decimal(v));
    o.table.add_row(std::move(row));
  }
  return o;
}

Outcome genus_ball(const SeriesSource& src, int n, const std::string& rho_text, bool approx) {
  require_series(src);
  const std::optional<Rational> rho = parse_rho(rho_text);
  const Genus F(src.load(n));
  const BallResidues r = ball_residues(F, n);
  const RatPolynomial value = ball_value(F, n);  // throws if the two forms differ
  Outcome o;
  o.table = Table({"n", "rho", "power_form", "log_form", "value"});
  const bool numeric = approx && rho.has_value();
  if (numeric) o.table.add_column("approx");
  std::vector<Cell> row{n, rho_text, r.power_form.to_string(), r.log_form.to_string(),
                        rho ? value.evaluate(*rho).to_string() : to_string(value, "rho")};
  if (numeric) row.emplace_back(decimal(value.evaluate(*rho)));
  o.table.add_row(std::move(row));
  return o;
}

Outcome genus_pontryagin(const SeriesSource& src, int weight, std::optional<int> k) {
  WeightedPolynomial<Rational> p(0);
  std::string var = "p";
  if (k) {
    if (src.name == "p") p = quantized_pontryagin(*k, weight);
    else if (src.name == "s") p = quantized_symmetric(*k, weight);
    else if (src.name == "c") {
      p = quantized_chern(*k, weight);
      var = "c";
    } else {
      throw DomainError("--k needs --series p, s or c");
    }
  } else {
    require_series(src);
    if (weight % 4 != 0) throw DomainError("Pontryagin weight bound must be a multiple of 4");
    p = expand_in_pontryagin(Genus(src.load(weight / 2)), weight);
  }
  Outcome o;
  o.table = Table({"weight", "monomial", "exponents", "coeff"});
  std::vector<std::pair<Exponents, Rational>> terms(p.terms().begin(), p.terms().end());
  std::stable_sort(terms.begin(), terms.end(),
                   [&](const auto& a, const auto& b) { return p.weight(a.first) < p.weight(b.first); });
  for (const auto& [e, c] : terms) {
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += var + std::to_string(i + 1);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    o.table.add_row({p.weight(e), mono.empty() ? "1" : mono, Cell(e), c.to_string()});
  }
  o.summary = to_string(p, var);
  return o;
}

Outcome eta_table(const std::string& op, int order, const std::string& rho_text, bool approx) {
  const std::optional<Rational> rho = parse_rho(rho_text);
  const EtaSeries s = op == "dirac" ? dirac_eta_ratio(order) : signature_eta_ratio(order);
  Outcome o;
  o.table = Table({"n", "eta"});
  const bool numeric = approx && rho.has_value();
  if (numeric) o.table.add_column("approx");
  for (int n = 1; n <= order; ++n) {
    const RatPolynomial e = s.eta(n);
    std::vector<Cell> row{n, rho ? e.evaluate(*rho).to_string() : to_string(e, "rho")};
    if (numeric) row.emplace_back(decimal(e.evaluate(*rho)));
    o.table.add_row(std::move(row));
  }
  return o;
}

Outcome habel(int max_n, int workers) {
  const HabelReport report = verify_habel(max_n, workers);
  Outcome o;
  o.table = Table({"n", "habel", "ratio", "agree"});
  for (const HabelEntry& e : report.entries) {
    const Json j = to_json(e);
    o.table.add_row({e.n, j.at("habel").get<std::string>(), j.at("ratio").get<std::string>(), e.agree});
  }
  o.failed = !report.all_agree();
  if (o.failed) {
    std::string list;
    for (int n : report.disagreements()) list += (list.empty() ? "" : ", ") + std::to_string(n);
    o.summary = "disagreement at n = " + list;
  } else {
    o.summary = "all " + std::to_string(max_n) + " agree";
  }
  return o;
}

Outcome check(const std::string& suite, const CheckOptions& options) {
  const std::vector<CheckCase> cases = run_check_suite(suite, options);
  Outcome o;
  o.table = Table({"suite", "case", "pass", "detail"});
  int passed = 0;
  for (const CheckCase& c : cases) {
    o.table.add_row({suite, c.name, c.pass, c.detail});
    passed += c.pass ? 1 : 0;
  }
  o.failed = passed != static_cast<int>(cases.size());
  o.summary = suite + ": " + std::to_string(passed) + "/" + std::to_string(cases.size()) + " passed";
  return o;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations for multiplicative sequences, genera and eta invariants", "genuskit"};
  app.fallthrough();
  app.require_subcommand(1);

  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv", "pretty"}));
  app.add_option("--workers", g.workers, "Worker threads for parallel sweeps")->check(CLI::PositiveNumber);
  app.add_option("--out", g.out_path, "Write results to this file instead of standard output");
  app.add_flag("--approx", g.approx, "Add a decimal column (non-authoritative)");

  SeriesSource src;
  int max_n = 0, n = 1, weight = 0, order = 0;
  std::optional<int> k;
  std::string rho = "1", op;

  auto* genus = app.add_subcommand("genus", "Values of a multiplicative sequence");
  genus->require_subcommand(1);
  auto* cp = genus->add_subcommand("cp", "Values on CP^n for n = 1..max-n");
  add_series_options(cp, src);
  cp->add_option("--max-n", max_n)->required()->check(CLI::PositiveNumber);
  auto* ball = genus->add_subcommand("ball", "Integral over the collared ball B^{2n}");
  add_series_options(ball, src);
  ball->add_option("--n", n, "Complex dimension (default 1)")->check(CLI::PositiveNumber);
  ball->add_option("--rho", rho, "Exact rational or 'symbolic' (default 1)");
  auto* pont = genus->add_subcommand("pontryagin", "Universal polynomial in the Pontryagin classes");
  add_series_options(pont, src);
  pont->add_option("--weight", weight, "Weight bound")->required()->check(CLI::PositiveNumber);
  pont->add_option("--k", k, "Quantized class index, with --series p, s or c")->check(CLI::PositiveNumber);

  auto* eta = app.add_subcommand("eta", "Eta coefficients of the Dirac or signature operator in rho");
  eta->add_option("--operator", op)->required()->check(CLI::IsMember({"dirac", "signature"}));
  eta->add_option("--order", order)->required()->check(CLI::PositiveNumber);
  std::string eta_rho = "symbolic";
  eta->add_option("--rho", eta_rho, "Exact rational or 'symbolic' (default symbolic)");

  int habel_max = 16;
  auto* hab = app.add_subcommand("habel-verify", "Compare Habel's closed form with the ratio form");
  hab->add_option("--max-n", habel_max, "Largest n (default 16)")->check(CLI::PositiveNumber);

  std::string suite;
  CheckOptions copt;
  std::string check_rho;
  auto* chk = app.add_subcommand("check", "Run a named property suite");
  chk->add_option("suite", suite)->required()->check(CLI::IsMember(check_suite_names()));
  chk->add_option("--trials", copt.trials);
  chk->add_option("--order", copt.order);
  chk->add_option("--max-n", copt.max_n);
  chk->add_option("--degree", copt.degree_bound, "Form degree bound D (etf-ode)");
  chk->add_option("--t-degree", copt.t_bound, "t-degree bound (etf-ode)");
  chk->add_option("--weight", copt.weight);
  chk->add_option("--max-m", copt.max_m);
  chk->add_option("--max-d", copt.max_d);
  chk->add_option("--rho", check_rho, "Exact rational (null-reduction)");
  chk->add_option("--seed", copt.seed);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Outcome result;
  try {
    if (*cp) result = genus_cp(src, max_n, g.approx);
    else if (*ball) result = genus_ball(src, n, rho, g.approx);
    else if (*pont) result = genus_pontryagin(src, weight, k);
    else if (*eta) result = eta_table(op, order, eta_rho, g.approx);
    else if (*hab) result = habel(habel_max, g.workers);
    else if (*chk) {
      if (!check_rho.empty()) copt.rho = Rational::parse(check_rho);
      copt.workers = g.workers;
      result = check(suite, copt);
    }
  } catch (const InternalConsistencyError& e) {
    err << "consistency check failed: " << e.what() << '\n';
    return kExitCheckFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  std::ofstream file;
  if (!g.out_path.empty()) {
    file.open(g.out_path);
    if (!file) {
      err << "error: cannot open " << g.out_path << '\n';
      return kExitUsage;
    }
  }
  std::ostream& sink = g.out_path.empty() ? out : file;
  const Format format = parse_format(g.format);
  result.table.render(sink, format);
  if (format == Format::pretty && !result.summary.empty()) sink << result.summary << '\n';
  if (result.failed) {
    if (!result.summary.empty()) err << result.summary << '\n';
    return kExitCheckFailed;
  }
  return kExitOk;
}

}  // namespace genuskit::cli
