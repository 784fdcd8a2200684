#include "genuskit/io.hpp"

#include <fstream>
#include <sstream>

namespace genuskit {

namespace {

template <class T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw DomainError(std::string("JSON: missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception& e) {
    throw DomainError(std::string("JSON: bad field '") + key + "': " + e.what());
  }
}

Rational rational_from(const Json& j) {
  if (!j.is_string()) throw DomainError("JSON: rational values are strings");
  return Rational::parse(j.get<std::string>());
}

}  // namespace

Json to_json(const RationalSeries& s) {
  Json coeffs = Json::array();
  for (const auto& c : s.coefficients()) coeffs.push_back(c.to_string());
  return {{"var", s.var()}, {"order", s.order()}, {"coefficients", coeffs}};
}

RationalSeries rational_series_from_json(const Json& j) {
  const auto coeffs = field<std::vector<Json>>(j, "coefficients");
  const int order = field<int>(j, "order");
  if (static_cast<int>(coeffs.size()) != order + 1) throw DomainError("JSON: series needs order + 1 coefficients");
  std::vector<Rational> c;
  for (const auto& x : coeffs) c.push_back(rational_from(x));
  return RationalSeries(std::move(c), field<std::string>(j, "var"));
}

Json to_json(const RatPolynomial& p) {
  Json out = Json::array();
  for (const auto& c : p.coefficients()) out.push_back(c.to_string());
  return out;
}

RatPolynomial rat_polynomial_from_json(const Json& j) {
  if (!j.is_array()) throw DomainError("JSON: polynomial must be an array of coefficient strings");
  std::vector<Rational> c;
  for (const auto& x : j) c.push_back(rational_from(x));
  return RatPolynomial(std::move(c));
}

Json to_json(const ParamSeries& s, std::string_view parameter) {
  Json coeffs = Json::array();
  for (const auto& c : s.coefficients()) coeffs.push_back(to_json(c));
  return {{"var", s.var()}, {"order", s.order()}, {"parameter", std::string(parameter)}, {"coefficients", coeffs}};
}

ParamSeries param_series_from_json(const Json& j) {
  const auto coeffs = field<std::vector<Json>>(j, "coefficients");
  const int order = field<int>(j, "order");
  if (static_cast<int>(coeffs.size()) != order + 1) throw DomainError("JSON: series needs order + 1 coefficients");
  std::vector<RatPolynomial> c;
  for (const auto& x : coeffs) c.push_back(rat_polynomial_from_json(x));
  return ParamSeries(std::move(c), field<std::string>(j, "var"));
}

Json to_json(const WeightedPolynomial<Rational>& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"exponents", e}, {"coeff", c.to_string()}});
  return {{"weight_bound", p.weight_bound()}, {"unit_weight", p.unit_weight()}, {"terms", terms}};
}

WeightedPolynomial<Rational> weighted_polynomial_from_json(const Json& j) {
  WeightedPolynomial<Rational> p(field<int>(j, "weight_bound"), field<int>(j, "unit_weight"));
  for (const auto& t : field<std::vector<Json>>(j, "terms"))
    p.add_term(field<Exponents>(t, "exponents"), rational_from(t.at("coeff")));
  return p;
}

Json to_json(const GradedElement& a) {
  Json gens = Json::array();
  for (const auto& g : a.table()->generators()) gens.push_back({{"name", g.name}, {"degree", g.degree}});
  Json terms = Json::array();
  for (const auto& [m, c] : a.terms()) {
    Json names = Json::array();
    for (std::size_t i = 0; i < m.size(); ++i)
      for (unsigned k = 0; k < m[i]; ++k) names.push_back((*a.table())[i].name);
    Json poly = Json::array();
    for (const auto& x : c.coefficients()) poly.push_back(x.to_string());
    terms.push_back({{"monomial", names}, {"coeff_t_poly", poly}});
  }
  return {{"generators", gens}, {"degree_bound", a.degree_bound()}, {"t_bound", a.t_bound()}, {"terms", terms}};
}

GradedElement graded_element_from_json(const Json& j) {
  auto table = std::make_shared<GeneratorTable>();
  for (const auto& g : field<std::vector<Json>>(j, "generators"))
    table->add(field<std::string>(g, "name"), field<int>(g, "degree"));
  GradedElement a(table, field<int>(j, "degree_bound"), field<int>(j, "t_bound"));
  for (const auto& t : field<std::vector<Json>>(j, "terms")) {
    int sign = 1;
    const Monomial m = a.monomial(field<std::vector<std::string>>(t, "monomial"), &sign);
    std::vector<GaussianRational> c;
    for (const auto& x : field<std::vector<std::string>>(t, "coeff_t_poly")) c.push_back(GaussianRational::parse(x));
    GaussPolynomial poly(std::move(c));
    a.add_term(m, sign < 0 ? -poly : poly);
  }
  return a;
}

Json to_json(const HabelEntry& e) {
  return {{"n", e.n},
          {"habel", e.habel.coeff(e.n).to_string()},
          {"ratio", e.ratio.coeff(e.n).to_string()},
          {"agree", e.agree}};
}

RationalSeries parse_series_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::string var;
  int order = -1;
  std::vector<Rational> coeffs;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream words(line);
    if (order < 0) {
      std::string tag, order_text;
      words >> tag >> var >> order_text;
      std::string extra;
      if (tag != "series" || var.empty() || order_text.empty() || (words >> extra))
        throw DomainError("series file: header must read 'series <var> <order>'");
      try {
        std::size_t used = 0;
        order = std::stoi(order_text, &used);
        if (used != order_text.size() || order < 0) throw DomainError("");
      } catch (const std::exception&) {
        throw DomainError("series file: bad order '" + order_text + "'");
      }
      continue;
    }
    std::string word;
    while (words >> word) coeffs.push_back(Rational::parse(word));
  }
  if (order < 0) throw DomainError("series file: missing 'series <var> <order>' header");
  if (static_cast<int>(coeffs.size()) != order + 1)
    throw DomainError("series file: expected " + std::to_string(order + 1) + " coefficients, found " +
                      std::to_string(coeffs.size()));
  return RationalSeries(std::move(coeffs), var);
}

std::string format_series_text(const RationalSeries& s) {
  std::string out = "series " + s.var() + " " + std::to_string(s.order()) + "\n";
  for (int k = 0; k <= s.order(); ++k) out += (k ? " " : "") + s[k].to_string();
  return out + "\n";
}

RationalSeries read_series_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open series file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_series_text(buf.str());
}

}  // namespace genuskit
