#pragma once

// Reduced eta invariants of the Dirac and signature operators on Berger
// spheres S^{2n-1}, as coefficients of generating functions in z with
// polynomial dependence on the Berger parameter rho.

#include <string>
#include <vector>

#include "genuskit/arith.hpp"
#include "genuskit/named_series.hpp"

namespace genuskit {

enum class EtaOperator { dirac, signature };

std::string to_string(EtaOperator op);

/// Generating function of the eta invariants of one operator. The Dirac series
/// is 1 + (1/2) sum eta_n z^n, the signature series 1 + sum eta_n z^n.
class EtaSeries {
 public:
  EtaSeries(EtaOperator op, ParamSeries generating);

  EtaOperator op() const { return op_; }
  int order() const { return generating_.order(); }
  const ParamSeries& generating() const { return generating_; }
  /// eta_n as a polynomial in rho (n >= 1).
  RatPolynomial eta(int n) const;
  /// eta_1 .. eta_order; index 0 holds the zero polynomial.
  std::vector<RatPolynomial> etas() const;

  friend bool operator==(const EtaSeries& a, const EtaSeries& b) {
    return a.op_ == b.op_ && a.generating_ == b.generating_;
  }

 private:
  EtaOperator op_;
  ParamSeries generating_;
};

/// z d/dz log(2 arsinh(rho z / 2))
EtaSeries dirac_eta_generating(int order);
/// Ratio of the two Newton-expansion sums; throws InternalConsistencyError if
/// it differs from dirac_eta_generating.
EtaSeries dirac_eta_ratio(int order);
/// z d/dz log(artanh(rho z))
EtaSeries signature_eta_generating(int order);
/// sum (rho z)^{2k} / sum (rho z)^{2k} / (2k+1); checked against the artanh form.
EtaSeries signature_eta_ratio(int order);

/// Habel's closed form -2 (-rho)^n res_x[x^{-n} (sum_l B_l(n/2)/l x^{n-l}) C(x + n/2 - 1, n - 1)].
RatPolynomial habel_eta(int n);

struct HabelEntry {
  int n;
  RatPolynomial habel;
  RatPolynomial ratio;
  bool agree;
  RatPolynomial difference;  ///< habel - ratio
  /// difference / rho^n is an integer (agreement modulo Z); true when agree.
  bool agree_mod_integers;
};

struct HabelReport {
  int n_max;
  int workers;
  std::vector<HabelEntry> entries;  // ordered by n = 1..n_max
  double wall_seconds;

  bool all_agree() const;
  std::vector<int> disagreements() const;
};

/// Compares habel_eta(n) with the ratio-form coefficient for n = 1..n_max.
/// Output does not depend on the worker count.
HabelReport verify_habel(int n_max, int workers = 1);

}  // namespace genuskit
