#include "genuskit/arith.hpp"

#include <cctype>

namespace genuskit {

namespace {

bool is_decimal_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

BigInt parse_integer(std::string_view s) {
  if (!is_decimal_integer(s)) throw DomainError("malformed integer: '" + std::string(s) + "'");
  if (s.front() == '+') s.remove_prefix(1);
  return BigInt(std::string(s), 10);
}

}  // namespace

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const BigInt den = parse_integer(text.substr(slash + 1));
  if (den < 0) throw DomainError("malformed rational (signed denominator): '" + std::string(text) + "'");
  return Rational(parse_integer(text.substr(0, slash)), den);
}

std::string Rational::to_string() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  q_ /= o.q_;
  return *this;
}

Rational invert(const Rational& a) {
  if (a.is_zero()) throw DomainError("zero is not invertible");
  return Rational(1) / a;
}

Rational pow(const Rational& base, unsigned exponent) {
  mpq_class r;
  mpz_pow_ui(r.get_num_mpz_t(), base.raw().get_num_mpz_t(), exponent);
  mpz_pow_ui(r.get_den_mpz_t(), base.raw().get_den_mpz_t(), exponent);
  return Rational(r);
}

// ---- GaussianRational -------------------------------------------------------

GaussianRational GaussianRational::parse(std::string_view text) {
  if (text.size() < 2 || text.substr(text.size() - 2) != "*i") return {Rational::parse(text), Rational(0)};
  // The separator is the '+' that starts the imaginary part; the real part
  // never contains '+' except as a leading sign.
  const auto body = text.substr(0, text.size() - 2);
  const auto plus = body.find('+', 1);
  if (plus == std::string_view::npos) throw DomainError("malformed Gaussian rational: '" + std::string(text) + "'");
  return {Rational::parse(body.substr(0, plus)), Rational::parse(body.substr(plus + 1))};
}

std::string GaussianRational::to_string() const {
  return re_.to_string() + "+" + im_.to_string() + "*i";
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (im_.is_zero() && o.im_.is_zero()) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator*=(const Rational& o) {
  re_ *= o;
  im_ *= o;
  return *this;
}

GaussianRational operator*(const Rational& a, const GaussianRational& b) { return b * a; }

GaussianRational invert(const GaussianRational& a) {
  if (a.is_zero()) throw DomainError("zero is not invertible");
  const Rational n = a.norm();
  return {a.re() / n, -a.im() / n};
}

// ---- special numbers --------------------------------------------------------

BigInt factorial(unsigned n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt binomial(long n, long k) {
  if (k < 0) return 0;
  BigInt r;
  if (n >= 0) {
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  } else {
    BigInt top(n);
    mpz_bin_ui(r.get_mpz_t(), top.get_mpz_t(), static_cast<unsigned long>(k));
  }
  return r;
}

BigInt central_binomial(unsigned k) {
  // C(2k, k) via the running product C(2j, j) = C(2j-2, j-1) (4j - 2) / j.
  BigInt c = 1;
  for (unsigned j = 1; j <= k; ++j) {
    c *= 4 * j - 2;
    mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), j);
  }
  return c;
}

std::vector<Rational> bernoulli_numbers(unsigned n) {
  // sum_{k=0}^{m} C(m+1, k) B_k = 0 for m >= 1.
  std::vector<Rational> b(n + 1);
  b[0] = 1;
  for (unsigned m = 1; m <= n; ++m) {
    Rational acc;
    BigInt c = 1;  // C(m+1, k), updated in the loop
    for (unsigned k = 0; k < m; ++k) {
      if (!b[k].is_zero()) acc += Rational(c) * b[k];
      c *= m + 1 - k;
      mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), k + 1);
    }
    b[m] = -acc / Rational(static_cast<long>(m + 1));
  }
  return b;
}

std::vector<RatPolynomial> bernoulli_polynomials(unsigned n) {
  // B_l(x) = sum_k C(l, k) B_k x^{l-k}
  const auto b = bernoulli_numbers(n);
  std::vector<RatPolynomial> out;
  out.reserve(n + 1);
  for (unsigned l = 0; l <= n; ++l) {
    std::vector<Rational> c(l + 1);
    BigInt binom = 1;
    for (unsigned k = 0; k <= l; ++k) {
      if (!b[k].is_zero()) c[l - k] = Rational(binom) * b[k];
      binom *= l - k;
      mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(), k + 1);
    }
    out.emplace_back(std::move(c));
  }
  return out;
}

RatPolynomial bernoulli_polynomial(unsigned l) { return bernoulli_polynomials(l)[l]; }

RatPolynomial binomial_polynomial(const Rational& shift, unsigned k) {
  RatPolynomial p(1);
  for (unsigned j = 0; j < k; ++j) {
    p *= RatPolynomial(std::vector<Rational>{shift - Rational(static_cast<long>(j)), Rational(1)});
  }
  return p * invert(Rational(factorial(k)));
}

}  // namespace genuskit

namespace genuskit {

namespace {

/// Numerators of v[0..t] over the lcm of their denominators.
BigInt to_common_denominator(const std::vector<Rational>& v, int t, std::vector<BigInt>& nums) {
  BigInt d = 1;
  for (int i = 0; i <= t; ++i) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), v[i].raw().get_den_mpz_t());
  nums.assign(t + 1, BigInt(0));
  for (int i = 0; i <= t; ++i) {
    if (v[i].is_zero()) continue;
    mpz_divexact(nums[i].get_mpz_t(), d.get_mpz_t(), v[i].raw().get_den_mpz_t());
    nums[i] *= v[i].raw().get_num();
  }
  return d;
}

}  // namespace

std::vector<Rational> truncated_convolution(const std::vector<Rational>& a, const std::vector<Rational>& b, int t) {
  if (t < 0) return {};
  if (static_cast<int>(a.size()) <= t || static_cast<int>(b.size()) <= t)
    throw InternalConsistencyError("truncated_convolution: operands shorter than t + 1");
  std::vector<BigInt> an, bn;
  const BigInt da = to_common_denominator(a, t, an);
  const BigInt db = to_common_denominator(b, t, bn);
  std::vector<BigInt> acc(t + 1, BigInt(0));
  for (int i = 0; i <= t; ++i) {
    if (an[i] == 0) continue;
    for (int j = 0; i + j <= t; ++j) {
      if (bn[j] == 0) continue;
      mpz_addmul(acc[i + j].get_mpz_t(), an[i].get_mpz_t(), bn[j].get_mpz_t());
    }
  }
  const BigInt den = da * db;
  std::vector<Rational> out(t + 1);
  for (int n = 0; n <= t; ++n)
    if (acc[n] != 0) out[n] = Rational(acc[n], den);
  return out;
}

}  // namespace genuskit
