#include <gtest/gtest.h>

#include "genuskit/genus.hpp"
#include "test_support.hpp"

using namespace genuskit;
using genuskit::testing::random_even_series;
using genuskit::testing::random_rational;

namespace {

Rational q(long n, long d = 1) { return Rational(BigInt(n), BigInt(d)); }

/// Product of monomials p_1^a p_2^b p_3^c ... as an exponent vector.
PontryaginPolynomial poly(int bound, std::initializer_list<std::pair<Exponents, Rational>> terms, int unit = 4) {
  PontryaginPolynomial p(bound, unit);
  for (const auto& [e, c] : terms) p.add_term(e, c);
  return p;
}

Rational ahat_value(int k) {
  return pow(q(-1, 16), k) * Rational(central_binomial(k));
}

/// e_k of the roots listed in `which` (1-based) inside a root context.
RootPolynomial elementary_of(const ChernRootContext& ctx, const std::vector<int>& which, int k) {
  std::vector<RootPolynomial> e{ctx.one()};
  for (int j : which) {
    std::vector<RootPolynomial> next(e.size() + 1, ctx.zero());
    for (std::size_t i = 0; i < e.size(); ++i) {
      next[i] += e[i];
      next[i + 1] += e[i] * ctx.root(j);
    }
    e = std::move(next);
  }
  return k < static_cast<int>(e.size()) ? e[k] : ctx.zero();
}

RootPolynomial evaluate_on(const ChernRootContext& ctx, const std::vector<int>& which, const PontryaginPolynomial& p) {
  RootPolynomial out = ctx.zero();
  for (const auto& [ex, c] : p.terms()) {
    RootPolynomial term = RootPolynomial::constant(c, ctx.root_count(), ctx.max_degree());
    for (std::size_t i = 0; i < ex.size(); ++i)
      for (unsigned r = 0; r < ex[i]; ++r) term = term * elementary_of(ctx, which, static_cast<int>(i) + 1);
    out += term;
  }
  return out;
}

}  // namespace

TEST(MultiplicativeSequence, RejectsBadSeries) {
  EXPECT_THROW(Genus(RationalSeries(RationalSeries::identity(4))), DomainError);
  EXPECT_THROW(Genus(RationalSeries(std::vector<Rational>{1, 1, 0})), DomainError);
  const Genus l(l_genus_series(6));
  EXPECT_EQ(series_exp(l.log_series()), l.series());
  EXPECT_EQ(l.log_coefficient(1), q(1, 3));
}

TEST(CpValue, LGenus) {
  const Genus l(l_genus_series(40));
  for (int n = 0; n <= 40; ++n) EXPECT_EQ(cp_value(l, n), q(n % 2 == 0 ? 1 : 0)) << "n=" << n;
}

TEST(CpValue, AhatGenus) {
  const Genus a(ahat_series(40));
  EXPECT_EQ(cp_value(a, 2), q(-1, 8));
  EXPECT_EQ(cp_value(a, 4), q(3, 128));
  for (int k = 0; k <= 20; ++k) EXPECT_EQ(cp_value(a, 2 * k), ahat_value(k)) << "k=" << k;
  for (int k = 0; k < 20; ++k) EXPECT_EQ(cp_value(a, 2 * k + 1), q(0));
}

TEST(CpValue, NeedsEnoughTerms) {
  EXPECT_THROW(cp_value(Genus(l_genus_series(4)), 6), TruncationError);
}

TEST(PhiPrime, Examples) {
  RationalSeries geo(20);
  for (int k = 0; k <= 20; k += 2) geo[k] = 1;
  EXPECT_EQ(phi_prime(Genus(l_genus_series(20)), 20), geo);
  // (1 + z^2/4)^{-1/2} = sum (-1/16)^k C(2k,k) z^{2k}
  RationalSeries newton(20);
  for (int k = 0; 2 * k <= 20; ++k) newton[2 * k] = ahat_value(k);
  EXPECT_EQ(phi_prime(Genus(ahat_series(20)), 20), newton);
  EXPECT_EQ(phi_prime(Genus(RationalSeries::one(10)), 10), RationalSeries::one(10));
}

TEST(PhiPrime, CoefficientsAreCpValues) {
  for (int trial = 0; trial < 6; ++trial) {
    const Genus g(trial == 0 ? l_genus_series(40) : trial == 1 ? ahat_series(40) : random_even_series(40, 20));
    const RationalSeries dphi = phi_prime(g, 40);
    for (int k = 0; k <= 20; ++k) EXPECT_EQ(dphi[2 * k], cp_value(g, 2 * k)) << "trial " << trial << " k=" << k;
  }
}

TEST(BallValue, Examples) {
  const Genus trivial(RationalSeries::one(10));
  for (int n = 1; n <= 10; ++n) EXPECT_TRUE(ball_value(trivial, n).is_zero());
  EXPECT_EQ(ball_value(Genus(l_genus_series(10)), 2), RatPolynomial::monomial(q(2, 3), 2));
  EXPECT_EQ(ball_value(Genus(ahat_series(10)), 2), RatPolynomial::monomial(q(-1, 12), 2));
  EXPECT_EQ(ball_value(Genus(l_genus_series(10)), 2, q(3)), q(6));
  EXPECT_THROW(ball_value(Genus(l_genus_series(4)), 5), TruncationError);
}

TEST(BallValue, ResidueFormsAgreeOnRandomSeries) {
  for (int trial = 0; trial < 25; ++trial) {
    const Genus g(random_even_series(40));
    for (int n = 1; n <= 18; ++n) {
      const BallResidues r = ball_residues(g, n);
      EXPECT_EQ(r.power_form, r.log_form) << "trial " << trial << " n=" << n;
    }
  }
}

TEST(SequenceFromCpValues, Examples) {
  EXPECT_EQ(sequence_from_cp_values(std::vector<Rational>(10, q(1)), 20).series(), l_genus_series(20));
  EXPECT_EQ(sequence_from_cp_values({}, 20).series(), RationalSeries::one(20));
  std::vector<Rational> ahat;
  for (int k = 1; k <= 10; ++k) ahat.push_back(ahat_value(k));
  EXPECT_EQ(sequence_from_cp_values(ahat, 20).series(), ahat_series(20));
}

TEST(SequenceFromCpValues, RoundTripOnRandomValues) {
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Rational> values;
    for (int k = 1; k <= 20; ++k) values.push_back(random_rational(30));
    const Genus g = sequence_from_cp_values(values, 40);
    for (int k = 1; k <= 20; ++k) EXPECT_EQ(cp_value(g, 2 * k), values[k - 1]) << "k=" << k;
  }
}

TEST(ExpandInPontryagin, Examples) {
  EXPECT_EQ(expand_in_pontryagin(Genus(RationalSeries::one(8)), 8), poly(8, {{{}, q(1)}}));
  const PontryaginPolynomial l = poly(8, {{{}, q(1)}, {{1}, q(1, 3)}, {{0, 1}, q(7, 45)}, {{2}, q(-1, 45)}});
  EXPECT_EQ(expand_in_pontryagin(Genus(l_genus_series(4)), 8), l);
  const PontryaginPolynomial a =
      poly(8, {{{}, q(1)}, {{1}, q(-1, 24)}, {{2}, q(7, 5760)}, {{0, 1}, q(-4, 5760)}});
  EXPECT_EQ(expand_in_pontryagin(Genus(ahat_series(4)), 8), a);
  EXPECT_THROW(expand_in_pontryagin(Genus(l_genus_series(4)), 6), DomainError);
}

TEST(ExpandInPontryagin, MatchesChernRootOracle) {
  for (int trial = 0; trial < 8; ++trial) {
    const RationalSeries F = trial == 0 ? l_genus_series(8) : trial == 1 ? ahat_series(8) : random_even_series(8);
    const ChernRootContext ctx(4, 16);
    EXPECT_EQ(ctx.to_classes(ctx.multiplicative(F)), expand_in_pontryagin(Genus(F), 16)) << "trial " << trial;
  }
}

TEST(ExpandInPontryagin, Multiplicative) {
  for (int trial = 0; trial < 10; ++trial) {
    const RationalSeries F = random_even_series(8, 20), G = random_even_series(8, 20);
    EXPECT_EQ(expand_in_pontryagin(Genus(F * G), 16),
              expand_in_pontryagin(Genus(F), 16) * expand_in_pontryagin(Genus(G), 16));
  }
}

TEST(ExpandInPontryagin, PlaneBundleReduction) {
  for (int trial = 0; trial < 10; ++trial) {
    const RationalSeries F = random_even_series(10);
    const ChernRootContext ctx(1, 20);
    EXPECT_EQ(ctx.evaluate(expand_in_pontryagin(Genus(F), 20)), ctx.series_of_root(1, F));
  }
}

TEST(ExpandInChern, LineBundle) {
  // For one line, the total class is F(c_1) itself.
  RationalSeries F = exp_series(6);
  const WeightedPolynomial<Rational> c = expand_in_chern(F, 12);
  const ChernRootContext ctx(1, 12, RootKind::chern);
  EXPECT_EQ(ctx.evaluate(c), ctx.series_of_root(1, F));
  const ChernRootContext ctx3(3, 12, RootKind::chern);
  EXPECT_EQ(ctx3.to_classes(ctx3.multiplicative(F)), c);
}

TEST(Quantized, PontryaginLeadingTerms) {
  EXPECT_EQ(quantized_pontryagin(1, 8), poly(8, {{{1}, q(1)}, {{2}, q(1, 12)}, {{0, 1}, q(-2, 12)}}));
  for (int k = 1; k <= 4; ++k) {
    const int w = 4 * k + 4;
    const PontryaginPolynomial pk = quantized_pontryagin(k, w);
    Exponents ek(k, 0), e1k(k, 0), ek1(k + 1, 0);
    ek[k - 1] = 1;
    e1k[0] += 1;
    e1k[k - 1] += 1;
    ek1[k] = 1;
    const PontryaginPolynomial expected = poly(w, {{ek, q(1)}, {e1k, q(1, 12)}, {ek1, q(-(k + 1), 12)}});
    EXPECT_EQ(pk.homogeneous_part(4 * k) + pk.homogeneous_part(4 * k + 4), expected) << "k=" << k;
    for (int w2 = 0; w2 < 4 * k; w2 += 4) EXPECT_TRUE(pk.homogeneous_part(w2).is_zero());
  }
  EXPECT_EQ(quantized_pontryagin(0, 8), poly(8, {{{}, q(1)}}));
}

TEST(Quantized, SymmetricAndChern) {
  EXPECT_EQ(quantized_symmetric(1, 4), poly(4, {{{1}, q(1)}}));
  // The leading part of S_k is the complete symmetric function h_k of the
  // squared roots: h_k = sum_{i=1}^k (-1)^{i-1} p_i h_{k-i}.
  std::vector<PontryaginPolynomial> h{poly(16, {{{}, q(1)}})};
  for (int k = 1; k <= 4; ++k) {
    PontryaginPolynomial hk(16);
    for (int i = 1; i <= k; ++i)
      hk += PontryaginPolynomial::variable(i, 16) * h[k - i] * q(i % 2 == 1 ? 1 : -1);
    h.push_back(hk);
  }
  for (int k = 1; k <= 4; ++k) {
    const PontryaginPolynomial sk = quantized_symmetric(k, 16);
    EXPECT_EQ(sk.homogeneous_part(4 * k), h[k]) << "k=" << k;
    for (int w = 0; w < 4 * k; w += 4) EXPECT_TRUE(sk.homogeneous_part(w).is_zero());
  }
  EXPECT_EQ(quantized_chern(1, 2), poly(2, {{{1}, q(1)}}, 2));
  EXPECT_EQ(quantized_chern(0, 6), poly(6, {{{}, q(1)}}, 2));
  // coefficient of t in prod (1 + t(e^x - 1)) for one line: e^x - 1
  const ChernRootContext ctx(1, 8, RootKind::chern);
  RationalSeries em1 = exp_series(4);
  em1[0] = 0;
  EXPECT_EQ(ctx.evaluate(quantized_chern(1, 8)), ctx.series_of_root(1, em1));
}

TEST(Quantized, WhitneySumRule) {
  const int w = 12;
  const ChernRootContext ctx(4, w);
  const std::vector<int> all{1, 2, 3, 4}, first{1, 2}, second{3, 4};
  for (int r = 0; r <= 3; ++r) {
    const RootPolynomial lhs = evaluate_on(ctx, all, quantized_pontryagin(r, w));
    RootPolynomial rhs = ctx.zero();
    for (int s = 0; s <= r; ++s)
      rhs += evaluate_on(ctx, first, quantized_pontryagin(s, w)) * evaluate_on(ctx, second, quantized_pontryagin(r - s, w));
    EXPECT_EQ(lhs, rhs) << "r=" << r;
  }
}

TEST(RootContext, SymmetricReductionRejectsAsymmetricInput) {
  const ChernRootContext ctx(2, 8);
  EXPECT_THROW(ctx.to_classes(ctx.root(1)), DomainError);
  EXPECT_EQ(ctx.to_classes(ctx.root(1) + ctx.root(2)), poly(8, {{{1}, q(1)}}));
}

TEST(SplittingIdentities, Examples) {
  EXPECT_TRUE(ch_exterior_identity_check(1, 0, 8).equal);
  EXPECT_EQ(ch_exterior_identity_check(1, 0, 8).lhs, poly(8, {{{}, q(1)}}));
  const IdentityWitness w = ch_exterior_identity_check(2, 1, 8);
  EXPECT_TRUE(w.equal);
  // e^{x1} + e^{-x1} + e^{x2} + e^{-x2} = 4 + p1 + (p1^2 - 2 p2) / 12
  EXPECT_EQ(w.lhs, poly(8, {{{}, q(4)}, {{1}, q(1)}, {{2}, q(1, 12)}, {{0, 1}, q(-1, 6)}}));
  EXPECT_TRUE(ch_exterior_identity_check(3, 2, 12).equal);
  EXPECT_TRUE(ch_symmetric_identity_check(1, 0, 8).equal);
  EXPECT_TRUE(ch_symmetric_identity_check(2, 1, 8).equal);
  EXPECT_TRUE(ch_symmetric_identity_check(2, 3, 8).equal);
}
