#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "dickson/error.hpp"
#include "dickson/perm.hpp"
#include "dickson/rdp.hpp"
#include "support.hpp"

namespace dickson {
namespace {

class PermField : public ::testing::TestWithParam<int> {
 protected:
  FieldCtx ctx = make_field(GetParam(), 1);
  Exponent top() const { return ctx.q() * ctx.q() - 1; }
};

TEST_P(PermField, VSetMatchesSearch) {
  auto v = build_v(ctx).elems;
  auto found = testing::v_by_search(ctx);
  auto less = [&](const Fq2Elem& a, const Fq2Elem& b) { return ctx.ext_less(a, b); };
  std::sort(v.begin(), v.end(), less);
  std::sort(found.begin(), found.end(), less);
  EXPECT_EQ(v, found);
  EXPECT_EQ(two_to_one_domain(ctx).size(), 2 * ctx.q() - 2);
}

TEST_P(PermField, TwoToOneAgreesWithBruteForce) {
  for (std::int64_t k = 0; k < ctx.p(); ++k)
    for (Exponent n = 0; n <= top(); ++n) {
      const PermReport brute = is_pp_brute(ctx, n, k);
      const PermReport two = two_to_one_characterization(ctx, n, k);
      ASSERT_EQ(brute.is_pp, two.is_pp) << "n=" << n << " k=" << k;
      for (const auto* r : {&brute, &two}) {
        ASSERT_EQ(r->witness.has_value(), !r->is_pp);
        if (r->witness) {
          const auto [x1, x2] = *r->witness;
          EXPECT_NE(x1, x2);
          EXPECT_LT(ctx.index(x1), ctx.index(x2));
          EXPECT_EQ(eval_functional(ctx, n, k, x1), eval_functional(ctx, n, k, x2));
        }
      }
    }
}

TEST_P(PermField, MomentsDecidePermutationStatus) {
  // all N(v) = 1 mod p together with sum N(v) = q forces a bijection, so the power sums
  // for i in [1, q-1] decide PP status exactly
  for (std::int64_t k = 0; k < ctx.p(); ++k)
    for (Exponent n = 0; n <= top(); ++n) {
      bool hermite = moment(ctx, n, k, ctx.q() - 1) == ctx.from_int(-1);
      for (std::uint64_t i = 1; hermite && i + 1 < ctx.q(); ++i)
        hermite = moment(ctx, n, k, i).is_zero();
      EXPECT_EQ(hermite, is_pp_brute(ctx, n, k).is_pp) << "n=" << n << " k=" << k;
    }
  EXPECT_THROW(moment(ctx, 3, 1, ctx.q()), Error);
}

TEST_P(PermField, StructuralFacts) {
  for (std::int64_t k = 0; k < ctx.p(); ++k) {
    EXPECT_TRUE(necessary_mod6(ctx, k, top()).empty()) << "k=" << k;
    EXPECT_TRUE(never_pp_prime_power(ctx, k, 2));
    EXPECT_FALSE(is_pp_brute(ctx, ctx.p(), k).is_pp);
  }
}

TEST_P(PermField, AuxiliaryPolynomialEvenIndices) {
  for (std::int64_t k = 0; k < ctx.p(); ++k)
    for (Exponent n = 0; n <= top(); n += 2) {
      const auto [d_pp, aux_pp] = aux_poly_pp_equiv(ctx, n, k);
      EXPECT_EQ(d_pp, aux_pp) << "n=" << n << " k=" << k;
    }
}

TEST_P(PermField, AZeroCriterion) {
  for (std::int64_t k = 0; k < ctx.p(); ++k)
    for (Exponent n = 0; n <= top(); ++n)
      EXPECT_EQ(is_pp_with_param(ctx, n, k, ctx.zero()), a_zero_pp_criterion(ctx, n, k))
          << "n=" << n << " k=" << k;
  // k = 2 kills the only coefficient
  EXPECT_FALSE(a_zero_pp_criterion(ctx, 2, 2));
  EXPECT_TRUE(a_zero_pp_criterion(ctx, 2, 1));
}

TEST_P(PermField, ScalingKeepsStatus) {
  testing::Gen gen(0x51);
  for (int t = 0; t < 60; ++t) {
    const Exponent n = gen.below(top() + 1);
    const std::int64_t k = gen.kind(ctx);
    EXPECT_EQ(is_pp_with_param(ctx, n, k, gen.nonzero(ctx)), is_pp_brute(ctx, n, k).is_pp);
  }
}

INSTANTIATE_TEST_SUITE_P(Primes, PermField, ::testing::Values(5, 7, 11));

TEST(Perm, ExtensionField) {
  const FieldCtx ctx = make_field(5, 2);
  EXPECT_EQ(build_v(ctx).elems.size(), 25u);
  for (std::int64_t k = 0; k < 5; ++k)
    for (Exponent n = 0; n <= 120; ++n)
      ASSERT_EQ(two_to_one_characterization(ctx, n, k).is_pp, is_pp_brute(ctx, n, k).is_pp)
          << "n=" << n << " k=" << k;
  for (std::int64_t k = 0; k < 5; ++k) EXPECT_TRUE(never_pp_prime_power(ctx, k, 2));
}

TEST(Perm, KnownStatus) {
  const FieldCtx ctx = make_field(5, 1);
  // D_{1,k}(1, x) = 1 is constant; D_{2,k}(1, x) = 1 - (2 - k) x is linear unless k = 2
  for (std::int64_t k = 0; k < 5; ++k) {
    EXPECT_FALSE(is_pp_brute(ctx, 1, k).is_pp);
    EXPECT_EQ(is_pp_brute(ctx, 2, k).is_pp, k != 2);
  }
}

TEST(Perm, ScanRangesAndOrder) {
  const FieldCtx f5 = make_field(5, 1);
  const auto rows = pp_scan(f5, 3, 0, 24, {2, false});
  ASSERT_EQ(rows.size(), 25u);
  for (Exponent n = 0; n < 25; ++n) EXPECT_EQ(rows[n].n, n);
  EXPECT_FALSE(rows[5].is_pp);
  for (const auto& r : rows)
    if (r.is_pp) EXPECT_NE(r.n % 6, 1u);
  EXPECT_THROW(pp_scan(f5, 3, 0, 25), Error);
  EXPECT_THROW(pp_scan(f5, 3, 4, 2), Error);

  const FieldCtx f17 = make_field(17, 1);
  EXPECT_THROW(pp_scan(f17, 1, 0, 200), Error);
  EXPECT_EQ(pp_scan(f17, 1, 0, 100).size(), 101u);
}

TEST(Perm, FindCollisionOrder) {
  const FieldCtx ctx = make_field(7, 1);
  const auto w = find_collision(ctx, [&](const FqElem& x) { return ctx.mul(x, x); });
  ASSERT_TRUE(w);
  EXPECT_EQ(ctx.index(w->first), 3u);
  EXPECT_EQ(ctx.index(w->second), 4u);
  EXPECT_FALSE(find_collision(ctx, [&](const FqElem& x) { return ctx.add(x, ctx.one()); }));
}

}  // namespace
}  // namespace dickson
