#pragma once

// Test-only oracles and seeded generators. Nothing here is used by the library.

#include <cstdint>
#include <random>
#include <vector>

#include "dickson/field.hpp"

namespace dickson::testing {

using i128 = __int128;

/// Fixed-seed source of field elements, indices and kinds.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t below(std::uint64_t bound) {
    return std::uniform_int_distribution<std::uint64_t>(0, bound - 1)(rng_);
  }
  FqElem elem(const FieldCtx& ctx) { return ctx.from_index(below(ctx.q())); }
  FqElem nonzero(const FieldCtx& ctx) { return ctx.from_index(1 + below(ctx.q() - 1)); }
  Fq2Elem elem2(const FieldCtx& ctx) { return {elem(ctx), elem(ctx)}; }
  std::int64_t kind(const FieldCtx& ctx) { return static_cast<std::int64_t>(below(ctx.p())); }

 private:
  std::mt19937_64 rng_;
};

/// Exact C(n, r) for n <= 120.
inline i128 binom_exact(std::int64_t n, std::int64_t r) {
  if (r < 0 || r > n) return 0;
  i128 c = 1;
  for (std::int64_t i = 1; i <= r; ++i) c = c * (n - r + i) / i;
  return c;
}

inline std::int64_t mod_p(i128 v, std::uint32_t p) {
  const i128 r = v % p;
  return static_cast<std::int64_t>(r < 0 ? r + p : r);
}

/// D_{n,k}(a, x) straight from the rational-coefficient definition, with the division
/// (n - k i)/(n - i) carried out over the integers. n <= 60.
inline FqElem rdp_by_definition(const FieldCtx& ctx, std::int64_t n, std::int64_t k,
                                const FqElem& a, const FqElem& x) {
  if (n == 0) return ctx.from_int(2 - k);
  FqElem sum;
  for (std::int64_t i = 0; 2 * i <= n; ++i) {
    const i128 num = static_cast<i128>(n - k * i) * binom_exact(n - i, i);
    if (num % (n - i) != 0) throw std::logic_error("definition coefficient not integral");
    const FqElem c = ctx.from_int(mod_p(num / (n - i), ctx.p()));
    FqElem term = ctx.mul(c, ctx.mul(ctx.pow(ctx.neg(x), i), ctx.pow(a, n - 2 * i)));
    sum = ctx.add(sum, term);
  }
  return sum;
}

/// Every element of F_{q^2}, lo-major.
inline std::vector<Fq2Elem> all_ext(const FieldCtx& ctx) {
  std::vector<Fq2Elem> out;
  const auto base = enumerate(ctx);
  for (const auto& lo : base)
    for (const auto& hi : base) out.push_back({lo, hi});
  return out;
}

/// Both square roots of x found by exhaustive search over F_{q^2}.
inline std::vector<Fq2Elem> roots_by_search(const FieldCtx& ctx, const FqElem& x) {
  std::vector<Fq2Elem> out;
  for (const auto& z : all_ext(ctx))
    if (ctx.mul(z, z) == ctx.embed(x)) out.push_back(z);
  return out;
}

/// {v : v^q = 1 - v} by exhaustive search.
inline std::vector<Fq2Elem> v_by_search(const FieldCtx& ctx) {
  std::vector<Fq2Elem> out;
  const Fq2Elem one = ctx.embed(ctx.one());
  for (const auto& z : all_ext(ctx))
    if (ctx.pow(z, ctx.q()) == ctx.sub(one, z)) out.push_back(z);
  return out;
}

inline FqElem sum_over_field(const FieldCtx& ctx, auto&& f) {
  FqElem s;
  for (const auto& a : enumerate(ctx)) s = ctx.add(s, f(a));
  return s;
}

}  // namespace dickson::testing
