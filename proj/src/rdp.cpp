#include "dickson/rdp.hpp"

#include <array>

#include "dickson/error.hpp"
#include "dickson/series.hpp"

namespace dickson {

namespace {

std::uint32_t small_binom(std::uint64_t n, std::uint64_t r, std::uint32_t p) {
  if (r > n) return 0;
  if (r > n - r) r = n - r;
  std::uint64_t num = 1, den = 1;
  for (std::uint64_t j = 1; j <= r; ++j) {
    num = num * ((n - r + j) % p) % p;
    den = den * (j % p) % p;
  }
  // den is a product of integers < p, hence a unit
  std::uint64_t inv = 1, base = den;
  for (std::uint64_t ex = p - 2; ex; ex >>= 1) {
    if (ex & 1) inv = inv * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(num * inv % p);
}

// sum_{i <= n/2} coeff(i) * (-x)^i * a^{n - 2i}, n >= 1, Horner in (-x) from the top.
template <class CoeffFn>
FqElem dickson_sum(const FieldCtx& ctx, Exponent n, const FqElem& a, const FqElem& x,
                   CoeffFn coeff) {
  const FqElem z = ctx.neg(x);
  const FqElem a2 = ctx.mul(a, a);
  FqElem a_pow = (n % 2) ? a : ctx.one();  // a^{n - 2 i_max}
  FqElem acc;
  for (Exponent i = n / 2 + 1; i-- > 0;) {
    acc = ctx.add(ctx.mul(acc, z), ctx.mul(coeff(i), a_pow));
    a_pow = ctx.mul(a_pow, a2);
  }
  return acc;
}

// C(n - i - 1, i - 1), zero at i = 0
std::uint32_t shifted_binom(Exponent n, Exponent i, std::uint32_t p) {
  return i == 0 ? 0 : binom_mod_p(n - i - 1, i - 1, p);
}

FqElem rdp_coeff(const FieldCtx& ctx, Exponent n, std::int64_t k, Exponent i) {
  const std::uint32_t p = ctx.p();
  const FqElem e_part = ctx.from_int(binom_mod_p(n - i, i, p));
  const FqElem tail = ctx.from_int(shifted_binom(n, i, p));
  return ctx.sub(e_part, ctx.mul(ctx.from_int(k - 1), tail));
}

using Mat2 = std::array<FqElem, 4>;  // row-major

Mat2 mat_mul(const FieldCtx& ctx, const Mat2& l, const Mat2& r) {
  return {ctx.add(ctx.mul(l[0], r[0]), ctx.mul(l[1], r[2])),
          ctx.add(ctx.mul(l[0], r[1]), ctx.mul(l[1], r[3])),
          ctx.add(ctx.mul(l[2], r[0]), ctx.mul(l[3], r[2])),
          ctx.add(ctx.mul(l[2], r[1]), ctx.mul(l[3], r[3]))};
}

constexpr Exponent kIterativeLimit = 4096;

}  // namespace

std::uint32_t binom_mod_p(std::uint64_t n, std::uint64_t r, std::uint32_t p) noexcept {
  if (r > n) return 0;
  std::uint64_t result = 1;
  while (r > 0) {
    const std::uint64_t nd = n % p, rd = r % p;
    if (rd > nd) return 0;
    result = result * small_binom(nd, rd, p) % p;
    n /= p;
    r /= p;
  }
  return static_cast<std::uint32_t>(result);
}

RdpParams RdpParams::make(const FieldCtx& ctx, Exponent n, std::int64_t k, const FqElem& a) {
  const std::int64_t p = ctx.p();
  return {n, ((k % p) + p) % p, a};
}

RdpPoly rdp_poly(const FieldCtx& ctx, const RdpParams& params) {
  if (params.n == 0) return {{ctx.from_int(2 - params.k)}};
  const FqElem minus_one = ctx.from_int(-1);
  const FqElem a2 = ctx.mul(params.a, params.a);
  RdpPoly poly;
  poly.coeffs.resize(params.n / 2 + 1);
  // a^{n - 2i}, filled from the top index down
  FqElem a_pow = (params.n % 2) ? params.a : ctx.one();
  for (Exponent i = params.n / 2 + 1; i-- > 0;) {
    FqElem c = ctx.mul(rdp_coeff(ctx, params.n, params.k, i), a_pow);
    if (i % 2) c = ctx.mul(c, minus_one);
    poly.coeffs[i] = c;
    a_pow = ctx.mul(a_pow, a2);
  }
  return poly;
}

FqElem eval_coeff_sum(const FieldCtx& ctx, const RdpParams& params, const FqElem& x) {
  if (params.n == 0) return ctx.from_int(2 - params.k);
  return dickson_sum(ctx, params.n, params.a, x,
                     [&](Exponent i) { return rdp_coeff(ctx, params.n, params.k, i); });
}

FqElem eval_recursion_iterative(const FieldCtx& ctx, Exponent n, std::int64_t k, const FqElem& x) {
  FqElem prev = ctx.from_int(2 - k);  // D_0
  if (n == 0) return prev;
  FqElem cur = ctx.one();  // D_1
  for (Exponent m = 2; m <= n; ++m) {
    FqElem next = ctx.sub(cur, ctx.mul(x, prev));
    prev = cur;
    cur = next;
  }
  return cur;
}

FqElem eval_recursion_matrix(const FieldCtx& ctx, Exponent n, std::int64_t k, const FqElem& x) {
  const FqElem d0 = ctx.from_int(2 - k);
  if (n == 0) return d0;
  // (D_n, D_{n-1})^T = M^{n-1} (D_1, D_0)^T
  Mat2 result{ctx.one(), FqElem{}, FqElem{}, ctx.one()};
  Mat2 base{ctx.one(), ctx.neg(x), ctx.one(), FqElem{}};
  for (Exponent ex = n - 1; ex; ex >>= 1) {
    if (ex & 1) result = mat_mul(ctx, result, base);
    base = mat_mul(ctx, base, base);
  }
  return ctx.add(result[0], ctx.mul(result[1], d0));
}

FqElem eval_recursion(const FieldCtx& ctx, Exponent n, std::int64_t k, const FqElem& x) {
  return n <= kIterativeLimit ? eval_recursion_iterative(ctx, n, k, x)
                              : eval_recursion_matrix(ctx, n, k, x);
}

Exponent reduced_index(const FieldCtx& ctx, Exponent n, const FqElem& x) {
  if (n == 0) return 0;
  if (x == ctx.quarter()) {
    const Exponent period = Exponent{ctx.p()} * (ctx.p() - 1);
    return n % period;
  }
  const Exponent period = ctx.q() * ctx.q() - 1;
  return (n - 1) % period + 1;
}

FqElem value_at_quarter(const FieldCtx& ctx, Exponent n, std::int64_t k) {
  const FqElem kk = ctx.from_int(k);
  const FqElem nn = ctx.from_int(static_cast<std::int64_t>(n % ctx.p()));
  const FqElem num = ctx.add(ctx.sub(ctx.mul(kk, nn), kk), ctx.from_int(2));
  const FqElem den = ctx.pow(ctx.from_int(2), n % (ctx.q() - 1));
  return ctx.div(num, den);
}

Fq2Elem functional_form(const FieldCtx& ctx, Exponent n, std::int64_t k, const Fq2Elem& y) {
  const Fq2Elem one = ctx.embed(ctx.one());
  const Fq2Elem km1 = ctx.embed(ctx.from_int(k - 1));
  const Fq2Elem km2 = ctx.embed(ctx.from_int(k - 2));
  const Fq2Elem one_minus_y = ctx.sub(one, y);
  const Fq2Elem lead = ctx.mul(ctx.sub(km1, ctx.mul(km2, y)), ctx.pow(y, n));
  const Fq2Elem trail = ctx.mul(ctx.add(one, ctx.mul(km2, y)), ctx.pow(one_minus_y, n));
  const Fq2Elem denom = ctx.sub(ctx.add(y, y), one);
  return ctx.div(ctx.sub(lead, trail), denom);
}

FqElem eval_functional(const FieldCtx& ctx, Exponent n, std::int64_t k, const FqElem& x) {
  if (x == ctx.quarter()) return value_at_quarter(ctx, n, k);
  const Fq2Elem y = solve_y(ctx, x);
  const Fq2Elem value = functional_form(ctx, reduced_index(ctx, n, x), k, y);
  if (!value.in_base())
    throw Error(Errc::InternalInconsistency, "functional form left the base field");
  return value.lo;
}

std::pair<FqElem, FqElem> scale_identity(const FieldCtx& ctx, Exponent n, std::int64_t k,
                                         const FqElem& a, const FqElem& b, const FqElem& x) {
  if (a.is_zero() || b.is_zero()) throw Error(Errc::ZeroParam, "scaling parameters must be nonzero");
  const FqElem lhs = eval_coeff_sum(ctx, {n, k, a}, x);
  const FqElem ratio = ctx.div(b, a);
  const FqElem moved_x = ctx.mul(ctx.mul(ratio, ratio), x);
  const FqElem rhs =
      ctx.mul(ctx.pow(ctx.inv(ratio), n), eval_coeff_sum(ctx, {n, k, b}, moved_x));
  return {lhs, rhs};
}

FqElem eval_a_zero(const FieldCtx& ctx, Exponent n, std::int64_t k, const FqElem& x) {
  if (n == 0) return ctx.from_int(2 - k);
  if (n % 2) return FqElem{};
  FqElem v = ctx.mul(ctx.from_int(2 - k), ctx.pow(x, n / 2));
  return (n / 2) % 2 ? ctx.neg(v) : v;
}

bool check_generating_series(const FieldCtx& ctx, std::int64_t k, const FqElem& x, Exponent n_max) {
  if (n_max < 2) throw Error(Errc::BadRange, "n_max must be at least 2");
  const SeriesRing ring(ctx);
  std::vector<FqElem> values;
  values.reserve(n_max + 1);
  for (Exponent n = 0; n <= n_max; ++n) values.push_back(eval_coeff_sum(ctx, {n, k, ctx.one()}, x));
  const SeriesPoly series(std::move(values));
  const SeriesPoly denom(std::vector<FqElem>{ctx.one(), ctx.from_int(-1), x});
  const SeriesPoly product = ring.truncate(ring.mul(series, denom), n_max);
  const SeriesPoly numer(std::vector<FqElem>{ctx.from_int(2 - k), ctx.from_int(k - 1)});
  return product == numer;
}

Exponent checked_prime_power(std::uint32_t p, unsigned s) {
  constexpr Exponent kLimit = Exponent{1} << 62;
  Exponent r = 1;
  for (unsigned i = 0; i < s; ++i) {
    if (r > kLimit / p) throw Error(Errc::Overflow, "p^s exceeds the exponent budget");
    r *= p;
  }
  return r;
}

std::pair<FqElem, FqElem> closed_form_ps(const FieldCtx& ctx, unsigned s, std::int64_t k,
                                         const FqElem& x) {
  if (s == 0) throw Error(Errc::BadRange, "s must be positive");
  const Exponent ps = checked_prime_power(ctx.p(), s);
  const FqElem lhs = ctx.add(ctx.mul(ctx.pow(ctx.from_int(2), ps), eval_functional(ctx, ps, k, x)),
                             ctx.from_int(k - 2));
  const FqElem w = ctx.sub(ctx.one(), ctx.mul(ctx.from_int(4), x));
  const FqElem rhs = ctx.mul(ctx.from_int(k), ctx.pow(w, (ps - 1) / 2));
  return {lhs, rhs};
}

std::pair<FqElem, FqElem> closed_form_ps_pl(const FieldCtx& ctx, unsigned s, unsigned l,
                                            std::int64_t k, const FqElem& x) {
  if (s == 0 || s >= l) throw Error(Errc::BadRange, "need 0 < s < l");
  const Exponent ps = checked_prime_power(ctx.p(), s);
  const Exponent pl = checked_prime_power(ctx.p(), l);
  const FqElem lhs = eval_functional(ctx, ps + pl, k, x);
  const FqElem w = ctx.sub(ctx.one(), ctx.mul(ctx.from_int(4), x));
  const FqElem quarter = ctx.quarter();
  const FqElem first = ctx.mul(ctx.mul(ctx.from_int(k), quarter),
                               ctx.add(ctx.pow(w, (ps - 1) / 2), ctx.pow(w, (pl - 1) / 2)));
  const FqElem second = ctx.mul(ctx.mul(ctx.from_int(k - 2), quarter),
                                ctx.add(ctx.one(), ctx.pow(w, (ps + pl) / 2)));
  return {lhs, ctx.sub(first, second)};
}

FqElem aux_poly_eval(const FieldCtx& ctx, Exponent n, std::int64_t k, const FqElem& x) {
  if (n == 0) return ctx.from_int(2 - k);
  const std::uint32_t p = ctx.p();
  const FqElem kk = ctx.from_int(k);
  const FqElem km2 = ctx.from_int(k - 2);
  FqElem acc;
  for (Exponent j = n / 2 + 1; j-- > 0;) {
    const FqElem odd = ctx.mul(kk, ctx.from_int(binom_mod_p(n, 2 * j + 1, p)));
    const FqElem even = ctx.mul(km2, ctx.from_int(binom_mod_p(n, 2 * j, p)));
    acc = ctx.add(ctx.mul(acc, x), ctx.sub(odd, even));
  }
  return acc;
}

FqElem eval_first_kind(const FieldCtx& ctx, Exponent n, const FqElem& a, const FqElem& x) {
  if (n == 0) return ctx.from_int(2);
  const std::uint32_t p = ctx.p();
  return dickson_sum(ctx, n, a, x, [&](Exponent i) {
    return ctx.from_int(std::int64_t{binom_mod_p(n - i, i, p)} + shifted_binom(n, i, p));
  });
}

FqElem eval_second_kind(const FieldCtx& ctx, Exponent n, const FqElem& a, const FqElem& x) {
  if (n == 0) return ctx.one();
  const std::uint32_t p = ctx.p();
  return dickson_sum(ctx, n, a, x,
                     [&](Exponent i) { return ctx.from_int(binom_mod_p(n - i, i, p)); });
}

Fq2Elem first_kind_from_y(const FieldCtx& ctx, Exponent n, const Fq2Elem& y) {
  const Fq2Elem one_minus_y = ctx.sub(ctx.embed(ctx.one()), y);
  return ctx.add(ctx.pow(y, n), ctx.pow(one_minus_y, n));
}

Fq2Elem second_kind_from_y(const FieldCtx& ctx, Exponent n, const Fq2Elem& y) {
  const Fq2Elem one = ctx.embed(ctx.one());
  const Fq2Elem one_minus_y = ctx.sub(one, y);
  return ctx.div(ctx.sub(ctx.pow(y, n + 1), ctx.pow(one_minus_y, n + 1)),
                 ctx.sub(ctx.add(y, y), one));
}

}  // namespace dickson
