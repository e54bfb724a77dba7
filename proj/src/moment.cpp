#include "dickson/moment.hpp"

#include "dickson/error.hpp"
#include "dickson/parallel.hpp"
#include "dickson/rdp.hpp"

namespace dickson {

namespace {

std::uint32_t residue_of(const FieldCtx& ctx, const FqElem& c) {
  for (int i = 1; i < ctx.e(); ++i)
    if (c.coeffs[i] != 0) throw Error(Errc::InternalInconsistency, "b coefficient outside F_p");
  return c.coeffs[0];
}

}  // namespace

BTable compute_b(const FieldCtx& ctx) {
  const std::uint64_t q = ctx.q();
  const std::uint32_t p = ctx.p();
  BTable t;
  t.b.assign(q * q - q + 1, 0);
  t.b[0] = p - 1;
  for (std::uint64_t beta = 0; beta < q; ++beta) {
    const std::uint64_t alpha = q - 1 - beta;
    const std::uint32_t c = binom_mod_p(q - 1, beta, p);
    // (-1)^{beta+1} C(q-1, beta)
    t.b[alpha + beta * q] = (beta % 2) ? c : (p - c) % p;
  }
  return t;
}

BTable compute_b_expansion(const FieldCtx& ctx) {
  const SeriesRing ring(ctx);
  const std::uint64_t q = ctx.q();
  const SeriesPoly base = ring.sub(ring.monomial(ctx.one(), 1), ring.monomial(ctx.one(), q));
  const SeriesPoly poly = ring.sub(ring.constant(ctx.from_int(-1)), ring.pow(base, q - 1));
  BTable t;
  t.b.assign(q * q - q + 1, 0);
  if (poly.degree() > static_cast<std::ptrdiff_t>(q * q - q))
    throw Error(Errc::InternalInconsistency, "b expansion exceeds degree q^2 - q");
  for (std::size_t i = 0; i < poly.coeffs().size(); ++i) t.b[i] = residue_of(ctx, poly.coeffs()[i]);
  return t;
}

SeriesPoly b_series(const FieldCtx& ctx, const BTable& table) {
  std::vector<FqElem> v;
  v.reserve(table.b.size());
  for (auto r : table.b) v.push_back(ctx.from_int(r));
  return SeriesPoly(std::move(v));
}

SeriesPoly moment_shift_poly(const FieldCtx& ctx) {
  const SeriesRing ring(ctx);
  const std::uint64_t q = ctx.q();
  return ring.sub(ring.sub(ring.monomial(ctx.one(), q), ring.monomial(ctx.one(), q - 1)),
                  ring.constant(ctx.one()));
}

SeriesPoly moment_weight(const FieldCtx& ctx) {
  const SeriesRing ring(ctx);
  const std::uint64_t q = ctx.q();
  const SeriesPoly t_minus_one = ring.from_ints({-1, 1});
  const FqElem quarter = ctx.quarter();
  SeriesPoly w = ring.monomial(ctx.one(), 2 * (q - 1));
  FqElem qpow = ctx.one();
  for (std::uint64_t m = 1; m <= q - 1; ++m) {
    qpow = ctx.mul(qpow, quarter);
    const SeriesPoly term = ring.mul(ring.pow(t_minus_one, q - 1 - m), ring.monomial(qpow, 2 * m));
    w = ring.add(w, term);
  }
  return w;
}

SeriesPoly compute_c(const FieldCtx& ctx, std::int64_t k, CForm form) {
  const SeriesRing ring(ctx);
  const std::uint64_t q = ctx.q();
  const SeriesPoly shift = moment_shift_poly(ctx);
  const SeriesPoly geometric_factor = form == CForm::Derived
                                          ? ring.monomial(ctx.one(), 1)
                                          : ring.from_ints({1 - k, k});
  const SeriesPoly first = ring.mul(ring.mul(shift, geometric_factor), ring.geometric(q * q - 2));
  const SeriesPoly numer = ring.from_ints({2 - k, k - 1});
  const SeriesPoly second =
      ring.mul(ring.mul(numer, moment_weight(ctx)), b_series(ctx, compute_b(ctx)));
  SeriesPoly c = ring.neg(ring.add(first, second));
  if (form == CForm::Derived) {
    if (!c.coeff(0).is_zero()) throw Error(Errc::InternalInconsistency, "c_0 must vanish");
    if (c.degree() > static_cast<std::ptrdiff_t>(q * q + q - 1))
      throw Error(Errc::InternalInconsistency, "c exceeds degree q^2 + q - 1");
  }
  return c;
}

std::vector<FqElem> run_d_recursion(const FieldCtx& ctx, const SeriesPoly& c) {
  const std::uint64_t q = ctx.q();
  const std::uint64_t top = q * q - 1;
  std::vector<FqElem> d(q * q);
  for (std::uint64_t j = 1; j <= q - 1; ++j) d[j] = ctx.neg(c.coeff(j));
  d[q] = ctx.sub(c.coeff(1), c.coeff(q));
  // forward through l = q-1, which reaches the tail block [q^2 - q, q^2 - 1]
  for (std::uint64_t l = 1; l <= q - 1; ++l) {
    if (l >= 2)
      d[l * q] = ctx.sub(ctx.sub(d[(l - 1) * q], d[(l - 1) * q + 1]), c.coeff(l * q));
    for (std::uint64_t j = 1; j <= q - 1; ++j) {
      const std::uint64_t n = l * q + j;
      d[n] = ctx.sub(ctx.sub(d[(l - 1) * q + j], d[(l - 1) * q + j + 1]), c.coeff(n));
    }
  }
  // tail: d_{q^2-q+j} = sum_{i=j}^{q-1} c_{q^2+i}
  FqElem tail;
  for (std::uint64_t j = q; j-- > 0;) {
    tail = ctx.add(tail, c.coeff(q * q + j));
    const std::uint64_t n = q * q - q + j;
    if (!(tail == d[n]))
      throw Error(Errc::InconsistentRecursion,
                  "forward recursion and tail closed form disagree at n = " + std::to_string(n));
  }
  if (c.degree() > static_cast<std::ptrdiff_t>(top + q))
    throw Error(Errc::InconsistentRecursion, "c has terms beyond degree q^2 + q - 1");
  return d;
}

FqElem moment_shift(const FieldCtx& ctx, Exponent n, std::int64_t k) {
  return value_at_quarter(ctx, n, k);
}

FqElem first_moment_direct(const FieldCtx& ctx, Exponent n, std::int64_t k) {
  FqElem sum;
  for (const auto& a : enumerate(ctx)) sum = ctx.add(sum, eval_functional(ctx, n, k, a));
  return sum;
}

FqElem first_moment_theorem(const FieldCtx& ctx, Exponent n, std::int64_t k) {
  if (n < 1 || n > ctx.q() * ctx.q() - 1)
    throw Error(Errc::OutOfRange, "moment reconstruction is defined for 1 <= n <= q^2 - 1");
  const auto d = run_d_recursion(ctx, compute_c(ctx, k));
  return ctx.add(d[n], moment_shift(ctx, n, k));
}

std::vector<FqElem> first_moments_by_rows(const FieldCtx& ctx, std::int64_t k, const SeriesPoly& c) {
  const std::uint64_t q = ctx.q();
  std::vector<FqElem> a(q * q);
  const FqElem kk = ctx.from_int(k);
  auto k_over_2_pow = [&](std::uint64_t m) { return ctx.div(kk, ctx.pow(ctx.from_int(2), m)); };
  for (std::uint64_t j = 1; j <= q - 1; ++j)
    a[j] = ctx.add(ctx.neg(c.coeff(j)), moment_shift(ctx, j, k));
  a[q] = ctx.sub(ctx.sub(c.coeff(1), c.coeff(q)), ctx.mul(ctx.from_int(k - 2), ctx.half()));
  for (std::uint64_t l = 1; l <= q - 2; ++l) {
    if (l >= 2)
      a[l * q] = ctx.add(ctx.sub(ctx.sub(a[(l - 1) * q], a[(l - 1) * q + 1]), c.coeff(l * q)),
                         k_over_2_pow(l));
    for (std::uint64_t j = 1; j <= q - 1; ++j) {
      const std::uint64_t n = l * q + j;
      a[n] = ctx.add(ctx.sub(ctx.sub(a[(l - 1) * q + j], a[(l - 1) * q + j + 1]), c.coeff(n)),
                     k_over_2_pow(l + j));
    }
  }
  FqElem tail;
  for (std::uint64_t j = q; j-- > 0;) {
    tail = ctx.add(tail, c.coeff(q * q + j));
    a[q * q - q + j] = ctx.add(tail, moment_shift(ctx, j, k));
  }
  return a;
}

std::vector<MomentRow> moment_table(const FieldCtx& ctx, std::int64_t k, Exponent n_lo,
                                    Exponent n_hi, std::size_t jobs) {
  const Exponent top = ctx.q() * ctx.q() - 1;
  if (n_lo < 1 || n_hi > top || n_lo > n_hi)
    throw Error(Errc::OutOfRange, "moment rows are defined for 1 <= n <= q^2 - 1");
  const auto d = run_d_recursion(ctx, compute_c(ctx, k));
  std::vector<MomentRow> rows(n_hi - n_lo + 1);
  parallel_for(rows.size(), jobs, [&](std::size_t i) {
    const Exponent n = n_lo + i;
    MomentRow& row = rows[i];
    row.n = n;
    row.d_n = d[n];
    row.reconstructed = ctx.add(d[n], moment_shift(ctx, n, k));
    row.direct = first_moment_direct(ctx, n, k);
    row.agrees = row.direct == row.reconstructed;
  });
  return rows;
}

bool check_moment_identity(const FieldCtx& ctx, std::int64_t k, const SeriesPoly& c) {
  const SeriesRing ring(ctx);
  const std::uint64_t q = ctx.q();
  std::vector<FqElem> d(q * q);
  for (Exponent n = 1; n <= q * q - 1; ++n)
    d[n] = ctx.sub(first_moment_direct(ctx, n, k), moment_shift(ctx, n, k));
  return ring.mul(moment_shift_poly(ctx), SeriesPoly(std::move(d))) == c;
}

bool check_h_factorization(const FieldCtx& ctx, std::int64_t k) {
  const SeriesRing ring(ctx);
  const std::uint64_t q = ctx.q();
  const SeriesPoly numer = ring.from_ints({2 - k, k - 1});
  const SeriesPoly t_minus_one = ring.from_ints({-1, 1});
  const SeriesPoly lhs =
      ring.mul(ring.mul(ring.sub(ring.monomial(ctx.one(), q * q - 1), ring.constant(ctx.one())), numer),
               moment_shift_poly(ctx));
  const SeriesPoly denom = ring.sub(ring.pow(t_minus_one, q),
                                    ring.mul(t_minus_one, ring.monomial(ctx.one(), 2 * (q - 1))));
  const SeriesPoly rhs = ring.mul(ring.mul(numer, b_series(ctx, compute_b(ctx))), denom);
  return lhs == rhs;
}

}  // namespace dickson
