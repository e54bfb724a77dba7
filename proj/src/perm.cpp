#include "dickson/perm.hpp"

#include <map>
#include <numeric>

#include "dickson/error.hpp"
#include "dickson/parallel.hpp"
#include "dickson/rdp.hpp"

namespace dickson {

std::optional<std::pair<FqElem, FqElem>> find_collision(const FieldCtx& ctx, const FieldMap& f) {
  // image index -> first preimage index, q is the "unseen" marker
  std::vector<std::uint64_t> seen(ctx.q(), ctx.q());
  for (std::uint64_t i = 0; i < ctx.q(); ++i) {
    const FqElem x = ctx.from_index(i);
    const std::uint64_t img = ctx.index(f(x));
    if (seen[img] != ctx.q()) return std::pair{ctx.from_index(seen[img]), x};
    seen[img] = i;
  }
  return std::nullopt;
}

PermReport is_pp_brute(const FieldCtx& ctx, Exponent n, std::int64_t k) {
  PermReport report{n, k, false, std::nullopt, PermMethod::Brute};
  report.witness =
      find_collision(ctx, [&](const FqElem& x) { return eval_functional(ctx, n, k, x); });
  report.is_pp = !report.witness;
  return report;
}

FqElem moment(const FieldCtx& ctx, Exponent n, std::int64_t k, std::uint64_t i) {
  if (i > ctx.q() - 1) throw Error(Errc::BadRange, "moment order must lie in [0, q-1]");
  FqElem sum;
  for (const auto& a : enumerate(ctx)) sum = ctx.add(sum, ctx.pow(eval_functional(ctx, n, k, a), i));
  return sum;
}

VSet build_v(const FieldCtx& ctx) {
  // s^q = -s, so (lo + hi s)^q = 1 - (lo + hi s) exactly when lo = 1/2
  VSet v;
  v.elems.reserve(ctx.q());
  const FqElem half = ctx.half();
  for (const auto& hi : enumerate(ctx)) v.elems.push_back({half, hi});
  if (v.elems.size() != ctx.q()) throw Error(Errc::InternalInconsistency, "|V| != q");
  return v;
}

std::vector<Fq2Elem> two_to_one_domain(const FieldCtx& ctx) {
  const FqElem half = ctx.half();
  std::vector<Fq2Elem> domain;
  domain.reserve(2 * ctx.q() - 2);
  for (const auto& y : enumerate(ctx))
    if (!(y == half)) domain.push_back(ctx.embed(y));
  for (const auto& v : build_v(ctx).elems)
    if (!v.in_base()) domain.push_back(v);
  return domain;
}

PermReport two_to_one_characterization(const FieldCtx& ctx, Exponent n, std::int64_t k) {
  PermReport report{n, k, false, std::nullopt, PermMethod::TwoToOne};
  const Exponent reduced = n == 0 ? 0 : (n - 1) % (ctx.q() * ctx.q() - 1) + 1;
  const auto domain = two_to_one_domain(ctx);
  const FqElem one = ctx.one();

  // value index -> members of the fiber, in domain order
  std::map<std::uint64_t, std::vector<std::size_t>> fibers;
  std::vector<std::uint64_t> order;  // first-appearance order of fiber values
  for (std::size_t i = 0; i < domain.size(); ++i) {
    const Fq2Elem value = functional_form(ctx, reduced, k, domain[i]);
    if (!value.in_base())
      throw Error(Errc::InternalInconsistency, "2-to-1 map value outside the base field");
    auto [it, inserted] = fibers.try_emplace(ctx.index(value.lo));
    if (inserted) order.push_back(it->first);
    it->second.push_back(i);
  }

  auto x_of = [&](std::size_t i) {
    const Fq2Elem y = domain[i];
    const Fq2Elem x = ctx.mul(y, ctx.sub(ctx.embed(one), y));
    if (!x.in_base()) throw Error(Errc::InternalInconsistency, "y(1-y) outside the base field");
    return x.lo;
  };
  auto ordered = [&](FqElem a, FqElem b) {
    return ctx.index(a) < ctx.index(b) ? std::pair{a, b} : std::pair{b, a};
  };

  const std::uint64_t quarter_value = ctx.index(value_at_quarter(ctx, n, k));
  for (const auto value : order) {
    const auto& members = fibers[value];
    if (members.size() % 2)
      throw Error(Errc::InternalInconsistency, "fiber of odd size; f(y) = f(1-y) violated");
    if (value == quarter_value) {
      report.witness = ordered(ctx.quarter(), x_of(members.front()));
      return report;
    }
    if (members.size() > 2) {
      const FqElem first = x_of(members.front());
      for (auto m : members) {
        const FqElem other = x_of(m);
        if (!(other == first)) {
          report.witness = ordered(first, other);
          return report;
        }
      }
      throw Error(Errc::InternalInconsistency, "oversized fiber maps to a single x");
    }
  }
  report.is_pp = true;
  return report;
}

std::vector<Exponent> necessary_mod6(const FieldCtx& ctx, std::int64_t k, Exponent n_max) {
  std::vector<Exponent> violations;
  for (Exponent n = 1; n <= n_max; n += 6)
    if (is_pp_brute(ctx, n, k).is_pp) violations.push_back(n);
  return violations;
}

bool never_pp_prime_power(const FieldCtx& ctx, std::int64_t k, unsigned s_max) {
  const std::uint64_t half_p = (ctx.p() - 1) / 2;
  for (unsigned s = 1; s <= s_max; ++s) {
    const Exponent ps = checked_prime_power(ctx.p(), s);
    if (is_pp_brute(ctx, ps, k).is_pp) return false;
    const std::uint64_t g = std::gcd((ps - 1) / 2, ctx.q() - 1);
    if (g < half_p || g <= 1 || g % half_p != 0) return false;
  }
  return true;
}

std::pair<bool, bool> aux_poly_pp_equiv(const FieldCtx& ctx, Exponent n, std::int64_t k) {
  const bool d_pp = is_pp_brute(ctx, n, k).is_pp;
  const bool aux_pp =
      !find_collision(ctx, [&](const FqElem& x) { return aux_poly_eval(ctx, n, k, x); });
  return {d_pp, aux_pp};
}

bool is_pp_with_param(const FieldCtx& ctx, Exponent n, std::int64_t k, const FqElem& a) {
  return !find_collision(ctx, [&](const FqElem& x) { return eval_coeff_sum(ctx, {n, k, a}, x); });
}

bool a_zero_pp_criterion(const FieldCtx& ctx, Exponent n, std::int64_t k) {
  const std::int64_t p = ctx.p();
  if (n == 0 || n % 2) return false;
  if (((k - 2) % p + p) % p == 0) return false;
  return std::gcd(n / 2, ctx.q() - 1) == 1;
}

std::vector<PermReport> pp_scan(const FieldCtx& ctx, std::int64_t k, Exponent n_lo, Exponent n_hi,
                                const ScanOptions& options) {
  const Exponent top = ctx.q() * ctx.q() - 1;
  if (n_lo > n_hi || n_hi > top) throw Error(Errc::BadRange, "scan range must lie in [0, q^2-1]");
  if (!options.allow_large && ctx.q() > kDefaultScanFieldLimit &&
      n_hi - n_lo + 1 > kDefaultScanFieldLimit * kDefaultScanFieldLimit)
    throw Error(Errc::BadRange, "census for q > 13 over this range needs allow_large");
  std::vector<PermReport> out(n_hi - n_lo + 1);
  parallel_for(out.size(), options.jobs, [&](std::size_t i) { out[i] = is_pp_brute(ctx, n_lo + i, k); });
  return out;
}

}  // namespace dickson
