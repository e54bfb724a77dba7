// Acceptance run: one PASS/FAIL line per criterion, exact equality throughout.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "dickson/moment.hpp"
#include "dickson/parallel.hpp"
#include "dickson/perm.hpp"
#include "dickson/rdp.hpp"
#include "dickson/verify.hpp"

namespace {

using namespace dickson;

struct Verdict {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

std::string at(Exponent n, std::int64_t k) {
  return "n=" + std::to_string(n) + " k=" + std::to_string(k);
}

std::string at(const FieldCtx& ctx, Exponent n, std::int64_t k, const FqElem& x) {
  return "q=" + std::to_string(ctx.q()) + " " + at(n, k) + " x=" + ctx.render(x);
}

const std::vector<std::pair<int, int>> kAllFields = {{5, 1}, {7, 1}, {5, 2}};
const std::vector<std::pair<int, int>> kPrimeFields = {{5, 1}, {7, 1}};

// 1. three evaluators agree
Verdict cross_strategy() {
  Verdict v;
  for (auto [p, e] : kAllFields) {
    const FieldCtx ctx = make_field(p, e);
    for (std::int64_t k = 0; k < ctx.p() && v.ok; ++k)
      for (const auto& x : enumerate(ctx))
        for (Exponent n = 0; n <= 200; ++n) {
          const FqElem sum = eval_coeff_sum(ctx, {n, k, ctx.one()}, x);
          if (!(sum == eval_recursion(ctx, n, k, x)) || !(sum == eval_recursion_matrix(ctx, n, k, x)) ||
              !(sum == eval_functional(ctx, n, k, x))) {
            v.fail(at(ctx, n, k, x));
            break;
          }
        }
  }
  if (v.ok) v.detail = "q in {5, 7, 25}, all k, all x, n <= 200";
  return v;
}

// 2. identity suite
Verdict identities() {
  Verdict v;
  std::size_t odd_total = 0, odd_hold = 0;
  for (auto [p, e] : kAllFields) {
    const FieldCtx ctx = make_field(p, e);
    const auto xs = enumerate(ctx);
    const FqElem one = ctx.one();
    for (std::int64_t k = 0; k < ctx.p(); ++k) {
      for (const auto& x : xs) {
        std::vector<FqElem> d;
        for (Exponent n = 0; n <= 200; ++n) d.push_back(eval_functional(ctx, n, k, x));
        for (Exponent n = 2; n <= 200; ++n)
          if (!ctx.add(ctx.sub(d[n], d[n - 1]), ctx.mul(x, d[n - 2])).is_zero())
            v.fail("recursion residual " + at(ctx, n, k, x));
        if (!check_generating_series(ctx, k, x, 50)) v.fail("series " + at(ctx, 50, k, x));
        for (unsigned s : {1u, 2u}) {
          const auto [l, r] = closed_form_ps(ctx, s, k, x);
          if (!(l == r)) v.fail("p^s closed form s=" + std::to_string(s) + " " + at(ctx, 0, k, x));
        }
        const auto [l, r] = closed_form_ps_pl(ctx, 1, 2, k, x);
        if (!(l == r)) v.fail("p^s + p^l closed form " + at(ctx, 0, k, x));
        const FqElem w = ctx.sub(one, ctx.mul(ctx.from_int(4), x));
        for (Exponent n = 0; n <= 100; ++n) {
          const bool holds =
              ctx.mul(ctx.pow(ctx.from_int(2), n), d[n]) == aux_poly_eval(ctx, n, k, w);
          if (n % 2 == 0 && !holds) v.fail("auxiliary relation " + at(ctx, n, k, x));
          if (n % 2) {
            ++odd_total;
            odd_hold += holds;
          }
        }
      }
      for (Exponent n = 0; n <= 200; ++n) {
        const std::int64_t period[6] = {2 - k, 1, k - 1, k - 2, -1, 1 - k};
        if (!(eval_functional(ctx, n, k, one) == ctx.from_int(period[n % 6])))
          v.fail("period six " + at(n, k));
        const FqElem quarter_value = ctx.div(
            ctx.from_int(k * static_cast<std::int64_t>(n % ctx.p()) - k + 2), ctx.pow(ctx.from_int(2), n));
        if (!(eval_coeff_sum(ctx, {n, k, one}, ctx.quarter()) == quarter_value))
          v.fail("value at 1/4 " + at(n, k));
      }
    }
  }
  if (v.ok)
    v.detail = "q in {5, 7, 25}; odd-n auxiliary relation holds " + std::to_string(odd_hold) + "/" +
               std::to_string(odd_total);
  return v;
}

// census[q][k][n]
std::vector<std::vector<std::vector<PermReport>>> census() {
  std::vector<std::vector<std::vector<PermReport>>> out;
  for (auto [p, e] : kPrimeFields) {
    const FieldCtx ctx = make_field(p, e);
    std::vector<std::vector<PermReport>> per_k;
    for (std::int64_t k = 0; k < ctx.p(); ++k)
      per_k.push_back(pp_scan(ctx, k, 0, ctx.q() * ctx.q() - 1, {default_jobs(), true}));
    out.push_back(std::move(per_k));
  }
  return out;
}

// 3. 2-to-1 criterion versus brute force
Verdict pp_equivalence(const std::vector<std::vector<std::vector<PermReport>>>& table) {
  Verdict v;
  std::size_t rows = 0;
  for (std::size_t f = 0; f < kPrimeFields.size(); ++f) {
    const FieldCtx ctx = make_field(kPrimeFields[f].first, kPrimeFields[f].second);
    for (const auto& per_k : table[f])
      for (const auto& brute : per_k) {
        ++rows;
        if (two_to_one_characterization(ctx, brute.n, brute.k).is_pp != brute.is_pp)
          v.fail("q=" + std::to_string(ctx.q()) + " " + at(brute.n, brute.k));
      }
  }
  if (v.ok) v.detail = std::to_string(rows) + " (q, k, n) cases, 0 disagreements";
  return v;
}

// 4. structural facts over the census
Verdict structural(const std::vector<std::vector<std::vector<PermReport>>>& table) {
  Verdict v;
  std::size_t pps = 0;
  for (std::size_t f = 0; f < kPrimeFields.size(); ++f) {
    const FieldCtx ctx = make_field(kPrimeFields[f].first, kPrimeFields[f].second);
    const auto xs = enumerate(ctx);
    for (const auto& per_k : table[f])
      for (const auto& r : per_k) {
        if (r.is_pp && r.n % 6 == 1) v.fail("PP with n = 1 mod 6 at " + at(r.n, r.k));
        for (const auto& a : xs)
          if (!a.is_zero() && is_pp_with_param(ctx, r.n, r.k, a) != r.is_pp)
            v.fail("scaling changes status at " + at(r.n, r.k) + " a=" + ctx.render(a));
        if (!r.is_pp) continue;
        ++pps;
        if (!moment(ctx, r.n, r.k, 1).is_zero()) v.fail("first moment at " + at(r.n, r.k));
        if (!(moment(ctx, r.n, r.k, ctx.q() - 1) == ctx.from_int(-1)))
          v.fail("(q-1)-th moment at " + at(r.n, r.k));
      }
  }
  for (auto [p, e] : kAllFields) {
    const FieldCtx ctx = make_field(p, e);
    for (int s = 1; s <= e; ++s)
      for (std::int64_t k = 0; k < ctx.p(); ++k)
        if (is_pp_brute(ctx, checked_prime_power(ctx.p(), s), k).is_pp)
          v.fail("PP at n = p^" + std::to_string(s) + " q=" + std::to_string(ctx.q()));
  }
  if (v.ok) v.detail = std::to_string(pps) + " PPs checked";
  return v;
}

// 5. moment machinery
Verdict moments() {
  Verdict v;
  for (auto [p, e] : kPrimeFields) {
    const FieldCtx ctx = make_field(p, e);
    for (std::int64_t k = 0; k < ctx.p(); ++k) {
      const SeriesPoly c = compute_c(ctx, k);
      if (!check_moment_identity(ctx, k, c)) v.fail("polynomial identity q=" + std::to_string(ctx.q()));
      for (const auto& row : moment_table(ctx, k, 1, ctx.q() * ctx.q() - 1, default_jobs()))
        if (!row.agrees) v.fail("moment mismatch q=" + std::to_string(ctx.q()) + " " + at(row.n, k));
    }
  }
  for (auto [p, e] : kAllFields) {
    const FieldCtx ctx = make_field(p, e);
    if (compute_b(ctx).b != compute_b_expansion(ctx).b)
      v.fail("b table q=" + std::to_string(ctx.q()));
  }
  if (v.ok) v.detail = "q in {5, 7}: 0 mismatches; b tables equal for q in {5, 7, 25}";
  return v;
}

// 6. errata report
Verdict errata_report() {
  Verdict v;
  if (errata().size() != 5) v.fail(std::to_string(errata().size()) + " errata listed");
  for (auto [p, e] : kPrimeFields) {
    const FieldCtx ctx = make_field(p, e);
    VerifyOptions options;
    options.jobs = default_jobs();
    const VerifyReport report = run_verification(ctx, options);
    for (const auto& item : errata()) {
      if (erratum_state(item, report) != ErratumState::Validated)
        v.fail(item.id + " not validated at q=" + std::to_string(ctx.q()));
    }
    if (!report.all_passed()) v.fail("verification failure at q=" + std::to_string(ctx.q()));
  }
  if (v.ok) v.detail = "5 items, every validating check passes at q in {5, 7}";
  return v;
}

bool report(int id, double budget, const std::function<Verdict()>& fn) {
  const auto start = std::chrono::steady_clock::now();
  Verdict v = fn();
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (v.ok && secs > budget) v.fail("over the " + std::to_string(static_cast<int>(budget)) + " s budget");
  std::printf("%s criterion %d: %s (%.2f s)\n", v.ok ? "PASS" : "FAIL", id, v.detail.c_str(), secs);
  std::fflush(stdout);
  return v.ok;
}

}  // namespace

int main() {
  bool ok = true;
  ok &= report(1, 30, cross_strategy);
  ok &= report(2, 60, identities);
  std::vector<std::vector<std::vector<PermReport>>> table;
  ok &= report(3, 300, [&] {
    table = census();
    return pp_equivalence(table);
  });
  ok &= report(4, 300, [&] { return structural(table); });
  ok &= report(5, 300, moments);
  ok &= report(6, 300, errata_report);
  return ok ? 0 : 1;
}
