#include "dickson/verify.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>

#include "dickson/error.hpp"
#include "dickson/moment.hpp"
#include "dickson/parallel.hpp"
#include "dickson/perm.hpp"
#include "dickson/rdp.hpp"
#include "dickson/series.hpp"

namespace dickson {

bool VerifyReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const CheckResult* VerifyReport::find(const std::string& id) const {
  for (const auto& c : checks)
    if (c.id() == id) return &c;
  return nullptr;
}

const std::vector<Erratum>& errata() {
  static const std::vector<Erratum> items = {
      {"aux-poly-base-case",
       "base case of the auxiliary polynomial written as p_{0,k}(x) = 2^n(2-k) with n unbound",
       "p_{0,k} := 2-k, the value of the general sum at n = 0; D_{n,k}(1,x) = 2^{-n} p_{n,k}(1-4x) "
       "then holds for every n >= 0",
       {"identities/aux-poly-relation"}},
      {"moment-weight-exponent",
       "moment weight term written as (t-1)^{q-1-k}, reusing the kind index k as the exponent",
       "exponent q-1-m with m the summation index of "
       "W(t) = t^{2(q-1)} + sum_m (t-1)^{q-1-m} t^{2m} 4^{-m}",
       {"moments/moment-identity-oracle", "moments/moment-master"}},
      {"moment-kind-residues",
       "moment recursion constants specialised to one kind: numerator 2t-1 and shift (3n-1)/2^n "
       "are the k = 3 instances; geometric factor kt+1-k assumes D_{0,k} = 1 and holds only at k = 1",
       "numerator (k-1)t-k+2, shift (kn-k+2)/2^n and geometric factor t for every k",
       {"moments/moment-kind3-literal", "moments/moment-literal-first-term",
        "moments/moment-master"}},
      {"a-zero-criterion",
       "a = 0 case written with kind index k+1 and a PP criterion that omits k != 2",
       "D_{n,k}(0,x) = (2-k)(-1)^{n/2} x^{n/2} for even n and 0 for odd n, derived from the "
       "coefficient sum; PP iff n even, gcd(n/2, q-1) = 1 and k != 2 mod p",
       {"identities/a-zero-values", "perm/a-zero-criterion"}},
      {"quarter-constant",
       "2-to-1 criterion argument evaluates D_{n,k}(1,1/4) as (kn-k-2)/2^n",
       "excluded value is (kn-k+2)/2^n, the value at x = 1/4",
       {"identities/special-values", "perm/two-to-one-equivalence"}},
  };
  return items;
}

ErratumState erratum_state(const Erratum& item, const VerifyReport& report) {
  bool all_found = true;
  for (const auto& id : item.checks) {
    const CheckResult* c = report.find(id);
    if (!c) {
      all_found = false;
      continue;
    }
    if (!c->passed) return ErratumState::Failed;
  }
  return all_found ? ErratumState::Validated : ErratumState::NotRun;
}

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

Outcome pass(std::string detail = {}) { return {true, std::move(detail)}; }
Outcome fail(std::string detail) { return {false, std::move(detail)}; }

class Runner {
 public:
  explicit Runner(VerifyReport& report) : report_(report) {}

  template <class Fn>
  void check(const std::string& suite, const std::string& name, Fn&& fn) {
    const auto start = std::chrono::steady_clock::now();
    CheckResult result{suite, name, false, {}, 0.0};
    try {
      Outcome o = fn();
      result.passed = o.ok;
      result.detail = std::move(o.detail);
    } catch (const Error& e) {
      result.detail = std::string(errc_name(e.code())) + ": " + e.what();
    } catch (const std::exception& e) {
      result.detail = e.what();
    }
    result.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report_.checks.push_back(std::move(result));
  }

 private:
  VerifyReport& report_;
};

std::string at(const FieldCtx& ctx, Exponent n, std::int64_t k, const FqElem& x) {
  std::ostringstream os;
  os << "n=" << n << " k=" << k << " x=" << ctx.render(x);
  return os.str();
}

std::string at(Exponent n, std::int64_t k) {
  return "n=" + std::to_string(n) + " k=" + std::to_string(k);
}

// First failure over k = 0..p-1, computed in parallel, reported in k order.
template <class Fn>
std::optional<std::string> first_failure_over_kinds(const FieldCtx& ctx, std::size_t jobs, Fn&& fn) {
  std::vector<std::optional<std::string>> per_k(ctx.p());
  parallel_for(per_k.size(), jobs,
               [&](std::size_t k) { per_k[k] = fn(static_cast<std::int64_t>(k)); });
  for (auto& f : per_k)
    if (f) return f;
  return std::nullopt;
}

std::vector<FqElem> sample_or_all(const FieldCtx& ctx, std::size_t limit, std::mt19937_64& rng) {
  if (ctx.q() <= limit) return enumerate(ctx);
  std::vector<FqElem> out;
  std::uniform_int_distribution<std::uint64_t> pick(0, ctx.q() - 1);
  for (std::size_t i = 0; i < limit; ++i) out.push_back(ctx.from_index(pick(rng)));
  return out;
}

// ---------------------------------------------------------------------------------------------

void field_suite(const FieldCtx& ctx, Runner& run) {
  std::mt19937_64 rng(0x5eedf1e1dULL);
  const std::string s = "field";

  run.check(s, "field-axioms", [&] {
    const auto xs = sample_or_all(ctx, 49, rng);
    const FqElem one = ctx.one();
    for (const auto& a : xs) {
      if (!ctx.add(a, ctx.neg(a)).is_zero()) return fail("additive inverse at " + ctx.render(a));
      if (!a.is_zero() && !(ctx.mul(a, ctx.inv(a)) == one))
        return fail("multiplicative inverse at " + ctx.render(a));
      for (const auto& b : xs) {
        if (!(ctx.add(a, b) == ctx.add(b, a)) || !(ctx.mul(a, b) == ctx.mul(b, a)))
          return fail("commutativity at " + ctx.render(a) + "," + ctx.render(b));
        for (const auto& c : xs) {
          if (!(ctx.mul(ctx.mul(a, b), c) == ctx.mul(a, ctx.mul(b, c))))
            return fail("associativity at " + ctx.render(a));
          if (!(ctx.mul(a, ctx.add(b, c)) == ctx.add(ctx.mul(a, b), ctx.mul(a, c))))
            return fail("distributivity at " + ctx.render(a));
        }
      }
    }
    return pass(std::to_string(xs.size()) + " elements");
  });

  run.check(s, "frobenius", [&] {
    const auto lo = sample_or_all(ctx, 25, rng);
    const auto hi = sample_or_all(ctx, 25, rng);
    for (const auto& a : lo)
      for (const auto& b : hi) {
        const Fq2Elem z{a, b};
        if (!(ctx.pow(z, ctx.q()) == ctx.frobenius(z)))
          return fail("z^q != conjugate at lo=" + ctx.render(a) + " hi=" + ctx.render(b));
      }
    return pass();
  });

  run.check(s, "sqrt-ext", [&] {
    for (const auto& x : sample_or_all(ctx, 4096, rng)) {
      const Fq2Elem r = sqrt_in_ext(ctx, x);
      if (!(ctx.mul(r, r) == ctx.embed(x))) return fail("r^2 != x at x=" + ctx.render(x));
      if (ctx.is_square(x) && !r.in_base()) return fail("residue root left F_q at " + ctx.render(x));
      if (ctx.ext_less(ctx.neg(r), r)) return fail("non-canonical root at " + ctx.render(x));
    }
    return pass();
  });

  run.check(s, "solve-y", [&] {
    const Fq2Elem one = ctx.embed(ctx.one());
    for (const auto& x : sample_or_all(ctx, 4096, rng)) {
      const Fq2Elem y = solve_y(ctx, x);
      if (!(ctx.mul(y, ctx.sub(one, y)) == ctx.embed(x)))
        return fail("y(1-y) != x at x=" + ctx.render(x));
      const Fq2Elem yq = ctx.pow(y, ctx.q());
      if (!(yq == y) && !(yq == ctx.sub(one, y)))
        return fail("y^q not in {y, 1-y} at x=" + ctx.render(x));
    }
    if (!(solve_y(ctx, ctx.quarter()) == ctx.embed(ctx.half()))) return fail("y(1/4) != 1/2");
    return pass();
  });

  run.check(s, "power-sums", [&] {
    const auto all = enumerate(ctx);
    const std::uint64_t q = ctx.q();
    std::vector<std::uint64_t> exps;
    if (q <= 4096) {
      exps.resize(q);
      std::iota(exps.begin(), exps.end(), 0);
    } else {
      exps = {0, 1, 2, q / 2, q - 2, q - 1};
    }
    for (auto j : exps) {
      FqElem sum;
      for (const auto& u : all) sum = ctx.add(sum, ctx.pow(u, j));
      const FqElem expect = j == q - 1 ? ctx.from_int(-1) : FqElem{};
      if (!(sum == expect)) return fail("power sum wrong at exponent " + std::to_string(j));
    }
    return pass();
  });

  run.check(s, "v-set", [&] {
    const auto v = build_v(ctx);
    if (v.elems.size() != ctx.q()) return fail("|V| != q");
    const Fq2Elem one = ctx.embed(ctx.one());
    std::size_t in_base = 0;
    for (const auto& z : v.elems) {
      if (!(ctx.pow(z, ctx.q()) == ctx.sub(one, z))) return fail("v^q != 1 - v");
      if (!ctx.mul(z, ctx.sub(one, z)).in_base()) return fail("v(1-v) outside F_q");
      if (z.in_base()) {
        ++in_base;
        if (!(z.lo == ctx.half())) return fail("base-field member of V other than 1/2");
      }
    }
    if (in_base != 1) return fail("V meets F_q in " + std::to_string(in_base) + " elements");
    return pass();
  });
}

// ---------------------------------------------------------------------------------------------

void strategies_suite(const FieldCtx& ctx, const VerifyOptions& opt, Runner& run) {
  const std::string s = "strategies";
  const auto xs = enumerate(ctx);
  const std::int64_t p = ctx.p();

  run.check(s, "strategy-agreement", [&] {
    auto f = first_failure_over_kinds(ctx, opt.jobs, [&](std::int64_t k) -> std::optional<std::string> {
      for (const auto& x : xs) {
        FqElem prev = ctx.from_int(2 - k), cur = ctx.one();
        for (Exponent n = 0; n <= opt.strategy_n_max; ++n) {
          const FqElem rec = n == 0 ? prev : cur;
          const FqElem sum = eval_coeff_sum(ctx, {n, k, ctx.one()}, x);
          const FqElem fun = eval_functional(ctx, n, k, x);
          if (!(rec == sum) || !(sum == fun)) return at(ctx, n, k, x);
          if (n >= 1) {
            const FqElem next = ctx.sub(cur, ctx.mul(x, prev));
            prev = cur;
            cur = next;
          }
        }
      }
      return std::nullopt;
    });
    if (f) return fail(*f);
    return pass("n <= " + std::to_string(opt.strategy_n_max) + ", all k, all x");
  });

  run.check(s, "recursion-matrix", [&] {
    std::mt19937_64 rng(0xd1c450ULL);
    std::uniform_int_distribution<Exponent> pick_n(0, 1'000'000'000);
    std::uniform_int_distribution<std::uint64_t> pick_x(0, ctx.q() - 1);
    std::uniform_int_distribution<std::int64_t> pick_k(0, p - 1);
    for (int i = 0; i < 200; ++i) {
      const Exponent n = pick_n(rng);
      const std::int64_t k = pick_k(rng);
      const FqElem x = i % 10 == 0 ? ctx.quarter() : ctx.from_index(pick_x(rng));
      const FqElem mat = eval_recursion_matrix(ctx, n, k, x);
      const FqElem it = eval_recursion_iterative(ctx, reduced_index(ctx, n, x), k, x);
      const FqElem fun = eval_functional(ctx, n, k, x);
      if (!(mat == it) || !(it == fun)) return fail(at(ctx, n, k, x));
    }
    return pass("200 samples, n <= 1e9");
  });

  run.check(s, "kind-reduction", [&] {
    for (std::int64_t k = 0; k < p; ++k)
      for (const auto& x : xs)
        for (Exponent n = 0; n <= 60; ++n) {
          const FqElem base = eval_coeff_sum(ctx, {n, k, ctx.one()}, x);
          if (!(base == eval_coeff_sum(ctx, {n, k + p, ctx.one()}, x)) ||
              !(base == eval_coeff_sum(ctx, {n, k + 3 * p, ctx.one()}, x)))
            return fail(at(ctx, n, k, x));
        }
    return pass();
  });

  run.check(s, "kind-collapse", [&] {
    const FqElem one = ctx.one();
    const FqElem quarter = ctx.quarter();
    for (const auto& x : xs) {
      const Fq2Elem y = solve_y(ctx, x);
      for (Exponent n = 0; n <= 60; ++n) {
        const FqElem d0 = eval_coeff_sum(ctx, {n, 0, one}, x);
        if (!(d0 == eval_first_kind(ctx, n, one, x)) ||
            !(ctx.embed(d0) == first_kind_from_y(ctx, n, y)))
          return fail("first kind, " + at(ctx, n, 0, x));
        const FqElem d1 = eval_coeff_sum(ctx, {n, 1, one}, x);
        if (!(d1 == eval_second_kind(ctx, n, one, x)))
          return fail("second kind, " + at(ctx, n, 1, x));
        if (!(x == quarter) && !(ctx.embed(d1) == second_kind_from_y(ctx, n, y)))
          return fail("second kind via y, " + at(ctx, n, 1, x));
        if (n >= 1 && !(eval_coeff_sum(ctx, {n, 2, one}, x) == eval_second_kind(ctx, n - 1, one, x)))
          return fail("third kind vs E_{n-1}, " + at(ctx, n, 2, x));
      }
    }
    return pass();
  });
}

// ---------------------------------------------------------------------------------------------

void identities_suite(const FieldCtx& ctx, const VerifyOptions& opt, Runner& run) {
  const std::string s = "identities";
  const auto xs = enumerate(ctx);
  const std::int64_t p = ctx.p();
  const FqElem one = ctx.one();
  const Exponent n_max = opt.strategy_n_max;

  run.check(s, "recursion-residual", [&] {
    auto f = first_failure_over_kinds(ctx, opt.jobs, [&](std::int64_t k) -> std::optional<std::string> {
      for (const auto& x : xs) {
        FqElem d2 = eval_functional(ctx, 0, k, x), d1 = eval_functional(ctx, 1, k, x);
        for (Exponent n = 2; n <= n_max; ++n) {
          const FqElem d = eval_functional(ctx, n, k, x);
          if (!ctx.add(ctx.sub(d, d1), ctx.mul(x, d2)).is_zero()) return at(ctx, n, k, x);
          d2 = d1;
          d1 = d;
        }
      }
      return std::nullopt;
    });
    return f ? fail(*f) : pass();
  });

  run.check(s, "generating-series", [&] {
    for (std::int64_t k = 0; k < p; ++k)
      for (const auto& x : xs)
        if (!check_generating_series(ctx, k, x, opt.series_degree))
          return fail("k=" + std::to_string(k) + " x=" + ctx.render(x));
    return pass("through degree " + std::to_string(opt.series_degree));
  });

  run.check(s, "prime-power-closed-form", [&] {
    for (unsigned sp : {1u, 2u})
      for (std::int64_t k = 0; k < p; ++k)
        for (const auto& x : xs) {
          const auto [lhs, rhs] = closed_form_ps(ctx, sp, k, x);
          if (!(lhs == rhs)) return fail("s=" + std::to_string(sp) + " " + at(ctx, 0, k, x));
        }
    return pass("s in {1, 2}");
  });

  run.check(s, "two-prime-power-closed-form", [&] {
    for (std::int64_t k = 0; k < p; ++k)
      for (const auto& x : xs) {
        const auto [lhs, rhs] = closed_form_ps_pl(ctx, 1, 2, k, x);
        if (!(lhs == rhs)) return fail("(s,l)=(1,2) k=" + std::to_string(k) + " x=" + ctx.render(x));
      }
    return pass("(s, l) = (1, 2)");
  });

  run.check(s, "special-values", [&] {
    const FqElem quarter = ctx.quarter();
    for (std::int64_t k = 0; k < p; ++k)
      for (Exponent n = 0; n <= n_max; ++n) {
        const FqElem expect = value_at_quarter(ctx, n, k);
        if (!(eval_coeff_sum(ctx, {n, k, one}, quarter) == expect))
          return fail("x=1/4 " + at(n, k));
        const FqElem direct =
            ctx.div(ctx.from_int(k * static_cast<std::int64_t>(n % p) - k + 2),
                    ctx.pow(ctx.from_int(2), n));
        if (!(direct == expect)) return fail("(kn-k+2)/2^n " + at(n, k));
        for (const auto& a : xs) {
          const FqElem x = ctx.mul(ctx.mul(a, a), quarter);
          if (!(eval_coeff_sum(ctx, {n, k, a}, x) == ctx.mul(expect, ctx.pow(a, n))))
            return fail("x=a^2/4 a=" + ctx.render(a) + " " + at(n, k));
        }
      }
    return pass();
  });

  run.check(s, "period-six", [&] {
    for (std::int64_t k = 0; k < p; ++k) {
      const std::int64_t table[6] = {2 - k, 1, k - 1, k - 2, -1, 1 - k};
      for (Exponent n = 0; n <= n_max; ++n)
        if (!(eval_functional(ctx, n, k, one) == ctx.from_int(table[n % 6])))
          return fail(at(n, k) + " x=1");
    }
    return pass();
  });

  run.check(s, "aux-poly-relation", [&] {
    std::size_t odd_fail = 0, odd_total = 0;
    for (std::int64_t k = 0; k < p; ++k)
      for (Exponent n = 0; n <= opt.aux_n_max; ++n) {
        if (!(aux_poly_eval(ctx, n, k, FqElem{}) ==
              ctx.from_int(k * static_cast<std::int64_t>(n % p) - k + 2)))
          return fail("p_{n,k}(0) != kn-k+2 at " + at(n, k));
        const FqElem scale = ctx.inv(ctx.pow(ctx.from_int(2), n));
        for (const auto& x : xs) {
          const FqElem w = ctx.sub(one, ctx.mul(ctx.from_int(4), x));
          const bool ok = eval_coeff_sum(ctx, {n, k, one}, x) == ctx.mul(scale, aux_poly_eval(ctx, n, k, w));
          if (n % 2 == 0 && !ok) return fail("even " + at(ctx, n, k, x));
          if (n % 2) {
            ++odd_total;
            if (!ok) ++odd_fail;
          }
        }
      }
    return pass("even n all hold; odd n: " + std::to_string(odd_total - odd_fail) + "/" +
                std::to_string(odd_total) + " hold");
  });

  run.check(s, "scaling-identity", [&] {
    std::mt19937_64 rng(0x5ca1eULL);
    const auto params = sample_or_all(ctx, 13, rng);
    for (std::int64_t k = 0; k < p; ++k)
      for (const auto& a : params)
        for (const auto& b : params) {
          if (a.is_zero() || b.is_zero()) continue;
          for (const auto& x : xs)
            for (Exponent n = 0; n <= 30; ++n) {
              const auto [lhs, rhs] = scale_identity(ctx, n, k, a, b, x);
              if (!(lhs == rhs)) return fail(at(ctx, n, k, x) + " a=" + ctx.render(a) + " b=" + ctx.render(b));
            }
        }
    return pass();
  });

  run.check(s, "a-zero-values", [&] {
    for (std::int64_t k = 0; k < p; ++k)
      for (const auto& x : xs)
        for (Exponent n = 0; n <= n_max; ++n) {
          const FqElem v = eval_a_zero(ctx, n, k, x);
          if (!(v == eval_coeff_sum(ctx, {n, k, FqElem{}}, x))) return fail(at(ctx, n, k, x));
          if (n >= 2 && n % 2 == 0) {
            // (-1)^{n/2+1} (k-2) x^{n/2}
            FqElem alt = ctx.mul(ctx.from_int(k - 2), ctx.pow(x, n / 2));
            if ((n / 2 + 1) % 2) alt = ctx.neg(alt);
            if (!(alt == v)) return fail("sign form " + at(ctx, n, k, x));
          }
        }
    return pass();
  });
}

// ---------------------------------------------------------------------------------------------

void perm_suite(const FieldCtx& ctx, const VerifyOptions& opt, VerifyReport& report, Runner& run) {
  const std::string s = "perm";
  const std::int64_t p = ctx.p();
  const Exponent top = ctx.q() * ctx.q() - 1;
  const bool full = ctx.q() <= kDefaultScanFieldLimit || opt.allow_large;
  const Exponent n_hi = full ? top : std::min<Exponent>(top, opt.strategy_n_max);
  if (!full)
    report.notes.push_back("perm census truncated to n <= " + std::to_string(n_hi) +
                           " (q > 13; pass allow-large for the full range)");

  // census[k][n]
  std::vector<std::vector<PermReport>> census(p);
  ScanOptions scan{opt.jobs, true};
  for (std::int64_t k = 0; k < p; ++k) census[k] = pp_scan(ctx, k, 0, n_hi, scan);

  auto witness_ok = [&](const PermReport& r) {
    if (r.is_pp) return !r.witness.has_value();
    if (!r.witness || r.witness->first == r.witness->second) return false;
    return eval_functional(ctx, r.n, r.k, r.witness->first) ==
           eval_functional(ctx, r.n, r.k, r.witness->second);
  };

  run.check(s, "two-to-one-equivalence", [&] {
    std::size_t pps = 0;
    auto f = first_failure_over_kinds(ctx, opt.jobs, [&](std::int64_t k) -> std::optional<std::string> {
      for (const auto& brute : census[k]) {
        const PermReport t = two_to_one_characterization(ctx, brute.n, k);
        if (t.is_pp != brute.is_pp) return "verdicts differ at " + at(brute.n, k);
        if (!witness_ok(t) || !witness_ok(brute)) return "bad witness at " + at(brute.n, k);
      }
      return std::nullopt;
    });
    if (f) return fail(*f);
    for (const auto& row : census)
      for (const auto& r : row) pps += r.is_pp;
    return pass("n in [0, " + std::to_string(n_hi) + "], " + std::to_string(pps) + " PPs");
  });

  run.check(s, "mod6-necessary", [&] {
    for (const auto& row : census)
      for (const auto& r : row)
        if (r.is_pp && r.n % 6 == 1) return fail("PP with n = 1 mod 6 at " + at(r.n, r.k));
    return pass();
  });

  run.check(s, "prime-power-not-pp", [&] {
    for (std::int64_t k = 0; k < p; ++k)
      if (!never_pp_prime_power(ctx, k, static_cast<unsigned>(ctx.e())))
        return fail("k=" + std::to_string(k));
    return pass("s <= " + std::to_string(ctx.e()));
  });

  run.check(s, "scaling-pp-invariance", [&] {
    const Exponent limit = ctx.q() <= 7 ? n_hi : std::min<Exponent>(n_hi, 60);
    std::mt19937_64 rng(0xa11a5ULL);
    const auto params = sample_or_all(ctx, 13, rng);
    for (std::int64_t k = 0; k < p; ++k)
      for (Exponent n = 0; n <= limit; ++n)
        for (const auto& a : params) {
          if (a.is_zero()) continue;
          if (is_pp_with_param(ctx, n, k, a) != census[k][n].is_pp)
            return fail(at(n, k) + " a=" + ctx.render(a));
        }
    return pass("n <= " + std::to_string(limit));
  });

  run.check(s, "hermite-moments", [&] {
    std::size_t checked = 0;
    for (const auto& row : census)
      for (const auto& r : row) {
        if (!r.is_pp) continue;
        ++checked;
        if (!moment(ctx, r.n, r.k, 1).is_zero()) return fail("first moment nonzero at " + at(r.n, r.k));
        if (!(moment(ctx, r.n, r.k, ctx.q() - 1) == ctx.from_int(-1)))
          return fail("(q-1)-th moment != -1 at " + at(r.n, r.k));
      }
    return pass(std::to_string(checked) + " PPs");
  });

  run.check(s, "aux-poly-pp-equivalence", [&] {
    std::size_t odd_mismatch = 0;
    for (std::int64_t k = 0; k < p; ++k)
      for (Exponent n = 0; n <= n_hi; ++n) {
        const auto [d_pp, aux_pp] = aux_poly_pp_equiv(ctx, n, k);
        if (d_pp != census[k][n].is_pp) return fail("census mismatch at " + at(n, k));
        if (d_pp != aux_pp) {
          if (n % 2 == 0) return fail(at(n, k));
          ++odd_mismatch;
        }
      }
    return pass("even n equal; odd n mismatches: " + std::to_string(odd_mismatch));
  });

  run.check(s, "a-zero-criterion", [&] {
    std::size_t k2_cases = 0;
    for (std::int64_t k = 0; k < p; ++k)
      for (Exponent n = 0; n <= n_hi; ++n) {
        const bool brute = is_pp_with_param(ctx, n, k, FqElem{});
        if (brute != a_zero_pp_criterion(ctx, n, k)) return fail(at(n, k));
        // the criterion without the k != 2 clause
        const bool uncorrected = n >= 2 && n % 2 == 0 && std::gcd(n / 2, ctx.q() - 1) == 1;
        if (uncorrected != brute) ++k2_cases;
      }
    return pass("k != 2 clause decides " + std::to_string(k2_cases) + " cases");
  });
}

// ---------------------------------------------------------------------------------------------

void moments_suite(const FieldCtx& ctx, const VerifyOptions& opt, Runner& run) {
  const std::string s = "moments";
  const std::int64_t p = ctx.p();
  const Exponent top = ctx.q() * ctx.q() - 1;

  std::vector<SeriesPoly> cs(p);
  run.check(s, "compute-c", [&] {
    parallel_for(cs.size(), opt.jobs, [&](std::size_t k) { cs[k] = compute_c(ctx, static_cast<std::int64_t>(k)); });
    return pass("c_0 = 0 and deg c <= q^2+q-1 for all k");
  });

  run.check(s, "b-table-dual", [&] {
    const BTable closed = compute_b(ctx);
    if (closed.b != compute_b_expansion(ctx).b) return fail("closed form != expansion");
    // third route: -1 - (t - t^q)^{q-1} = (t^{q^2} - t) / (t - t^q)
    const SeriesRing ring(ctx);
    const SeriesPoly num = ring.sub(ring.monomial(ctx.one(), ctx.q() * ctx.q()), ring.monomial(ctx.one(), 1));
    const SeriesPoly den = ring.sub(ring.monomial(ctx.one(), 1), ring.monomial(ctx.one(), ctx.q()));
    if (!(ring.divide_exact(num, den) == b_series(ctx, closed))) return fail("closed form != quotient");
    return pass();
  });

  run.check(s, "h-factorization", [&] {
    for (std::int64_t k = 0; k < p; ++k)
      if (!check_h_factorization(ctx, k)) return fail("k=" + std::to_string(k));
    return pass();
  });

  run.check(s, "moment-identity-oracle", [&] {
    auto f = first_failure_over_kinds(ctx, opt.jobs, [&](std::int64_t k) -> std::optional<std::string> {
      if (!check_moment_identity(ctx, k, cs[k])) return "k=" + std::to_string(k);
      return std::nullopt;
    });
    return f ? fail(*f) : pass();
  });

  run.check(s, "moment-master", [&] {
    std::size_t mismatches = 0;
    std::string first;
    for (std::int64_t k = 0; k < p; ++k)
      for (const auto& row : moment_table(ctx, k, 1, top, opt.jobs))
        if (!row.agrees) {
          if (mismatches++ == 0) first = at(row.n, k);
        }
    if (mismatches) return fail(std::to_string(mismatches) + " mismatches, first at " + first);
    return pass("n in [1, " + std::to_string(top) + "], all k");
  });

  run.check(s, "moment-row-constants", [&] {
    std::size_t divergent = 0;
    std::string first;
    for (std::int64_t k = 0; k < p; ++k) {
      const auto d = run_d_recursion(ctx, cs[k]);
      const auto rows = first_moments_by_rows(ctx, k, cs[k]);
      for (Exponent n = 1; n <= top; ++n)
        if (!(rows[n] == ctx.add(d[n], moment_shift(ctx, n, k)))) {
          if (divergent++ == 0) first = at(n, k);
        }
    }
    if (divergent) return fail(std::to_string(divergent) + " divergent rows, first at " + first);
    return pass("per-row constants agree with d_n + (kn-k+2)/2^n");
  });

  run.check(s, "moment-kind3-literal", [&] {
    for (Exponent n = 1; n <= top; ++n) {
      const FqElem literal = ctx.div(ctx.from_int(3 * static_cast<std::int64_t>(n % p) - 1),
                                     ctx.pow(ctx.from_int(2), n));
      if (!(moment_shift(ctx, n, 3) == literal)) return fail("(3n-1)/2^n differs at n=" + std::to_string(n));
    }
    return pass();
  });

  run.check(s, "moment-literal-first-term", [&] {
    // kt + 1 - k must reproduce the moments at k = 1 and fail for every other k
    for (std::int64_t k = 0; k < p; ++k) {
      const SeriesPoly literal = compute_c(ctx, k, CForm::Literal);
      const bool holds = check_moment_identity(ctx, k, literal);
      if (holds != (k == 1)) return fail("unexpected behaviour at k=" + std::to_string(k));
      if (!(literal.coeff(0) == ctx.from_int(1 - k))) return fail("c_0 != 1-k at k=" + std::to_string(k));
    }
    return pass("literal factor valid only at k = 1");
  });
}

}  // namespace

VerifyReport run_verification(const FieldCtx& ctx, const VerifyOptions& options) {
  VerifyReport report;
  Runner run(report);
  auto enabled = [&](const std::string& suite) { return !options.skip.count(suite); };
  for (const auto& suite : options.skip)
    if (std::find(kVerifySuites.begin(), kVerifySuites.end(), suite) != kVerifySuites.end())
      report.notes.push_back("suite " + suite + " skipped on request");

  if (enabled("field")) field_suite(ctx, run);
  if (enabled("strategies")) strategies_suite(ctx, options, run);
  if (enabled("identities")) identities_suite(ctx, options, run);
  if (enabled("perm")) perm_suite(ctx, options, report, run);
  if (enabled("moments")) {
    if (ctx.q() > kDefaultScanFieldLimit && !options.allow_large)
      report.notes.push_back("suite moments not run: q > 13 needs allow-large");
    else
      moments_suite(ctx, options, run);
  }
  return report;
}

}  // namespace dickson
