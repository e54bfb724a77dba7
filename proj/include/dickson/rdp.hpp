#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "dickson/field.hpp"

// Reversed Dickson polynomials D_{n,k}(a, x) of the (k+1)-th kind:
//
//   D_{n,k}(a, x) = sum_{i <= n/2} (n - k i)/(n - i) * C(n - i, i) * (-x)^i * a^{n - 2i},
//   D_{0,k}(a, x) = 2 - k.
//
// The rational coefficient is never formed directly. Since
// (n - k i)/(n - i) = k - (k - 1) n/(n - i) and n/(n - i) C(n-i, i) = C(n-i, i) + C(n-i-1, i-1),
// the i-th coefficient is the integer C(n-i, i) - (k-1) C(n-i-1, i-1), reduced mod p by Lucas.

namespace dickson {

/// C(n, r) mod p by Lucas' theorem.
std::uint32_t binom_mod_p(std::uint64_t n, std::uint64_t r, std::uint32_t p) noexcept;

/// A query (n, k, a). make() reduces k into [0, p); evaluators accept any k and use k mod p.
struct RdpParams {
  Exponent n = 0;
  std::int64_t k = 0;
  FqElem a;

  static RdpParams make(const FieldCtx& ctx, Exponent n, std::int64_t k, const FqElem& a);
};

/// coeffs[i] is the coefficient of x^i in D_{n,k}(a, x).
struct RdpPoly {
  std::vector<FqElem> coeffs;
};

RdpPoly rdp_poly(const FieldCtx& ctx, const RdpParams& params);

/// Horner evaluation of the coefficient sum. O(n) field operations.
FqElem eval_coeff_sum(const FieldCtx& ctx, const RdpParams& params, const FqElem& x);

/// D_{n,k}(1, x) by D_n = D_{n-1} - x D_{n-2}, D_0 = 2 - k, D_1 = 1. O(n).
FqElem eval_recursion_iterative(const FieldCtx& ctx, Exponent n, std::int64_t k, const FqElem& x);
/// Same sequence via powers of the companion matrix [[1, -x], [1, 0]]. O(log n).
FqElem eval_recursion_matrix(const FieldCtx& ctx, Exponent n, std::int64_t k, const FqElem& x);
/// Iterative for small n, matrix otherwise.
FqElem eval_recursion(const FieldCtx& ctx, Exponent n, std::int64_t k, const FqElem& x);

/// Smallest index with the same value of D_{., k}(1, x) as n:
/// period q^2 - 1 on n >= 1 when x != 1/4, period p(p - 1) at x = 1/4.
Exponent reduced_index(const FieldCtx& ctx, Exponent n, const FqElem& x);

/// (k n - k + 2) / 2^n, the value at x = 1/4.
FqElem value_at_quarter(const FieldCtx& ctx, Exponent n, std::int64_t k);

/// f(y) = ((k-1-(k-2)y) y^n - (1+(k-2)y)(1-y)^n) / (2y - 1) in F_{q^2}. Requires y != 1/2.
Fq2Elem functional_form(const FieldCtx& ctx, Exponent n, std::int64_t k, const Fq2Elem& y);

/// D_{n,k}(1, x) through y = solve_y(x) and functional_form. Throws InternalInconsistency
/// if the result leaves F_q.
FqElem eval_functional(const FieldCtx& ctx, Exponent n, std::int64_t k, const FqElem& x);

/// (D_{n,k}(a, x), a^n / b^n * D_{n,k}(b, b^2 x / a^2)). Throws ZeroParam if a or b is zero.
std::pair<FqElem, FqElem> scale_identity(const FieldCtx& ctx, Exponent n, std::int64_t k,
                                         const FqElem& a, const FqElem& b, const FqElem& x);

/// D_{n,k}(0, x): 0 for odd n, (2 - k)(-1)^{n/2} x^{n/2} for even n.
FqElem eval_a_zero(const FieldCtx& ctx, Exponent n, std::int64_t k, const FqElem& x);

/// (1 - t + x t^2) * sum_{n <= n_max} D_{n,k}(1, x) t^n == (k-1) t + (2-k) through degree n_max.
bool check_generating_series(const FieldCtx& ctx, std::int64_t k, const FqElem& x, Exponent n_max);

/// (2^{p^s} D_{p^s,k}(1, x) + k - 2,  k (1 - 4x)^{(p^s - 1)/2}).
std::pair<FqElem, FqElem> closed_form_ps(const FieldCtx& ctx, unsigned s, std::int64_t k,
                                         const FqElem& x);

/// (D_{p^s + p^l, k}(1, x), closed form in 1 - 4x). Throws BadRange unless 0 < s < l.
std::pair<FqElem, FqElem> closed_form_ps_pl(const FieldCtx& ctx, unsigned s, unsigned l,
                                            std::int64_t k, const FqElem& x);

/// p_{n,k}(x) = k sum_j C(n, 2j+1) x^j - (k-2) sum_j C(n, 2j) x^j, with p_{0,k} = 2 - k.
FqElem aux_poly_eval(const FieldCtx& ctx, Exponent n, std::int64_t k, const FqElem& x);

/// Reversed Dickson of the first kind D_n(a, x) from its own coefficients; D_0 = 2.
FqElem eval_first_kind(const FieldCtx& ctx, Exponent n, const FqElem& a, const FqElem& x);
/// Reversed Dickson of the second kind E_n(a, x) from its own coefficients; E_0 = 1.
FqElem eval_second_kind(const FieldCtx& ctx, Exponent n, const FqElem& a, const FqElem& x);
/// y^n + (1 - y)^n.
Fq2Elem first_kind_from_y(const FieldCtx& ctx, Exponent n, const Fq2Elem& y);
/// (y^{n+1} - (1 - y)^{n+1}) / (2y - 1), y != 1/2.
Fq2Elem second_kind_from_y(const FieldCtx& ctx, Exponent n, const Fq2Elem& y);

/// p^s, throwing Overflow past 2^62.
Exponent checked_prime_power(std::uint32_t p, unsigned s);

}  // namespace dickson
