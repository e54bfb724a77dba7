#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "dickson/field.hpp"
#include "dickson/series.hpp"

// First moments a_n = sum_{a in F_q} D_{n,k}(1, a) through generating functions in t.
//
// With d_n = a_n - (kn - k + 2)/2^n for 1 <= n <= q^2 - 1,
//
//   (t^q - t^{q-1} - 1) * sum_n d_n t^n = sum_{i=1}^{q^2+q-1} c_i t^i,
//
//   c(t) = -(t^q - t^{q-1} - 1) * t * (1 + t + ... + t^{q^2-2})
//          - ((k-1)t - k + 2) * W(t) * B(t),
//   W(t) = t^{2(q-1)} + sum_{m=1}^{q-1} (t-1)^{q-1-m} t^{2m} 4^{-m},
//   B(t) = sum b_i t^i = -1 - (t - t^q)^{q-1}.
//
// Comparing coefficients gives a triangular system for d_n, solved forward and checked
// against the closed form of the top q values.

namespace dickson {

/// b_0 .. b_{q^2-q} as residues mod p.
struct BTable {
  std::vector<std::uint32_t> b;
};

/// Per-coefficient closed form: (-1)^{beta+1} C(q-1, beta) when i = alpha + beta q with
/// alpha + beta = q - 1, -1 at i = 0, else 0.
BTable compute_b(const FieldCtx& ctx);
/// Direct expansion of -1 - (t - t^q)^{q-1} by repeated multiplication.
BTable compute_b_expansion(const FieldCtx& ctx);
SeriesPoly b_series(const FieldCtx& ctx, const BTable& table);

/// t^q - t^{q-1} - 1
SeriesPoly moment_shift_poly(const FieldCtx& ctx);
/// W(t) above.
SeriesPoly moment_weight(const FieldCtx& ctx);

enum class CForm {
  /// Geometric term with factor t; valid for every k.
  Derived,
  /// Geometric term with factor kt + 1 - k; agrees with Derived only at k = 1.
  Literal,
};

/// c(t). For CForm::Derived asserts c_0 = 0 and degree <= q^2 + q - 1.
SeriesPoly compute_c(const FieldCtx& ctx, std::int64_t k, CForm form = CForm::Derived);

/// d_1 .. d_{q^2-1} (index 0 holds zero). Throws InconsistentRecursion when the forward
/// recursion and the tail closed form disagree.
std::vector<FqElem> run_d_recursion(const FieldCtx& ctx, const SeriesPoly& c);

/// (kn - k + 2)/2^n
FqElem moment_shift(const FieldCtx& ctx, Exponent n, std::int64_t k);

/// Ground truth: direct summation over F_q.
FqElem first_moment_direct(const FieldCtx& ctx, Exponent n, std::int64_t k);
/// d_n + (kn - k + 2)/2^n for 1 <= n <= q^2 - 1; throws OutOfRange otherwise.
FqElem first_moment_theorem(const FieldCtx& ctx, Exponent n, std::int64_t k);

/// a_1 .. a_{q^2-1} (index 0 unused) from the per-row a_n recurrences with explicit
/// constants -(k-2)/2, k/2^{l+j}, k/2^l and (kj-k+2)/2^j.
std::vector<FqElem> first_moments_by_rows(const FieldCtx& ctx, std::int64_t k, const SeriesPoly& c);

struct MomentRow {
  Exponent n = 0;
  FqElem direct;
  FqElem reconstructed;
  FqElem d_n;
  bool agrees = false;
};

/// Rows for every n in [n_lo, n_hi] within [1, q^2 - 1].
std::vector<MomentRow> moment_table(const FieldCtx& ctx, std::int64_t k, Exponent n_lo,
                                    Exponent n_hi, std::size_t jobs = 1);

/// (t^q - t^{q-1} - 1) * sum d_n t^n == c(t), d_n from direct summation.
bool check_moment_identity(const FieldCtx& ctx, std::int64_t k, const SeriesPoly& c);

/// (t^{q^2-1} - 1)((k-1)t-k+2)(t^q-t^{q-1}-1) == ((k-1)t-k+2) B(t) ((t-1)^q - (t-1)t^{2(q-1)}).
bool check_h_factorization(const FieldCtx& ctx, std::int64_t k);

}  // namespace dickson
