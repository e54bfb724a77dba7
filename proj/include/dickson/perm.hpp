#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "dickson/field.hpp"

namespace dickson {

/// {v in F_{q^2} : v^q = 1 - v}, listed in enumeration order.
struct VSet {
  std::vector<Fq2Elem> elems;
};

enum class PermMethod { Brute, TwoToOne };

struct PermReport {
  Exponent n = 0;
  std::int64_t k = 0;
  bool is_pp = false;
  /// Two distinct inputs with equal images, present exactly when is_pp is false.
  std::optional<std::pair<FqElem, FqElem>> witness;
  PermMethod method = PermMethod::Brute;
};

using FieldMap = std::function<FqElem(const FqElem&)>;

/// First collision of f over F_q in enumeration order, or nullopt if f is a bijection.
std::optional<std::pair<FqElem, FqElem>> find_collision(const FieldCtx& ctx, const FieldMap& f);

/// Image-set check of x -> D_{n,k}(1, x).
PermReport is_pp_brute(const FieldCtx& ctx, Exponent n, std::int64_t k);

/// sum_{a in F_q} D_{n,k}(1, a)^i for 0 <= i <= q - 1.
FqElem moment(const FieldCtx& ctx, Exponent n, std::int64_t k, std::uint64_t i);

VSet build_v(const FieldCtx& ctx);

/// (F_q u V) \ {1/2}: the 2q - 2 parameters y with y(1 - y) in F_q, y != 1/2.
std::vector<Fq2Elem> two_to_one_domain(const FieldCtx& ctx);

/// PP iff f(y) = functional_form(n, k, y) is exactly 2-to-1 on two_to_one_domain() and never
/// takes the value (kn - k + 2)/2^n.
PermReport two_to_one_characterization(const FieldCtx& ctx, Exponent n, std::int64_t k);

/// Every n in [0, n_max] with n = 1 mod 6 for which D_{n,k}(1, .) is a PP. Expected empty.
std::vector<Exponent> necessary_mod6(const FieldCtx& ctx, std::int64_t k, Exponent n_max);

/// For s = 1..s_max: D_{p^s,k}(1, .) is not a PP and gcd((p^s-1)/2, q-1) >= (p-1)/2 > 1.
bool never_pp_prime_power(const FieldCtx& ctx, std::int64_t k, unsigned s_max);

/// (D_{n,k}(1, .) is a PP, p_{n,k} is a PP). Guaranteed equal for even n.
std::pair<bool, bool> aux_poly_pp_equiv(const FieldCtx& ctx, Exponent n, std::int64_t k);

/// Brute PP status of x -> D_{n,k}(a, x) for arbitrary a (including 0).
bool is_pp_with_param(const FieldCtx& ctx, Exponent n, std::int64_t k, const FqElem& a);

/// D_{n,k}(0, .) is a PP iff n is even, gcd(n/2, q-1) = 1 and k != 2 mod p.
bool a_zero_pp_criterion(const FieldCtx& ctx, Exponent n, std::int64_t k);

struct ScanOptions {
  std::size_t jobs = 1;
  bool allow_large = false;
};

/// Census limit without allow_large: ranges longer than 13^2 are refused for q > 13.
inline constexpr std::uint64_t kDefaultScanFieldLimit = 13;

/// Brute PP reports for n in [n_lo, n_hi], ordered by n. Throws BadRange if the range leaves
/// [0, q^2 - 1] or exceeds the default budget.
std::vector<PermReport> pp_scan(const FieldCtx& ctx, std::int64_t k, Exponent n_lo, Exponent n_hi,
                                const ScanOptions& options = {});

}  // namespace dickson
