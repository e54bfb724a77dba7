#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace dickson {

/// Largest supported extension degree. With p >= 5 and q <= 2^20 we never need more than 8.
inline constexpr int kMaxExtDegree = 8;
inline constexpr std::uint64_t kMaxFieldOrder = std::uint64_t{1} << 20;

using Exponent = std::uint64_t;

/// Element of F_q = F_p[g]/(m(g)) stored as coefficients of 1, g, ..., g^{e-1}.
/// Entries at positions >= e are always zero, so the default value is the zero element
/// of every field and equality is plain array equality.
struct FqElem {
  std::array<std::uint32_t, kMaxExtDegree> coeffs{};

  bool is_zero() const noexcept {
    for (auto c : coeffs)
      if (c != 0) return false;
    return true;
  }

  friend bool operator==(const FqElem&, const FqElem&) = default;
};

/// Element lo + hi*s of F_{q^2} = F_q[s]/(s^2 - ext_nonresidue).
struct Fq2Elem {
  FqElem lo;
  FqElem hi;

  bool in_base() const noexcept { return hi.is_zero(); }

  friend bool operator==(const Fq2Elem&, const Fq2Elem&) = default;
};

/// Immutable description of F_q and F_{q^2}. Construct with make_field().
class FieldCtx {
 public:
  std::uint32_t p() const noexcept { return p_; }
  int e() const noexcept { return e_; }
  std::uint64_t q() const noexcept { return q_; }

  /// Monic irreducible of degree e over F_p, low-to-high, e+1 entries.
  const std::vector<std::uint32_t>& base_modulus() const noexcept { return modulus_; }
  const FqElem& ext_nonresidue() const noexcept { return nonresidue_; }

  FqElem zero() const noexcept { return {}; }
  FqElem one() const noexcept { return from_int(1); }
  FqElem from_int(std::int64_t v) const noexcept;
  FqElem from_index(std::uint64_t index) const;
  FqElem from_digits(std::span<const std::uint32_t> digits) const;

  /// Enumeration index sum coeffs[i] * p^i.
  std::uint64_t index(const FqElem& a) const noexcept;
  std::vector<std::uint32_t> digits(const FqElem& a) const;
  /// Base-p digits low-to-high joined by commas, e.g. "2,1" for 2 + g in F_25.
  std::string render(const FqElem& a) const;

  FqElem add(const FqElem& a, const FqElem& b) const noexcept;
  FqElem sub(const FqElem& a, const FqElem& b) const noexcept;
  FqElem neg(const FqElem& a) const noexcept;
  FqElem mul(const FqElem& a, const FqElem& b) const noexcept;
  FqElem inv(const FqElem& a) const;
  FqElem div(const FqElem& a, const FqElem& b) const;
  FqElem pow(const FqElem& a, Exponent n) const noexcept;
  /// Negative exponents invert first.
  FqElem pow_signed(const FqElem& a, std::int64_t n) const;

  bool is_square(const FqElem& a) const noexcept;
  /// Square root inside F_q (Tonelli-Shanks), smaller-index root of the pair.
  std::optional<FqElem> sqrt(const FqElem& a) const;

  FqElem half() const { return inv(from_int(2)); }
  FqElem quarter() const { return inv(from_int(4)); }

  Fq2Elem embed(const FqElem& a) const noexcept { return {a, {}}; }
  Fq2Elem add(const Fq2Elem& a, const Fq2Elem& b) const noexcept;
  Fq2Elem sub(const Fq2Elem& a, const Fq2Elem& b) const noexcept;
  Fq2Elem neg(const Fq2Elem& a) const noexcept;
  Fq2Elem mul(const Fq2Elem& a, const Fq2Elem& b) const noexcept;
  Fq2Elem inv(const Fq2Elem& a) const;
  Fq2Elem div(const Fq2Elem& a, const Fq2Elem& b) const;
  Fq2Elem pow(const Fq2Elem& a, Exponent n) const noexcept;
  /// x -> x^q, i.e. lo - hi*s.
  Fq2Elem frobenius(const Fq2Elem& a) const noexcept { return {a.lo, neg(a.hi)}; }

  /// Enumeration order on F_{q^2}: compare lo index first, then hi index.
  bool ext_less(const Fq2Elem& a, const Fq2Elem& b) const noexcept;

 private:
  friend FieldCtx make_field(std::int64_t p, std::int64_t e);
  FieldCtx() = default;

  std::uint32_t p_ = 0;
  int e_ = 0;
  std::uint64_t q_ = 0;
  std::vector<std::uint32_t> modulus_;
  FqElem nonresidue_;
  // q - 1 = odd_part * 2^two_adicity, for Tonelli-Shanks
  std::uint64_t odd_part_ = 0;
  int two_adicity_ = 0;
};

/// Throws Error{CompositeP | SmallChar | Overflow | BadRange}.
FieldCtx make_field(std::int64_t p, std::int64_t e);

enum class FqOp { Add, Sub, Mul, Div, Neg, Inv, Pow };

/// Tagged arithmetic entry point. Unary ops ignore b; Pow ignores b and uses exponent.
FqElem fq_arith(const FieldCtx& ctx, FqOp op, const FqElem& a, const FqElem& b = {},
                std::int64_t exponent = 0);

/// All q elements in ascending enumeration index.
std::vector<FqElem> enumerate(const FieldCtx& ctx);

/// r in F_{q^2} with r^2 = x, smaller of the two roots in enumeration order.
Fq2Elem sqrt_in_ext(const FieldCtx& ctx, const FqElem& x);

/// y with y(1 - y) = x, computed as (1 + sqrt(1 - 4x)) / 2.
Fq2Elem solve_y(const FieldCtx& ctx, const FqElem& x);

bool is_prime(std::uint64_t n) noexcept;

}  // namespace dickson
