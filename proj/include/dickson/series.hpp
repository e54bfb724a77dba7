#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "dickson/field.hpp"

namespace dickson {

/// Dense polynomial in a formal variable t with F_q coefficients. Always normalized:
/// the trailing coefficient is nonzero, or the coefficient vector is empty (zero).
class SeriesPoly {
 public:
  SeriesPoly() = default;
  explicit SeriesPoly(std::vector<FqElem> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  std::ptrdiff_t degree() const noexcept { return static_cast<std::ptrdiff_t>(coeffs_.size()) - 1; }
  /// Coefficient of t^i; zero past the degree.
  FqElem coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : FqElem{}; }
  const std::vector<FqElem>& coeffs() const noexcept { return coeffs_; }

  friend bool operator==(const SeriesPoly&, const SeriesPoly&) = default;

 private:
  void normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  std::vector<FqElem> coeffs_;
};

/// Arithmetic on SeriesPoly over a fixed field.
class SeriesRing {
 public:
  explicit SeriesRing(const FieldCtx& ctx) : ctx_(&ctx) {}

  const FieldCtx& field() const noexcept { return *ctx_; }

  SeriesPoly constant(const FqElem& c) const { return monomial(c, 0); }
  SeriesPoly monomial(const FqElem& c, std::size_t degree) const;
  /// Small integer coefficients, low-to-high: from_ints({-1, 0, 1}) is t^2 - 1.
  SeriesPoly from_ints(std::initializer_list<std::int64_t> coeffs) const;
  /// 1 + t + ... + t^degree
  SeriesPoly geometric(std::size_t degree) const;

  SeriesPoly add(const SeriesPoly& a, const SeriesPoly& b) const;
  SeriesPoly sub(const SeriesPoly& a, const SeriesPoly& b) const;
  SeriesPoly neg(const SeriesPoly& a) const;
  SeriesPoly scale(const SeriesPoly& a, const FqElem& c) const;
  SeriesPoly mul(const SeriesPoly& a, const SeriesPoly& b) const;
  SeriesPoly pow(const SeriesPoly& a, std::uint64_t n) const;
  /// Coefficients of degree <= max_degree.
  SeriesPoly truncate(const SeriesPoly& a, std::size_t max_degree) const;
  /// num / den when den divides num exactly; throws InternalInconsistency otherwise.
  SeriesPoly divide_exact(const SeriesPoly& num, const SeriesPoly& den) const;

 private:
  const FieldCtx* ctx_;
};

}  // namespace dickson
