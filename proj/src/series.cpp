#include "dickson/series.hpp"

#include <algorithm>

#include "dickson/error.hpp"

namespace dickson {

SeriesPoly SeriesRing::monomial(const FqElem& c, std::size_t degree) const {
  std::vector<FqElem> v(degree + 1);
  v[degree] = c;
  return SeriesPoly(std::move(v));
}

SeriesPoly SeriesRing::from_ints(std::initializer_list<std::int64_t> coeffs) const {
  std::vector<FqElem> v;
  v.reserve(coeffs.size());
  for (auto c : coeffs) v.push_back(ctx_->from_int(c));
  return SeriesPoly(std::move(v));
}

SeriesPoly SeriesRing::geometric(std::size_t degree) const {
  return SeriesPoly(std::vector<FqElem>(degree + 1, ctx_->one()));
}

SeriesPoly SeriesRing::add(const SeriesPoly& a, const SeriesPoly& b) const {
  std::vector<FqElem> v(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = ctx_->add(a.coeff(i), b.coeff(i));
  return SeriesPoly(std::move(v));
}

SeriesPoly SeriesRing::sub(const SeriesPoly& a, const SeriesPoly& b) const {
  std::vector<FqElem> v(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = ctx_->sub(a.coeff(i), b.coeff(i));
  return SeriesPoly(std::move(v));
}

SeriesPoly SeriesRing::neg(const SeriesPoly& a) const { return sub(SeriesPoly{}, a); }

SeriesPoly SeriesRing::scale(const SeriesPoly& a, const FqElem& c) const {
  std::vector<FqElem> v(a.coeffs().size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = ctx_->mul(a.coeffs()[i], c);
  return SeriesPoly(std::move(v));
}

SeriesPoly SeriesRing::mul(const SeriesPoly& a, const SeriesPoly& b) const {
  if (a.is_zero() || b.is_zero()) return {};
  const auto& ca = a.coeffs();
  const auto& cb = b.coeffs();
  std::vector<FqElem> v(ca.size() + cb.size() - 1);
  for (std::size_t i = 0; i < ca.size(); ++i) {
    if (ca[i].is_zero()) continue;
    for (std::size_t j = 0; j < cb.size(); ++j) {
      if (cb[j].is_zero()) continue;
      v[i + j] = ctx_->add(v[i + j], ctx_->mul(ca[i], cb[j]));
    }
  }
  return SeriesPoly(std::move(v));
}

SeriesPoly SeriesRing::pow(const SeriesPoly& a, std::uint64_t n) const {
  SeriesPoly result = constant(ctx_->one()), base = a;
  for (; n; n >>= 1) {
    if (n & 1) result = mul(result, base);
    if (n > 1) base = mul(base, base);
  }
  return result;
}

SeriesPoly SeriesRing::truncate(const SeriesPoly& a, std::size_t max_degree) const {
  const auto& c = a.coeffs();
  if (c.size() <= max_degree + 1) return a;
  return SeriesPoly(std::vector<FqElem>(c.begin(), c.begin() + max_degree + 1));
}

SeriesPoly SeriesRing::divide_exact(const SeriesPoly& num, const SeriesPoly& den) const {
  if (den.is_zero()) throw Error(Errc::DivByZero, "polynomial division by zero");
  if (num.degree() < den.degree()) {
    if (num.is_zero()) return {};
    throw Error(Errc::InternalInconsistency, "polynomial division is not exact");
  }
  std::vector<FqElem> rem = num.coeffs();
  const auto& d = den.coeffs();
  const std::size_t dd = d.size() - 1;
  const FqElem lead_inv = ctx_->inv(d.back());
  std::vector<FqElem> quot(rem.size() - dd);
  for (std::size_t i = quot.size(); i-- > 0;) {
    const FqElem c = ctx_->mul(rem[i + dd], lead_inv);
    quot[i] = c;
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j <= dd; ++j) rem[i + j] = ctx_->sub(rem[i + j], ctx_->mul(c, d[j]));
  }
  for (const auto& r : rem)
    if (!r.is_zero()) throw Error(Errc::InternalInconsistency, "polynomial division is not exact");
  return SeriesPoly(std::move(quot));
}

}  // namespace dickson
