#include "dickson/field.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "dickson/error.hpp"

namespace dickson {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::CompositeP: return "CompositeP";
    case Errc::SmallChar: return "SmallChar";
    case Errc::Overflow: return "Overflow";
    case Errc::DivByZero: return "DivByZero";
    case Errc::InternalInconsistency: return "InternalInconsistency";
    case Errc::ZeroParam: return "ZeroParam";
    case Errc::BadRange: return "BadRange";
    case Errc::InconsistentRecursion: return "InconsistentRecursion";
    case Errc::OutOfRange: return "OutOfRange";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

using Poly = std::vector<std::uint32_t>;  // dense over F_p, low-to-high

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t result = 1, base = a % p;
  for (std::uint64_t ex = p - 2; ex; ex >>= 1) {
    if (ex & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint64_t lead_inv = inv_mod(m.back(), p);
  while (a.size() > dm) {
    const std::uint64_t c = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t j = 0; j <= dm; ++j)
      a[shift + j] = static_cast<std::uint32_t>((a[shift + j] + (p - c) * m[j]) % p);
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t{a[i]} * b[j]) % p);
  return poly_mod(std::move(r), m, p);
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Rabin: f of degree e is irreducible iff gcd(x^{p^i} - x, f) = 1 for i <= e/2.
// (x^{p^e} = x mod f also holds for irreducible f; the gcd conditions already exclude
// every factor of degree <= e/2, which is enough.)
bool irreducible(const Poly& f, std::uint32_t p) {
  const int e = static_cast<int>(f.size()) - 1;
  if (e == 1) return true;
  Poly xp = poly_mod({0, 1}, f, p);
  for (int i = 1; i <= e / 2; ++i) {
    // xp <- xp^p mod f
    Poly acc{1}, base = xp;
    for (std::uint64_t ex = p; ex; ex >>= 1) {
      if (ex & 1) acc = poly_mulmod(acc, base, f, p);
      base = poly_mulmod(base, base, f, p);
    }
    xp = acc;
    Poly diff = xp;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;
    trim(diff);
    if (diff.empty()) return false;  // f | x^{p^i} - x
    if (poly_gcd(diff, f, p).size() > 1) return false;
  }
  return true;
}

// Lexicographically smallest monic irreducible, comparing c_0 first.
Poly smallest_irreducible(std::uint32_t p, int e) {
  std::vector<std::uint32_t> tail(e, 0);
  for (;;) {
    Poly f(tail.begin(), tail.end());
    f.push_back(1);
    if (irreducible(f, p)) return f;
    // increment with c_{e-1} as the least significant position
    int pos = e - 1;
    while (pos >= 0 && ++tail[pos] == p) tail[pos--] = 0;
    if (pos < 0) throw Error(Errc::InternalInconsistency, "no irreducible polynomial found");
  }
}

}  // namespace

FqElem FieldCtx::from_int(std::int64_t v) const noexcept {
  FqElem r;
  const std::int64_t m = static_cast<std::int64_t>(p_);
  r.coeffs[0] = static_cast<std::uint32_t>(((v % m) + m) % m);
  return r;
}

FqElem FieldCtx::from_index(std::uint64_t index) const {
  if (index >= q_) throw Error(Errc::OutOfRange, "element index out of range");
  FqElem r;
  for (int i = 0; i < e_; ++i) {
    r.coeffs[i] = static_cast<std::uint32_t>(index % p_);
    index /= p_;
  }
  return r;
}

FqElem FieldCtx::from_digits(std::span<const std::uint32_t> digits) const {
  if (digits.size() != static_cast<std::size_t>(e_))
    throw Error(Errc::OutOfRange, "digit vector length must equal the extension degree");
  FqElem r;
  for (int i = 0; i < e_; ++i) {
    if (digits[i] >= p_) throw Error(Errc::OutOfRange, "digit out of range");
    r.coeffs[i] = digits[i];
  }
  return r;
}

std::uint64_t FieldCtx::index(const FqElem& a) const noexcept {
  std::uint64_t idx = 0;
  for (int i = e_ - 1; i >= 0; --i) idx = idx * p_ + a.coeffs[i];
  return idx;
}

std::vector<std::uint32_t> FieldCtx::digits(const FqElem& a) const {
  return {a.coeffs.begin(), a.coeffs.begin() + e_};
}

std::string FieldCtx::render(const FqElem& a) const {
  std::ostringstream os;
  for (int i = 0; i < e_; ++i) {
    if (i) os << ',';
    os << a.coeffs[i];
  }
  return os.str();
}

FqElem FieldCtx::add(const FqElem& a, const FqElem& b) const noexcept {
  FqElem r;
  for (int i = 0; i < e_; ++i) {
    const std::uint32_t s = a.coeffs[i] + b.coeffs[i];
    r.coeffs[i] = s >= p_ ? s - p_ : s;
  }
  return r;
}

FqElem FieldCtx::sub(const FqElem& a, const FqElem& b) const noexcept {
  FqElem r;
  for (int i = 0; i < e_; ++i)
    r.coeffs[i] = a.coeffs[i] >= b.coeffs[i] ? a.coeffs[i] - b.coeffs[i]
                                             : a.coeffs[i] + p_ - b.coeffs[i];
  return r;
}

FqElem FieldCtx::neg(const FqElem& a) const noexcept { return sub(FqElem{}, a); }

FqElem FieldCtx::mul(const FqElem& a, const FqElem& b) const noexcept {
  FqElem r;
  if (e_ == 1) {
    r.coeffs[0] = static_cast<std::uint32_t>(std::uint64_t{a.coeffs[0]} * b.coeffs[0] % p_);
    return r;
  }
  std::array<std::uint64_t, 2 * kMaxExtDegree - 1> prod{};
  for (int i = 0; i < e_; ++i) {
    if (a.coeffs[i] == 0) continue;
    for (int j = 0; j < e_; ++j) prod[i + j] += std::uint64_t{a.coeffs[i]} * b.coeffs[j];
  }
  for (auto& c : prod) c %= p_;
  // g^e = -(m_0 + m_1 g + ... + m_{e-1} g^{e-1})
  for (int i = 2 * e_ - 2; i >= e_; --i) {
    const std::uint64_t c = prod[i];
    if (c == 0) continue;
    for (int j = 0; j < e_; ++j)
      prod[i - e_ + j] = (prod[i - e_ + j] + (p_ - c) * modulus_[j]) % p_;
    prod[i] = 0;
  }
  for (int i = 0; i < e_; ++i) r.coeffs[i] = static_cast<std::uint32_t>(prod[i]);
  return r;
}

FqElem FieldCtx::pow(const FqElem& a, Exponent n) const noexcept {
  FqElem result = one(), base = a;
  for (; n; n >>= 1) {
    if (n & 1) result = mul(result, base);
    base = mul(base, base);
  }
  return result;
}

FqElem FieldCtx::inv(const FqElem& a) const {
  if (a.is_zero()) throw Error(Errc::DivByZero, "inverse of zero");
  return pow(a, q_ - 2);
}

FqElem FieldCtx::div(const FqElem& a, const FqElem& b) const { return mul(a, inv(b)); }

FqElem FieldCtx::pow_signed(const FqElem& a, std::int64_t n) const {
  if (n >= 0) return pow(a, static_cast<Exponent>(n));
  return pow(inv(a), static_cast<Exponent>(-(n + 1)) + 1);
}

bool FieldCtx::is_square(const FqElem& a) const noexcept {
  return a.is_zero() || pow(a, (q_ - 1) / 2) == one();
}

std::optional<FqElem> FieldCtx::sqrt(const FqElem& a) const {
  if (a.is_zero()) return FqElem{};
  if (!is_square(a)) return std::nullopt;
  int m = two_adicity_;
  FqElem c = pow(nonresidue_, odd_part_);
  FqElem t = pow(a, odd_part_);
  FqElem r = pow(a, (odd_part_ + 1) / 2);
  const FqElem unit = one();
  while (!(t == unit)) {
    int i = 0;
    for (FqElem t2 = t; !(t2 == unit); t2 = mul(t2, t2)) ++i;
    FqElem b = c;
    for (int j = 0; j < m - i - 1; ++j) b = mul(b, b);
    m = i;
    c = mul(b, b);
    t = mul(t, c);
    r = mul(r, b);
  }
  const FqElem other = neg(r);
  return index(other) < index(r) ? other : r;
}

Fq2Elem FieldCtx::add(const Fq2Elem& a, const Fq2Elem& b) const noexcept {
  return {add(a.lo, b.lo), add(a.hi, b.hi)};
}

Fq2Elem FieldCtx::sub(const Fq2Elem& a, const Fq2Elem& b) const noexcept {
  return {sub(a.lo, b.lo), sub(a.hi, b.hi)};
}

Fq2Elem FieldCtx::neg(const Fq2Elem& a) const noexcept { return {neg(a.lo), neg(a.hi)}; }

Fq2Elem FieldCtx::mul(const Fq2Elem& a, const Fq2Elem& b) const noexcept {
  const FqElem ll = mul(a.lo, b.lo);
  const FqElem hh = mul(a.hi, b.hi);
  const FqElem cross = add(mul(a.lo, b.hi), mul(a.hi, b.lo));
  return {add(ll, mul(nonresidue_, hh)), cross};
}

Fq2Elem FieldCtx::inv(const Fq2Elem& a) const {
  // (lo + hi s)^{-1} = (lo - hi s) / (lo^2 - nu hi^2)
  const FqElem norm = sub(mul(a.lo, a.lo), mul(nonresidue_, mul(a.hi, a.hi)));
  if (norm.is_zero()) throw Error(Errc::DivByZero, "inverse of zero in quadratic extension");
  const FqElem ninv = inv(norm);
  return {mul(a.lo, ninv), neg(mul(a.hi, ninv))};
}

Fq2Elem FieldCtx::div(const Fq2Elem& a, const Fq2Elem& b) const { return mul(a, inv(b)); }

Fq2Elem FieldCtx::pow(const Fq2Elem& a, Exponent n) const noexcept {
  Fq2Elem result = embed(one()), base = a;
  for (; n; n >>= 1) {
    if (n & 1) result = mul(result, base);
    base = mul(base, base);
  }
  return result;
}

bool FieldCtx::ext_less(const Fq2Elem& a, const Fq2Elem& b) const noexcept {
  const auto la = index(a.lo), lb = index(b.lo);
  if (la != lb) return la < lb;
  return index(a.hi) < index(b.hi);
}

FieldCtx make_field(std::int64_t p, std::int64_t e) {
  if (p < 2 || !is_prime(static_cast<std::uint64_t>(p)))
    throw Error(Errc::CompositeP, "p must be a prime greater than 3");
  if (p <= 3) throw Error(Errc::SmallChar, "p must be a prime greater than 3");
  if (e < 1) throw Error(Errc::BadRange, "extension degree e must be at least 1");
  std::uint64_t q = 1;
  for (std::int64_t i = 0; i < e; ++i) {
    q *= static_cast<std::uint64_t>(p);
    if (q > kMaxFieldOrder || i >= kMaxExtDegree)
      throw Error(Errc::Overflow, "field order exceeds the supported budget of 2^20");
  }

  FieldCtx ctx;
  ctx.p_ = static_cast<std::uint32_t>(p);
  ctx.e_ = static_cast<int>(e);
  ctx.q_ = q;
  ctx.modulus_ = smallest_irreducible(ctx.p_, ctx.e_);
  ctx.odd_part_ = q - 1;
  while (ctx.odd_part_ % 2 == 0) {
    ctx.odd_part_ /= 2;
    ++ctx.two_adicity_;
  }
  const FqElem minus_one = ctx.from_int(-1);
  for (std::uint64_t i = 1; i < q; ++i) {
    FqElem cand = ctx.from_index(i);
    if (ctx.pow(cand, (q - 1) / 2) == minus_one) {
      ctx.nonresidue_ = cand;
      break;
    }
  }
  return ctx;
}

FqElem fq_arith(const FieldCtx& ctx, FqOp op, const FqElem& a, const FqElem& b,
                std::int64_t exponent) {
  switch (op) {
    case FqOp::Add: return ctx.add(a, b);
    case FqOp::Sub: return ctx.sub(a, b);
    case FqOp::Mul: return ctx.mul(a, b);
    case FqOp::Div: return ctx.div(a, b);
    case FqOp::Neg: return ctx.neg(a);
    case FqOp::Inv: return ctx.inv(a);
    case FqOp::Pow: return ctx.pow_signed(a, exponent);
  }
  throw Error(Errc::InternalInconsistency, "unknown field operation");
}

std::vector<FqElem> enumerate(const FieldCtx& ctx) {
  std::vector<FqElem> out;
  out.reserve(ctx.q());
  for (std::uint64_t i = 0; i < ctx.q(); ++i) out.push_back(ctx.from_index(i));
  return out;
}

Fq2Elem sqrt_in_ext(const FieldCtx& ctx, const FqElem& x) {
  if (auto r = ctx.sqrt(x)) return ctx.embed(*r);
  // x non-residue: x / nu is a residue and sqrt(x) = sqrt(x / nu) * s
  const auto r = ctx.sqrt(ctx.div(x, ctx.ext_nonresidue()));
  if (!r) throw Error(Errc::InternalInconsistency, "x / nonresidue is not a square");
  return {FqElem{}, *r};
}

Fq2Elem solve_y(const FieldCtx& ctx, const FqElem& x) {
  const FqElem disc = ctx.sub(ctx.one(), ctx.mul(ctx.from_int(4), x));
  const Fq2Elem root = sqrt_in_ext(ctx, disc);
  const FqElem half = ctx.half();
  return {ctx.mul(ctx.add(ctx.one(), root.lo), half), ctx.mul(root.hi, half)};
}

}  // namespace dickson
