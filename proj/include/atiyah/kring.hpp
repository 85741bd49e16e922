#pragma once

// Grothendieck ring arithmetic for degree-zero bundles on an elliptic curve.
//
// Every indecomposable degree-zero bundle is L^e (x) F_r for a degree-zero
// line bundle L and the Atiyah bundle F_r. All bundles in one computation
// are twists by powers of a single L whose order in Pic^0 is recorded in a
// TorsionContext. Exponents are canonicalized when a bundle is built, so
// two classes are isomorphic iff their values compare equal.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace atiyah {

using BigInt = boost::multiprecision::cpp_int;

class context_mismatch : public std::invalid_argument {
 public:
  context_mismatch()
      : std::invalid_argument("bundles belong to different torsion contexts") {}
};

/// Order of the twisting line bundle L. Zero means L has infinite order.
class TorsionContext {
 public:
  constexpr TorsionContext() = default;
  constexpr explicit TorsionContext(std::int64_t order) : order_(order) {
    if (order < 0) throw std::invalid_argument("torsion order must be >= 0");
  }

  static constexpr TorsionContext non_torsion() { return TorsionContext(0); }

  constexpr std::int64_t order() const { return order_; }
  constexpr bool is_torsion() const { return order_ != 0; }

  constexpr std::int64_t reduce(std::int64_t e) const {
    if (order_ == 0) return e;
    std::int64_t r = e % order_;
    return r < 0 ? r + order_ : r;
  }

  BigInt reduce(const BigInt& e) const {
    if (order_ == 0) return e;
    BigInt r = e % order_;
    if (r < 0) r += order_;
    return r;
  }

  friend constexpr bool operator==(TorsionContext, TorsionContext) = default;

 private:
  std::int64_t order_ = 0;
};

inline std::int64_t reduce_exponent(TorsionContext ctx, std::int64_t e) {
  return ctx.reduce(e);
}

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out))
    throw std::overflow_error("line exponent overflow");
  return out;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out))
    throw std::overflow_error("line exponent overflow");
  return out;
}

}  // namespace detail

/// L^exponent (x) F_index. Index 1 is the line bundle L^exponent itself.
class IndecomposableBundle {
 public:
  IndecomposableBundle(TorsionContext ctx, std::int64_t exponent,
                       std::int64_t index)
      : ctx_(ctx), exponent_(ctx.reduce(exponent)), index_(index) {
    if (index < 1) throw std::invalid_argument("F index must be >= 1");
  }

  /// F_r, untwisted.
  static IndecomposableBundle atiyah(TorsionContext ctx, std::int64_t index) {
    return {ctx, 0, index};
  }
  static IndecomposableBundle trivial(TorsionContext ctx) { return {ctx, 0, 1}; }

  TorsionContext context() const { return ctx_; }
  std::int64_t exponent() const { return exponent_; }
  std::int64_t index() const { return index_; }
  std::int64_t rank() const { return index_; }
  bool is_trivial() const { return exponent_ == 0 && index_ == 1; }

  friend bool operator==(const IndecomposableBundle&,
                         const IndecomposableBundle&) = default;

  // Output order: by index, then exponent.
  friend std::strong_ordering operator<=>(const IndecomposableBundle& a,
                                          const IndecomposableBundle& b) {
    if (auto c = a.index_ <=> b.index_; c != 0) return c;
    if (auto c = a.exponent_ <=> b.exponent_; c != 0) return c;
    return a.ctx_.order() <=> b.ctx_.order();
  }

 private:
  TorsionContext ctx_;
  std::int64_t exponent_;
  std::int64_t index_;
};

inline IndecomposableBundle dual(const IndecomposableBundle& a) {
  return {a.context(), -a.exponent(), a.index()};
}

/// S^k F_2 = F_{k+1}.
inline IndecomposableBundle sym_power_f2(std::int64_t k,
                                         TorsionContext ctx = {}) {
  if (k < 0) throw std::invalid_argument("symmetric power must be >= 0");
  return IndecomposableBundle::atiyah(ctx, k + 1);
}

/// Calls `emit(component)` for each summand of a (x) b, which are pairwise
/// distinct and each occur once: F_r (x) F_s = sum_{k<s} F_{r-s+1+2k}, s <= r.
template <class Emit>
void for_each_tensor_component(const IndecomposableBundle& a,
                               const IndecomposableBundle& b, Emit&& emit) {
  if (a.context() != b.context()) throw context_mismatch();
  const auto r = std::max(a.index(), b.index());
  const auto s = std::min(a.index(), b.index());
  const auto e = detail::checked_add(a.exponent(), b.exponent());
  for (std::int64_t k = 0; k < s; ++k)
    emit(IndecomposableBundle(a.context(), e, r - s + 1 + 2 * k));
}

namespace detail {

using TermMap = std::map<IndecomposableBundle, BigInt>;

inline void accumulate(TermMap& terms, const IndecomposableBundle& b,
                       const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms.try_emplace(b, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

inline TermMap multiply(const TermMap& x, const TermMap& y) {
  TermMap out;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y) {
      const BigInt c = ca * cb;
      for_each_tensor_component(
          a, b, [&](const IndecomposableBundle& p) { accumulate(out, p, c); });
    }
  return out;
}

}  // namespace detail

/// Isomorphism class of a degree-zero bundle: a multiset of indecomposables.
/// The empty sum is the zero object and only appears as an intermediate.
class BundleSum {
 public:
  using Terms = detail::TermMap;

  BundleSum() = default;
  explicit BundleSum(TorsionContext ctx) : ctx_(ctx) {}
  BundleSum(const IndecomposableBundle& b)  // NOLINT(google-explicit-constructor)
      : ctx_(b.context()) {
    terms_.emplace(b, 1);
  }

  static BundleSum trivial(TorsionContext ctx) {
    return IndecomposableBundle::trivial(ctx);
  }

  TorsionContext context() const { return ctx_; }
  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t distinct_components() const { return terms_.size(); }

  BigInt multiplicity(const IndecomposableBundle& b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  std::vector<IndecomposableBundle> support() const {
    std::vector<IndecomposableBundle> out;
    out.reserve(terms_.size());
    for (const auto& [b, m] : terms_) out.push_back(b);
    return out;
  }

  BundleSum& add(const IndecomposableBundle& b, const BigInt& multiplicity) {
    if (b.context() != ctx_) throw context_mismatch();
    if (multiplicity < 0)
      throw std::invalid_argument("bundle multiplicities must be non-negative");
    detail::accumulate(terms_, b, multiplicity);
    return *this;
  }

  BundleSum& operator+=(const BundleSum& other) {
    if (other.ctx_ != ctx_) throw context_mismatch();
    for (const auto& [b, m] : other.terms_) detail::accumulate(terms_, b, m);
    return *this;
  }

  friend BundleSum operator+(BundleSum x, const BundleSum& y) {
    x += y;
    return x;
  }

  friend bool operator==(const BundleSum&, const BundleSum&) = default;

 private:
  friend BundleSum tensor(const BundleSum& x, const BundleSum& y);
  friend class KRingElement;

  TorsionContext ctx_;
  Terms terms_;
};

inline BundleSum tensor_indec(const IndecomposableBundle& a,
                              const IndecomposableBundle& b) {
  BundleSum out(a.context());
  for_each_tensor_component(
      a, b, [&](const IndecomposableBundle& p) { out.add(p, 1); });
  return out;
}

inline BundleSum tensor(const BundleSum& x, const BundleSum& y) {
  if (x.ctx_ != y.ctx_) throw context_mismatch();
  BundleSum out(x.ctx_);
  out.terms_ = detail::multiply(x.terms_, y.terms_);
  return out;
}

inline BundleSum operator*(const BundleSum& x, const BundleSum& y) {
  return tensor(x, y);
}

inline BundleSum dual(const BundleSum& x) {
  BundleSum out(x.context());
  for (const auto& [b, m] : x.terms()) out.add(dual(b), m);
  return out;
}

/// x^{(x) m}; negative m dualizes first, m = 0 gives O_X.
inline BundleSum tensor_power(const BundleSum& x, std::int64_t m) {
  if (x.empty()) throw std::invalid_argument("tensor power of the zero object");
  if (m == 0) return BundleSum::trivial(x.context());
  BundleSum base = m < 0 ? dual(x) : x;
  std::uint64_t k = m < 0 ? -static_cast<std::uint64_t>(m)
                          : static_cast<std::uint64_t>(m);
  BundleSum acc = BundleSum::trivial(x.context());
  while (true) {
    if (k & 1U) acc = tensor(acc, base);
    k >>= 1U;
    if (k == 0) break;
    base = tensor(base, base);
  }
  return acc;
}

inline BigInt rank(const BundleSum& x) {
  BigInt r = 0;
  for (const auto& [b, m] : x.terms()) r += m * b.index();
  return r;
}

/// Exponent of det x as a power of L; det F_r is trivial.
inline BigInt det_exponent(const BundleSum& x) {
  BigInt d = 0;
  for (const auto& [b, m] : x.terms()) d += m * b.exponent() * b.index();
  return x.context().reduce(d);
}

/// Element of K(X): an integer combination of indecomposable classes.
class KRingElement {
 public:
  using Terms = detail::TermMap;

  KRingElement() = default;
  explicit KRingElement(TorsionContext ctx) : ctx_(ctx) {}
  KRingElement(const BundleSum& x)  // NOLINT(google-explicit-constructor)
      : ctx_(x.context()), terms_(x.terms()) {}
  KRingElement(const IndecomposableBundle& b)  // NOLINT(google-explicit-constructor)
      : KRingElement(BundleSum(b)) {}

  static KRingElement one(TorsionContext ctx) { return BundleSum::trivial(ctx); }
  static KRingElement constant(TorsionContext ctx, const BigInt& c) {
    KRingElement out(ctx);
    detail::accumulate(out.terms_, IndecomposableBundle::trivial(ctx), c);
    return out;
  }

  TorsionContext context() const { return ctx_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  BigInt coefficient(const IndecomposableBundle& b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  KRingElement& operator+=(const KRingElement& o) {
    if (o.ctx_ != ctx_) throw context_mismatch();
    for (const auto& [b, c] : o.terms_) detail::accumulate(terms_, b, c);
    return *this;
  }
  KRingElement& operator-=(const KRingElement& o) {
    if (o.ctx_ != ctx_) throw context_mismatch();
    for (const auto& [b, c] : o.terms_) detail::accumulate(terms_, b, -c);
    return *this;
  }
  KRingElement& operator*=(const BigInt& k) {
    if (k == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [b, c] : terms_) c *= k;
    return *this;
  }

  friend KRingElement operator+(KRingElement x, const KRingElement& y) {
    return x += y;
  }
  friend KRingElement operator-(KRingElement x, const KRingElement& y) {
    return x -= y;
  }
  friend KRingElement operator-(KRingElement x) {
    for (auto& [b, c] : x.terms_) c = -c;
    return x;
  }
  friend KRingElement operator*(KRingElement x, const BigInt& k) {
    return x *= k;
  }
  friend KRingElement operator*(const KRingElement& x, const KRingElement& y) {
    if (x.ctx_ != y.ctx_) throw context_mismatch();
    KRingElement out(x.ctx_);
    out.terms_ = detail::multiply(x.terms_, y.terms_);
    return out;
  }

  /// The bundle this element is the class of, if every coefficient is >= 0.
  bool is_effective() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& t) { return t.second > 0; });
  }
  BundleSum to_bundle() const {
    if (!is_effective())
      throw std::domain_error("K-ring element has negative coefficients");
    BundleSum out(ctx_);
    for (const auto& [b, c] : terms_) out.add(b, c);
    return out;
  }

  friend bool operator==(const KRingElement&, const KRingElement&) = default;

 private:
  TorsionContext ctx_;
  Terms terms_;
};

}  // namespace atiyah
