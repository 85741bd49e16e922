#pragma once

// Character oracle. A bundle class L^e (x) F_r is sent to t^e [r]_q where
// [r]_q = q^{r-1} + q^{r-3} + ... + q^{-(r-1)}. Characters multiply as
// Laurent polynomials, and a product is decomposed back into bundles by
// peeling highest weights. Nothing here calls the tensor rule in kring.hpp,
// so agreement between the two is a genuine check of that rule.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "atiyah/kring.hpp"

namespace atiyah {

class not_a_character : public std::domain_error {
 public:
  explicit not_a_character(const std::string& what)
      : std::domain_error("not a character: " + what) {}
};

/// Laurent polynomial in t (line class, reduced mod the torsion order) and
/// q (sl2 weight) with integer coefficients.
class BivariateCharacter {
 public:
  struct Monomial {
    std::int64_t t;
    std::int64_t q;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;
  };
  using Coeffs = std::map<Monomial, BigInt>;

  BivariateCharacter() = default;
  explicit BivariateCharacter(TorsionContext ctx) : ctx_(ctx) {}

  static BivariateCharacter monomial(TorsionContext ctx, std::int64_t t,
                                     std::int64_t q, const BigInt& c = 1) {
    BivariateCharacter out(ctx);
    out.add(t, q, c);
    return out;
  }

  TorsionContext context() const { return ctx_; }
  const Coeffs& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  BigInt coefficient(std::int64_t t, std::int64_t q) const {
    auto it = coeffs_.find({ctx_.reduce(t), q});
    return it == coeffs_.end() ? BigInt(0) : it->second;
  }

  BivariateCharacter& add(std::int64_t t, std::int64_t q, const BigInt& c) {
    if (c == 0) return *this;
    auto [it, inserted] = coeffs_.try_emplace({ctx_.reduce(t), q}, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) coeffs_.erase(it);
    }
    return *this;
  }

  BivariateCharacter& operator+=(const BivariateCharacter& o) {
    if (o.ctx_ != ctx_) throw context_mismatch();
    for (const auto& [m, c] : o.coeffs_) add(m.t, m.q, c);
    return *this;
  }
  BivariateCharacter& operator-=(const BivariateCharacter& o) {
    if (o.ctx_ != ctx_) throw context_mismatch();
    for (const auto& [m, c] : o.coeffs_) add(m.t, m.q, -c);
    return *this;
  }

  friend BivariateCharacter operator+(BivariateCharacter a,
                                      const BivariateCharacter& b) {
    return a += b;
  }
  friend BivariateCharacter operator-(BivariateCharacter a,
                                      const BivariateCharacter& b) {
    return a -= b;
  }
  friend BivariateCharacter operator*(const BivariateCharacter& a,
                                      const BivariateCharacter& b) {
    if (a.ctx_ != b.ctx_) throw context_mismatch();
    BivariateCharacter out(a.ctx_);
    for (const auto& [ma, ca] : a.coeffs_)
      for (const auto& [mb, cb] : b.coeffs_)
        out.add(detail::checked_add(ma.t, mb.t), ma.q + mb.q, ca * cb);
    return out;
  }

  /// Sum of all coefficients, i.e. the value at t = q = 1.
  BigInt dimension() const {
    BigInt d = 0;
    for (const auto& [m, c] : coeffs_) d += c;
    return d;
  }

  /// Invariance under q -> 1/q.
  bool is_weight_symmetric() const {
    for (const auto& [m, c] : coeffs_)
      if (coefficient(m.t, -m.q) != c) return false;
    return true;
  }

  friend bool operator==(const BivariateCharacter&,
                         const BivariateCharacter&) = default;

 private:
  TorsionContext ctx_;
  Coeffs coeffs_;
};

inline BivariateCharacter bracket(std::int64_t r, TorsionContext ctx = {}) {
  if (r < 1) throw std::invalid_argument("bracket index must be >= 1");
  BivariateCharacter out(ctx);
  for (std::int64_t k = 0; k < r; ++k) out.add(0, r - 1 - 2 * k, 1);
  return out;
}

inline BivariateCharacter character(const IndecomposableBundle& b) {
  BivariateCharacter out(b.context());
  for (std::int64_t k = 0; k < b.index(); ++k)
    out.add(b.exponent(), b.index() - 1 - 2 * k, 1);
  return out;
}

inline BivariateCharacter character(const BundleSum& x) {
  BivariateCharacter out(x.context());
  for (const auto& [b, m] : x.terms())
    for (std::int64_t k = 0; k < b.index(); ++k)
      out.add(b.exponent(), b.index() - 1 - 2 * k, m);
  return out;
}

/// Order in which line exponents sharing the current top weight are peeled.
/// The decomposition does not depend on it.
enum class PeelOrder { ascending, descending };

inline BundleSum decompose_character(BivariateCharacter c,
                                     PeelOrder order = PeelOrder::ascending) {
  const TorsionContext ctx = c.context();
  BundleSum out(ctx);
  while (!c.is_zero()) {
    std::int64_t top = c.coeffs().begin()->first.q;
    for (const auto& [m, coef] : c.coeffs()) top = std::max(top, m.q);
    if (top < 0)
      throw not_a_character("highest remaining weight is negative");

    std::vector<std::pair<std::int64_t, BigInt>> layer;
    for (const auto& [m, coef] : c.coeffs())
      if (m.q == top) layer.emplace_back(m.t, coef);
    if (order == PeelOrder::descending) std::reverse(layer.begin(), layer.end());

    for (const auto& [t, mult] : layer) {
      if (mult < 0) throw not_a_character("negative leading coefficient");
      for (std::int64_t k = 0; k <= top; ++k) {
        const std::int64_t q = top - 2 * k;
        if (c.coefficient(t, q) < mult)
          throw not_a_character("peeling drives a coefficient negative");
        c.add(t, q, -mult);
      }
      out.add(IndecomposableBundle(ctx, t, top + 1), mult);
    }
  }
  return out;
}

struct OracleResult {
  bool agree;
  BundleSum formula;  // from the tensor rule
  BundleSum oracle;   // from the character product
};

inline OracleResult oracle_check(const IndecomposableBundle& a,
                                 const IndecomposableBundle& b) {
  if (a.context() != b.context()) throw context_mismatch();
  BundleSum formula = tensor_indec(a, b);
  BundleSum oracle = decompose_character(character(a) * character(b));
  const bool agree = formula == oracle;
  return {agree, std::move(formula), std::move(oracle)};
}

}  // namespace atiyah
