#pragma once

// Atiyah bundles as integer polynomials in a single generator of K(X).
// Even chain: x = [F_2], p_1 = 1, p_2 = x, p_{i+1} = x p_i - p_{i-1}.
// Odd chain:  x = [F_3], q_1 = 1, q_3 = x, q_{i+2} = (x - 1) q_i - q_{i-2}.

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "atiyah/kring.hpp"

namespace atiyah {

/// Dense polynomial over Z, coefficients in ascending degree.
class IntegerPolynomial {
 public:
  IntegerPolynomial() = default;
  explicit IntegerPolynomial(std::vector<BigInt> coeffs)
      : coeffs_(std::move(coeffs)) {
    trim();
  }

  static IntegerPolynomial x() { return IntegerPolynomial({0, 1}); }
  static IntegerPolynomial constant(const BigInt& c) {
    return IntegerPolynomial({c});
  }

  const std::vector<BigInt>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  std::int64_t degree() const {
    return static_cast<std::int64_t>(coeffs_.size()) - 1;
  }

  BigInt coefficient(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : BigInt(0);
  }

  friend IntegerPolynomial operator+(const IntegerPolynomial& a,
                                     const IntegerPolynomial& b) {
    std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t k = 0; k < c.size(); ++k)
      c[k] = a.coefficient(k) + b.coefficient(k);
    return IntegerPolynomial(std::move(c));
  }
  friend IntegerPolynomial operator-(const IntegerPolynomial& a,
                                     const IntegerPolynomial& b) {
    std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t k = 0; k < c.size(); ++k)
      c[k] = a.coefficient(k) - b.coefficient(k);
    return IntegerPolynomial(std::move(c));
  }
  friend IntegerPolynomial operator*(const IntegerPolynomial& a,
                                     const IntegerPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return IntegerPolynomial(std::move(c));
  }

  /// Horner evaluation in any ring whose elements support + and *, with
  /// `lift` mapping an integer coefficient into that ring.
  template <class Ring, class Lift>
  Ring evaluate(const Ring& at, Lift&& lift) const {
    if (coeffs_.empty()) return lift(BigInt(0));
    Ring acc = lift(coeffs_.back());
    for (auto it = coeffs_.rbegin() + 1; it != coeffs_.rend(); ++it)
      acc = acc * at + lift(*it);
    return acc;
  }

  KRingElement evaluate(const KRingElement& at) const {
    const TorsionContext ctx = at.context();
    return evaluate(at, [ctx](const BigInt& c) {
      return KRingElement::constant(ctx, c);
    });
  }

  std::string to_string(const std::string& var = "x") const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
      const BigInt& c = coeffs_[k];
      if (c == 0) continue;
      const BigInt mag = c < 0 ? BigInt(-c) : c;
      if (first)
        os << (c < 0 ? "-" : "");
      else
        os << (c < 0 ? " - " : " + ");
      first = false;
      if (k == 0 || mag != 1) os << mag;
      if (k > 0) {
        if (mag != 1) os << '*';
        os << var;
        if (k > 1) os << '^' << k;
      }
    }
    return os.str();
  }

  friend bool operator==(const IntegerPolynomial&,
                         const IntegerPolynomial&) = default;

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<BigInt> coeffs_;
};

enum class GeneratorChain { even, odd };

inline IntegerPolynomial express_in_generator(std::int64_t i,
                                              GeneratorChain chain) {
  if (i < 1) throw std::invalid_argument("F index must be >= 1");
  const auto x = IntegerPolynomial::x();
  const auto one = IntegerPolynomial::constant(1);
  if (chain == GeneratorChain::even) {
    IntegerPolynomial prev = one, cur = x;  // p_1, p_2
    if (i == 1) return prev;
    for (std::int64_t k = 2; k < i; ++k) {
      IntegerPolynomial next = x * cur - prev;
      prev = std::move(cur);
      cur = std::move(next);
    }
    return cur;
  }
  if (i % 2 == 0)
    throw std::invalid_argument("odd chain only expresses odd indices");
  IntegerPolynomial prev = one, cur = x;  // q_1, q_3
  if (i == 1) return prev;
  const auto x_minus_one = x - one;
  for (std::int64_t k = 3; k < i; k += 2) {
    IntegerPolynomial next = x_minus_one * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// The K-ring class the chain's variable x stands for.
inline KRingElement chain_generator(GeneratorChain chain,
                                    TorsionContext ctx = {}) {
  return IndecomposableBundle::atiyah(ctx, chain == GeneratorChain::even ? 2 : 3);
}

}  // namespace atiyah
