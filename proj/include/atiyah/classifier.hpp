#pragma once

// Case analysis for E = L (x) F_r on an elliptic curve, where L has order n
// in Pic^0 (n = 0: infinite order). Produces the tensor closure S(E), the
// ring R(E) it generates, its Krull dimension, and the smallest group scheme
// G on whose torsors E becomes trivial. Also handles line-bundle sums on P^1.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "atiyah/format.hpp"
#include "atiyah/kring.hpp"

namespace atiyah {

enum class Curve { elliptic, projective_line };

enum class Parity { any, odd, even };

inline bool parity_matches(Parity p, std::int64_t v) {
  switch (p) {
    case Parity::odd: return v % 2 != 0;
    case Parity::even: return v % 2 == 0;
    case Parity::any: return true;
  }
  return false;
}

/// Set of line exponents. Residues: e in [0, n) with e = offset mod step.
/// Signed progression: e = +-(step * i + offset) for i >= min_i.
struct ExponentPattern {
  enum class Kind { residues, signed_progression };
  Kind kind = Kind::residues;
  std::int64_t step = 1;
  std::int64_t offset = 0;
  std::int64_t min_i = 0;

  bool contains(TorsionContext ctx, std::int64_t e) const {
    if (kind == Kind::residues) {
      if (ctx.is_torsion() && (e < 0 || e >= ctx.order())) return false;
      return ((e - offset) % step + step) % step == 0;
    }
    const std::int64_t a = e < 0 ? -e : e;
    if (a < offset || (a - offset) % step != 0) return false;
    return (a - offset) / step >= min_i;
  }

  std::string describe(TorsionContext ctx) const {
    std::ostringstream os;
    if (kind == Kind::residues) {
      const std::string top =
          ctx.is_torsion() ? std::to_string(ctx.order()) : "inf";
      os << "e in [0," << top << ")";
      if (step != 1) os << ", e = " << offset << " mod " << step;
      return os.str();
    }
    os << "e = +-(";
    if (step != 1) os << step << '*';
    os << 'i';
    if (offset != 0) os << '+' << offset;
    os << "), i >= " << min_i;
    return os.str();
  }
};

/// Set of F-indices j. With a slope s, j <= s*|e| + 1 where e is the line
/// exponent of the same member (the power it first appears in, when L has
/// infinite order).
struct IndexPattern {
  Parity parity = Parity::any;
  std::optional<std::int64_t> slope;
  std::optional<std::int64_t> max_index;

  bool contains(std::int64_t e, std::int64_t j) const {
    if (j < 1 || !parity_matches(parity, j)) return false;
    if (max_index && j > *max_index) return false;
    if (slope) {
      const std::int64_t a = e < 0 ? -e : e;
      if (j > *slope * a + 1) return false;
    }
    return true;
  }

  std::string describe() const {
    std::ostringstream os;
    os << "j >= 1";
    if (parity == Parity::odd) os << ", j odd";
    if (parity == Parity::even) os << ", j even";
    if (max_index) os << ", j <= " << *max_index;
    if (slope) os << ", j <= " << *slope << "*|e|+1";
    return os.str();
  }
};

struct IndexFamily {
  ExponentPattern exponents;
  IndexPattern indices;

  bool contains(const IndecomposableBundle& b) const {
    return exponents.contains(b.context(), b.exponent()) &&
           indices.contains(b.exponent(), b.index());
  }
};

/// S(E) as finitely many explicit members plus closed-form families.
struct SSetDescription {
  Curve curve = Curve::elliptic;
  TorsionContext context;
  std::vector<IndecomposableBundle> finite_part;
  std::vector<IndexFamily> families;

  bool contains(const IndecomposableBundle& b) const {
    if (b.context() != context) return false;
    if (std::find(finite_part.begin(), finite_part.end(), b) !=
        finite_part.end())
      return true;
    return std::any_of(families.begin(), families.end(),
                       [&](const IndexFamily& f) { return f.contains(b); });
  }

  std::string describe_family(const IndexFamily& f) const {
    if (curve == Curve::projective_line) {
      std::ostringstream os;
      os << "O(e) : " << f.exponents.describe(context);
      return os.str();
    }
    return "L^e*F_j : " + f.exponents.describe(context) + "; " +
           f.indices.describe();
  }

  std::string member_name(const IndecomposableBundle& b) const {
    return curve == Curve::projective_line ? p1_line(b.exponent())
                                           : to_string(b);
  }
};

enum class RingKind {
  point,            // Q
  cyclotomic,       // Q[x]/(x^m - 1)
  poly,             // Q[x]
  laurent,          // Q[x, x^-1]
  laurent_poly,     // Q[x, x^-1] (x) Q[y]
  cyclotomic_poly,  // Q[x]/(x^m - 1) (x) Q[y]
};

inline const char* kind_name(RingKind k) {
  switch (k) {
    case RingKind::point: return "point";
    case RingKind::cyclotomic: return "cyclotomic";
    case RingKind::poly: return "poly";
    case RingKind::laurent: return "laurent";
    case RingKind::laurent_poly: return "laurent_poly";
    case RingKind::cyclotomic_poly: return "cyclotomic_poly";
  }
  return "?";
}

struct RingPresentation {
  RingKind kind = RingKind::point;
  std::optional<std::int64_t> modulus;  // m for the cyclotomic kinds
  std::vector<std::string> generators;  // K-ring classes x, y stand for

  std::string formula() const {
    const std::string cyc =
        "Q[x]/(x^" + std::to_string(modulus.value_or(1)) + " - 1)";
    switch (kind) {
      case RingKind::point: return "Q";
      case RingKind::cyclotomic: return cyc;
      case RingKind::poly: return "Q[x]";
      case RingKind::laurent: return "Q[x,x^-1]";
      case RingKind::laurent_poly: return "Q[x,x^-1] (x) Q[y]";
      case RingKind::cyclotomic_poly: return cyc + " (x) Q[y]";
    }
    return "?";
  }

  friend bool operator==(const RingPresentation&,
                         const RingPresentation&) = default;
};

inline std::int64_t krull_dimension(const RingPresentation& p) {
  switch (p.kind) {
    case RingKind::point:
    case RingKind::cyclotomic: return 0;
    case RingKind::poly:
    case RingKind::laurent:
    case RingKind::cyclotomic_poly: return 1;
    case RingKind::laurent_poly: return 2;
  }
  return 0;
}

struct GroupFactor {
  enum class Kind { trivial, mu, gm, ga };
  Kind kind;
  std::int64_t order = 0;  // for mu

  std::int64_t dimension() const {
    return kind == Kind::gm || kind == Kind::ga ? 1 : 0;
  }
  std::string name() const {
    switch (kind) {
      case Kind::trivial: return "trivial";
      case Kind::mu: return "mu_" + std::to_string(order);
      case Kind::gm: return "Gm";
      case Kind::ga: return "Ga";
    }
    return "?";
  }
  friend bool operator==(const GroupFactor&, const GroupFactor&) = default;
};

struct GroupScheme {
  std::vector<GroupFactor> factors;

  std::int64_t dimension() const {
    std::int64_t d = 0;
    for (const auto& f : factors) d += f.dimension();
    return d;
  }
  std::string name() const {
    std::string out;
    for (const auto& f : factors) {
      if (!out.empty()) out += " x ";
      out += f.name();
    }
    return out.empty() ? "trivial" : out;
  }
  friend bool operator==(const GroupScheme&, const GroupScheme&) = default;
};

struct ClassificationReport {
  Curve curve = Curve::elliptic;
  std::int64_t rank = 0;
  std::int64_t torsion = 0;            // elliptic only
  std::vector<std::int64_t> degrees;   // projective line only
  SSetDescription s_set;
  RingPresentation presentation;
  std::int64_t krull_dim = 0;
  GroupScheme group;
  bool correspondence_holds = false;
  std::optional<std::string> minimality_note;
  std::optional<std::string> remark;
};

namespace detail {

inline IndecomposableBundle twist(TorsionContext ctx, std::int64_t e,
                                  std::int64_t j) {
  return {ctx, e, j};
}

inline ExponentPattern all_residues(std::int64_t step = 1,
                                    std::int64_t offset = 0) {
  return {ExponentPattern::Kind::residues, step, offset, 0};
}

inline ExponentPattern signed_progression(std::int64_t step,
                                          std::int64_t offset,
                                          std::int64_t min_i) {
  return {ExponentPattern::Kind::signed_progression, step, offset, min_i};
}

inline void check_inputs(std::int64_t r, std::int64_t n) {
  if (r < 1) throw std::invalid_argument("rank must be >= 1");
  if (n < 0) throw std::invalid_argument("torsion order must be >= 0");
}

}  // namespace detail

inline SSetDescription s_set_symbolic(std::int64_t r, std::int64_t n) {
  detail::check_inputs(r, n);
  using detail::twist;
  const TorsionContext ctx(n);
  SSetDescription s;
  s.context = ctx;
  const std::int64_t slope = r - 1;

  if (n == 0) {
    s.finite_part.push_back(IndecomposableBundle::trivial(ctx));
    if (r == 1) {
      s.families.push_back({detail::signed_progression(1, 0, 1),
                            {Parity::any, 0, std::nullopt}});
      return s;
    }
    s.finite_part.push_back(twist(ctx, 1, r));
    s.finite_part.push_back(twist(ctx, -1, r));
    if (r % 2 != 0) {
      // E^{+-1} only contributes E and its dual; from |m| = 2 on every odd
      // index up to (r-1)|m|+1 occurs, O_X-twist included.
      s.families.push_back({detail::signed_progression(1, 0, 2),
                            {Parity::odd, slope, std::nullopt}});
    } else {
      s.families.push_back({detail::signed_progression(2, 0, 1),
                            {Parity::odd, slope, std::nullopt}});
      s.families.push_back({detail::signed_progression(2, 1, 1),
                            {Parity::even, slope, std::nullopt}});
    }
    return s;
  }

  if (r == 1) {
    if (n == 1) {
      s.finite_part.push_back(IndecomposableBundle::trivial(ctx));
    } else {
      s.families.push_back({detail::all_residues(), {Parity::any, std::nullopt, 1}});
    }
    return s;
  }

  if (r % 2 != 0) {
    s.families.push_back({detail::all_residues(), {Parity::odd, {}, {}}});
  } else if (n % 2 != 0) {
    s.families.push_back({detail::all_residues(), {Parity::any, {}, {}}});
  } else {
    s.families.push_back({detail::all_residues(2, 0), {Parity::odd, {}, {}}});
    s.families.push_back({detail::all_residues(2, 1), {Parity::even, {}, {}}});
  }
  return s;
}

/// Whether F_j is a summand of F_r^{(x) k}, k >= 1, by the closed form:
/// k = 1 gives F_r alone; otherwise every index of the parity of
/// (r-1)k+1 up to (r-1)k+1.
inline bool occurs_in_atiyah_power(std::int64_t r, std::int64_t k,
                                   std::int64_t j) {
  if (k == 1 || r == 1) return j == r;
  const std::int64_t top = (r - 1) * k + 1;
  return j >= 1 && j <= top && (top - j) % 2 == 0;
}

/// Smallest |m| >= 1 such that b is a summand of E^{(x) m}, E = L (x) F_r.
inline std::optional<std::int64_t> s_set_first_power(
    std::int64_t r, std::int64_t n, const IndecomposableBundle& b) {
  detail::check_inputs(r, n);
  const TorsionContext ctx(n);
  const std::int64_t e = b.exponent();
  const std::int64_t limit =
      n == 0 ? (e < 0 ? -e : e) : 2 * n * (b.index() + 2) + 2;
  for (std::int64_t k = 1; k <= limit; ++k) {
    if (ctx.reduce(k) != e && ctx.reduce(-k) != e) continue;
    if (occurs_in_atiyah_power(r, k, b.index())) return k;
  }
  return std::nullopt;
}

/// Union of the supports of E^{(x) m} for 0 < |m| <= power_bound.
inline std::vector<IndecomposableBundle> s_set_enumerate(
    std::int64_t r, std::int64_t n, std::int64_t power_bound) {
  detail::check_inputs(r, n);
  if (power_bound < 1) throw std::invalid_argument("power bound must be >= 1");
  const TorsionContext ctx(n);
  const BundleSum e = IndecomposableBundle(ctx, 1, r);
  std::set<IndecomposableBundle> found;
  BundleSum p = e;
  for (std::int64_t m = 1; m <= power_bound; ++m) {
    if (m > 1) p = tensor(p, e);
    for (const auto& [b, mult] : p.terms()) {
      found.insert(b);
      found.insert(dual(b));
    }
  }
  return {found.begin(), found.end()};
}

/// Enumeration at a power bound compared with the closed-form description.
struct SSetAgreement {
  std::vector<IndecomposableBundle> enumerated;
  std::vector<IndecomposableBundle> stray;    // enumerated, not described
  std::vector<IndecomposableBundle> missing;  // described and reachable, not enumerated
  std::vector<IndecomposableBundle> phantom;  // described, but in no tensor power
  bool holds() const { return stray.empty() && missing.empty() && phantom.empty(); }
};

/// Checks s_set_enumerate against s_set_symbolic, and both against the
/// closed form s_set_first_power. A described member counts as reachable
/// when its F-index is at most (r-1)*bound+1 and it first occurs in a power
/// of absolute value <= bound. Within that window every described member
/// other than O_X (the empty power) must occur in some power.
inline SSetAgreement s_set_agreement(std::int64_t r, std::int64_t n,
                                     std::int64_t bound) {
  SSetAgreement out;
  out.enumerated = s_set_enumerate(r, n, bound);
  const SSetDescription desc = s_set_symbolic(r, n);
  for (const auto& b : out.enumerated) {
    const auto first = s_set_first_power(r, n, b);
    if (!desc.contains(b) || !first || *first > bound) out.stray.push_back(b);
  }

  const TorsionContext ctx(n);
  const std::int64_t e_lo = n == 0 ? -bound : 0;
  const std::int64_t e_hi = n == 0 ? bound : n - 1;
  const std::int64_t j_max = (r - 1) * bound + 1;
  const std::set<IndecomposableBundle> found(out.enumerated.begin(),
                                             out.enumerated.end());
  for (std::int64_t e = e_lo; e <= e_hi; ++e)
    for (std::int64_t j = 1; j <= j_max; ++j) {
      const IndecomposableBundle b(ctx, e, j);
      if (!desc.contains(b)) continue;
      const auto first = s_set_first_power(r, n, b);
      if (!first && !b.is_trivial()) out.phantom.push_back(b);
      if (first && *first <= bound && !found.count(b)) out.missing.push_back(b);
    }
  return out;
}

inline ClassificationReport classify(std::int64_t r, std::int64_t n) {
  detail::check_inputs(r, n);
  ClassificationReport rep;
  rep.rank = r;
  rep.torsion = n;
  rep.s_set = s_set_symbolic(r, n);

  using GK = GroupFactor::Kind;
  auto& p = rep.presentation;
  auto& g = rep.group.factors;
  const bool odd_r = r % 2 != 0;
  const std::string poly_gen = odd_r ? "[F_3]" : "[F_2]";

  if (r == 1) {
    if (n == 1) {
      p.kind = RingKind::point;
      g = {{GK::trivial}};
    } else if (n >= 2) {
      p = {RingKind::cyclotomic, n, {"[L]"}};
      g = {{GK::mu, n}};
    } else {
      p = {RingKind::laurent, std::nullopt, {"[L]"}};
      g = {{GK::gm}};
      rep.remark =
          "extension: a single non-torsion line bundle, classified like a "
          "line bundle on P^1";
    }
  } else if (n == 1) {
    p = {RingKind::poly, std::nullopt, {poly_gen}};
    g = {{GK::ga}};
  } else if (n == 0) {
    p.kind = RingKind::laurent_poly;
    p.generators = odd_r ? std::vector<std::string>{"[L]", "[F_3]"}
                         : std::vector<std::string>{"[L^2]", "[L^-1*F_2]"};
    g = {{GK::gm}, {GK::ga}};
  } else if (odd_r || n % 2 != 0) {
    p = {RingKind::cyclotomic_poly, n, {"[L]", poly_gen}};
    g = {{GK::mu, n}, {GK::ga}};
  } else {
    const std::int64_t half = n / 2;
    p = {RingKind::cyclotomic_poly, half, {"[L^2]", "[L*F_2]"}};
    g = {{GK::mu, n}, {GK::ga}};
    rep.minimality_note = "no mu_" + std::to_string(half) +
                          " x Ga torsor trivializes E: L has exact order " +
                          std::to_string(n) +
                          " and the Ga-part leaves Pic unchanged";
  }

  rep.krull_dim = krull_dimension(p);
  rep.correspondence_holds = rep.krull_dim == rep.group.dimension();
  return rep;
}

struct GridRow {
  std::int64_t rank;
  std::int64_t torsion;
  std::int64_t krull_dim;
  std::int64_t group_dim;
  bool holds;
  friend bool operator==(const GridRow&, const GridRow&) = default;
};

inline std::vector<GridRow> correspondence_grid(std::int64_t r_max,
                                                std::int64_t n_max) {
  if (r_max < 1 || n_max < 0)
    throw std::invalid_argument("grid bounds must be r_max >= 1, n_max >= 0");
  std::vector<GridRow> rows;
  for (std::int64_t r = 1; r <= r_max; ++r)
    for (std::int64_t n = 0; n <= n_max; ++n) {
      const auto rep = classify(r, n);
      rows.push_back({r, n, rep.krull_dim, rep.group.dimension(),
                      rep.correspondence_holds});
    }
  return rows;
}

/// E = O(d_1) + ... + O(d_k) on P^1. Its closure is generated by O(c) with
/// c = gcd(d_1, ..., d_k).
inline ClassificationReport p1_classify(const std::vector<std::int64_t>& degrees) {
  if (degrees.empty()) throw std::invalid_argument("degree list is empty");
  std::int64_t c = 0;
  for (auto d : degrees) c = std::gcd(c, d);

  ClassificationReport rep;
  rep.curve = Curve::projective_line;
  rep.rank = static_cast<std::int64_t>(degrees.size());
  rep.degrees = degrees;
  rep.s_set.curve = Curve::projective_line;
  rep.s_set.context = TorsionContext::non_torsion();
  rep.s_set.finite_part.push_back(
      IndecomposableBundle::trivial(rep.s_set.context));
  if (c == 0) {
    rep.presentation.kind = RingKind::point;
    rep.group.factors = {{GroupFactor::Kind::trivial}};
  } else {
    rep.s_set.families.push_back(
        {detail::signed_progression(c, 0, 1), {Parity::any, 0, std::nullopt}});
    rep.presentation = {RingKind::laurent, std::nullopt,
                        {"[" + p1_line(c) + "]"}};
    rep.group.factors = {{GroupFactor::Kind::gm}};
  }
  rep.krull_dim = krull_dimension(rep.presentation);
  rep.correspondence_holds = rep.krull_dim == rep.group.dimension();
  return rep;
}

}  // namespace atiyah
