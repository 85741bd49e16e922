#pragma once

// Machine-readable reports. Field names are stable; big integers are
// emitted as decimal strings. The classification report is described by
// schemas/classification_report.schema.json.

#include <string>

#include "json.hpp"

#include "atiyah/classifier.hpp"
#include "atiyah/format.hpp"
#include "atiyah/generator.hpp"
#include "atiyah/kring.hpp"

namespace atiyah {

using nlohmann::json;

inline json to_json(const BundleSum& x) {
  json terms = json::array();
  for (const auto& [b, m] : x.terms())
    terms.push_back({{"multiplicity", m.str()},
                     {"exponent", b.exponent()},
                     {"index", b.index()},
                     {"name", to_string(b)}});
  return {{"torsion", x.context().order()},
          {"text", to_string(x)},
          {"rank", rank(x).str()},
          {"terms", std::move(terms)}};
}

namespace detail {

inline const char* parity_name(Parity p) {
  switch (p) {
    case Parity::odd: return "odd";
    case Parity::even: return "even";
    case Parity::any: return "any";
  }
  return "any";
}

template <class T>
json optional_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

}  // namespace detail

inline json to_json(const SSetDescription& s) {
  json finite = json::array();
  for (const auto& b : s.finite_part) finite.push_back(s.member_name(b));
  json families = json::array();
  for (const auto& f : s.families) {
    const bool residues = f.exponents.kind == ExponentPattern::Kind::residues;
    families.push_back(
        {{"exponents",
          {{"kind", residues ? "residues" : "signed_progression"},
           {"step", f.exponents.step},
           {"offset", f.exponents.offset},
           {"min_i", f.exponents.min_i}}},
         {"index",
          {{"parity", detail::parity_name(f.indices.parity)},
           {"slope", detail::optional_json(f.indices.slope)},
           {"max", detail::optional_json(f.indices.max_index)}}},
         {"text", s.describe_family(f)}});
  }
  return {{"finite", std::move(finite)}, {"families", std::move(families)}};
}

inline json to_json(const ClassificationReport& rep) {
  json input = {{"rank", rep.rank}};
  if (rep.curve == Curve::elliptic) {
    input["curve"] = "elliptic";
    input["torsion"] = rep.torsion;
  } else {
    input["curve"] = "P1";
    input["degrees"] = rep.degrees;
  }
  json factors = json::array();
  for (const auto& f : rep.group.factors) factors.push_back(f.name());
  return {
      {"input", std::move(input)},
      {"s_set", to_json(rep.s_set)},
      {"presentation",
       {{"kind", kind_name(rep.presentation.kind)},
        {"modulus", detail::optional_json(rep.presentation.modulus)},
        {"generators", rep.presentation.generators},
        {"formula", rep.presentation.formula()}}},
      {"krull_dim", rep.krull_dim},
      {"group",
       {{"factors", std::move(factors)},
        {"dim", rep.group.dimension()},
        {"name", rep.group.name()}}},
      {"correspondence", rep.correspondence_holds},
      {"minimality_note", detail::optional_json(rep.minimality_note)},
      {"remark", detail::optional_json(rep.remark)},
  };
}

inline json to_json(const GridRow& row) {
  return {{"rank", row.rank},
          {"torsion", row.torsion},
          {"krull_dim", row.krull_dim},
          {"group_dim", row.group_dim},
          {"holds", row.holds}};
}

inline json to_json(const IntegerPolynomial& p) {
  json coeffs = json::array();
  for (const auto& c : p.coefficients()) coeffs.push_back(c.str());
  return {{"coefficients", std::move(coeffs)}, {"text", p.to_string()}};
}

}  // namespace atiyah
