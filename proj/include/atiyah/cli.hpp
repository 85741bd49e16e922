#pragma once

// Command-line front end. `run` is the whole program minus process setup so
// it can be driven in-process by tests.
//
// Exit status: 0 success, 1 usage error, 2 computation error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "atiyah/character.hpp"
#include "atiyah/classifier.hpp"
#include "atiyah/expression.hpp"
#include "atiyah/format.hpp"
#include "atiyah/generator.hpp"
#include "atiyah/kring.hpp"
#include "atiyah/report_json.hpp"

namespace atiyah::cli {

enum ExitCode : int { ok = 0, usage_error = 1, computation_error = 2 };

inline std::string render_text(const SSetDescription& s) {
  std::ostringstream os;
  os << "S(E):\n";
  if (!s.finite_part.empty()) {
    os << "  finite:";
    for (const auto& b : s.finite_part) os << ' ' << s.member_name(b);
    os << '\n';
  }
  for (const auto& f : s.families) os << "  family: " << s.describe_family(f) << '\n';
  return os.str();
}

inline std::string render_text(const ClassificationReport& rep) {
  std::ostringstream os;
  if (rep.curve == Curve::elliptic) {
    os << "E = " << to_string(IndecomposableBundle(TorsionContext(rep.torsion), 1, rep.rank))
       << " on an elliptic curve, L of order "
       << (rep.torsion == 0 ? std::string("infinity") : std::to_string(rep.torsion))
       << '\n';
  } else {
    os << "E =";
    for (std::size_t i = 0; i < rep.degrees.size(); ++i)
      os << (i ? " + " : " ") << p1_line(rep.degrees[i]);
    os << " on P^1\n";
  }
  os << render_text(rep.s_set);
  os << "R(E) = " << rep.presentation.formula();
  const char* vars[] = {"x", "y"};
  for (std::size_t i = 0; i < rep.presentation.generators.size() && i < 2; ++i)
    os << (i ? ", " : "   ") << vars[i] << " = " << rep.presentation.generators[i];
  os << '\n';
  os << "Krull dimension: " << rep.krull_dim << '\n';
  os << "group scheme: " << rep.group.name() << " (dim " << rep.group.dimension()
     << ")\n";
  os << "dim R(E) = dim G: " << (rep.correspondence_holds ? "holds" : "FAILS") << '\n';
  if (rep.minimality_note) os << "minimality: " << *rep.minimality_note << '\n';
  if (rep.remark) os << "remark: " << *rep.remark << '\n';
  return os.str();
}

namespace detail {

struct Options {
  std::int64_t torsion = 0;
  std::int64_t bound = 6;
  std::string format = "text";
  std::string out_file;
  std::string expr;
  std::int64_t exponent = 1;
  std::int64_t rank = 1;
  std::int64_t index = 1;
  std::string chain = "even";
  std::int64_t r_max = 12;
  std::int64_t n_max = 12;
  std::vector<std::int64_t> degrees;
};

inline bool json_output(const Options& o) { return o.format == "json"; }

inline std::string emit(const Options& o, const json& j, const std::string& text) {
  return json_output(o) ? j.dump(2) + "\n" : text;
}

inline std::string cmd_tensor(const Options& o) {
  const BundleSum x = evaluate(o.expr, TorsionContext(o.torsion));
  return emit(o, to_json(x), to_string(x) + "\n");
}

inline std::string cmd_power(const Options& o) {
  const BundleSum base = evaluate(o.expr, TorsionContext(o.torsion));
  const BundleSum x = tensor_power(base, o.exponent);
  return emit(o, to_json(x), to_string(x) + "\n");
}

inline std::string cmd_sset(const Options& o) {
  const SSetDescription desc = s_set_symbolic(o.rank, o.torsion);
  const SSetAgreement agree = s_set_agreement(o.rank, o.torsion, o.bound);
  auto names = [&](const std::vector<IndecomposableBundle>& v) {
    std::vector<std::string> out;
    for (const auto& b : v) out.push_back(to_string(b));
    return out;
  };
  json j = {{"rank", o.rank},
            {"torsion", o.torsion},
            {"bound", o.bound},
            {"symbolic", to_json(desc)},
            {"enumerated", names(agree.enumerated)},
            {"stray", names(agree.stray)},
            {"missing", names(agree.missing)},
            {"phantom", names(agree.phantom)},
            {"agrees", agree.holds()}};
  std::ostringstream os;
  os << render_text(desc);
  os << "enumerated (|m| <= " << o.bound << "):";
  for (const auto& b : agree.enumerated) os << ' ' << to_string(b);
  os << "\nagreement: " << (agree.holds() ? "yes" : "NO") << '\n';
  return emit(o, j, os.str());
}

inline std::string cmd_classify(const Options& o) {
  const auto rep = classify(o.rank, o.torsion);
  return emit(o, to_json(rep), render_text(rep));
}

inline std::string cmd_express(const Options& o) {
  const auto chain = o.chain == "odd" ? GeneratorChain::odd : GeneratorChain::even;
  const IntegerPolynomial p = express_in_generator(o.index, chain);
  const KRingElement value = p.evaluate(chain_generator(chain));
  const bool reproduces =
      value == KRingElement(IndecomposableBundle::atiyah({}, o.index));
  const std::string var = chain == GeneratorChain::odd ? "[F_3]" : "[F_2]";
  json j = {{"index", o.index},
            {"chain", o.chain},
            {"generator", var},
            {"polynomial", to_json(p)},
            {"reproduces", reproduces}};
  std::ostringstream os;
  os << "[F_" << o.index << "] = p(x), x = " << var << "\n";
  os << "p(x) = " << p.to_string() << '\n';
  return emit(o, j, os.str());
}

inline std::string cmd_grid(const Options& o) {
  const auto rows = correspondence_grid(o.r_max, o.n_max);
  json j = json::array();
  std::ostringstream os;
  os << "rank torsion krull_dim group_dim holds\n";
  for (const auto& row : rows) {
    j.push_back(to_json(row));
    os << row.rank << ' ' << row.torsion << ' ' << row.krull_dim << ' '
       << row.group_dim << ' ' << (row.holds ? "true" : "false") << '\n';
  }
  return emit(o, j, os.str());
}

inline std::string cmd_p1(const Options& o) {
  const auto rep = p1_classify(o.degrees);
  return emit(o, to_json(rep), render_text(rep));
}

}  // namespace detail

/// Oracle agreement over 1 <= s <= r <= r_max, each pair tried with line
/// exponents in {-1, 0, 1} on both sides.
struct VerifySummary {
  std::int64_t pairs = 0;
  std::int64_t agreeing = 0;
  std::vector<OracleResult> mismatches;
};

inline VerifySummary verify_oracle(std::int64_t r_max, TorsionContext ctx) {
  VerifySummary s;
  for (std::int64_t r = 1; r <= r_max; ++r)
    for (std::int64_t q = 1; q <= r; ++q) {
      ++s.pairs;
      bool pair_ok = true;
      for (std::int64_t ea = -1; ea <= 1; ++ea)
        for (std::int64_t eb = -1; eb <= 1; ++eb) {
          auto res = oracle_check({ctx, ea, r}, {ctx, eb, q});
          if (!res.agree) {
            pair_ok = false;
            s.mismatches.push_back(std::move(res));
          }
        }
      if (pair_ok) ++s.agreeing;
    }
  return s;
}

inline int run(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"Grothendieck ring calculator for degree-zero bundles on an elliptic curve"};
  app.name("atiyah");
  app.require_subcommand(1);
  app.fallthrough();

  detail::Options o;
  app.add_option("--torsion", o.torsion, "order of L in Pic^0 (0 = non-torsion)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--bound", o.bound, "power bound for S(E) enumeration")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", o.out_file, "also write the report to FILE");

  auto* tensor_cmd = app.add_subcommand("tensor", "evaluate a bundle expression");
  tensor_cmd->add_option("expr", o.expr, "expression, e.g. \"F_2 * F_3\"")->required();

  auto* power_cmd = app.add_subcommand("power", "signed tensor power of an expression");
  power_cmd->add_option("expr", o.expr)->required();
  power_cmd->add_option("m", o.exponent, "exponent (may be negative)")->required();

  auto* sset_cmd = app.add_subcommand("sset", "tensor closure S(E) of E = L*F_r");
  sset_cmd->add_option("--rank", o.rank)->required()->check(CLI::PositiveNumber);

  auto* classify_cmd = app.add_subcommand("classify", "classify E = L*F_r");
  classify_cmd->add_option("--rank", o.rank)->required()->check(CLI::PositiveNumber);

  auto* express_cmd = app.add_subcommand("express", "write F_i as a polynomial in a generator");
  express_cmd->add_option("index", o.index)->required()->check(CLI::PositiveNumber);
  express_cmd->add_option("--chain", o.chain)->check(CLI::IsMember({"even", "odd"}));

  auto* verify_cmd = app.add_subcommand("verify", "cross-check the tensor rule against the character oracle");
  verify_cmd->add_option("--rmax", o.r_max)->check(CLI::PositiveNumber);

  auto* grid_cmd = app.add_subcommand("grid", "dimension correspondence over a grid of (r, n)");
  grid_cmd->add_option("--rmax", o.r_max)->check(CLI::PositiveNumber);
  grid_cmd->add_option("--nmax", o.n_max)->check(CLI::NonNegativeNumber);

  auto* p1_cmd = app.add_subcommand("p1", "classify O(d_1) + ... + O(d_k) on P^1");
  p1_cmd->add_option("degrees", o.degrees)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o_help, e_help;
    const int code = app.exit(e, o_help, e_help);
    out << o_help.str();
    err << e_help.str();
    return code == 0 ? ok : usage_error;
  }

  std::string report;
  int status = ok;
  try {
    if (*tensor_cmd) {
      report = detail::cmd_tensor(o);
    } else if (*power_cmd) {
      report = detail::cmd_power(o);
    } else if (*sset_cmd) {
      report = detail::cmd_sset(o);
    } else if (*classify_cmd) {
      report = detail::cmd_classify(o);
    } else if (*express_cmd) {
      report = detail::cmd_express(o);
    } else if (*grid_cmd) {
      report = detail::cmd_grid(o);
    } else if (*p1_cmd) {
      report = detail::cmd_p1(o);
    } else if (*verify_cmd) {
      const auto s = verify_oracle(o.r_max, TorsionContext(o.torsion));
      for (const auto& m : s.mismatches)
        err << "mismatch: formula " << to_string(m.formula) << ", oracle "
            << to_string(m.oracle) << '\n';
      const json j = {{"pairs", s.pairs},
                      {"agreeing", s.agreeing},
                      {"mismatches", s.mismatches.size()}};
      std::ostringstream os;
      os << "oracle agreement " << s.agreeing << '/' << s.pairs << " pairs\n";
      report = detail::emit(o, j, os.str());
      if (s.agreeing != s.pairs) status = computation_error;
    }
  } catch (const parse_error& e) {
    err << "syntax error: " << e.what() << '\n';
    return usage_error;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  } catch (const std::exception& e) {
    err << "computation error: " << e.what() << '\n';
    return computation_error;
  }

  out << report;
  if (!o.out_file.empty()) {
    std::ofstream f(o.out_file, std::ios::binary);
    f << report;
    if (!f) {
      err << "error: cannot write " << o.out_file << '\n';
      return computation_error;
    }
  }
  return status;
}

}  // namespace atiyah::cli
