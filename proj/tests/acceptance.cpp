// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. All comparisons are exact.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>
#include <string>

#include "atiyah/atiyah.hpp"
#include "atiyah/cli.hpp"
#include "support/json_schema.hpp"
#include "support/random_bundles.hpp"

namespace {

using namespace atiyah;

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Suite {
 public:
  void run(int id, const std::string& name, double time_limit_s,
           const std::function<Outcome()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = body();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (time_limit_s > 0 && secs >= time_limit_s) {
      o.pass = false;
      o.detail += " [time limit " + std::to_string(time_limit_s) + " s exceeded]";
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f s", secs);
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << id << ". " << name << ": " << o.detail
              << " (" << buf << ")\n";
    failures_ += o.pass ? 0 : 1;
  }
  int failures() const { return failures_; }

 private:
  int failures_ = 0;
};

Outcome oracle_equivalence() {
  std::size_t checks = 0, bad = 0;
  for (std::int64_t n : {0, 1, 2, 3, 4, 6}) {
    const TorsionContext ctx(n);
    for (std::int64_t r = 1; r <= 12; ++r)
      for (std::int64_t s = 1; s <= r; ++s)
        for (std::int64_t ea = -3; ea <= 3; ++ea)
          for (std::int64_t eb = -3; eb <= 3; ++eb) {
            const IndecomposableBundle a(ctx, ea, r), b(ctx, eb, s);
            const BundleSum oracle = decompose_character(character(a) * character(b));
            ++checks;
            if (tensor_indec(a, b) != oracle) ++bad;
          }
  }
  return {bad == 0, std::to_string(checks - bad) + "/" + std::to_string(checks) + " products agree"};
}

Outcome multiplication_structure() {
  const TorsionContext ctx(0);
  std::size_t bad = 0, pairs = 0;
  for (std::int64_t r = 1; r <= 12; ++r)
    for (std::int64_t s = 1; s <= 12; ++s) {
      ++pairs;
      const auto p = tensor_indec(IndecomposableBundle::atiyah(ctx, r),
                                  IndecomposableBundle::atiyah(ctx, s));
      const std::int64_t hi = std::max(r, s), lo = std::min(r, s);
      bool ok = p.distinct_components() == static_cast<std::size_t>(lo) && rank(p) == r * s;
      for (std::int64_t k = 0; k < lo; ++k)
        ok = ok && p.multiplicity(IndecomposableBundle::atiyah(ctx, hi - lo + 1 + 2 * k)) == 1;
      if (!ok) ++bad;
    }
  return {bad == 0, std::to_string(pairs - bad) + "/" + std::to_string(pairs) +
                        " pairs have s simple components F_{r-s+1+2k} and rank rs"};
}

Outcome tensor_power_form() {
  const TorsionContext ctx(0);
  std::size_t bad = 0, cases = 0;
  for (std::int64_t r = 1; r <= 5; ++r) {
    const IndecomposableBundle f(ctx, 0, r);
    BivariateCharacter ch = character(f);
    for (std::int64_t n = 1; n <= 8; ++n) {
      if (n > 1) ch = ch * character(f);
      ++cases;
      const BundleSum p = tensor_power(BundleSum(f), n);
      const std::int64_t top = (r - 1) * n + 1;
      bool ok = p.multiplicity(IndecomposableBundle::atiyah(ctx, top)) == 1 &&
                p == decompose_character(ch);
      for (const auto& [b, m] : p.terms()) ok = ok && (top - b.index()) % 2 == 0;
      if (!ok) ++bad;
    }
  }
  const auto f2 = BundleSum(IndecomposableBundle::atiyah(ctx, 2));
  const auto via_oracle = [&](std::int64_t n) {
    BivariateCharacter c = BivariateCharacter::monomial(ctx, 0, 0);
    for (std::int64_t i = 0; i < n; ++i) c = c * character(f2);
    return decompose_character(c);
  };
  const auto F = [&](std::int64_t i) { return IndecomposableBundle::atiyah(ctx, i); };
  const BigInt a2_3 = tensor_power(f2, 3).multiplicity(F(2));
  const BigInt a1_4 = tensor_power(f2, 4).multiplicity(F(1));
  const BigInt a3_4 = tensor_power(f2, 4).multiplicity(F(3));
  const bool values = a2_3 == 2 && a1_4 == 2 && a3_4 == 3 &&
                      via_oracle(3).multiplicity(F(2)) == 2 &&
                      via_oracle(4).multiplicity(F(1)) == 2 &&
                      via_oracle(4).multiplicity(F(3)) == 3;
  std::ostringstream os;
  os << (cases - bad) << "/" << cases << " powers F_r^n (r<=5, n<=8) have parity (r-1)n+1 and simple top"
     << "; a_2(3)=" << a2_3 << " a_1(4)=" << a1_4 << " a_3(4)=" << a3_4;
  return {bad == 0 && values, os.str()};
}

Outcome s_set_agreement_grid() {
  std::size_t cells = 0, bad = 0, enumerated = 0;
  std::string first_bad;
  for (std::int64_t r = 1; r <= 6; ++r)
    for (std::int64_t n = 0; n <= 6; ++n) {
      ++cells;
      const auto a = s_set_agreement(r, n, 8);
      enumerated += a.enumerated.size();
      if (!a.holds()) {
        ++bad;
        if (first_bad.empty())
          first_bad = " first failure at r=" + std::to_string(r) + " n=" + std::to_string(n);
      }
    }
  return {bad == 0, std::to_string(cells - bad) + "/" + std::to_string(cells) +
                        " cells agree at power bound 8 (" + std::to_string(enumerated) +
                        " enumerated members)" + first_bad};
}

Outcome dimension_correspondence() {
  const auto rows = correspondence_grid(10, 12);
  std::size_t holds = 0, both_even = 0, both_even_ok = 0;
  for (const auto& row : rows) {
    holds += row.holds ? 1 : 0;
    if (row.rank % 2 == 0 && row.torsion >= 2 && row.torsion % 2 == 0) {
      ++both_even;
      const auto rep = classify(row.rank, row.torsion);
      const bool ok = rep.minimality_note && !rep.minimality_note->empty() &&
                      rep.presentation.modulus == row.torsion / 2 &&
                      !rep.group.factors.empty() &&
                      rep.group.factors.front().kind == GroupFactor::Kind::mu &&
                      rep.group.factors.front().order == row.torsion;
      both_even_ok += ok ? 1 : 0;
    }
  }
  std::ostringstream os;
  os << holds << "/" << rows.size() << " cells with dim R(E) = dim G; " << both_even_ok << "/"
     << both_even << " both-even cells with modulus n/2, group mu_n and a minimality note";
  return {rows.size() == 130 && holds == rows.size() && both_even_ok == both_even, os.str()};
}

Outcome generator_polynomials() {
  std::size_t ok = 0, total = 0;
  for (std::int64_t i = 1; i <= 12; ++i, ++total)
    ok += express_in_generator(i, GeneratorChain::even).evaluate(chain_generator(GeneratorChain::even)) ==
                  KRingElement(IndecomposableBundle::atiyah({}, i))
              ? 1
              : 0;
  for (std::int64_t i = 1; i <= 13; i += 2, ++total)
    ok += express_in_generator(i, GeneratorChain::odd).evaluate(chain_generator(GeneratorChain::odd)) ==
                  KRingElement(IndecomposableBundle::atiyah({}, i))
              ? 1
              : 0;
  const auto p3 = express_in_generator(3, GeneratorChain::even);
  const auto q5 = express_in_generator(5, GeneratorChain::odd);
  const bool frozen = p3 == IntegerPolynomial({-1, 0, 1}) && q5 == IntegerPolynomial({-1, -1, 1});
  return {ok == total && frozen, std::to_string(ok) + "/" + std::to_string(total) +
                                     " polynomials reproduce [F_i]; p_3 = " + p3.to_string() +
                                     ", q_5 = " + q5.to_string()};
}

Outcome p1_remark() {
  const TorsionContext ctx(0);
  std::size_t pairs = 0, ok = 0, literal = 0;
  for (std::int64_t a = -6; a <= 6; ++a)
    for (std::int64_t b = -6; b <= 6; ++b) {
      ++pairs;
      BundleSum e(ctx);
      e.add({ctx, a, 1}, 1);
      e.add({ctx, b, 1}, 1);
      std::set<std::int64_t> degrees;
      BundleSum p = e;
      for (std::int64_t m = 1; m <= 6; ++m) {
        if (m > 1) p = tensor(p, e);
        for (const auto& [bundle, mult] : p.terms()) {
          degrees.insert(bundle.exponent());
          degrees.insert(-bundle.exponent());
        }
      }
      const auto rep = p1_classify({a, b});
      const std::int64_t c = std::gcd(a, b);
      const auto single = p1_classify({c});

      bool pair_ok = rep.presentation == single.presentation && rep.group == single.group &&
                     rep.krull_dim == single.krull_dim && rep.correspondence_holds;
      std::int64_t g = 0;
      for (auto d : degrees) {
        pair_ok = pair_ok && rep.s_set.contains({ctx, d, 1});
        g = std::gcd(g, d);
      }
      // enumerated degrees generate c*Z, the group underlying S(O(c))
      pair_ok = pair_ok && g == c;
      ok += pair_ok ? 1 : 0;

      std::set<std::int64_t> single_degrees;
      for (std::int64_t m = -6; m <= 6; ++m)
        if (m != 0) single_degrees.insert(m * c);
      literal += degrees == single_degrees ? 1 : 0;
    }
  std::ostringstream os;
  os << ok << "/" << pairs
     << " pairs: enumerated degrees lie in S(O(c)) and generate c*Z, reports match O(c)"
     << " (literal set equality at bound 6: " << literal << "/" << pairs << ")";
  return {ok == pairs, os.str()};
}

Outcome cli_contract() {
  gen::Rng rng(20261019);
  std::size_t round_trips = 0;
  for (int i = 0; i < 100; ++i) {
    const auto ctx = gen::context(rng);
    const Expression e = gen::expression(rng);
    const std::string src = format_expression(e);
    const BundleSum v = evaluate(e, ctx);
    if (parse_expression(src) == e && evaluate(to_string(v), ctx) == v) ++round_trips;
  }

  std::ifstream f(ATIYAH_SCHEMA_PATH);
  const auto schema = nlohmann::json::parse(f);
  std::size_t valid = 0;
  for (int i = 0; i < 20; ++i) {
    const std::int64_t r = 1 + i % 7;
    const std::int64_t n = (i * 5) % 9;
    std::ostringstream out, err;
    const int status = cli::run({"classify", "--rank", std::to_string(r), "--torsion",
                                 std::to_string(n), "--format", "json"},
                                out, err);
    if (status == 0 && schema_check::validate(schema, nlohmann::json::parse(out.str())).empty())
      ++valid;
  }

  std::ostringstream vout, verr;
  const int verify_status = cli::run({"verify"}, vout, verr);
  std::string verify_line = vout.str();
  if (!verify_line.empty() && verify_line.back() == '\n') verify_line.pop_back();

  std::ostringstream os;
  os << round_trips << "/100 round-trips; " << valid << "/20 classify reports match the schema; verify exit "
     << verify_status << " (" << verify_line << ")";
  return {round_trips == 100 && valid == 20 && verify_status == 0, os.str()};
}

}  // namespace

int main() {
  Suite suite;
  suite.run(1, "oracle equivalence", 5.0, oracle_equivalence);
  suite.run(2, "multiplication-formula structure", 0, multiplication_structure);
  suite.run(3, "tensor-power form", 0, tensor_power_form);
  suite.run(4, "S-set agreement", 30.0, s_set_agreement_grid);
  suite.run(5, "dimension correspondence", 0, dimension_correspondence);
  suite.run(6, "generator polynomials", 0, generator_polynomials);
  suite.run(7, "P1 remark", 0, p1_remark);
  suite.run(8, "CLI contract", 0, cli_contract);
  std::cout << (suite.failures() == 0 ? "all criteria passed" : "some criteria FAILED") << '\n';
  return suite.failures() == 0 ? 0 : 1;
}
