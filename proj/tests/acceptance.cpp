// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <algorithm>
#include <functional>
#include <iostream>
#include <sstream>

#include "nilpot/errors.hpp"
#include "nilpot/theorems.hpp"
#include "property_suite.hpp"
#include "support.hpp"

using namespace nilpot;
using nilpot::testing::analysis;
using nilpot::testing::r_of;
using nilpot::testing::vertex;

namespace {

struct Check {
  std::ostringstream why;
  bool ok = true;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      why << what;
    }
  }
  template <typename T>
  void equal(const T& got, const T& want, const std::string& what) {
    std::ostringstream s;
    s << what << " = " << got << ", expected " << want;
    expect(got == want, s.str());
  }
};

std::size_t end_dim(const Analysis& an, std::size_t node) { return an.category().hom(node, node).dim(); }

Comparison conclusion(const std::vector<ComparisonFinding>& fs, const Analysis& an, const char* a, const char* b) {
  for (const auto& f : fs)
    if (f.a == vertex(an, a) && f.b == vertex(an, b)) return f.conclusion;
  return Comparison::None;
}

bool b_le_a(Comparison c) { return c == Comparison::BAtMostA || c == Comparison::Equal; }
bool a_le_b(Comparison c) { return c == Comparison::AAtMostB || c == Comparison::Equal; }

void criterion1(Check& c) {
  const auto& an = analysis("cyclic3");
  c.equal(r_of(an, "1"), std::size_t{14}, "r_1");
  c.equal(r_of(an, "2"), std::size_t{14}, "r_2");
  c.equal(nilpotency_index(an, Method::Direct).r_A, std::size_t{15}, "r_A");
  c.equal(end_dim(an, an.node_of_projective(vertex(an, "1"))), std::size_t{2}, "dim End P_1");
  c.equal(end_dim(an, an.node_of_injective(vertex(an, "2"))), std::size_t{2}, "dim End I_2");
}

void criterion2(Check& c) {
  const auto& an = analysis("ten_vertex");
  c.equal(r_of(an, "2"), std::size_t{27}, "r_2");
  c.equal(r_of(an, "9"), std::size_t{27}, "r_9");
  c.equal(r_of(an, "4"), std::size_t{26}, "r_4");
  c.equal(nilpotency_index(an, Method::Direct).r_A, std::size_t{28}, "r_A");
  const auto fs = check_corollary(an);
  c.expect(a_le_b(conclusion(fs, an, "8", "9")), "corollary misses r_8 <= r_9");
  c.expect(a_le_b(conclusion(fs, an, "3", "6")), "corollary misses r_3 <= r_6");
  c.expect(conclusion(fs, an, "4", "8") == Comparison::Equal, "corollary misses r_8 = r_4");
  c.expect(conclusion(fs, an, "4", "5") == Comparison::Equal, "corollary misses r_5 = r_4");
  c.expect(b_le_a(conclusion(fs, an, "5", "3")), "corollary misses r_3 <= r_5");
  c.expect(b_le_a(conclusion(fs, an, "2", "3")), "corollary misses r_3 <= r_2");
}

void criterion3(Check& c) {
  const auto& an = analysis("cycle4");
  c.equal(r_of(an, "2"), std::size_t{12}, "r_2");
  c.equal(r_of(an, "3"), std::size_t{16}, "r_3");
  bool refused = false;
  try {
    check_one_vertex_per_relation(an);
  } catch (const MethodInapplicable&) {
    refused = true;
  }
  c.expect(refused, "one-per-relation reduction did not refuse");
}

void criterion4(Check& c) {
  const auto& an = analysis("toupie_one_zero");
  const auto ws = build_toupie_witnesses(an);  // throws Inconsistency if an invariant fails
  c.equal(ws.size(), std::size_t{2}, "witness count");
  for (const auto& w : ws) {
    const std::string at = " at z_" + std::to_string(w.i);
    c.equal(w.length, std::size_t{6}, "cycle length" + at);
    c.equal(w.steps, std::size_t{6}, "chain steps" + at);
    c.equal(w.end_dim, std::size_t{2}, "dim End" + at);
    c.expect(!w.rho.is_zero(), "rho is zero" + at);
    c.expect(!compose(w.rho, w.phi).is_zero(), "rho phi is zero" + at);
    c.expect(!compose(w.psi, w.rho).is_zero(), "psi rho is zero" + at);
  }
  const auto d = check_toupie(an);
  c.equal(r_of(an, "2"), r_of(an, "3"), "r_2 vs r_3");
  c.equal(d.report.r_A, d.direct_r_A, "toupie reduction vs direct");
  c.equal(nilpotency_index(an, Method::VertexSet).r_A, d.direct_r_A, "vertex-set method vs direct");
}

void criterion5(Check& c) {
  const auto& an = analysis("toupie_two_zero");
  bool refused = false;
  try {
    check_toupie(an);
  } catch (const MethodInapplicable&) {
    refused = true;
  }
  c.expect(refused, "toupie reduction did not refuse");
  const std::size_t n = an.presentation().quiver.num_vertices();
  std::size_t best = 0;
  for (VertexId v = 0; v < n; ++v) best = std::max(best, an.r(v));
  std::vector<VertexId> argmax;
  for (VertexId v = 0; v < n; ++v)
    if (an.r(v) == best) argmax.push_back(v);
  c.expect(argmax == std::vector<VertexId>{vertex(an, "5"), vertex(an, "6")}, "maximal r not exactly at 5 and 6");
}

void criterion6(Check& c) {
  std::size_t checked = 0, brute = 0;
  auto run = [&](const Analysis& an, const std::string& tag) {
    for (const auto& o : props::all_properties(an)) {
      c.expect(o.ok, tag + ": " + o.property + ": " + o.detail);
      if (o.property == "brute-force filtration" && o.detail != "skipped") ++brute;
    }
    ++checked;
  };
  for (const char* name : testing::kFiniteFixtures) run(analysis(name), name);
  const auto cases = props::random_monomial_cases(20, 20261016);
  c.equal(cases.size(), std::size_t{20}, "random presentations generated");
  for (const auto& rc : cases) run(*rc.analysis, "random seed " + std::to_string(rc.seed));
  std::cout << "  (" << checked << " algebras, brute-force oracle on " << brute << ")\n";
}

void criterion7(Check& c) {
  bool limited = false;
  try {
    Analysis an(testing::fixture("kronecker"));
  } catch (const LimitsExceeded&) {
    limited = true;
  }
  c.expect(limited, "Kronecker enumeration did not raise LimitsExceeded");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria = {
      {"cyclic algebra: r_1 = r_2 = 14, r_A = 15, dim End P_1 = dim End I_2 = 2", criterion1},
      {"ten-vertex algebra: r values, r_A = 28 and the corollary chain", criterion2},
      {"four-vertex cycle: r_2 = 12, r_3 = 16, one-per-relation refuses", criterion3},
      {"toupie witnesses of length 6 and the toupie reduction", criterion4},
      {"two zero-relations: toupie reduction refuses, maximal r at 5 and 6", criterion5},
      {"property suites on fixtures and 20 random monomial algebras", criterion6},
      {"Kronecker quiver raises LimitsExceeded", criterion7},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    std::cout << "criterion " << i + 1 << ": " << (c.ok ? "PASS" : "FAIL") << "  " << criteria[i].first;
    if (!c.ok) std::cout << "  [" << c.why.str() << "]";
    std::cout << std::endl;
    all = all && c.ok;
  }
  return all ? 0 : 1;
}
