// Acceptance run: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "fgr/fgr.hpp"

namespace {

using namespace fgr;

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<Outcome()> run;
};

Outcome fail(std::string detail) { return {false, std::move(detail)}; }

Outcome suite_outcome(std::string_view name, std::size_t trials, std::uint64_t seed) {
  SuiteReport const rep = run_suite(name, trials, seed);
  std::ostringstream out;
  out << rep.passes << "/" << rep.trials << " seed " << seed;
  if (rep.passes != trials) {
    if (!rep.failures.empty()) out << " first failure " << rep.failures.front().dump();
    return fail(out.str());
  }
  return {true, out.str()};
}

Outcome example_k() {
  Word const x = Word::generator(2, 1);
  Word const y = Word::generator(2, 2);
  GraphWithTree const k = l_m(3);
  if (basis(k.graph, k.tree) != std::vector<Word>{x, y * x * power(y, -2), y * y * x * inverse(y)}) {
    return fail("basis of K is not a, baBB, bbaB");
  }
  Word const w1 = w_k(1);
  BasisWord const rw = rewrite_in_basis(k.graph, k.tree, power(w1, 2));
  if (rw.symbols != std::vector<int>{1, 1, -3, 2, 3, -2}) return fail("rewrite of w_1^2 differs");
  IntVector const ab = exponent_sums(rw);
  if (ab != IntVector{2, 0, 0} || content(ab) != 2) return fail("abelianization differs");
  IntersectionReport const rep = intersection_report(k.graph, from_generators(2, {w1}));
  if (rep.rank_intersection != 1 || rep.intersection_basis != std::vector<Word>{power(w1, 2)} ||
      rep.retract_verdict != Verdict::no) {
    return fail("report " + report_to_json(rep).dump());
  }
  return {true, "x^2 t2^-1 t1 t2 t1^-1, (2,0,0), verdict no"};
}

Outcome closed_form_square() {
  for (std::size_t m : {3, 5, 7, 9, 11}) {
    std::int64_t const k = static_cast<std::int64_t>((m - 1) / 2);
    GraphWithTree const h = h_m_graph(m);
    Word const w = w_k(k);
    if (contains(h.graph, w)) return fail("w_k in H_m for m=" + std::to_string(m));
    Word const sq = power(w, 2);
    if (!contains(h.graph, sq)) return fail("w_k^2 not in H_m for m=" + std::to_string(m));
    if (rewrite_in_basis(h.graph, h.tree, sq) != lemma33_word(m)) {
      return fail("rewrite differs for m=" + std::to_string(m));
    }
  }
  return {true, "m = 3,5,7,9,11"};
}

Outcome membership_law() {
  int cases = 0;
  for (std::size_t m = 1; m <= 12; ++m) {
    // m = 1: D_1 = <t>, so H_1 is all of F_2
    CoreGraph const g =
        m == 1 ? from_generators(2, {Word::generator(2, 1), Word::generator(2, 2)})
               : h_m_graph(m).graph;
    for (std::int64_t k = 1; k <= 12; ++k) {
      bool const expected = (2 * k) % static_cast<std::int64_t>(m) == 0;
      bool const got = contains(g, w_k(k));
      if (got != expected) {
        return fail("m=" + std::to_string(m) + " k=" + std::to_string(k));
      }
      ++cases;
    }
  }
  return {true, std::to_string(cases) + " cases"};
}

Outcome schreier_cross_check() {
  for (std::size_t m = 2; m <= 50; ++m) {
    if (canonicalize(gamma_m(m)) != dihedral_coset_graph(m)) {
      return fail("m=" + std::to_string(m));
    }
  }
  return {true, "m = 2..50"};
}

Outcome bergman_grid() {
  int cases = 0;
  for (std::size_t n = 2; n <= 4; ++n) {
    for (std::size_t m = 3; m <= 9; ++m) {
      for (std::size_t k = 1; k < n; ++k) {
        IntersectionReport const rep = bergman_counterexample(n, m, k);
        if (rep.rank_H != m || rep.rank_R != k || rep.retract_verdict != Verdict::no) {
          return fail("n=" + std::to_string(n) + " m=" + std::to_string(m) +
                      " k=" + std::to_string(k) + " " + report_to_json(rep).dump());
        }
        ++cases;
      }
    }
  }
  return {true, std::to_string(cases) + " instances"};
}

}  // namespace

int main() {
  std::vector<Criterion> const criteria = {
      {1, "K = <a, baBB, bbaB> rewrite, abelianization and report", 1.0, example_k},
      {2, "w_k^2 in H_m with the closed-form rewrite", 1.0, closed_form_square},
      {3, "w_k in H_m iff m | 2k", 1.0, membership_law},
      {4, "gamma_m equals the dihedral coset graph", 5.0, schreier_cross_check},
      {5, "transfer keeps visible words visible", 30.0,
       [] { return suite_outcome("transfer-visibility", 1000, 42); }},
      {6, "single-cycle power is visible", 30.0, [] { return suite_outcome("prop-a", 200, 3); }},
      {7, "power is visible in normal subgroups", 30.0, [] { return suite_outcome("prop-b", 200, 4); }},
      {8, "rank-2 H meets retracts in retracts", 60.0,
       [] { return suite_outcome("theorem-a1", 500, 5); }},
      {9, "rk(H n R) <= rk(H)", 60.0, [] { return suite_outcome("rank-bound-rk3", 500, 7); }},
      {10, "counterexample grid verdicts", 10.0, bergman_grid},
      {11, "Hanna Neumann bound on pullbacks", 60.0,
       [] { return suite_outcome("hanna-neumann", 1000, 1); }},
      {12, "Schreier rank formula", 10.0, [] { return suite_outcome("schreier-formula", 200, 12); }},
  };

  int failed = 0;
  for (Criterion const& c : criteria) {
    auto const start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (std::exception const& ex) {
      out = fail(std::string("exception: ") + ex.what());
    }
    double const secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (out.ok && secs >= c.limit_seconds) {
      out = fail("took " + std::to_string(secs) + " s");
    }
    if (!out.ok) ++failed;
    std::printf("[%s] %2d %s: %s (%.3f s, limit %.0f s)\n", out.ok ? "PASS" : "FAIL", c.id,
                c.title.c_str(), out.detail.c_str(), secs, c.limit_seconds);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
