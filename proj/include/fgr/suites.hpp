#ifndef FGR_SUITES_HPP_
#define FGR_SUITES_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "fgr/abelian.hpp"
#include "fgr/basis.hpp"
#include "fgr/core_graph.hpp"
#include "fgr/covering.hpp"
#include "fgr/error.hpp"
#include "fgr/pullback.hpp"
#include "fgr/random.hpp"
#include "fgr/retracts.hpp"
#include "fgr/serialize.hpp"
#include "fgr/word.hpp"

namespace fgr {

struct SuiteBounds {
  std::size_t max_index = 12;
  std::size_t max_word_length = 40;
  std::size_t max_generator_length = 30;
  std::size_t max_rank = 4;
};

struct SuiteReport {
  std::string suite;
  std::size_t trials = 0;
  std::size_t passes = 0;
  // first failing instance only
  std::vector<json> failures;
  std::uint64_t seed = 0;
};

inline json suite_report_to_json(SuiteReport const& r) {
  return {{"suite", r.suite},
          {"trials", r.trials},
          {"passes", r.passes},
          {"failures", r.failures},
          {"seed", r.seed}};
}

// A trial returns nullopt on success or a description of the failing
// instance.
using Trial = std::function<std::optional<json>(Rng&, SuiteBounds const&)>;

namespace suites {

inline std::size_t random_rank(Rng& rng, SuiteBounds const& b, std::size_t hi) {
  return uniform_index(rng, 2, std::max<std::size_t>(2, std::min(hi, b.max_rank)));
}

// Random element of the subgroup spanned by `gens`, if one of length <= limit
// turns up quickly.
inline std::optional<Word> random_member(Rng& rng, std::vector<Word> const& gens,
                                         std::size_t limit) {
  for (int attempt = 0; attempt < 8; ++attempt) {
    Word u = Word::identity(gens.front().rank());
    std::size_t const factors = uniform_index(rng, 1, 3);
    for (std::size_t f = 0; f < factors; ++f) {
      Word const& g = gens[uniform_index(rng, 0, gens.size() - 1)];
      u = u * (coin(rng) ? g : inverse(g));
    }
    if (!u.empty() && u.size() <= limit) return u;
  }
  return std::nullopt;
}

// Subgroup on `count` generators of length <= limit; with probability 1/2
// one generator is drawn from `partner` so that intersections are not
// generically trivial.
inline std::vector<Word> random_generators(Rng& rng, std::size_t n, std::size_t count,
                                           std::size_t limit,
                                           std::vector<Word> const& partner) {
  std::vector<Word> gens;
  if (!partner.empty() && coin(rng)) {
    if (auto u = random_member(rng, partner, limit)) gens.push_back(*u);
  }
  while (gens.size() < count) gens.push_back(random_word(rng, n, limit));
  return gens;
}

inline json words_json(std::vector<Word> const& ws) { return words_to_json(ws); }

inline std::optional<json> transfer_visibility(Rng& rng, SuiteBounds const& b) {
  std::size_t const n = random_rank(rng, b, 3);
  CoreGraph const h = random_finite_index_subgroup(rng, n, b.max_index);
  Word const w = random_visible_word(rng, n, b.max_word_length);
  SpanningTree const t = spanning_tree(h);
  AbelianVector const theta = transfer(h, t, w);
  IntVector const image = multiply(phi_matrix(h, t), theta.entries);
  if (content(theta.entries) == 1 && image == sigma(w)) return std::nullopt;
  return json{{"H", graph_to_json(h)},
              {"w", render(w)},
              {"transfer", theta.entries},
              {"phi_transfer", image},
              {"sigma", sigma(w)}};
}

inline std::optional<json> proposition_a(Rng& rng, SuiteBounds const& b) {
  std::size_t const n = random_rank(rng, b, 3);
  std::size_t const degree = uniform_index(rng, 1, b.max_index);
  for (;;) {
    CoreGraph const h = schreier_graph(n, random_transitive_action(rng, n, degree), 0);
    Word const w = random_visible_word(rng, n, b.max_word_length);
    if (coset_permutation(h, w).cycles().size() != 1) continue;
    SpanningTree const t = spanning_tree(h);
    Word const wm = power(w, static_cast<std::int64_t>(degree));
    AbelianVector const theta = transfer(h, t, w);
    AbelianVector const image = abelianize_in_subgroup(h, t, wm);
    if (theta == image && content(image.entries) == 1) return std::nullopt;
    return json{{"H", graph_to_json(h)},
                {"w", render(w)},
                {"transfer", theta.entries},
                {"w_power", image.entries}};
  }
}

inline std::optional<json> proposition_b(Rng& rng, SuiteBounds const& b) {
  std::size_t const n = random_rank(rng, b, 3);
  CoreGraph const h = random_normal_subgroup(rng, n);
  Word const w = random_visible_word(rng, n, b.max_word_length);
  auto const m = *smallest_power_in(h, w);
  Word const wm = power(w, m);
  if (is_visible_in_subgroup(h, spanning_tree(h), wm)) return std::nullopt;
  return json{{"H", graph_to_json(h)}, {"w", render(w)}, {"m", m}};
}

inline CoreGraph random_cyclic_retract(Rng& rng, std::size_t n) {
  return from_generators(n, {random_visible_word(rng, n, 12)});
}

inline std::optional<json> theorem_a1(Rng& rng, SuiteBounds const& b) {
  std::size_t const n = random_rank(rng, b, 4);
  CoreGraph r = CoreGraph::trivial(n);
  json r_json;
  if (coin(rng)) {
    RetractPresentation const p =
        random_retract(n, uniform_index(rng, 1, n - 1), rng, uniform_index(rng, 0, 3));
    r = p.graph();
    r_json = retract_to_json(p);
  } else {
    r = random_cyclic_retract(rng, n);
    r_json = words_json(basis(r));
  }
  std::vector<Word> const r_basis = basis(r);
  for (;;) {
    auto const gens = random_generators(rng, n, 2, b.max_generator_length, r_basis);
    CoreGraph const h = from_generators(n, gens);
    if (fgr::rank(h) != 2) continue;
    IntersectionReport const rep = intersection_report(h, r);
    if (rep.retract_verdict == Verdict::yes) return std::nullopt;
    return json{{"H_generators", words_json(gens)},
                {"R", r_json},
                {"report", report_to_json(rep)}};
  }
}

inline std::optional<json> rank_bound_rk3(Rng& rng, SuiteBounds const& b) {
  std::size_t const n = random_rank(rng, b, 4);
  RetractPresentation const p =
      random_retract(n, uniform_index(rng, 1, n - 1), rng, uniform_index(rng, 0, 3));
  auto const gens = random_generators(rng, n, uniform_index(rng, 1, 3),
                                      b.max_generator_length, p.section_images());
  CoreGraph const h = from_generators(n, gens);
  IntersectionReport const rep = intersection_report(h, p);
  if (rep.rank_intersection <= rep.rank_H) return std::nullopt;
  return json{{"H_generators", words_json(gens)},
              {"R", retract_to_json(p)},
              {"report", report_to_json(rep)}};
}

inline CoreGraph random_nontrivial_subgroup(Rng& rng, std::size_t n,
                                            std::vector<Word> const& partner) {
  for (;;) {
    CoreGraph g = coin(rng) ? random_finite_index_subgroup(rng, n, 6)
                            : from_generators(n, random_generators(rng, n, uniform_index(rng, 1, 3),
                                                                   10, partner));
    if (fgr::rank(g) >= 1) return g;
  }
}

inline std::optional<json> hanna_neumann(Rng& rng, SuiteBounds const& b) {
  std::size_t const n = random_rank(rng, b, 3);
  CoreGraph const a = random_nontrivial_subgroup(rng, n, {});
  CoreGraph const c = random_nontrivial_subgroup(rng, n, basis(a));
  CoreGraph const meet = pullback(a, c);
  auto const ri = static_cast<std::int64_t>(fgr::rank(meet));
  auto const ra = static_cast<std::int64_t>(fgr::rank(a));
  auto const rc = static_cast<std::int64_t>(fgr::rank(c));
  if (std::max<std::int64_t>(ri - 1, 0) <= (ra - 1) * (rc - 1)) return std::nullopt;
  return json{{"A", graph_to_json(a)}, {"B", graph_to_json(c)}, {"rank_intersection", ri}};
}

inline std::optional<json> schreier_formula(Rng& rng, SuiteBounds const& b) {
  std::size_t const n = random_rank(rng, b, 4);
  CoreGraph const h = random_finite_index_subgroup(rng, n, b.max_index);
  std::size_t const idx = *index(h);
  if (fgr::rank(h) == idx * (n - 1) + 1) return std::nullopt;
  return json{{"H", graph_to_json(h)}, {"index", idx}, {"rank", fgr::rank(h)}};
}

struct Entry {
  std::string_view name;
  std::optional<json> (*run)(Rng&, SuiteBounds const&);
};

inline constexpr Entry kSuites[] = {
    {"transfer-visibility", &transfer_visibility},
    {"prop-a", &proposition_a},
    {"prop-b", &proposition_b},
    {"theorem-a1", &theorem_a1},
    {"rank-bound-rk3", &rank_bound_rk3},
    {"hanna-neumann", &hanna_neumann},
    {"schreier-formula", &schreier_formula},
};

}  // namespace suites

inline std::vector<std::string_view> suite_names() {
  std::vector<std::string_view> out;
  for (auto const& e : suites::kSuites) out.push_back(e.name);
  return out;
}

// Runs `trials` independent trials; trial i draws from derive_rng(seed, i),
// so the report depends only on (name, trials, seed, bounds) regardless of
// how many threads execute it.
inline SuiteReport run_suite(std::string_view name, std::size_t trials, std::uint64_t seed,
                             SuiteBounds const& bounds = {}, unsigned threads = 0) {
  auto const* entry = std::find_if(std::begin(suites::kSuites), std::end(suites::kSuites),
                                   [&](auto const& e) { return e.name == name; });
  if (entry == std::end(suites::kSuites)) {
    throw InvalidArgument("unknown suite '" + std::string(name) + "'");
  }
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(trials, 1)));

  std::vector<std::optional<json>> outcome(trials);
  auto worker = [&](unsigned id) {
    for (std::size_t i = id; i < trials; i += threads) {
      Rng rng = derive_rng(seed, i);
      try {
        outcome[i] = entry->run(rng, bounds);
      } catch (Error const& ex) {
        outcome[i] = json{{"trial", i}, {"error", ex.what()}};
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned id = 1; id < threads; ++id) pool.emplace_back(worker, id);
  worker(0);
  for (auto& th : pool) th.join();

  SuiteReport report{std::string(name), trials, 0, {}, seed};
  for (std::size_t i = 0; i < trials; ++i) {
    if (!outcome[i]) {
      ++report.passes;
    } else if (report.failures.empty()) {
      json f = *outcome[i];
      f["trial"] = i;
      report.failures.push_back(std::move(f));
    }
  }
  return report;
}

}  // namespace fgr

#endif  // FGR_SUITES_HPP_
