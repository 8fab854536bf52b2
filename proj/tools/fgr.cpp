// fgr: command-line front end for the finitely generated subgroup toolkit.
//
// Exit codes: 0 success, 1 domain error, 2 usage error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fgr/fgr.hpp"

namespace {

using fgr::json;

struct SubgroupOptions {
  std::optional<std::size_t> rank;
  std::string gens;
  std::string graph_file;
};

// Splits on commas that are not nested inside [..] or (..).
std::vector<std::string> split_top_level(std::string const& text) {
  std::vector<std::string> out;
  std::string current;
  int depth = 0;
  for (char c : text) {
    if (c == '[' || c == '(') ++depth;
    if (c == ']' || c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  out.push_back(current);
  return out;
}

std::size_t infer_rank(std::string const& text) {
  std::size_t r = 2;
  for (char c : text) {
    if (std::isalpha(static_cast<unsigned char>(c))) {
      r = std::max<std::size_t>(r, static_cast<std::size_t>(std::tolower(c) - 'a' + 1));
    }
  }
  return r;
}

std::vector<fgr::Word> parse_list(std::string const& text, std::size_t rank) {
  std::vector<fgr::Word> out;
  for (auto const& piece : split_top_level(text)) out.push_back(fgr::parse_word(piece, rank));
  return out;
}

fgr::CoreGraph load_graph(std::string const& path) {
  std::ifstream in(path);
  if (!in) throw fgr::Error("cannot open graph file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (json::exception const& ex) {
    throw fgr::InvalidGraph(std::string("cannot parse graph file: ") + ex.what());
  }
  return fgr::graph_from_json(j);
}

fgr::CoreGraph load_subgroup(SubgroupOptions const& opt) {
  if (!opt.graph_file.empty()) {
    fgr::CoreGraph g = load_graph(opt.graph_file);
    if (opt.rank && *opt.rank != g.ambient_rank()) {
      throw fgr::RankMismatch(*opt.rank, g.ambient_rank());
    }
    return g;
  }
  std::size_t const rank = opt.rank.value_or(infer_rank(opt.gens));
  return fgr::from_generators(rank, parse_list(opt.gens, rank));
}

std::optional<std::vector<fgr::Edge>> parse_tree(std::string const& text) {
  if (text.empty()) return std::nullopt;
  std::vector<fgr::Edge> edges;
  for (auto const& piece : split_top_level(text)) {
    std::stringstream ss(piece);
    std::size_t from = 0, to = 0;
    int label = 0;
    char c1 = 0, c2 = 0;
    if (!(ss >> from >> c1 >> to >> c2 >> label) || c1 != ':' || c2 != ':' || !ss.eof()) {
      throw fgr::InvalidArgument("tree edge '" + piece + "' is not from:to:label");
    }
    edges.push_back({from, to, label});
  }
  return edges;
}

void emit(json const& j, std::string const& format) {
  if (format != "tsv") {
    std::cout << j.dump() << '\n';
    return;
  }
  auto cell = [](json const& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  if (j.is_object()) {
    for (auto const& [key, value] : j.items()) std::cout << key << '\t' << cell(value) << '\n';
  } else if (j.is_array()) {
    for (auto const& value : j) std::cout << cell(value) << '\n';
  } else {
    std::cout << cell(j) << '\n';
  }
}

void add_subgroup_options(CLI::App* cmd, SubgroupOptions& opt) {
  cmd->add_option("--rank", opt.rank, "Ambient rank (default: inferred, at least 2)");
  auto* gens = cmd->add_option("--gens", opt.gens, "Comma-separated generator expressions");
  auto* graph = cmd->add_option("--graph", opt.graph_file, "Subgroup graph JSON file");
  gens->excludes(graph);
  graph->excludes(gens);
}

void require_subgroup(SubgroupOptions const& opt) {
  if (opt.gens.empty() && opt.graph_file.empty()) {
    throw CLI::RequiredError("--gens or --graph");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fgr: finitely generated subgroups of free groups"};
  app.require_subcommand(1);
  std::string format = "json";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "tsv"}))
      ->capture_default_str();
  app.fallthrough();

  SubgroupOptions sub;
  SubgroupOptions other;
  std::string word_text;
  std::string tree_text;
  std::size_t m = 0, k = 0, n = 0;
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  std::string suite_name;

  auto* fold_cmd = app.add_subcommand("fold", "Fold generators into a canonical core graph");
  add_subgroup_options(fold_cmd, sub);

  auto* basis_cmd = app.add_subcommand("basis", "Free basis read off a spanning tree");
  add_subgroup_options(basis_cmd, sub);
  basis_cmd->add_option("--tree", tree_text, "Spanning tree edges from:to:label,...");

  auto* member_cmd = app.add_subcommand("member", "Subgroup membership");
  add_subgroup_options(member_cmd, sub);
  member_cmd->add_option("--word", word_text)->required();

  auto* rewrite_cmd = app.add_subcommand("rewrite", "Rewrite a member in the basis");
  add_subgroup_options(rewrite_cmd, sub);
  rewrite_cmd->add_option("--word", word_text)->required();
  rewrite_cmd->add_option("--tree", tree_text);

  auto* intersect_cmd = app.add_subcommand("intersect", "Intersection report for H and R");
  add_subgroup_options(intersect_cmd, sub);
  auto* with_gens = intersect_cmd->add_option("--with", other.gens, "Generators of R");
  auto* with_graph = intersect_cmd->add_option("--with-graph", other.graph_file, "Graph of R");
  with_gens->excludes(with_graph);

  auto* visible_cmd = app.add_subcommand("visible", "Visibility in F_n or in a subgroup");
  add_subgroup_options(visible_cmd, sub);
  visible_cmd->add_option("--word", word_text)->required();
  visible_cmd->add_option("--tree", tree_text);

  auto* transfer_cmd = app.add_subcommand("transfer", "Transfer into the abelianized subgroup");
  add_subgroup_options(transfer_cmd, sub);
  transfer_cmd->add_option("--word", word_text)->required();
  transfer_cmd->add_option("--tree", tree_text);

  auto* gamma_cmd = app.add_subcommand("gamma", "The graph Gamma_m");
  gamma_cmd->add_option("--m", m)->required();
  auto* hm_cmd = app.add_subcommand("hm", "H_m with its b-path basis");
  hm_cmd->add_option("--m", m)->required();
  auto* lm_cmd = app.add_subcommand("lm", "L_m with its b-path basis");
  lm_cmd->add_option("--m", m)->required();
  auto* wk_cmd = app.add_subcommand("wk", "The word x[x,y]^k");
  wk_cmd->add_option("--k", k)->required();
  auto* lemma_cmd = app.add_subcommand("lemma33", "Basis expression of w_k^2 in H_{2k+1}");
  lemma_cmd->add_option("--m", m)->required();

  auto* bergman_cmd = app.add_subcommand("bergman", "Retract intersection counterexample");
  bergman_cmd->add_option("--n", n)->required();
  bergman_cmd->add_option("--m", m)->required();
  bergman_cmd->add_option("--k", k)->required();

  auto* suite_cmd = app.add_subcommand("suite", "Run a randomized property suite");
  suite_cmd->add_option("name", suite_name, "Suite name")->required();
  suite_cmd->add_option("--trials", trials)->capture_default_str();
  suite_cmd->add_option("--seed", seed)->capture_default_str();

  try {
    app.parse(argc, argv);
    for (auto* cmd : {basis_cmd, member_cmd, rewrite_cmd, intersect_cmd, transfer_cmd, fold_cmd}) {
      if (*cmd) require_subgroup(sub);
    }
    if (*intersect_cmd) require_subgroup(other);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return 2;
  }

  try {
    auto word_for = [&](fgr::CoreGraph const& g) {
      return fgr::parse_word(word_text, g.ambient_rank());
    };
    auto basis_json = [](std::vector<fgr::Word> const& b) { return fgr::words_to_json(b); };

    if (*fold_cmd) {
      emit(fgr::graph_to_json(fgr::canonicalize(load_subgroup(sub))), format);
    } else if (*basis_cmd) {
      auto const g = load_subgroup(sub);
      auto const t = fgr::spanning_tree(g, parse_tree(tree_text));
      auto const b = fgr::basis(g, t);
      emit({{"rank", fgr::rank(g)}, {"basis", basis_json(b)}}, format);
    } else if (*member_cmd) {
      auto const g = load_subgroup(sub);
      emit({{"member", fgr::contains(g, word_for(g))}}, format);
    } else if (*rewrite_cmd) {
      auto const g = load_subgroup(sub);
      auto const t = fgr::spanning_tree(g, parse_tree(tree_text));
      auto const bw = fgr::rewrite_in_basis(g, t, word_for(g));
      emit({{"symbols", fgr::basis_word_to_json(bw)}, {"basis", basis_json(fgr::basis(g, t))}},
           format);
    } else if (*intersect_cmd) {
      auto const h = load_subgroup(sub);
      SubgroupOptions r_opt = other;
      if (!r_opt.rank) r_opt.rank = h.ambient_rank();
      emit(fgr::report_to_json(fgr::intersection_report(h, load_subgroup(r_opt))), format);
    } else if (*visible_cmd) {
      if (sub.gens.empty() && sub.graph_file.empty()) {
        std::size_t const rank = sub.rank.value_or(infer_rank(word_text));
        auto const w = fgr::parse_word(word_text, rank);
        emit({{"visible", fgr::is_visible_ambient(w)},
              {"vector", fgr::abelian_to_json({fgr::BasisTag::ambient, fgr::sigma(w)})}},
             format);
      } else {
        auto const g = load_subgroup(sub);
        auto const t = fgr::spanning_tree(g, parse_tree(tree_text));
        auto const w = word_for(g);
        auto const v = fgr::abelianize_in_subgroup(g, t, w);
        emit({{"visible", fgr::is_primitive(v.entries)}, {"vector", fgr::abelian_to_json(v)}},
             format);
      }
    } else if (*transfer_cmd) {
      auto const g = load_subgroup(sub);
      auto const t = fgr::spanning_tree(g, parse_tree(tree_text));
      emit(fgr::abelian_to_json(fgr::transfer(g, t, word_for(g))), format);
    } else if (*gamma_cmd) {
      emit(fgr::graph_to_json(fgr::canonicalize(fgr::gamma_m(m))), format);
    } else if (*hm_cmd) {
      auto const h = fgr::h_m_graph(m);
      emit({{"graph", fgr::graph_to_json(fgr::canonicalize(h.graph))},
            {"basis", basis_json(fgr::basis(h.graph, h.tree))}},
           format);
    } else if (*lm_cmd) {
      auto const l = fgr::l_m(m);
      emit({{"graph", fgr::graph_to_json(fgr::canonicalize(l.graph))},
            {"rank", fgr::rank(l.graph)},
            {"basis", basis_json(fgr::basis(l.graph, l.tree))}},
           format);
    } else if (*wk_cmd) {
      emit(fgr::render(fgr::w_k(static_cast<std::int64_t>(k))), format);
    } else if (*lemma_cmd) {
      emit({{"symbols", fgr::basis_word_to_json(fgr::lemma33_word(m))}}, format);
    } else if (*bergman_cmd) {
      emit(fgr::report_to_json(fgr::bergman_counterexample(n, m, k)), format);
    } else if (*suite_cmd) {
      auto const report = fgr::run_suite(suite_name, trials, seed);
      emit(fgr::suite_report_to_json(report), format);
      if (report.passes != report.trials) return 1;
    }
  } catch (fgr::Error const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
