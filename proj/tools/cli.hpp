#pragma once

// `dicactus` command-line front end. Exit status: 0 = all checks passed,
// 1 = a mathematical violation (r > d, identity mismatch), 2 = input or usage
// error.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "dicactus/dicactus.hpp"

namespace dicactus::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

namespace detail {

inline Digraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return parse_edge_list(in);
}

template <typename T, typename Render>
void print_matrix(std::ostream& out, const std::string& title, const SquareMatrix<T>& m,
                  Render render) {
  out << title << " =\n";
  std::vector<std::string> cells;
  std::size_t width = 0;
  for (std::size_t r = 0; r < m.dim(); ++r) {
    for (std::size_t c = 0; c < m.dim(); ++c) {
      cells.push_back(render(m(r, c)));
      width = std::max(width, cells.back().size());
    }
  }
  for (std::size_t r = 0; r < m.dim(); ++r) {
    out << " ";
    for (std::size_t c = 0; c < m.dim(); ++c) {
      out << ' ' << std::setw(static_cast<int>(width)) << cells[r * m.dim() + c];
    }
    out << '\n';
  }
}

struct SearchOutcome {
  std::size_t pairs = 0;
  std::vector<Violation> violations;
};

}  // namespace detail

struct AnalyzeOptions {
  std::string file;
  bool json = false;
  int decimal = -1;
  bool force = false;
};

inline int cmd_analyze(const AnalyzeOptions& opt, std::ostream& out) {
  const Digraph g = detail::load_graph(opt.file);
  const std::size_t max_dim = opt.force ? SIZE_MAX : kDefaultMaxDimension;
  const ResistanceReport report = analyze(g, max_dim);
  if (opt.json) {
    out << to_json(report).dump() << '\n';
    return report.r_le_d ? kExitOk : kExitViolation;
  }
  auto exact = [](const auto& v) { return to_string(v); };
  auto approx = [&](const Rational& v) {
    return to_decimal(v, static_cast<unsigned>(opt.decimal));
  };
  out << "n = " << g.order() << "\n";
  out << "kappa = " << to_string(report.kappa) << "\n";
  out << "directed cactus: " << (report.is_cactus ? "yes" : "no") << "\n";
  if (opt.decimal >= 0) {
    out << "(rational entries shown as approximate decimals, rounded half-to-even to "
        << opt.decimal << " digits; '~' marks approximation)\n";
    detail::print_matrix(out, "L+", report.pseudoinverse, approx);
    detail::print_matrix(out, "R", report.resistance, approx);
  } else {
    detail::print_matrix(out, "L+", report.pseudoinverse, exact);
    detail::print_matrix(out, "R", report.resistance, exact);
  }
  detail::print_matrix(out, "D", report.distance, exact);
  out << "r <= d (" << (report.is_cactus ? "theorem" : "conjecture")
      << " check): " << (report.r_le_d ? "holds" : "VIOLATED") << "\n";
  for (const Violation& v : report.violations) {
    out << "violation: r(" << v.i << "," << v.j << ") = " << to_string(v.r) << " > d("
        << v.i << "," << v.j << ") = " << to_string(v.d) << "\n";
  }
  return report.r_le_d ? kExitOk : kExitViolation;
}

inline int cmd_verify(const std::string& file, bool force, std::ostream& out) {
  const Digraph g = detail::load_graph(file);
  const auto results = verify_invariants(g, force ? SIZE_MAX : kDefaultMaxDimension);
  bool ok = true;
  for (const CheckResult& c : results) {
    const char* tag = c.status == CheckStatus::kPass   ? "PASS"
                      : c.status == CheckStatus::kFail ? "FAIL"
                                                       : "SKIP";
    out << tag << "  " << c.name;
    if (!c.detail.empty()) out << ": " << c.detail;
    out << "\n";
    ok = ok && c.status != CheckStatus::kFail;
  }
  return ok ? kExitOk : kExitViolation;
}

struct SearchOptions {
  std::size_t graphs = 0;
  std::size_t max_n = 0;
  std::uint64_t seed = 0;
  Family family = Family::kCactus;
  std::size_t jobs = 1;
};

/// Results are collected per graph index and reported in index order, so the
/// output does not depend on `jobs`.
inline int cmd_search(const SearchOptions& opt, std::ostream& out) {
  if (opt.graphs < 1) throw PreconditionError("--graphs must be >= 1");
  if (opt.max_n < 2) throw PreconditionError("--max-n must be >= 2");
  std::vector<detail::SearchOutcome> outcomes(opt.graphs);
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t k = next++; k < opt.graphs; k = next++) {
      const Digraph g = corpus_graph(opt.family, opt.seed, k, opt.max_n);
      ResistanceReport report = analyze(g);
      outcomes[k].pairs = g.order() * (g.order() - 1);
      outcomes[k].violations = std::move(report.violations);
    }
  };
  const std::size_t jobs = std::max<std::size_t>(1, std::min(opt.jobs, opt.graphs));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::size_t pairs = 0;
  std::size_t violations = 0;
  std::size_t violating_graphs = 0;
  std::size_t first = opt.graphs;
  for (std::size_t k = 0; k < opt.graphs; ++k) {
    pairs += outcomes[k].pairs;
    violations += outcomes[k].violations.size();
    if (!outcomes[k].violations.empty()) {
      ++violating_graphs;
      first = std::min(first, k);
    }
  }
  out << "family: " << (opt.family == Family::kCactus ? "cactus" : "general") << "\n";
  out << "graphs: " << opt.graphs << "\n";
  out << "max n: " << opt.max_n << "\n";
  out << "seed: " << opt.seed << "\n";
  out << "ordered pairs checked: " << pairs << "\n";
  out << "violating graphs: " << violating_graphs << "\n";
  out << "violations: " << violations << "\n";
  if (first < opt.graphs) {
    const Digraph g = corpus_graph(opt.family, opt.seed, first, opt.max_n);
    out << "first violating graph (index " << first << "):\n" << write_edge_list(g);
    for (const Violation& v : outcomes[first].violations) {
      out << "violation: r(" << v.i << "," << v.j << ") = " << to_string(v.r)
          << " > d = " << to_string(v.d) << "\n";
    }
    return kExitViolation;
  }
  return kExitOk;
}

struct OracleOptions {
  std::string file;
  std::vector<Vertex> pair;
  std::vector<Vertex> roots;
};

inline int cmd_oracle(const OracleOptions& opt, std::ostream& out) {
  const Digraph g = detail::load_graph(opt.file);
  oracle::check_guard(g);
  if (!is_balanced(g)) {
    throw PreconditionError(
        "oracle comparison needs a balanced digraph (the determinant counts "
        "away-from-root forests only when indegree = outdegree)");
  }
  if (opt.pair.empty() && opt.roots.empty()) {
    throw PreconditionError("give --root i and/or --pair i j");
  }
  struct Row {
    std::string quantity;
    Integer det;
    Integer count;
  };
  std::vector<Row> rows;
  const IntegerMatrix l = laplacian(g);
  for (Vertex root : opt.roots) {
    dicactus::detail::check_vertex(g, root);
    rows.push_back({"spanning trees rooted at " + std::to_string(root),
                    determinant(complement_minor(l, {root}, {root})),
                    Integer(static_cast<unsigned long>(
                        oracle::enumerate_rooted_spanning_trees(g, root).count))});
  }
  if (!opt.pair.empty()) {
    const Vertex i = opt.pair[0];
    const Vertex j = opt.pair[1];
    const VertexSet set = i < j ? VertexSet{i, j} : VertexSet{j, i};
    const Integer det = two_forest_count(g, i, j);
    rows.push_back({"two-tree forests rooted at " + std::to_string(i) + "," + std::to_string(j),
                    det,
                    Integer(static_cast<unsigned long>(
                        oracle::enumerate_two_tree_forests(g, {set, set})))});
  }
  bool ok = true;
  for (const Row& row : rows) {
    const bool match = row.det == row.count;
    ok = ok && match;
    out << row.quantity << ": det = " << to_string(row.det)
        << ", enumeration = " << to_string(row.count) << ", "
        << (match ? "match" : "MISMATCH") << "\n";
  }
  return ok ? kExitOk : kExitViolation;
}

inline int cmd_gen(const std::string& kind, std::size_t n, std::size_t cycles,
                   std::size_t max_len, std::size_t overlays, std::uint64_t seed,
                   std::ostream& out) {
  if (kind == "cycle") {
    out << write_edge_list(directed_cycle(n));
  } else if (kind == "cactus") {
    out << write_edge_list(random_directed_cactus({seed, cycles, max_len, 0}));
  } else {
    out << write_edge_list(random_balanced_digraph({seed, n, overlays, 0}));
  }
  return kExitOk;
}

/// Entry point; `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact resistance distances on balanced digraphs and directed cacti",
               "dicactus"};
  app.require_subcommand(1);

  AnalyzeOptions analyze_opt;
  auto* analyze_cmd = app.add_subcommand("analyze", "Print L+, R, D, kappa and the r <= d verdict");
  analyze_cmd->add_option("file", analyze_opt.file, "Edge-list file")->required();
  auto* json_flag = analyze_cmd->add_flag("--json", analyze_opt.json, "Emit JSON");
  analyze_cmd->add_option("--decimal", analyze_opt.decimal, "Show rationals as decimals with this many digits")
      ->check(CLI::Range(0, 1000))
      ->excludes(json_flag);
  analyze_cmd->add_flag("--force", analyze_opt.force, "Lift the n <= 512 size guard");

  std::string verify_file;
  bool verify_force = false;
  auto* verify_cmd = app.add_subcommand("verify", "Run the invariant suite on a graph");
  verify_cmd->add_option("file", verify_file, "Edge-list file")->required();
  verify_cmd->add_flag("--force", verify_force, "Lift the n <= 512 size guard");

  SearchOptions search_opt;
  std::string family = "cactus";
  auto* search_cmd = app.add_subcommand("search", "Check r <= d on a seeded corpus");
  search_cmd->add_option("--graphs", search_opt.graphs, "Number of graphs")->required();
  search_cmd->add_option("--max-n", search_opt.max_n, "Maximum vertex count")->required();
  search_cmd->add_option("--seed", search_opt.seed, "Corpus seed");
  search_cmd->add_option("--family", family, "cactus or general")
      ->check(CLI::IsMember({"cactus", "general"}));
  search_cmd->add_option("--jobs", search_opt.jobs, "Worker threads")->check(CLI::PositiveNumber);

  std::string gen_kind;
  std::size_t gen_n = 0;
  std::size_t gen_cycles = 1;
  std::size_t gen_max_len = 4;
  std::size_t gen_overlays = 0;
  std::uint64_t gen_seed = 0;
  auto* gen_cmd = app.add_subcommand("gen", "Write a generated graph as an edge list");
  gen_cmd->add_option("kind", gen_kind, "cycle, cactus or balanced")
      ->required()
      ->check(CLI::IsMember({"cycle", "cactus", "balanced"}));
  gen_cmd->add_option("--n", gen_n, "Vertex count (cycle, balanced)");
  gen_cmd->add_option("--cycles", gen_cycles, "Cycle count (cactus)");
  gen_cmd->add_option("--max-len", gen_max_len, "Maximum cycle length (cactus)");
  gen_cmd->add_option("--overlays", gen_overlays, "Overlay cycles (balanced)");
  gen_cmd->add_option("--seed", gen_seed, "Seed (cactus, balanced)");

  OracleOptions oracle_opt;
  auto* oracle_cmd = app.add_subcommand("oracle", "Compare determinants with brute-force counts");
  oracle_cmd->add_option("file", oracle_opt.file, "Edge-list file")->required();
  oracle_cmd->add_option("--pair", oracle_opt.pair, "Two-tree forests rooted at i and j")
      ->expected(2);
  oracle_cmd->add_option("--root", oracle_opt.roots, "Spanning trees rooted at i")
      ->expected(1);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*analyze_cmd) return cmd_analyze(analyze_opt, out);
    if (*verify_cmd) return cmd_verify(verify_file, verify_force, out);
    if (*search_cmd) {
      search_opt.family = family == "general" ? Family::kGeneral : Family::kCactus;
      return cmd_search(search_opt, out);
    }
    if (*gen_cmd) return cmd_gen(gen_kind, gen_n, gen_cycles, gen_max_len, gen_overlays, gen_seed, out);
    if (*oracle_cmd) return cmd_oracle(oracle_opt, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace dicactus::cli
