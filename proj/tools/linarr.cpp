// linarr: minimum planar and projective linear arrangements of trees.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "linarr/bench.hpp"
#include "linarr/hs.hpp"
#include "linarr/intervals.hpp"
#include "linarr/io.hpp"
#include "linarr/metrics.hpp"
#include "linarr/oracle.hpp"
#include "linarr/svg.hpp"

namespace {

using namespace linarr;

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_violation = 2;

enum class task { planar, projective, unrestricted };
enum class algorithm { hs, intervals };

const std::map<std::string, task> task_names{
    {"planar", task::planar}, {"projective", task::projective}, {"unrestricted", task::unrestricted}};
const std::map<std::string, algorithm> algorithm_names{{"hs", algorithm::hs}, {"intervals", algorithm::intervals}};
const std::map<std::string, io::tree_format> format_names{{"edges", io::tree_format::edges},
                                                          {"heads", io::tree_format::heads}};

struct tree_options {
  std::string input;
  io::tree_format format = io::tree_format::edges;
  std::optional<vertex> root;
};

void add_tree_options(CLI::App* cmd, tree_options& opt) {
  cmd->add_option("input", opt.input, "Tree file ('-' for stdin)")->required();
  cmd->add_option("--format", opt.format, "Input format")
      ->transform(CLI::CheckedTransformer(format_names, CLI::ignore_case));
  cmd->add_option("--root", opt.root, "Root vertex (overrides a head vector's root)");
}

io::tree_input load_tree(const tree_options& opt) {
  if (opt.input == "-") return io::read_tree(std::cin, opt.format);
  std::ifstream in(opt.input);
  if (!in) throw tree_error("cannot open " + opt.input);
  return io::read_tree(in, opt.format);
}

const free_tree& base_of(const io::tree_input& t) {
  return std::visit(
      [](const auto& x) -> const free_tree& {
        if constexpr (std::is_same_v<std::decay_t<decltype(x)>, free_tree>) {
          return x;
        } else {
          return x.base();
        }
      },
      t);
}

// The root requested by --root, else the head vector's root, else none.
std::optional<rooted_tree> rooted_of(const io::tree_input& t, const std::optional<vertex>& root) {
  if (root) return root_at(base_of(t), *root);
  if (const auto* r = std::get_if<rooted_tree>(&t)) return *r;
  return std::nullopt;
}

rooted_tree require_root(const io::tree_input& t, const std::optional<vertex>& root) {
  auto r = rooted_of(t, root);
  if (!r) throw tree_error("the projective task needs a root: pass --root or use --format heads");
  return *r;
}

arrangement solve(const io::tree_input& t, task k, algorithm a, const std::optional<vertex>& root) {
  if (k == task::projective) {
    const rooted_tree r = require_root(t, root);
    return a == algorithm::hs ? hs_projective(r) : arrange_optimal_projective(r);
  }
  if (k == task::unrestricted) throw tree_error("solve supports the planar and projective tasks only");
  return a == algorithm::hs ? hs_planar(base_of(t)) : arrange_optimal_planar(base_of(t));
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw tree_error("cannot write " + path);
  return out;
}

// Writes to path, or to stdout when path is empty.
template <typename F>
void emit(const std::string& path, F&& write) {
  if (path.empty()) {
    write(std::cout);
  } else {
    auto out = open_output(path);
    write(out);
  }
}

std::string describe(const edge& e) { return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}"; }

std::vector<std::size_t> parse_sizes(const std::string& list) {
  std::vector<std::size_t> sizes;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const double value = std::stod(item);  // accepts 1e5
    if (value < 1) throw tree_error("bench sizes must be positive");
    sizes.push_back(static_cast<std::size_t>(value));
  }
  if (sizes.empty()) throw tree_error("no bench sizes given");
  if (!std::is_sorted(sizes.begin(), sizes.end())) throw tree_error("bench sizes must be ascending");
  return sizes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimum planar and projective linear arrangements of trees"};
  app.require_subcommand(1);

  // solve
  tree_options solve_tree;
  task solve_task = task::planar;
  algorithm solve_algorithm = algorithm::intervals;
  auto* solve_cmd = app.add_subcommand("solve", "Print an optimal arrangement and its cost");
  add_tree_options(solve_cmd, solve_tree);
  solve_cmd->add_option("--task", solve_task, "planar or projective")
      ->transform(CLI::CheckedTransformer(task_names, CLI::ignore_case));
  solve_cmd->add_option("--algorithm", solve_algorithm, "hs or intervals")
      ->transform(CLI::CheckedTransformer(algorithm_names, CLI::ignore_case));

  // verify
  tree_options verify_tree;
  std::string verify_arr;
  task verify_task = task::planar;
  auto* verify_cmd = app.add_subcommand("verify", "Check an arrangement against a constraint");
  add_tree_options(verify_cmd, verify_tree);
  verify_cmd->add_option("arrangement", verify_arr, "Arrangement file")->required();
  verify_cmd->add_option("--task", verify_task, "planar, projective or unrestricted")
      ->transform(CLI::CheckedTransformer(task_names, CLI::ignore_case));

  // gen
  std::size_t gen_n = 0;
  std::uint64_t gen_seed = 0;
  std::string gen_out;
  auto* gen_cmd = app.add_subcommand("gen", "Write a uniformly random labeled tree as an edge list");
  gen_cmd->add_option("n", gen_n, "Vertex count")->required()->check(CLI::PositiveNumber);
  gen_cmd->add_option("seed,--seed", gen_seed, "Random seed");
  gen_cmd->add_option("--out", gen_out, "Output path (default stdout)");

  // enum
  std::size_t enum_n = 0;
  std::string enum_out;
  auto* enum_cmd = app.add_subcommand("enum", "Write every labeled tree on n vertices");
  enum_cmd->add_option("n", enum_n, "Vertex count")->required();
  enum_cmd->add_option("--out", enum_out, "Output path (default stdout)");

  // oracle
  tree_options oracle_tree;
  task oracle_task = task::planar;
  auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive minimum over all arrangements (n <= 9)");
  add_tree_options(oracle_cmd, oracle_tree);
  oracle_cmd->add_option("--task", oracle_task, "planar, projective or unrestricted")
      ->transform(CLI::CheckedTransformer(task_names, CLI::ignore_case));

  // separate
  std::size_t separate_n = 0;
  auto* separate_cmd =
      app.add_subcommand("separate", "Trees with a root whose projective optimum exceeds the planar one");
  separate_cmd->add_option("n", separate_n, "Vertex count (<= 7)")->required();

  // bench
  std::string bench_sizes = "100000,200000,400000,800000";
  std::size_t bench_trials = 5;
  std::uint64_t bench_seed = 1;
  auto* bench_cmd = app.add_subcommand("bench", "Time both planar arrangers on random trees and paths");
  bench_cmd->add_option("--sizes", bench_sizes, "Comma-separated ascending sizes");
  bench_cmd->add_option("--trials", bench_trials, "Trials per size")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--seed", bench_seed, "Base seed for random trees");

  // render
  tree_options render_tree;
  task render_task = task::planar;
  algorithm render_algorithm = algorithm::intervals;
  std::string render_out;
  auto* render_cmd = app.add_subcommand("render", "Draw an optimal arrangement as an SVG arc diagram");
  add_tree_options(render_cmd, render_tree);
  render_cmd->add_option("--task", render_task, "planar or projective")
      ->transform(CLI::CheckedTransformer(task_names, CLI::ignore_case));
  render_cmd->add_option("--algorithm", render_algorithm, "hs or intervals")
      ->transform(CLI::CheckedTransformer(algorithm_names, CLI::ignore_case));
  render_cmd->add_option("--out", render_out, "SVG output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (*solve_cmd) {
      const auto t = load_tree(solve_tree);
      const auto arr = solve(t, solve_task, solve_algorithm, solve_tree.root);
      io::write_positions(std::cout, arr);
      std::cout << "D=" << cost(base_of(t), arr) << '\n';
      return exit_ok;
    }

    if (*verify_cmd) {
      const auto t = load_tree(verify_tree);
      const free_tree& base = base_of(t);
      std::ifstream in(verify_arr);
      if (!in) throw tree_error("cannot open " + verify_arr);
      const arrangement arr = io::read_arrangement(in, base.size());
      const auto d = cost(base, arr);
      switch (verify_task) {
        case task::unrestricted:
          std::cout << "unrestricted: yes, D=" << d << '\n';
          return exit_ok;
        case task::planar:
          if (auto x = find_crossing(base, arr)) {
            std::cout << "planar: no, D=" << d << "\ncrossing: " << describe(x->first) << " " << describe(x->second)
                      << '\n';
            return exit_violation;
          }
          std::cout << "planar: yes, D=" << d << '\n';
          return exit_ok;
        case task::projective: {
          const rooted_tree r = require_root(t, verify_tree.root);
          const auto why = check_projectivity(r, arr);
          if (why.crossing) {
            std::cout << "projective: no (crossing), D=" << d << "\ncrossing: " << describe(why.crossing->first)
                      << " " << describe(why.crossing->second) << '\n';
            return exit_violation;
          }
          if (why.root_cover) {
            std::cout << "projective: no (root covered), D=" << d << "\nroot " << r.root() << " covered by "
                      << describe(*why.root_cover) << '\n';
            return exit_violation;
          }
          std::cout << "projective: yes, D=" << d << '\n';
          return exit_ok;
        }
      }
    }

    if (*gen_cmd) {
      const free_tree t = random_tree(gen_n, gen_seed);
      emit(gen_out, [&](std::ostream& out) { io::write_edge_list(out, t); });
      return exit_ok;
    }

    if (*enum_cmd) {
      emit(enum_out, [&](std::ostream& out) {
        std::uint64_t k = 0;
        for_each_labeled_tree(enum_n, [&](const free_tree& t) {
          out << "# tree " << ++k << '\n';
          io::write_edge_list(out, t);
        });
        out << "# " << k << " trees\n";
      });
      return exit_ok;
    }

    if (*oracle_cmd) {
      const auto t = load_tree(oracle_tree);
      oracle_result res;
      if (oracle_task == task::projective) {
        res = brute_force_min(require_root(t, oracle_tree.root), regime::projective);
      } else {
        res = brute_force_min(base_of(t), oracle_task == task::planar ? regime::planar : regime::unrestricted);
      }
      io::write_positions(std::cout, res.witness);
      std::cout << "D=" << res.min_cost << '\n';
      return exit_ok;
    }

    if (*separate_cmd) {
      const auto found = find_separating_trees(separate_n);
      std::map<std::string, int> classes;
      for (const auto& inst : found) {
        classes.try_emplace(free_canonical_form(inst.tree), 0);
        std::cout << "tree";
        for (const auto& [u, v] : inst.tree.edges()) std::cout << ' ' << u << '-' << v;
        std::cout << "\troot=" << inst.root << "\tprojective=" << inst.projective_min
                  << "\tplanar=" << inst.planar_min << '\n';
      }
      std::cout << "classes=" << classes.size() << "\tinstances=" << found.size() << '\n';
      return exit_ok;
    }

    if (*bench_cmd) {
      const auto rows = bench::run(parse_sizes(bench_sizes), bench_trials, bench_seed);
      bench::print(std::cout, rows);
      return exit_ok;
    }

    if (*render_cmd) {
      const auto t = load_tree(render_tree);
      const auto arr = solve(t, render_task, render_algorithm, render_tree.root);
      const vertex marked = render_task == task::projective ? require_root(t, render_tree.root).root() : no_vertex;
      auto out = open_output(render_out);
      svg::render(out, base_of(t), arr, marked);
      return exit_ok;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}
