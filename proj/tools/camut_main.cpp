// camut: exact-arithmetic calculator for skew-symmetrizable cluster
// combinatorics. JSON in; JSON, DOT or tables out.
//
// Exit codes: 0 success, 2 parse error, 3 precondition violation,
// 4 resource limit, 5 Laurent-phenomenon violation (internal bug), 1 other.

#include "camut/errors.hpp"
#include "camut/json_io.hpp"
#include "camut/mod_quiver.hpp"
#include "camut/preprojective.hpp"
#include "camut/seed.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace camut;

struct Options {
  std::string input;
  std::string seq;
  std::string out;
  std::string format = "json";
  int max_depth = 64;
  int max_seeds = 100000;
  int cap = 10;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("cannot open input file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(const Options& opt, const std::string& payload) {
  if (opt.out.empty()) {
    std::cout << payload;
    if (!payload.empty() && payload.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream out(opt.out, std::ios::binary);
  if (!out) throw parse_error("cannot open output file '" + opt.out + "'");
  out << payload;
}

std::vector<std::string> split_seq(const std::string& seq) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : seq) {
    if (c == ',') {
      if (!cur.empty()) parts.push_back(cur);
      cur.clear();
    } else if (!std::isspace(uint8_t(c))) {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) parts.push_back(cur);
  if (parts.empty()) throw precondition_error("empty mutation sequence");
  return parts;
}

int parse_direction(const std::string& tok, int n) {
  try {
    size_t used = 0;
    int k = std::stoi(tok, &used);
    if (used == tok.size() && k >= 1 && k <= n) return k;
  } catch (const std::exception&) {
  }
  throw precondition_error("mutation direction '" + tok + "' is not an index in 1.." +
                           std::to_string(n));
}

// A point token may be a label or a 1-based position.
int parse_point(const std::string& tok, const std::vector<std::string>& points) {
  for (size_t i = 0; i < points.size(); ++i)
    if (points[i] == tok) return int(i);
  try {
    size_t used = 0;
    int k = std::stoi(tok, &used);
    if (used == tok.size() && k >= 1 && k <= int(points.size())) return k - 1;
  } catch (const std::exception&) {
  }
  throw precondition_error("unknown point '" + tok + "'");
}

int run_matrix_mutate(const Options& opt) {
  ExchangeMatrix b = io::matrix_from_json(slurp(opt.input));
  if (!opt.seq.empty())
    for (const auto& tok : split_seq(opt.seq)) b = mutate_matrix(b, parse_direction(tok, b.n_mutable()));
  if (opt.format == "json")
    emit(opt, io::matrix_to_json(b));
  else if (opt.format == "dot")
    emit(opt, io::quiver_to_dot(from_matrix(b)));
  else
    throw precondition_error("matrix-mutate supports --format json or dot");
  return 0;
}

int run_quiver_mutate(const Options& opt) {
  ValuedQuiver q = io::quiver_from_json(slurp(opt.input));
  if (!opt.seq.empty())
    for (const auto& tok : split_seq(opt.seq)) q = mutate_quiver(q, parse_point(tok, q.points()));
  if (opt.format == "json")
    emit(opt, io::quiver_to_json(q));
  else if (opt.format == "dot")
    emit(opt, io::quiver_to_dot(q));
  else
    throw precondition_error("quiver-mutate supports --format json or dot");
  return 0;
}

int run_seed_explore(const Options& opt) {
  Seed s0 = io::seed_from_json(slurp(opt.input));
  if (!opt.seq.empty())
    for (const auto& tok : split_seq(opt.seq)) s0 = mutate_seed(s0, parse_direction(tok, s0.n()));
  ExchangeGraph g = explore(s0, opt.max_depth, opt.max_seeds);
  if (opt.format == "json")
    emit(opt, io::exchange_graph_to_json(g));
  else if (opt.format == "dot")
    emit(opt, io::exchange_graph_to_dot(g));
  else if (opt.format == "table")
    emit(opt, io::variables_table(g));
  else
    throw precondition_error("seed-explore supports --format json, dot or table");
  std::cerr << (g.complete ? "complete" : "truncated") << ": " << g.seed_count() << " seeds, "
            << g.variable_count() << " variables\n";
  return 0;
}

int run_subcluster_check(const Options& opt) {
  io::SubclusterCheckInput in = io::subcluster_from_json(slurp(opt.input));
  bool ok = verify_subcluster(in.parent, in.sigma, in.p, in.inverted_sub);
  emit(opt, std::string("{\n  \"format\": 1,\n  \"verdict\": ") + (ok ? "true" : "false") + "\n}");
  return 0;
}

int run_mod_check(const Options& opt) {
  std::string text = slurp(opt.input);
  std::string kind = io::modulation_kind(text);
  if (kind == "field_algebra") {
    emit(opt, io::algebra_report_json(io::algebra_from_json(text)));
    return 0;
  }
  if (kind == "bimodule") {
    DualizingPair p = make_dualizing_pair(io::bimodule_from_json(text));
    emit(opt, io::pair_report_json(p));
    return 0;
  }
  if (kind == "mod_quiver_dims") {
    ModQuiverDims d = io::mod_quiver_from_json(text);
    if (!opt.seq.empty())
      for (const auto& tok : split_seq(opt.seq))
        d = semi_modulated_mutate(d, parse_point(tok, d.points()));
    emit(opt, io::mod_quiver_to_json(d));
    return 0;
  }
  throw precondition_error("mod-check handles kinds field_algebra, bimodule, mod_quiver_dims");
}

int run_preproj_dims(const Options& opt) {
  ModulatedGraph g = io::modulated_graph_from_json(slurp(opt.input));
  GradedDims gd = graded_dims(g, opt.cap);
  if (opt.format == "json")
    emit(opt, io::graded_dims_to_json(gd));
  else if (opt.format == "table")
    emit(opt, io::graded_dims_table(gd));
  else
    throw precondition_error("preproj-dims supports --format json or table");
  return 0;
}

int run_dynkin_check(const Options& opt) {
  std::string text = slurp(opt.input);
  bool verdict;
  bool is_graph = false;
  try {
    is_graph = io::modulation_kind(text) == "modulated_graph";
  } catch (const parse_error&) {
  }
  if (is_graph)
    verdict = is_dynkin(io::modulated_graph_from_json(text).underlying_valued_graph());
  else
    verdict = is_dynkin(io::quiver_from_json(text));
  emit(opt, std::string("{\n  \"format\": 1,\n  \"dynkin\": ") + (verdict ? "true" : "false") +
                "\n}");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact engine for skew-symmetrizable cluster combinatorics"};
  app.require_subcommand(1);

  Options opt;
  auto add_common = [&opt](CLI::App* cmd, bool needs_input = true) {
    auto* in = cmd->add_option("--input", opt.input, "input JSON file");
    if (needs_input) in->required();
    cmd->add_option("--out", opt.out, "output path (default: stdout)");
    cmd->add_option("--format", opt.format, "output format");
  };

  auto* mm = app.add_subcommand("matrix-mutate", "mutate an exchange matrix along a sequence");
  add_common(mm);
  mm->add_option("--seq", opt.seq, "comma-separated 1-based directions");

  auto* qm = app.add_subcommand("quiver-mutate", "mutate a valued quiver along a sequence");
  add_common(qm);
  qm->add_option("--seq", opt.seq, "comma-separated point labels or 1-based positions");

  auto* se = app.add_subcommand("seed-explore", "breadth-first exchange-graph exploration");
  add_common(se);
  se->add_option("--seq", opt.seq, "mutations applied to the seed before exploring");
  se->add_option("--max-depth", opt.max_depth, "maximum BFS depth")->check(CLI::PositiveNumber);
  se->add_option("--max-seeds", opt.max_seeds, "maximum number of seeds")
      ->check(CLI::PositiveNumber);

  auto* sc = app.add_subcommand("subcluster-check", "verify a subcluster-seed triple");
  add_common(sc);

  auto* mc = app.add_subcommand("mod-check",
                                "verify modulation data (algebra, dualizing pair) or run "
                                "semi-modulated mutation on a dimension table");
  add_common(mc);
  mc->add_option("--seq", opt.seq, "mutation sequence for mod_quiver_dims input");

  auto* pd = app.add_subcommand("preproj-dims", "graded dimensions of the preprojective algebra");
  add_common(pd);
  pd->add_option("--cap", opt.cap, "maximum tensor degree")->check(CLI::NonNegativeNumber);

  auto* dc = app.add_subcommand("dynkin-check", "positive-definiteness test of the Cartan matrix");
  add_common(dc);

  CLI11_PARSE(app, argc, argv);

  try {
    if (mm->parsed()) return run_matrix_mutate(opt);
    if (qm->parsed()) return run_quiver_mutate(opt);
    if (se->parsed()) return run_seed_explore(opt);
    if (sc->parsed()) return run_subcluster_check(opt);
    if (mc->parsed()) return run_mod_check(opt);
    if (pd->parsed()) return run_preproj_dims(opt);
    if (dc->parsed()) return run_dynkin_check(opt);
  } catch (const parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const precondition_error& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return 3;
  } catch (const resource_error& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 4;
  } catch (const laurent_violation& e) {
    std::cerr << "Laurent phenomenon violated (internal bug): " << e.what() << "\n";
    return 5;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
