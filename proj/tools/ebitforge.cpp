#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ebitforge/code_io.hpp"
#include "ebitforge/pipeline.hpp"
#include "ebitforge/reproduce.hpp"

namespace {

using namespace ebitforge;

uint64_t seed_from_env() {
  const char* raw = std::getenv("EBITFORGE_SEED");
  if (!raw) {
    return 0;
  }
  try {
    return std::stoull(raw);
  } catch (const std::exception&) {
    throw std::invalid_argument("EBITFORGE_SEED must be an unsigned integer");
  }
}

struct GensArgs {
  std::string graph_file;
  int ebits = 0;
  std::string format = "table";
};

int run_gens(const GensArgs& args) {
  const Graph graph = load_graph_file(args.graph_file);
  const StabilizerSet stab = standard_generators(graph, args.ebits);
  if (args.format == "json") {
    nlohmann::json j;
    j["n"] = stab.n();
    j["c"] = stab.c();
    nlohmann::json g = nlohmann::json::array();
    for (int i = 1; i <= stab.n(); ++i) {
      g.push_back(render_pauli(stab.g(i)));
    }
    nlohmann::json h = nlohmann::json::array();
    for (int j2 = 1; j2 <= stab.c(); ++j2) {
      h.push_back(render_pauli(stab.h(j2)));
    }
    j["g"] = g;
    j["h"] = h;
    std::cout << j.dump(2) << "\n";
  } else {
    for (int i = 1; i <= stab.n(); ++i) {
      std::cout << "g_" << i << " = " << render_pauli(stab.g(i)) << "\n";
    }
    for (int j = 1; j <= stab.c(); ++j) {
      std::cout << "h_" << j << " = " << render_pauli(stab.h(j)) << "\n";
    }
  }
  return 0;
}

struct InduceArgs {
  std::string graph_file;
  int ebits = 0;
  int weight = 1;
  std::string format = "table";
};

int run_induce(const InduceArgs& args) {
  const Graph graph = load_graph_file(args.graph_file);
  const StabilizerSet stab = standard_generators(graph, args.ebits);
  const auto errors = enumerate_errors(graph.n, args.weight, args.ebits);
  const auto induced = induce_set(errors, stab);
  if (args.format == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& e : induced) {
      rows.push_back({{"error", render_pauli(e.origin)},
                      {"induced", induced_vector_string(e, stab.n(), stab.c())}});
    }
    std::cout << rows.dump(2) << "\n";
  } else {
    for (const auto& e : induced) {
      std::cout << induced_report_line(e, stab.n(), stab.c()) << "\n";
    }
  }
  return 0;
}

struct SearchArgs {
  std::string graph_file;
  int ebits = 0;
  int weight = 1;
  std::string mode = "detect";
  size_t target_k = 0;
  uint64_t budget = kDefaultCliqueBudget;
  int threads = 1;
  std::string out;
  std::string format = "table";
};

int run_search(const SearchArgs& args) {
  const Graph graph = load_graph_file(args.graph_file);
  SearchOptions opt;
  opt.weight = args.weight;
  opt.mode = args.mode == "correct" ? SearchMode::correct : SearchMode::detect;
  opt.target_k = args.target_k;
  opt.budget = args.budget;
  opt.threads = args.threads;
  opt.seed = seed_from_env();

  SearchResult result;
  try {
    result = search_code(graph, args.ebits, opt);
  } catch (const std::runtime_error& ex) {
    std::cerr << "search produced no verified code: " << ex.what() << "\n";
    return 1;
  }

  nlohmann::json j = code_to_json(result.code);
  j["search"] = {{"optimality", result.optimality},
                 {"nodes_explored", result.nodes_explored},
                 {"diff_set_size", result.diff_set_size},
                 {"degenerate_products", result.degenerate_products},
                 {"errors_verified", result.errors_verified}};
  if (!args.out.empty()) {
    std::ofstream out(args.out);
    if (!out) {
      throw std::invalid_argument("cannot write output file: " + args.out);
    }
    out << j.dump(2) << "\n";
  }
  if (args.format == "json") {
    std::cout << j.dump(2) << "\n";
  } else {
    const auto& p = result.code.params;
    std::cout << "((" << p.n << "," << p.K << "," << p.d << ";" << p.c << ")) code, clique "
              << result.optimality << ", diff set " << result.diff_set_size << ", "
              << result.errors_verified << " detection checks passed\n";
    std::cout << "codewords:\n";
    for (uint64_t cw : result.code.codewords.codewords) {
      std::cout << "  " << bits_to_string(cw, p.n, p.c) << "\n";
    }
    std::cout << "word operators (up to phase):\n";
    for (const auto& w : result.code.word_ops_encoded) {
      std::cout << "  " << render_pauli_unsigned(w) << "\n";
    }
  }
  if (args.target_k > 0 && result.code.params.K < args.target_k) {
    std::cerr << "note: target K=" << args.target_k << " not reached (found "
              << result.code.params.K << ", " << result.optimality << ")\n";
  }
  return 0;
}

struct VerifyArgs {
  std::string code_file;
  int wmax = 0;
  int threads = 1;
  std::string out;
  std::string format = "table";
};

int run_verify(const VerifyArgs& args) {
  const EacwsCode code = load_code_file(args.code_file);
  VerifyOptions opt;
  opt.wmax = args.wmax;
  opt.threads = args.threads;
  const VerificationReport report = verify_code(code, opt);
  const nlohmann::json j = report_to_json(report);
  if (!args.out.empty()) {
    std::ofstream out(args.out);
    if (!out) {
      throw std::invalid_argument("cannot write output file: " + args.out);
    }
    out << j.dump(2) << "\n";
  }
  if (args.format == "json") {
    std::cout << j.dump(2) << "\n";
  } else {
    const auto& p = report.params;
    std::cout << "((" << p.n << "," << p.K << "," << p.d << ";" << p.c << ")) "
              << args.code_file << "\n";
    std::cout << "word ops:          "
              << (report.word_ops_consistent ? "consistent" : "INCONSISTENT") << "\n";
    std::cout << "orthonormal basis: " << (report.orthonormal ? "yes" : "NO") << "\n";
    std::cout << "errors detected:   " << report.detected_errors << "\n";
    std::cout << "distance:          " << report.distance.to_string();
    if (report.distance.witness) {
      std::cout << "  (witness " << render_pauli(*report.distance.witness) << ")";
    }
    std::cout << "\nverdict:           " << (report.pass ? "pass" : "FAIL") << "\n";
  }
  return report.pass ? 0 : 1;
}

int run_reproduce(int threads) {
  const auto results = run_paper_reproduction(seed_from_env(), threads);
  bool all = true;
  for (const auto& r : results) {
    all &= r.pass;
    std::cout << (r.pass ? "[ok]  " : "[FAIL]") << " criterion " << r.id << ": " << r.name
              << " -- " << r.detail << " (" << static_cast<long>(r.ms) << " ms)\n";
  }
  std::cout << (all ? "all criteria pass" : "some criteria FAILED") << "\n";
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ebitforge: construct and verify entanglement-assisted codeword-stabilized codes"};
  app.require_subcommand(1);

  GensArgs gens;
  auto* gens_cmd = app.add_subcommand("gens", "print standard-form stabilizer generators");
  gens_cmd->add_option("--graph", gens.graph_file, "graph file")->required();
  gens_cmd->add_option("--ebits", gens.ebits, "ebit count c");
  gens_cmd->add_option("--format", gens.format, "table|json")
      ->check(CLI::IsMember({"table", "json"}));

  InduceArgs induce;
  auto* induce_cmd = app.add_subcommand("induce", "map Pauli errors to induced binary vectors");
  induce_cmd->add_option("--graph", induce.graph_file, "graph file")->required();
  induce_cmd->add_option("--ebits", induce.ebits, "ebit count c");
  induce_cmd->add_option("--weight", induce.weight, "max error weight t")
      ->check(CLI::PositiveNumber);
  induce_cmd->add_option("--format", induce.format, "table|json")
      ->check(CLI::IsMember({"table", "json"}));

  SearchArgs search;
  auto* search_cmd = app.add_subcommand("search", "search for a code correcting/detecting an error set");
  search_cmd->add_option("--graph", search.graph_file, "graph file")->required();
  search_cmd->add_option("--ebits", search.ebits, "ebit count c");
  search_cmd->add_option("--weight", search.weight, "error weight t")
      ->check(CLI::PositiveNumber);
  search_cmd->add_option("--mode", search.mode, "detect|correct")
      ->check(CLI::IsMember({"detect", "correct"}));
  search_cmd->add_option("--target-k", search.target_k, "stop once a clique of this size is found");
  search_cmd->add_option("--budget", search.budget, "clique search node budget");
  search_cmd->add_option("--threads", search.threads, "worker cap")->check(CLI::PositiveNumber);
  search_cmd->add_option("--out", search.out, "write the code JSON here");
  search_cmd->add_option("--format", search.format, "table|json")
      ->check(CLI::IsMember({"table", "json"}));

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "brute-force verify a code file");
  verify_cmd->add_option("code", verify.code_file, "code JSON file")->required();
  verify_cmd->add_option("--wmax", verify.wmax, "sweep errors up to this weight")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--threads", verify.threads, "worker cap")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--out", verify.out, "write the report JSON here");
  verify_cmd->add_option("--format", verify.format, "table|json")
      ->check(CLI::IsMember({"table", "json"}));

  int reproduce_threads = 1;
  auto* reproduce_cmd = app.add_subcommand("reproduce", "re-run every published-value check");
  reproduce_cmd->add_option("--threads", reproduce_threads, "worker cap")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (gens_cmd->parsed()) {
      return run_gens(gens);
    }
    if (induce_cmd->parsed()) {
      return run_induce(induce);
    }
    if (search_cmd->parsed()) {
      return run_search(search);
    }
    if (verify_cmd->parsed()) {
      return run_verify(verify);
    }
    if (reproduce_cmd->parsed()) {
      return run_reproduce(reproduce_threads);
    }
  } catch (const std::invalid_argument& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  }
  return 2;
}
