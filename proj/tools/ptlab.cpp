// ptlab: simulate, verify and certify the colouring game on Hadamard graphs.
//
// Exit statuses: 0 pass / verdict true, 1 verification failure / verdict
// false, 2 usage error, 3 resource limit.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ptlab/errors.hpp"
#include "ptlab/game_harness.hpp"
#include "ptlab/hadamard_graph.hpp"
#include "ptlab/jsonio.hpp"
#include "ptlab/prng.hpp"
#include "ptlab/protocol.hpp"
#include "ptlab/quantum.hpp"

namespace {

using namespace ptlab;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResourceLimit = 3;

int resolve_jobs(int jobs_flag) {
  if (jobs_flag > 0) {
    return jobs_flag;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Vertex words come in as decimal or 0b-prefixed binary and always go out as
// binary with N digits, which makes the Hamming structure readable.
Vertex parse_vertex(const std::string& text, int n_bits) {
  std::uint64_t value = 0;
  std::size_t used = 0;
  try {
    if (text.size() > 2 && (text[0] == '0') && (text[1] == 'b' || text[1] == 'B')) {
      value = std::stoull(text.substr(2), &used, 2);
      used += 2;
    } else {
      value = std::stoull(text, &used, 10);
    }
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed vertex word: " + text);
  }
  if (used != text.size() || text[0] == '-' || text[0] == '+') {
    throw std::invalid_argument("malformed vertex word: " + text);
  }
  if (value >= (std::uint64_t{1} << n_bits)) {
    throw std::invalid_argument("vertex word " + text + " does not fit in " +
                                std::to_string(n_bits) + " bits");
  }
  return static_cast<Vertex>(value);
}

std::string format_vertex(Vertex v, int n_bits) {
  std::string out = "0b";
  for (int i = n_bits - 1; i >= 0; --i) {
    out += ((v >> i) & 1u) ? '1' : '0';
  }
  return out;
}

void emit(const std::string& payload, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << payload << '\n';
    return;
  }
  std::ofstream file(out_path);
  if (!file) {
    throw std::invalid_argument("cannot open output file: " + out_path);
  }
  file << payload << '\n';
}

struct CommonArgs {
  int n_bits = 0;
  std::string a_text;
  std::string b_text;
  std::string mode;
  std::uint64_t sample = 1000;
  std::uint64_t seed = 0;
  int jobs = 0;
  std::string format = "json";
  std::string out_path;
  bool subgraph = false;
  bool force_exact = false;
  std::uint64_t k = 0;
  std::string edges_path;
  std::string strategy = "constant";
  int colours = 0;
  int constant_colour = 0;
  std::string strategy_file;
};

int cmd_simulate(const CommonArgs& args) {
  const GraphSpec g(args.n_bits);
  const Vertex a = parse_vertex(args.a_text, g.n_bits);
  const Vertex b = parse_vertex(args.b_text, g.n_bits);
  const Question q(a, b, g.n_bits);

  const ProbabilityGrid grid = run_protocol(q);
  const Rational exact = collision_probability_exact(a, b, g.n_bits);
  const double pipeline = grid.diagonal_sum();
  const double discrepancy = std::abs(pipeline - exact.value());

  JsonWriter w;
  w.begin_object();
  w.key("n_bits").value(q.n_bits);
  w.key("a").value(format_vertex(a, q.n_bits));
  w.key("b").value(format_vertex(b, q.n_bits));
  w.key("hamming_distance").value(q.hamming());
  w.key("question_class").value(to_string(q.question_class()));
  w.key("promise").value(q.satisfies_promise());
  w.key("collision_exact").begin_object();
  w.key("num").value(exact.num);
  w.key("den").value(exact.den);
  w.end_object();
  w.key("collision_exact_value").value(exact.value());
  w.key("collision_pipeline").value(pipeline);
  w.key("discrepancy").value(discrepancy);
  w.key("grid").begin_array();
  for (int ja = 0; ja < grid.dim; ++ja) {
    w.begin_array();
    for (int jb = 0; jb < grid.dim; ++jb) {
      w.value(grid.at(ja, jb));
    }
    w.end_array();
  }
  w.end_array();
  w.end_object();

  emit(w.str(), args.out_path);
  return kExitPass;
}

int cmd_verify(const CommonArgs& args) {
  const GraphSpec g(args.n_bits);
  VerifyOptions opts;
  if (args.mode.empty()) {
    opts.mode = g.n_bits <= 12 ? VerifyMode::ExactFastPath : VerifyMode::FullSimulation;
  } else {
    opts.mode = args.mode == "exact" ? VerifyMode::ExactFastPath : VerifyMode::FullSimulation;
  }
  opts.sim_sample = args.sample;
  opts.seed = args.seed;
  opts.jobs = resolve_jobs(args.jobs);

  const VerificationReport report = verify_exhaustive(g.n_bits, opts);
  emit(args.format == "csv" ? to_csv(report) : to_json(report), args.out_path);
  return report.passed() ? kExitPass : kExitFail;
}

int cmd_graph_stats(const CommonArgs& args) {
  const GraphSpec g(args.n_bits);
  const ComponentReport report = connected_components(g);

  if (!args.edges_path.empty()) {
    std::ofstream edges(args.edges_path);
    if (!edges) {
      throw std::invalid_argument("cannot open edge-list file: " + args.edges_path);
    }
    write_edge_list(edges, g);
  }

  JsonWriter w;
  w.begin_object();
  w.key("n_bits").value(g.n_bits);
  w.key("vertex_count").value(g.vertex_count());
  w.key("degree").value(g.degree());
  w.key("component_count").value(report.component_count);
  w.key("component_sizes").begin_array();
  for (const std::uint64_t s : report.component_sizes) {
    w.value(s);
  }
  w.end_array();
  w.key("parity_split").value(report.parity_split);
  w.end_object();

  emit(w.str(), args.out_path);
  return kExitPass;
}

int cmd_alpha(const CommonArgs& args) {
  const Uint128 alpha = frankl_alpha(args.k);
  const double upper = frankl_upper_bound(args.k);

  JsonWriter w;
  w.begin_object();
  w.key("k").value(args.k);
  w.key("n_bits").value(4 * args.k);
  w.key("alpha").raw(to_string(alpha));
  w.key("alpha_upper_bound").value(upper);
  if (args.k <= 31) {
    const Uint128 vertices = Uint128{1} << (4 * args.k);
    w.key("vertex_count").raw(to_string(vertices));
    w.key("chi_lower_bound").raw(to_string(chromatic_lower_bound(vertices, alpha)));
  } else {
    w.key("vertex_count").null();
    w.key("chi_lower_bound").null();
  }
  w.end_object();

  emit(w.str(), args.out_path);
  return kExitPass;
}

int cmd_certificate(const CommonArgs& args) {
  CertificateOptions opts;
  opts.use_subgraph = args.subgraph;
  opts.sim_sample = args.sample;
  opts.seed = args.seed;
  opts.jobs = resolve_jobs(args.jobs);
  opts.force_exact = args.force_exact;

  const PseudoTelepathyCertificate cert = pseudo_telepathy_certificate(args.n_bits, opts);
  emit(to_json(cert), args.out_path);
  return cert.verdict ? kExitPass : kExitFail;
}

int cmd_play(const CommonArgs& args) {
  const GraphSpec g(args.n_bits);
  const Vertex a = parse_vertex(args.a_text, g.n_bits);
  const Vertex b = parse_vertex(args.b_text, g.n_bits);
  const Question q(a, b, g.n_bits);
  const RoundResult result = sample_round(q, args.seed);

  JsonWriter w;
  w.begin_object();
  w.key("n_bits").value(q.n_bits);
  w.key("a").value(format_vertex(a, q.n_bits));
  w.key("b").value(format_vertex(b, q.n_bits));
  w.key("question_class").value(to_string(q.question_class()));
  w.key("seed").value(args.seed);
  w.key("prng_algorithm").value(SplitMix64::kAlgorithmName);
  w.key("c_a").value(result.c_a);
  w.key("c_b").value(result.c_b);
  w.key("win").value(result.win);
  w.key("note").value("one round sampled from the computed outcome distribution");
  w.end_object();

  emit(w.str(), args.out_path);
  return result.win ? kExitPass : kExitFail;
}

ClassicalStrategy load_strategy_file(const std::string& path, const GraphSpec& g) {
  std::ifstream file(path);
  if (!file) {
    throw std::invalid_argument("cannot open strategy file: " + path);
  }
  nlohmann::json doc = nlohmann::json::parse(file);
  ClassicalStrategy s;
  s.colours = doc.at("colours").get<int>();
  s.f_a = doc.at("f_a").get<std::vector<int>>();
  s.f_b = doc.at("f_b").get<std::vector<int>>();
  if (s.f_a.size() != g.vertex_count() || s.f_b.size() != g.vertex_count()) {
    throw std::invalid_argument("strategy file tables must have 2^N entries");
  }
  return s;
}

int cmd_classical_eval(const CommonArgs& args) {
  const GraphSpec g(args.n_bits);
  const int colours = args.colours > 0 ? args.colours : g.n_bits;

  ClassicalStrategy strategy;
  if (args.strategy == "constant") {
    if (args.constant_colour < 0 || args.constant_colour >= colours) {
      throw std::invalid_argument("--colour must lie in [0, colours)");
    }
    strategy.colours = colours;
    strategy.f_a.assign(g.vertex_count(), args.constant_colour);
    strategy.f_b = strategy.f_a;
  } else if (args.strategy == "proper-colouring") {
    const auto colouring = find_proper_colouring(all_vertices(g), g, colours);
    if (!colouring) {
      std::cerr << "error: no proper colouring of G_" << g.n_bits << " with " << colours
                << " colours\n";
      return kExitFail;
    }
    strategy.colours = colours;
    strategy.f_a = *colouring;
    strategy.f_b = *colouring;
  } else if (args.strategy == "file") {
    strategy = load_strategy_file(args.strategy_file, g);
  } else {
    throw std::invalid_argument("unknown strategy: " + args.strategy);
  }

  const ClassicalEvaluation eval = evaluate_classical(strategy, g.n_bits);
  const Rational rate = eval.win_rate();

  if (args.format == "csv") {
    std::string out = "n_bits,colours,strategy,wins,total,win_rate_num,win_rate_den,win_rate_value\n";
    out += std::to_string(g.n_bits) + ',' + std::to_string(strategy.colours) + ',' + args.strategy +
           ',' + std::to_string(eval.wins) + ',' + std::to_string(eval.total) + ',' +
           std::to_string(rate.num) + ',' + std::to_string(rate.den) + ',' + json_real(rate.value());
    emit(out, args.out_path);
  } else {
    JsonWriter w;
    w.begin_object();
    w.key("n_bits").value(g.n_bits);
    w.key("colours").value(strategy.colours);
    w.key("strategy").value(args.strategy);
    w.key("wins").value(eval.wins);
    w.key("total").value(eval.total);
    w.key("win_rate").begin_object();
    w.key("num").value(rate.num);
    w.key("den").value(rate.den);
    w.end_object();
    w.key("win_rate_value").value(rate.value());
    w.end_object();
    emit(w.str(), args.out_path);
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hadamard graph colouring game: exact protocol simulation, verification and certificates"};
  app.require_subcommand(1);

  CommonArgs args;

  auto add_output = [&](CLI::App* cmd, bool csv_allowed) {
    cmd->add_option("--format", args.format, "Output format")
        ->check(csv_allowed ? CLI::IsMember({"json", "csv"}) : CLI::IsMember({"json"}));
    cmd->add_option("--out", args.out_path, "Write the report to this path instead of stdout");
  };
  auto add_jobs = [&](CLI::App* cmd) {
    cmd->add_option("--jobs", args.jobs, "Worker threads (default: machine parallelism)")
        ->envname("PTLAB_JOBS");
  };

  CLI::App* simulate = app.add_subcommand(
      "simulate", "Run the protocol pipeline for one question and print the outcome grid");
  simulate->add_option("--n", args.n_bits, "Graph order N (multiple of 4)")->required();
  simulate->add_option("--a", args.a_text, "Alice's vertex word (decimal or 0b binary)")->required();
  simulate->add_option("--b", args.b_text, "Bob's vertex word (decimal or 0b binary)")->required();
  add_output(simulate, false);

  CLI::App* verify = app.add_subcommand(
      "verify", "Check the win theorem over promise questions (exact sweep or sampled pipeline)");
  verify->add_option("--n", args.n_bits, "Graph order N (multiple of 4)")->required();
  verify->add_option("--mode", args.mode, "exact (default for N <= 12) or simulated")
      ->check(CLI::IsMember({"exact", "simulated"}));
  verify->add_option("--sample", args.sample, "Questions drawn in simulated mode (default 1000)");
  verify->add_option("--seed", args.seed, "PRNG seed for simulated mode");
  add_jobs(verify);
  add_output(verify, true);

  CLI::App* graph_stats = app.add_subcommand(
      "graph-stats", "BFS component decomposition and degree data for G_N (N <= 16)");
  graph_stats->add_option("--n", args.n_bits, "Graph order N (multiple of 4)")->required();
  graph_stats->add_option("--edges", args.edges_path, "Also export the edge list to this path");
  add_output(graph_stats, false);

  CLI::App* alpha = app.add_subcommand(
      "alpha", "Independence number of G_{4k} via Frankl's formula (k an odd prime power)");
  alpha->add_option("--k", args.k, "k with N = 4k; must be p^q for an odd prime p")->required();
  add_output(alpha, false);

  CLI::App* certificate = app.add_subcommand(
      "certificate", "Pair quantum win verification with a chromatic bound exceeding c = N");
  certificate->add_option("--n", args.n_bits, "Graph order N (multiple of 4)")->required();
  certificate->add_flag("--subgraph", args.subgraph,
                        "Use the induced-subgraph bound (N = 12: 1609 vertices, alpha 134)");
  certificate->add_option("--sample", args.sample,
                          "Questions sampled for the quantum side when N > 12 (default 2000)")
      ->default_val(2000);
  certificate->add_option("--seed", args.seed, "PRNG seed for sampled verification");
  certificate->add_flag("--exact", args.force_exact,
                        "Force the exhaustive exact sweep at N = 16 (~8.4e8 questions)");
  add_jobs(certificate);
  add_output(certificate, false);

  CLI::App* play = app.add_subcommand("play", "Sample a single round for one question");
  play->add_option("--n", args.n_bits, "Graph order N (multiple of 4)")->required();
  play->add_option("--a", args.a_text, "Alice's vertex word")->required();
  play->add_option("--b", args.b_text, "Bob's vertex word")->required();
  play->add_option("--seed", args.seed, "PRNG seed");
  add_output(play, false);

  CLI::App* classical = app.add_subcommand(
      "classical-eval", "Exhaustive win rate of a classical strategy (N <= 12)");
  classical->add_option("--n", args.n_bits, "Graph order N (multiple of 4)")->required();
  classical->add_option("--strategy", args.strategy, "constant | proper-colouring | file")
      ->check(CLI::IsMember({"constant", "proper-colouring", "file"}));
  classical->add_option("--colours", args.colours, "Palette size c (default N)");
  classical->add_option("--colour", args.constant_colour, "Colour used by the constant strategy");
  classical->add_option("--file", args.strategy_file,
                        "Strategy JSON: {\"colours\": c, \"f_a\": [...], \"f_b\": [...]}");
  add_output(classical, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (app.got_subcommand(simulate)) {
      return cmd_simulate(args);
    }
    if (app.got_subcommand(verify)) {
      return cmd_verify(args);
    }
    if (app.got_subcommand(graph_stats)) {
      return cmd_graph_stats(args);
    }
    if (app.got_subcommand(alpha)) {
      return cmd_alpha(args);
    }
    if (app.got_subcommand(certificate)) {
      return cmd_certificate(args);
    }
    if (app.got_subcommand(play)) {
      return cmd_play(args);
    }
    if (app.got_subcommand(classical)) {
      return cmd_classical_eval(args);
    }
  } catch (const ResourceLimitError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitResourceLimit;
  } catch (const std::overflow_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitResourceLimit;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
