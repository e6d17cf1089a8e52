#include "ptlab/game_harness.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "ptlab/errors.hpp"
#include "ptlab/jsonio.hpp"
#include "ptlab/prng.hpp"

namespace ptlab {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

/// Pascal triangle up to C(32, k), all values well inside 64 bits.
const std::array<std::array<std::uint64_t, 33>, 33>& binom_table() {
  static const auto table = [] {
    std::array<std::array<std::uint64_t, 33>, 33> t{};
    for (int n = 0; n <= 32; ++n) {
      t[n][0] = 1;
      for (int k = 1; k <= n; ++k) {
        t[n][k] = t[n - 1][k - 1] + (k <= n - 1 ? t[n - 1][k] : 0);
      }
    }
    return t;
  }();
  return table;
}

/// idx-th word of weight n/2, in ascending numeric order (combinadic).
Vertex unrank_half_mask(int n, std::uint64_t idx) {
  int k = n / 2;
  Vertex mask = 0;
  for (int pos = n - 1; pos >= 0 && k > 0; --pos) {
    const std::uint64_t below = binom_table()[pos][k];
    if (idx >= below) {
      mask |= Vertex{1} << pos;
      idx -= below;
      --k;
    }
  }
  return mask;
}

struct Partial {
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
  double leak = 0.0;
};

/// Splits [0, total) into contiguous chunks, one worker per chunk, and
/// reduces the partials in chunk order. Failure counts sum and the leak is a
/// max-reduction, so the aggregate does not depend on the split.
template <typename Body>
Partial run_partitioned(std::uint64_t total, int jobs, const Body& body) {
  const std::uint64_t workers =
      std::max<std::uint64_t>(1, std::min<std::uint64_t>(static_cast<std::uint64_t>(std::max(1, jobs)), total));
  if (workers == 1) {
    Partial p;
    body(0, total, p);
    return p;
  }
  std::vector<Partial> parts(workers);
  std::vector<std::thread> threads;
  threads.reserve(workers);
  const std::uint64_t chunk = (total + workers - 1) / workers;
  for (std::uint64_t w = 0; w < workers; ++w) {
    const std::uint64_t lo = w * chunk;
    const std::uint64_t hi = std::min(total, lo + chunk);
    if (lo >= hi) {
      break;
    }
    threads.emplace_back([&body, lo, hi, &part = parts[w]] { body(lo, hi, part); });
  }
  for (auto& t : threads) {
    t.join();
  }
  Partial out;
  for (const Partial& p : parts) {
    out.checked += p.checked;
    out.failures += p.failures;
    out.leak = std::max(out.leak, p.leak);
  }
  return out;
}

}  // namespace

const char* to_string(VerifyMode m) {
  switch (m) {
    case VerifyMode::ExactFastPath: return "exact-fast-path";
    case VerifyMode::FullSimulation: return "full-simulation";
  }
  return "";
}

const char* to_string(ChiEvidence e) {
  switch (e) {
    case ChiEvidence::ExactChromatic: return "exact-chromatic";
    case ChiEvidence::SylvesterClique: return "sylvester-clique";
    case ChiEvidence::FranklAlpha: return "frankl-alpha";
    case ChiEvidence::ExternalLiterature: return "external-literature";
  }
  return "";
}

std::uint64_t question_count(int n_bits) {
  const GraphSpec g(n_bits);
  return g.vertex_count() * (1 + g.degree());
}

void for_each_question(int n_bits, const std::function<void(Vertex, Vertex)>& fn) {
  const GraphSpec g(n_bits);
  if (n_bits > 16) {
    throw ResourceLimitError("for_each_question: enumeration capped at N = 16");
  }
  const std::uint64_t vertex_count = g.vertex_count();
  for (std::uint64_t a = 0; a < vertex_count; ++a) {
    fn(static_cast<Vertex>(a), static_cast<Vertex>(a));
  }
  const std::vector<Vertex> masks = half_weight_masks(g);
  for (std::uint64_t a = 0; a < vertex_count; ++a) {
    for (const Vertex m : masks) {
      fn(static_cast<Vertex>(a), static_cast<Vertex>(a) ^ m);
    }
  }
}

std::vector<Question> enumerate_questions(int n_bits) {
  if (n_bits > 12) {
    throw ResourceLimitError("enumerate_questions: materialized list capped at N = 12");
  }
  std::vector<Question> out;
  out.reserve(question_count(n_bits));
  for_each_question(n_bits, [&](Vertex a, Vertex b) { out.emplace_back(a, b, n_bits); });
  return out;
}

VerificationReport verify_exhaustive(int n_bits, const VerifyOptions& opts) {
  const GraphSpec g(n_bits);
  const auto start = Clock::now();

  VerificationReport report;
  report.n_bits = n_bits;
  report.mode = opts.mode;
  report.seed = opts.seed;

  Partial result;
  if (opts.mode == VerifyMode::ExactFastPath) {
    if (n_bits > 16) {
      throw ResourceLimitError("verify_exhaustive: exact sweep capped at N = 16; use simulation");
    }
    const std::vector<Vertex> masks = half_weight_masks(g);
    const Rational certain(1, 1);
    const Rational never(0, 1);
    result = run_partitioned(
        g.vertex_count(), opts.jobs, [&](std::uint64_t lo, std::uint64_t hi, Partial& p) {
          for (std::uint64_t word = lo; word < hi; ++word) {
            const Vertex a = static_cast<Vertex>(word);
            const Rational diag = collision_probability_exact(a, a, n_bits);
            ++p.checked;
            if (diag != certain) {
              ++p.failures;
              p.leak = std::max(p.leak, std::abs(diag.value() - 1.0));
            }
            for (const Vertex m : masks) {
              const Rational edge = collision_probability_exact(a, a ^ m, n_bits);
              ++p.checked;
              if (edge != never) {
                ++p.failures;
                p.leak = std::max(p.leak, edge.value());
              }
            }
          }
        });
  } else {
    if (opts.sim_sample == 0) {
      throw std::invalid_argument("verify_exhaustive: simulation needs a positive sample size");
    }
    report.prng_algorithm = SplitMix64::kAlgorithmName;

    // Draw questions uniformly by enumeration index: the first 2^N indices
    // are the diagonal pairs, the rest are ordered edge pairs a-major.
    const std::uint64_t diag_count = g.vertex_count();
    const std::uint64_t degree = g.degree();
    const std::uint64_t total = question_count(n_bits);
    SplitMix64 rng(opts.seed);
    std::vector<Question> sample;
    sample.reserve(opts.sim_sample);
    for (std::uint64_t s = 0; s < opts.sim_sample; ++s) {
      const std::uint64_t idx = rng.next_below(total);
      if (idx < diag_count) {
        sample.emplace_back(static_cast<Vertex>(idx), static_cast<Vertex>(idx), n_bits);
      } else {
        const std::uint64_t e = idx - diag_count;
        const Vertex a = static_cast<Vertex>(e / degree);
        const Vertex b = a ^ unrank_half_mask(n_bits, e % degree);
        sample.emplace_back(a, b, n_bits);
      }
    }

    result = run_partitioned(
        sample.size(), opts.jobs, [&](std::uint64_t lo, std::uint64_t hi, Partial& p) {
          for (std::uint64_t i = lo; i < hi; ++i) {
            const Question& q = sample[i];
            const double collision = run_protocol(q).diagonal_sum();
            // Promise questions have exact expectation 1 (diagonal) or 0
            // (edge); taking it from the rational path checks both routes.
            const double expected = collision_probability_exact(q.a, q.b, q.n_bits).value();
            const double leak = std::abs(collision - expected);
            ++p.checked;
            p.leak = std::max(p.leak, leak);
            if (leak > kStateTolerance) {
              ++p.failures;
            }
          }
        });
  }

  report.questions_checked = result.checked;
  report.failures = result.failures;
  report.max_diagonal_leak = result.leak;
  report.wall_time_s = seconds_since(start);
  return report;
}

ClassicalEvaluation evaluate_classical(const ClassicalStrategy& strategy, int n_bits) {
  const GraphSpec g(n_bits);
  if (n_bits > 12) {
    throw ResourceLimitError("evaluate_classical: exhaustive evaluation capped at N = 12");
  }
  const std::size_t vertex_count = g.vertex_count();
  if (strategy.colours < 1 || strategy.f_a.size() != vertex_count ||
      strategy.f_b.size() != vertex_count) {
    throw std::invalid_argument("evaluate_classical: strategy must be total on {0,1}^N");
  }
  for (std::size_t v = 0; v < vertex_count; ++v) {
    if (strategy.f_a[v] < 0 || strategy.f_a[v] >= strategy.colours || strategy.f_b[v] < 0 ||
        strategy.f_b[v] >= strategy.colours) {
      throw std::invalid_argument("evaluate_classical: colour out of range");
    }
  }

  const std::vector<Vertex> masks = half_weight_masks(g);
  ClassicalEvaluation eval;
  for (std::size_t a = 0; a < vertex_count; ++a) {
    if (strategy.f_a[a] == strategy.f_b[a]) {
      ++eval.wins;
    }
    for (const Vertex m : masks) {
      const std::size_t b = a ^ m;
      if (strategy.f_a[a] != strategy.f_b[b]) {
        ++eval.wins;
      }
    }
  }
  eval.total = question_count(n_bits);
  return eval;
}

PseudoTelepathyCertificate pseudo_telepathy_certificate(int n_bits,
                                                        const CertificateOptions& opts) {
  const GraphSpec g(n_bits);
  if (opts.use_subgraph && n_bits != 12) {
    throw std::invalid_argument(
        "pseudo_telepathy_certificate: the induced-subgraph bound applies to N = 12");
  }

  PseudoTelepathyCertificate cert;
  cert.n_bits = n_bits;
  cert.c = n_bits;

  VerifyOptions verify;
  verify.seed = opts.seed;
  verify.jobs = opts.jobs;
  verify.sim_sample = opts.sim_sample;
  verify.mode = (n_bits <= 12 || (n_bits == 16 && opts.force_exact))
                    ? VerifyMode::ExactFastPath
                    : VerifyMode::FullSimulation;
  cert.verification = verify_exhaustive(n_bits, verify);
  cert.quantum_win = cert.verification.passed();

  const std::uint64_t k = static_cast<std::uint64_t>(n_bits) / 4;
  if (n_bits == 4) {
    const auto chi = exact_chromatic_number(all_vertices(g), g, n_bits + 1);
    cert.chi_lower_bound = static_cast<std::uint64_t>(chi.value());
    cert.chi_evidence = ChiEvidence::ExactChromatic;
    cert.note = "chromatic number computed exactly; no colour gap at c = N";
  } else if (n_bits == 8) {
    cert.chi_lower_bound = sylvester_clique(g).size();
    cert.chi_evidence = ChiEvidence::SylvesterClique;
    cert.note = "Sylvester clique certifies chi >= 8; chi(G_8) = 8 exactly (Ito), so no gap at c = 8";
  } else if (is_odd_prime_power(k)) {
    const Uint128 alpha = frankl_alpha(k);
    if (opts.use_subgraph) {
      // One component carries half the independence number; any induced
      // subgraph on c * (alpha/2) + 1 of its vertices forces chi > c.
      const std::uint64_t half_alpha = static_cast<std::uint64_t>(alpha / 2);
      const std::uint64_t subgraph = static_cast<std::uint64_t>(n_bits) * half_alpha + 1;
      cert.alpha_used = half_alpha;
      cert.subgraph_size = subgraph;
      cert.chi_lower_bound = static_cast<std::uint64_t>(chromatic_lower_bound(subgraph, half_alpha));
      cert.note = "holds for any induced subgraph of one connected component with this many vertices";
    } else {
      cert.alpha_used = static_cast<std::uint64_t>(alpha);
      cert.chi_lower_bound =
          static_cast<std::uint64_t>(chromatic_lower_bound(Uint128{1} << n_bits, alpha));
    }
    cert.chi_evidence = ChiEvidence::FranklAlpha;
  } else {
    cert.chi_lower_bound = static_cast<std::uint64_t>(n_bits) + 1;
    cert.chi_evidence = ChiEvidence::ExternalLiterature;
    cert.external_citation = "Godsil & Newman: chi(G_{4m}) > 4m for all 4m > 8";
  }

  cert.verdict = cert.quantum_win && cert.chi_lower_bound > static_cast<std::uint64_t>(cert.c);
  return cert;
}

namespace {

void write_report_fields(JsonWriter& w, const VerificationReport& report) {
  w.key("n_bits").value(report.n_bits);
  w.key("mode").value(to_string(report.mode));
  w.key("questions_checked").value(report.questions_checked);
  w.key("failures").value(report.failures);
  w.key("max_diagonal_leak").value(report.max_diagonal_leak);
  w.key("seed").value(report.seed);
  if (report.prng_algorithm.empty()) {
    w.key("prng_algorithm").null();
  } else {
    w.key("prng_algorithm").value(report.prng_algorithm);
  }
  w.key("wall_time_s").value(report.wall_time_s);
}

}  // namespace

std::string to_json(const VerificationReport& report) {
  JsonWriter w;
  w.begin_object();
  write_report_fields(w, report);
  w.end_object();
  return w.str();
}

std::string to_csv(const VerificationReport& report) {
  std::string out = "n_bits,mode,questions_checked,failures,max_diagonal_leak,seed,prng_algorithm,wall_time_s\n";
  out += std::to_string(report.n_bits);
  out += ',';
  out += to_string(report.mode);
  out += ',';
  out += std::to_string(report.questions_checked);
  out += ',';
  out += std::to_string(report.failures);
  out += ',';
  out += json_real(report.max_diagonal_leak);
  out += ',';
  out += std::to_string(report.seed);
  out += ',';
  out += report.prng_algorithm;
  out += ',';
  out += json_real(report.wall_time_s);
  out += '\n';
  return out;
}

std::string to_json(const PseudoTelepathyCertificate& cert) {
  JsonWriter w;
  w.begin_object();
  w.key("n_bits").value(cert.n_bits);
  w.key("c").value(cert.c);
  w.key("quantum_win").value(cert.quantum_win);
  w.key("quantum_evidence")
      .value(cert.verification.mode == VerifyMode::ExactFastPath ? "exhaustive-exact" : "sampled");
  w.key("chi_lower_bound").value(cert.chi_lower_bound);
  if (cert.alpha_used) {
    w.key("alpha_used").value(*cert.alpha_used);
  } else {
    w.key("alpha_used").null();
  }
  if (cert.subgraph_size) {
    w.key("subgraph_size").value(*cert.subgraph_size);
  } else {
    w.key("subgraph_size").null();
  }
  w.key("chi_evidence").value(to_string(cert.chi_evidence));
  if (cert.external_citation) {
    w.key("external_citation").value(*cert.external_citation);
  } else {
    w.key("external_citation").null();
  }
  if (cert.note) {
    w.key("note").value(*cert.note);
  } else {
    w.key("note").null();
  }
  w.key("verdict").value(cert.verdict);
  w.key("seed").value(cert.verification.seed);
  if (cert.verification.prng_algorithm.empty()) {
    w.key("prng_algorithm").null();
  } else {
    w.key("prng_algorithm").value(cert.verification.prng_algorithm);
  }
  w.key("wall_time_s").value(cert.verification.wall_time_s);
  w.key("verification").begin_object();
  write_report_fields(w, cert.verification);
  w.end_object();
  w.end_object();
  return w.str();
}

}  // namespace ptlab
