#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ptlab/protocol.hpp"
#include "ptlab/rational.hpp"

namespace ptlab {

enum class VerifyMode {
  ExactFastPath,   // integer rational check of every enumerated question
  FullSimulation,  // statevector pipeline on a seeded sample
};

const char* to_string(VerifyMode m);

struct VerifyOptions {
  VerifyMode mode = VerifyMode::ExactFastPath;
  std::uint64_t sim_sample = 1000;  // questions drawn in simulation mode
  std::uint64_t seed = 0;
  int jobs = 1;  // worker threads; aggregates are independent of the split
};

struct VerificationReport {
  int n_bits = 0;
  VerifyMode mode = VerifyMode::ExactFastPath;
  std::uint64_t questions_checked = 0;
  std::uint64_t failures = 0;
  /// Largest |Pr[c_A = c_B] - expected| seen.
  double max_diagonal_leak = 0.0;
  std::uint64_t seed = 0;
  std::string prng_algorithm;  // empty on the exact path (nothing sampled)
  double wall_time_s = 0.0;

  bool passed() const { return failures == 0; }
};

/// 2^N diagonal questions plus 2^N * C(N, N/2) ordered edge questions.
std::uint64_t question_count(int n_bits);

/// Streams every promise question: all (a, a) ascending, then ordered edge
/// pairs (a, a ^ mask), a-major with masks ascending. N <= 16.
void for_each_question(int n_bits, const std::function<void(Vertex, Vertex)>& fn);

/// Materialized question list for small N (tests).
std::vector<Question> enumerate_questions(int n_bits);

/// Checks the win theorem over questions: the exact path evaluates the
/// rational collision probability of every enumerated question against its
/// promise class (zero tolerance); the simulation path runs the full
/// pipeline on a seeded sample at kStateTolerance.
VerificationReport verify_exhaustive(int n_bits, const VerifyOptions& opts);

/// Deterministic shared-information strategy: colour tables indexed by
/// vertex word. Must be total on {0,1}^N with entries in [0, colours).
struct ClassicalStrategy {
  std::vector<int> f_a;
  std::vector<int> f_b;
  int colours = 0;
};

struct ClassicalEvaluation {
  std::uint64_t wins = 0;
  std::uint64_t total = 0;

  Rational win_rate() const { return Rational(wins, total); }
};

/// Win rate of a classical strategy over every promise question (N <= 12).
ClassicalEvaluation evaluate_classical(const ClassicalStrategy& strategy, int n_bits);

enum class ChiEvidence {
  ExactChromatic,      // chromatic number computed by exhaustive search
  SylvesterClique,     // clique constructed and verified in-process
  FranklAlpha,         // Frankl's alpha formula + |V|/alpha bound
  ExternalLiterature,  // cited fact, not recomputed here
};

const char* to_string(ChiEvidence e);

struct CertificateOptions {
  /// For N = 12: use the 1609-vertex induced-subgraph bound (1609, 134)
  /// instead of the whole graph.
  bool use_subgraph = false;
  std::uint64_t sim_sample = 2000;
  std::uint64_t seed = 0;
  int jobs = 1;
  /// Run the exhaustive exact sweep even at N = 16 (~8.4e8 questions).
  bool force_exact = false;
};

/// Paired evidence that the colouring game on G_N with c = N is (or is not)
/// winnable quantumly but not classically: quantum side from verification,
/// classical side from a chromatic lower bound exceeding c.
struct PseudoTelepathyCertificate {
  int n_bits = 0;
  int c = 0;
  bool quantum_win = false;
  VerificationReport verification;
  std::uint64_t chi_lower_bound = 0;
  std::optional<std::uint64_t> alpha_used;
  std::optional<std::uint64_t> subgraph_size;
  ChiEvidence chi_evidence = ChiEvidence::ExternalLiterature;
  std::optional<std::string> external_citation;
  std::optional<std::string> note;
  bool verdict = false;  // quantum_win && chi_lower_bound > c
};

PseudoTelepathyCertificate pseudo_telepathy_certificate(int n_bits,
                                                        const CertificateOptions& opts);

std::string to_json(const VerificationReport& report);
/// Header plus one data row, fields in JSON order.
std::string to_csv(const VerificationReport& report);
std::string to_json(const PseudoTelepathyCertificate& cert);

}  // namespace ptlab
