#pragma once

#include <cstdint>

#include "ptlab/hadamard_graph.hpp"
#include "ptlab/quantum.hpp"
#include "ptlab/rational.hpp"

namespace ptlab {

enum class QuestionClass {
  Diagonal,    // a == b
  Edge,        // d_H(a, b) == N/2
  NonPromise,  // anything else
};

const char* to_string(QuestionClass c);

/// One verifier question (a to Alice, b to Bob). The constructor validates
/// ranges only; non-promise pairs are deliberately accepted so the
/// (1 - 2*d_H/N)^2 collision law stays testable. The promise is enforced by
/// the game harness.
struct Question {
  Vertex a = 0;
  Vertex b = 0;
  int n_bits = 0;

  Question(Vertex a_word, Vertex b_word, int n);

  int hamming() const { return hamming_distance(a, b); }
  QuestionClass question_class() const;
  bool satisfies_promise() const { return question_class() != QuestionClass::NonPromise; }
};

/// Measured colours of one round and the verifier's accept flag.
struct RoundResult {
  int c_a = 0;
  int c_b = 0;
  bool win = false;
};

/// Full pipeline: uniform superposition -> correlate -> phase shifts ->
/// QFT tensor inverse-QFT -> measurement distribution.
ProbabilityGrid run_protocol(const Question& q);

/// (1/N^{3/2}) * sum_i omega^{i (j_a - j_b)} (-1)^{a_i xor b_i}: the final
/// joint amplitude without running the pipeline.
Amplitude closed_form_amplitude(const Question& q, int j_a, int j_b);

/// Pr[c_A == c_B] as the exact rational S^2/N^2 with S = N - 2*d_H(a, b).
Rational collision_probability_exact(Vertex a, Vertex b, int n_bits);

/// Draws one (c_A, c_B) outcome from run_protocol(q) with a SplitMix64
/// stream; identical (question, seed) pairs give identical results.
RoundResult sample_round(const Question& q, std::uint64_t seed);

}  // namespace ptlab
