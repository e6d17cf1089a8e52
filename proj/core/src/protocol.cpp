#include "ptlab/protocol.hpp"

#include <cmath>
#include <stdexcept>

#include "ptlab/prng.hpp"

namespace ptlab {

const char* to_string(QuestionClass c) {
  switch (c) {
    case QuestionClass::Diagonal: return "diagonal";
    case QuestionClass::Edge: return "edge";
    case QuestionClass::NonPromise: return "non-promise";
  }
  return "";
}

Question::Question(Vertex a_word, Vertex b_word, int n) : a(a_word), b(b_word), n_bits(n) {
  if (n < 1 || n > 32) {
    throw std::invalid_argument("Question: n_bits must be in [1, 32]");
  }
  const std::uint64_t limit = std::uint64_t{1} << n;
  if (a >= limit || b >= limit) {
    throw std::invalid_argument("Question: vertex word does not fit in n_bits");
  }
}

QuestionClass Question::question_class() const {
  const int d = hamming();
  if (d == 0) {
    return QuestionClass::Diagonal;
  }
  if (n_bits % 2 == 0 && d == n_bits / 2) {
    return QuestionClass::Edge;
  }
  return QuestionClass::NonPromise;
}

ProbabilityGrid run_protocol(const Question& q) {
  JointState joint = correlate(uniform_superposition(q.n_bits));
  joint = apply_phases(joint, q.a, q.b);
  joint = apply_final_transforms(joint);
  return outcome_distribution(joint);
}

Amplitude closed_form_amplitude(const Question& q, int j_a, int j_b) {
  if (j_a < 0 || j_a >= q.n_bits || j_b < 0 || j_b >= q.n_bits) {
    throw std::invalid_argument("closed_form_amplitude: outcome index out of range");
  }
  const int n = q.n_bits;
  const int delta = j_a - j_b;
  Amplitude sum{0.0, 0.0};
  for (int i = 0; i < n; ++i) {
    const double sign = (((q.a ^ q.b) >> i) & 1u) ? -1.0 : 1.0;
    sum += sign * root_of_unity(n, static_cast<long long>(i) * delta);
  }
  const double scale = 1.0 / (static_cast<double>(n) * std::sqrt(static_cast<double>(n)));
  return sum * scale;
}

Rational collision_probability_exact(Vertex a, Vertex b, int n_bits) {
  if (n_bits < 1 || n_bits > 32) {
    throw std::invalid_argument("collision_probability_exact: n_bits must be in [1, 32]");
  }
  const std::uint64_t limit = std::uint64_t{1} << n_bits;
  if (a >= limit || b >= limit) {
    throw std::invalid_argument("collision_probability_exact: vertex word does not fit");
  }
  const std::int64_t s = n_bits - 2 * static_cast<std::int64_t>(hamming_distance(a, b));
  const std::uint64_t s2 = static_cast<std::uint64_t>(s * s);
  const std::uint64_t n2 = static_cast<std::uint64_t>(n_bits) * static_cast<std::uint64_t>(n_bits);
  return Rational(s2, n2);
}

RoundResult sample_round(const Question& q, std::uint64_t seed) {
  const ProbabilityGrid grid = run_protocol(q);
  SplitMix64 rng(seed);
  const double u = rng.next_unit();

  const int n = grid.dim;
  int cell = static_cast<int>(grid.probs.size()) - 1;
  double acc = 0.0;
  for (std::size_t i = 0; i < grid.probs.size(); ++i) {
    acc += grid.probs[i];
    if (u < acc) {
      cell = static_cast<int>(i);
      break;
    }
  }

  RoundResult result;
  result.c_a = cell / n;
  result.c_b = cell % n;
  result.win = (q.a == q.b) ? (result.c_a == result.c_b) : (result.c_a != result.c_b);
  return result;
}

}  // namespace ptlab
