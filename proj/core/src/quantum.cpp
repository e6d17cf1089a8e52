#include "ptlab/quantum.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ptlab/jsonio.hpp"

namespace ptlab {

namespace {

void check_dim(int dim, const char* who) {
  if (dim < 1) {
    throw std::invalid_argument(std::string(who) + ": dimension must be positive");
  }
}

std::uint64_t word_limit(int dim) {
  return dim >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << dim);
}

}  // namespace

Amplitude root_of_unity(int dim, long long power) {
  check_dim(dim, "root_of_unity");
  long long p = power % dim;
  if (p < 0) {
    p += dim;
  }
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(p) / static_cast<double>(dim);
  return {std::cos(angle), std::sin(angle)};
}

double QuditState::norm() const {
  double n = 0.0;
  for (const auto& a : amps) {
    n += std::norm(a);
  }
  return std::sqrt(n);
}

double JointState::norm() const {
  double n = 0.0;
  for (const auto& a : amps) {
    n += std::norm(a);
  }
  return std::sqrt(n);
}

double UnitaryMatrix::unitarity_error() const {
  double max_err = 0.0;
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      Amplitude sum{0.0, 0.0};
      for (int k = 0; k < dim; ++k) {
        sum += at(i, k) * std::conj(at(j, k));
      }
      const double expected = (i == j) ? 1.0 : 0.0;
      max_err = std::max(max_err, std::abs(sum - Amplitude{expected, 0.0}));
    }
  }
  return max_err;
}

double ProbabilityGrid::diagonal_sum() const {
  double s = 0.0;
  for (int j = 0; j < dim; ++j) {
    s += at(j, j);
  }
  return s;
}

double ProbabilityGrid::row_sum(int ja) const {
  double s = 0.0;
  for (int jb = 0; jb < dim; ++jb) {
    s += at(ja, jb);
  }
  return s;
}

double ProbabilityGrid::total() const {
  double s = 0.0;
  for (double p : probs) {
    s += p;
  }
  return s;
}

UnitaryMatrix qft_matrix(int dim, bool inverse) {
  check_dim(dim, "qft_matrix");
  UnitaryMatrix u;
  u.dim = dim;
  u.entries.resize(static_cast<std::size_t>(dim) * dim);
  const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
  for (int row = 0; row < dim; ++row) {
    for (int col = 0; col < dim; ++col) {
      Amplitude w = root_of_unity(dim, static_cast<long long>(row) * col);
      if (inverse) {
        w = std::conj(w);
      }
      u.entries[static_cast<std::size_t>(row) * dim + col] = w * scale;
    }
  }
  return u;
}

QuditState uniform_superposition(int dim) {
  check_dim(dim, "uniform_superposition");
  QuditState s;
  s.dim = dim;
  s.amps.assign(static_cast<std::size_t>(dim),
                Amplitude{1.0 / std::sqrt(static_cast<double>(dim)), 0.0});
  return s;
}

QuditState basis_state(int dim, int index) {
  check_dim(dim, "basis_state");
  if (index < 0 || index >= dim) {
    throw std::invalid_argument("basis_state: index out of range");
  }
  QuditState s;
  s.dim = dim;
  s.amps.assign(static_cast<std::size_t>(dim), Amplitude{0.0, 0.0});
  s.amps[static_cast<std::size_t>(index)] = Amplitude{1.0, 0.0};
  return s;
}

QuditState apply_unitary(const UnitaryMatrix& u, const QuditState& state) {
  if (u.dim != state.dim) {
    throw std::invalid_argument("apply_unitary: dimension mismatch");
  }
  QuditState out;
  out.dim = state.dim;
  out.amps.assign(static_cast<std::size_t>(state.dim), Amplitude{0.0, 0.0});
  for (int row = 0; row < u.dim; ++row) {
    Amplitude acc{0.0, 0.0};
    for (int col = 0; col < u.dim; ++col) {
      acc += u.at(row, col) * state.amps[static_cast<std::size_t>(col)];
    }
    out.amps[static_cast<std::size_t>(row)] = acc;
  }
  return out;
}

JointState correlate(const QuditState& alice) {
  check_dim(alice.dim, "correlate");
  JointState joint;
  joint.dim = alice.dim;
  joint.amps.assign(static_cast<std::size_t>(alice.dim) * alice.dim, Amplitude{0.0, 0.0});
  for (int i = 0; i < alice.dim; ++i) {
    joint.amps[static_cast<std::size_t>(i) * alice.dim + i] = alice.amps[static_cast<std::size_t>(i)];
  }
  return joint;
}

JointState apply_phases(const JointState& state, std::uint32_t a, std::uint32_t b) {
  check_dim(state.dim, "apply_phases");
  if (state.dim > 32) {
    throw std::invalid_argument("apply_phases: phase words carry at most 32 bits");
  }
  const std::uint64_t limit = word_limit(state.dim);
  if (a >= limit || b >= limit) {
    throw std::invalid_argument("apply_phases: word does not fit the state dimension");
  }
  JointState out = state;
  for (int i = 0; i < state.dim; ++i) {
    const bool row_flip = (a >> i) & 1u;
    for (int j = 0; j < state.dim; ++j) {
      const bool col_flip = (b >> j) & 1u;
      if (row_flip != col_flip) {
        out.amps[static_cast<std::size_t>(i) * state.dim + j] *= -1.0;
      }
    }
  }
  return out;
}

JointState apply_joint_unitary(const JointState& state, const UnitaryMatrix& alice,
                               const UnitaryMatrix& bob) {
  if (alice.dim != state.dim || bob.dim != state.dim) {
    throw std::invalid_argument("apply_joint_unitary: dimension mismatch");
  }
  const int n = state.dim;
  // Row pass: tmp[p][j] = sum_i alice[p][i] * state[i][j].
  std::vector<Amplitude> tmp(static_cast<std::size_t>(n) * n, Amplitude{0.0, 0.0});
  for (int p = 0; p < n; ++p) {
    for (int i = 0; i < n; ++i) {
      const Amplitude u = alice.at(p, i);
      if (u == Amplitude{0.0, 0.0}) {
        continue;
      }
      for (int j = 0; j < n; ++j) {
        tmp[static_cast<std::size_t>(p) * n + j] += u * state.at(i, j);
      }
    }
  }
  // Column pass: out[p][q] = sum_j bob[q][j] * tmp[p][j].
  JointState out;
  out.dim = n;
  out.amps.assign(static_cast<std::size_t>(n) * n, Amplitude{0.0, 0.0});
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      Amplitude acc{0.0, 0.0};
      for (int j = 0; j < n; ++j) {
        acc += bob.at(q, j) * tmp[static_cast<std::size_t>(p) * n + j];
      }
      out.amps[static_cast<std::size_t>(p) * n + q] = acc;
    }
  }
  return out;
}

JointState apply_final_transforms(const JointState& state) {
  check_dim(state.dim, "apply_final_transforms");
  return apply_joint_unitary(state, qft_matrix(state.dim, false), qft_matrix(state.dim, true));
}

ProbabilityGrid outcome_distribution(const JointState& state) {
  check_dim(state.dim, "outcome_distribution");
  ProbabilityGrid grid;
  grid.dim = state.dim;
  grid.probs.resize(state.amps.size());
  for (std::size_t i = 0; i < state.amps.size(); ++i) {
    grid.probs[i] = std::norm(state.amps[i]);
  }
  return grid;
}

namespace {

std::string amps_to_json(const std::vector<Amplitude>& amps) {
  JsonWriter w;
  w.begin_array();
  for (const auto& a : amps) {
    w.begin_array().value(a.real()).value(a.imag()).end_array();
  }
  w.end_array();
  return w.str();
}

}  // namespace

std::string to_json(const QuditState& state) { return amps_to_json(state.amps); }

std::string to_json(const JointState& state) { return amps_to_json(state.amps); }

}  // namespace ptlab
