#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace ptlab {

using Amplitude = std::complex<double>;

/// One tolerance for every floating-point state check in the library.
inline constexpr double kStateTolerance = 1e-9;

/// omega^power for omega = exp(2*pi*i/dim); the exponent is reduced mod dim
/// before any trigonometry so large powers stay exact.
Amplitude root_of_unity(int dim, long long power);

/// Pure state of one dimension-N system. amps[i] = <i|psi>.
struct QuditState {
  int dim = 0;
  std::vector<Amplitude> amps;

  double norm() const;
};

/// Two-qudit state; amps[i*dim + j] = amplitude of |i>|j>, first index Alice.
struct JointState {
  int dim = 0;
  std::vector<Amplitude> amps;

  Amplitude at(int i, int j) const {
    return amps[static_cast<std::size_t>(i) * static_cast<std::size_t>(dim) + static_cast<std::size_t>(j)];
  }
  double norm() const;
};

/// Dense dim x dim unitary, row-major.
struct UnitaryMatrix {
  int dim = 0;
  std::vector<Amplitude> entries;

  Amplitude at(int row, int col) const {
    return entries[static_cast<std::size_t>(row) * static_cast<std::size_t>(dim) + static_cast<std::size_t>(col)];
  }
  /// Max entrywise deviation of U * U^dagger from the identity.
  double unitarity_error() const;
};

/// Computational-basis outcome probabilities; entry (j_a, j_b) row-major.
struct ProbabilityGrid {
  int dim = 0;
  std::vector<double> probs;

  double at(int ja, int jb) const {
    return probs[static_cast<std::size_t>(ja) * static_cast<std::size_t>(dim) + static_cast<std::size_t>(jb)];
  }
  /// Pr[c_A == c_B].
  double diagonal_sum() const;
  /// Alice's marginal probability of outcome ja.
  double row_sum(int ja) const;
  double total() const;
};

/// Fourier transform of order dim: entry (j, i) = omega^(i*j)/sqrt(dim),
/// conjugated when inverse is set. Defined for any dim >= 1.
UnitaryMatrix qft_matrix(int dim, bool inverse = false);

/// All amplitudes exactly 1/sqrt(dim).
QuditState uniform_superposition(int dim);

QuditState basis_state(int dim, int index);

QuditState apply_unitary(const UnitaryMatrix& u, const QuditState& state);

/// Copies Alice's amplitudes onto the diagonal: |i>|0> -> |i>|i|; the
/// qudit-level form of sharing the entangled pair with controlled-NOTs.
JointState correlate(const QuditState& alice);

/// Multiplies row i by (-1)^(bit i of a) and column j by (-1)^(bit j of b).
/// Bit i is the coefficient of 2^i. Requires dim <= 32 and words < 2^dim.
JointState apply_phases(const JointState& state, std::uint32_t a, std::uint32_t b);

/// (U_alice tensor U_bob): rows through alice's matrix, columns through
/// bob's; row transform applied first.
JointState apply_joint_unitary(const JointState& state, const UnitaryMatrix& alice,
                               const UnitaryMatrix& bob);

/// QFT on Alice's index, inverse QFT on Bob's.
JointState apply_final_transforms(const JointState& state);

/// Squared moduli of every joint amplitude.
ProbabilityGrid outcome_distribution(const JointState& state);

/// Debug dumps: JSON array of [re, im] pairs in row-major order.
std::string to_json(const QuditState& state);
std::string to_json(const JointState& state);

}  // namespace ptlab
