#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ptlab {

/// An N-bit word naming a graph vertex. Bit i is the coefficient of 2^i
/// (least-significant bit is i = 0), which caps N at 32.
using Vertex = std::uint32_t;

using Uint128 = unsigned __int128;

std::string to_string(Uint128 value);

/// Exact binomial coefficient in a 128-bit accumulator; throws
/// std::overflow_error if an intermediate product would wrap.
Uint128 binomial_u128(unsigned n, unsigned k);

/// Same, narrowed to 64 bits (throws if the value does not fit).
std::uint64_t binomial_u64(unsigned n, unsigned k);

/// The Hadamard graph G_N on vertex set {0,1}^N with edges between words at
/// Hamming distance exactly N/2; N must be a positive multiple of 4.
struct GraphSpec {
  int n_bits;

  explicit GraphSpec(int n);

  std::uint64_t vertex_count() const { return std::uint64_t{1} << n_bits; }
  /// Neighbours per vertex: C(N, N/2).
  std::uint64_t degree() const;
  Vertex word_mask() const;
};

struct ComponentReport {
  int n_bits = 0;
  int component_count = 0;
  std::vector<std::uint64_t> component_sizes;
  /// Whether the components are exactly the even/odd Hamming-weight classes.
  bool parity_split = false;
};

int hamming_distance(Vertex u, Vertex v);

bool is_edge(Vertex u, Vertex v, const GraphSpec& g);

/// All words of weight N/2 in ascending numeric order; u ^ mask enumerates
/// u's neighbours, so the masks double as the XOR-difference table.
std::vector<Vertex> half_weight_masks(const GraphSpec& g);

/// Streams the C(N, N/2) neighbours of u in ascending order of (u ^ v)
/// without materializing them (works up to N = 32).
void for_each_neighbor(Vertex u, const GraphSpec& g, const std::function<void(Vertex)>& fn);

/// Materialized neighbour list (N <= 24; use for_each_neighbor beyond).
std::vector<Vertex> neighbors(Vertex u, const GraphSpec& g);

/// BFS decomposition over all 2^N vertices (N <= 16; N = 16 is a slow path).
ComponentReport connected_components(const GraphSpec& g);

/// True iff k = p^q for an odd prime p and q >= 1.
bool is_odd_prime_power(std::uint64_t k);

/// Frankl's independence number of G_{4k}: 4 * sum_{i<k} C(4k-1, i), exact.
/// The formula's hypothesis k = p^q (odd prime p) is enforced as a
/// precondition; violations throw std::domain_error.
Uint128 frankl_alpha(std::uint64_t k);

/// 4^{4k} / 3^{3k}, evaluated in log space. Strict upper bound on
/// frankl_alpha(k) wherever the formula applies.
double frankl_upper_bound(std::uint64_t k);

/// ceil(vertex_count / alpha): colours are forced once independent sets are
/// this small.
Uint128 chromatic_lower_bound(Uint128 vertex_count, Uint128 alpha);

/// Smallest c <= max_colours admitting a proper colouring of the induced
/// subgraph on `vertices`, or nullopt when every c <= max_colours fails.
/// Exhaustive backtracking with saturation-ordered branching; at most 64
/// vertices.
std::optional<int> exact_chromatic_number(const std::vector<Vertex>& vertices,
                                          const GraphSpec& g, int max_colours);

/// A proper colouring with exactly `colours` colours (indices aligned with
/// the input order), or nullopt if none exists.
std::optional<std::vector<int>> find_proper_colouring(const std::vector<Vertex>& vertices,
                                                      const GraphSpec& g, int colours);

/// N pairwise-adjacent vertices built from the order-N Sylvester Hadamard
/// matrix (rows mapped +1 -> 0, -1 -> 1). N must be a power of two; the
/// clique property is re-verified before returning.
std::vector<Vertex> sylvester_clique(const GraphSpec& g);

/// 0 .. 2^N - 1 (N <= 16).
std::vector<Vertex> all_vertices(const GraphSpec& g);

std::string to_json(const ComponentReport& report);

/// Edge list, one "u v" pair of decimal words per line, u < v, sorted
/// ascending by (u, v). N <= 16 (the N = 16 list is ~420M lines).
void write_edge_list(std::ostream& out, const GraphSpec& g);

}  // namespace ptlab
