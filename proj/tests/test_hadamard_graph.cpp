#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "ptlab/errors.hpp"
#include "ptlab/hadamard_graph.hpp"
#include "ptlab/prng.hpp"

using namespace ptlab;

namespace {

// Independent chromatic-number oracle: try every assignment of c colours to
// the m vertices (odometer), smallest feasible c wins. Usable for m <= 8.
int brute_force_chromatic(const std::vector<Vertex>& vertices, const GraphSpec& g, int cap) {
  const int m = static_cast<int>(vertices.size());
  for (int c = 1; c <= cap; ++c) {
    std::vector<int> assign(m, 0);
    for (;;) {
      bool proper = true;
      for (int i = 0; i < m && proper; ++i) {
        for (int j = i + 1; j < m && proper; ++j) {
          if (assign[i] == assign[j] && is_edge(vertices[i], vertices[j], g)) {
            proper = false;
          }
        }
      }
      if (proper) {
        return c;
      }
      int pos = m - 1;
      while (pos >= 0 && assign[pos] == c - 1) {
        assign[pos--] = 0;
      }
      if (pos < 0) {
        break;
      }
      ++assign[pos];
    }
  }
  return cap + 1;
}

// Independent independence-number oracle: scan all subsets (m <= 16).
int brute_force_alpha(const std::vector<Vertex>& vertices, const GraphSpec& g) {
  const int m = static_cast<int>(vertices.size());
  std::vector<std::uint32_t> adj(m, 0);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (i != j && is_edge(vertices[i], vertices[j], g)) {
        adj[i] |= 1u << j;
      }
    }
  }
  int best = 0;
  for (std::uint32_t subset = 0; subset < (1u << m); ++subset) {
    bool independent = true;
    for (std::uint32_t rest = subset; rest != 0 && independent; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      independent = (adj[v] & subset) == 0;
    }
    if (independent) {
      best = std::max(best, std::popcount(subset));
    }
  }
  return best;
}

std::vector<Vertex> random_subset(const GraphSpec& g, int size, SplitMix64& rng) {
  std::vector<Vertex> out;
  while (static_cast<int>(out.size()) < size) {
    const Vertex v = static_cast<Vertex>(rng.next_below(g.vertex_count()));
    if (std::find(out.begin(), out.end(), v) == out.end()) {
      out.push_back(v);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("GraphSpec: only multiples of 4 up to 32") {
  CHECK_THROWS_AS(GraphSpec(0), std::invalid_argument);
  CHECK_THROWS_AS(GraphSpec(10), std::invalid_argument);
  CHECK_THROWS_AS(GraphSpec(36), std::invalid_argument);
  CHECK_THROWS_AS(GraphSpec(-4), std::invalid_argument);
  for (int n = 4; n <= 32; n += 4) {
    CHECK(GraphSpec(n).n_bits == n);
  }
  CHECK(GraphSpec(12).vertex_count() == 4096);
  CHECK(GraphSpec(12).degree() == 924);
  CHECK(GraphSpec(32).word_mask() == 0xFFFFFFFFu);
}

TEST_CASE("is_edge: words at distance exactly N/2") {
  const GraphSpec g4(4);
  CHECK(is_edge(0b0000u, 0b0011u, g4));
  CHECK_FALSE(is_edge(0b0101u, 0b0101u, g4));
  const GraphSpec g12(12);
  CHECK(is_edge(0u, 0b000000111111u, g12));
  CHECK_FALSE(is_edge(0u, 0b000000011111u, g12));
}

TEST_CASE("neighbors: vertex 0 of G_4 in ascending XOR order") {
  const GraphSpec g(4);
  const std::vector<Vertex> expected = {3, 5, 6, 9, 10, 12};
  CHECK(neighbors(0, g) == expected);
}

TEST_CASE("neighbors: counts match the binomial degree") {
  const GraphSpec g(12);
  CHECK(neighbors(0, g).size() == 924);
  CHECK(neighbors(0xABCu, g).size() == 924);
}

TEST_CASE("neighbour relation is symmetric") {
  const GraphSpec g(8);
  SplitMix64 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const Vertex u = static_cast<Vertex>(rng.next_below(256));
    const Vertex v = static_cast<Vertex>(rng.next_below(256));
    CHECK(is_edge(u, v, g) == is_edge(v, u, g));
  }
  const auto nb = neighbors(0b10110001u, g);
  for (const Vertex v : nb) {
    const auto back = neighbors(v, g);
    CHECK(std::find(back.begin(), back.end(), 0b10110001u) != back.end());
  }
}

TEST_CASE("edge regularity: every vertex has exactly C(N, N/2) neighbours") {
  for (int n : {4, 8}) {
    const GraphSpec g(n);
    const std::uint64_t degree = g.degree();
    for (std::uint64_t u = 0; u < g.vertex_count(); ++u) {
      std::uint64_t count = 0;
      for_each_neighbor(static_cast<Vertex>(u), g, [&](Vertex) { ++count; });
      REQUIRE(count == degree);
    }
  }
}

TEST_CASE("edges preserve Hamming-weight parity") {
  const GraphSpec g(12);
  SplitMix64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const Vertex u = static_cast<Vertex>(rng.next_below(4096));
    const Vertex v = static_cast<Vertex>(rng.next_below(4096));
    if (is_edge(u, v, g)) {
      CHECK((std::popcount(u) & 1) == (std::popcount(v) & 1));
    }
  }
}

TEST_CASE("half_weight_masks: ascending words of weight N/2") {
  const GraphSpec g(8);
  const auto masks = half_weight_masks(g);
  REQUIRE(masks.size() == 70);
  for (std::size_t i = 0; i < masks.size(); ++i) {
    CHECK(std::popcount(masks[i]) == 4);
    if (i > 0) {
      CHECK(masks[i - 1] < masks[i]);
    }
  }
}

TEST_CASE("connected_components: two half-size parity components") {
  for (int n : {4, 8}) {
    const ComponentReport report = connected_components(GraphSpec(n));
    CAPTURE(n);
    CHECK(report.component_count == 2);
    REQUIRE(report.component_sizes.size() == 2);
    CHECK(report.component_sizes[0] == (std::uint64_t{1} << (n - 1)));
    CHECK(report.component_sizes[1] == (std::uint64_t{1} << (n - 1)));
    CHECK(report.parity_split);
  }
}

TEST_CASE("connected_components: BFS capped at N = 16") {
  CHECK_THROWS_AS(connected_components(GraphSpec(20)), ResourceLimitError);
}

TEST_CASE("binomials agree with an additive Pascal triangle") {
  std::vector<std::vector<Uint128>> pascal(40);
  for (unsigned n = 0; n < 40; ++n) {
    pascal[n].assign(n + 1, 1);
    for (unsigned k = 1; k < n; ++k) {
      pascal[n][k] = pascal[n - 1][k - 1] + pascal[n - 1][k];
    }
  }
  for (unsigned n = 0; n < 40; ++n) {
    for (unsigned k = 0; k <= n; ++k) {
      CHECK(binomial_u128(n, k) == pascal[n][k]);
    }
  }
  CHECK(binomial_u64(16, 8) == 12870);
  CHECK(binomial_u128(40, 41) == 0);
}

TEST_CASE("binomial overflow is detected, not wrapped") {
  CHECK_THROWS_AS(binomial_u128(300, 150), std::overflow_error);
  CHECK_THROWS_AS(binomial_u64(128, 64), std::overflow_error);
}

TEST_CASE("is_odd_prime_power") {
  CHECK_FALSE(is_odd_prime_power(0));
  CHECK_FALSE(is_odd_prime_power(1));
  CHECK_FALSE(is_odd_prime_power(2));
  CHECK(is_odd_prime_power(3));
  CHECK_FALSE(is_odd_prime_power(4));
  CHECK(is_odd_prime_power(5));
  CHECK_FALSE(is_odd_prime_power(6));
  CHECK(is_odd_prime_power(7));
  CHECK_FALSE(is_odd_prime_power(8));
  CHECK(is_odd_prime_power(9));
  CHECK_FALSE(is_odd_prime_power(12));
  CHECK_FALSE(is_odd_prime_power(15));
  CHECK(is_odd_prime_power(25));
  CHECK(is_odd_prime_power(27));
  CHECK(is_odd_prime_power(49));
  CHECK(is_odd_prime_power(81));
  CHECK(is_odd_prime_power(121));
  CHECK_FALSE(is_odd_prime_power(45));
}

TEST_CASE("frankl_alpha: order-12 value is 268") {
  CHECK(frankl_alpha(3) == 268);
}

TEST_CASE("frankl_alpha: k = 5 matches the direct sum") {
  // 4 * (C(19,0) + C(19,1) + C(19,2) + C(19,3) + C(19,4))
  const std::uint64_t direct = 4 * (1 + 19 + 171 + 969 + 3876);
  CHECK(direct == 20144);
  CHECK(frankl_alpha(5) == direct);
  Uint128 rebuilt = 0;
  for (unsigned i = 0; i < 5; ++i) {
    rebuilt += binomial_u128(19, i);
  }
  CHECK(frankl_alpha(5) == 4 * rebuilt);
}

TEST_CASE("frankl_alpha: hypothesis k = p^q enforced") {
  CHECK_THROWS_AS(frankl_alpha(1), std::domain_error);
  CHECK_THROWS_AS(frankl_alpha(2), std::domain_error);
  CHECK_THROWS_AS(frankl_alpha(4), std::domain_error);
  CHECK_THROWS_AS(frankl_alpha(12), std::domain_error);
}

TEST_CASE("frankl_alpha: 128-bit overflow detected") {
  CHECK_THROWS_AS(frankl_alpha(6561), std::overflow_error);  // 3^8, C(26243, i) blows past 128 bits
}

TEST_CASE("frankl_upper_bound: direct evaluation and strictness") {
  CHECK(frankl_upper_bound(3) ==
        doctest::Approx(16777216.0 / 19683.0).epsilon(1e-12));  // 4^12 / 3^9
  CHECK(frankl_upper_bound(5) ==
        doctest::Approx(1099511627776.0 / 14348907.0).epsilon(1e-12));  // 4^20 / 3^15
  CHECK_THROWS_AS(frankl_upper_bound(0), std::invalid_argument);
  double previous = 0.0;
  for (std::uint64_t k = 1; k <= 12; ++k) {
    const double bound = frankl_upper_bound(k);
    CHECK(bound > previous);  // ratio 4^4/3^3 > 1 per step
    previous = bound;
  }
  for (std::uint64_t k : {3, 5, 7, 9, 25, 27}) {
    CAPTURE(k);
    CHECK(static_cast<double>(frankl_alpha(k)) < frankl_upper_bound(k));
  }
}

TEST_CASE("chromatic_lower_bound") {
  CHECK(chromatic_lower_bound(4096, 268) == 16);
  CHECK(chromatic_lower_bound(1609, 134) == 13);
  CHECK(chromatic_lower_bound(100, 100) == 1);
  CHECK(chromatic_lower_bound(101, 100) == 2);
  CHECK_THROWS_AS(chromatic_lower_bound(10, 0), std::invalid_argument);
  CHECK_THROWS_AS(chromatic_lower_bound(0, 10), std::invalid_argument);
}

TEST_CASE("exact_chromatic_number: all of G_4 needs exactly 4 colours") {
  const GraphSpec g(4);
  const auto chi = exact_chromatic_number(all_vertices(g), g, 8);
  REQUIRE(chi.has_value());
  CHECK(*chi == 4);
}

TEST_CASE("exact_chromatic_number: edgeless set needs one colour") {
  const GraphSpec g(4);
  const auto chi = exact_chromatic_number({0u, 1u, 15u}, g, 4);
  REQUIRE(chi.has_value());
  CHECK(*chi == 1);
}

TEST_CASE("exact_chromatic_number: the Sylvester clique needs clique-size colours") {
  const GraphSpec g(4);
  const auto chi = exact_chromatic_number(sylvester_clique(g), g, 8);
  REQUIRE(chi.has_value());
  CHECK(*chi == 4);
}

TEST_CASE("exact_chromatic_number: exceeds-max signal and resource cap") {
  const GraphSpec g4(4);
  CHECK_FALSE(exact_chromatic_number(all_vertices(g4), g4, 3).has_value());
  const GraphSpec g8(8);
  CHECK_THROWS_AS(exact_chromatic_number(all_vertices(g8), g8, 8), ResourceLimitError);
}

TEST_CASE("find_proper_colouring returns a verifiable assignment") {
  const GraphSpec g(4);
  const auto vertices = all_vertices(g);
  const auto colouring = find_proper_colouring(vertices, g, 4);
  REQUIRE(colouring.has_value());
  REQUIRE(colouring->size() == 16);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    CHECK((*colouring)[i] >= 0);
    CHECK((*colouring)[i] < 4);
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (is_edge(vertices[i], vertices[j], g)) {
        CHECK((*colouring)[i] != (*colouring)[j]);
      }
    }
  }
  CHECK_FALSE(find_proper_colouring(vertices, g, 3).has_value());
}

TEST_CASE("chromatic search agrees with the brute-force oracle") {
  SplitMix64 rng(404);
  for (int trial = 0; trial < 12; ++trial) {
    const GraphSpec g(trial % 2 == 0 ? 4 : 8);
    const int size = 3 + static_cast<int>(rng.next_below(6));  // up to 8 vertices
    const auto vertices = random_subset(g, size, rng);
    const int oracle = brute_force_chromatic(vertices, g, 4);
    const auto fast = exact_chromatic_number(vertices, g, 4);
    CAPTURE(g.n_bits);
    CAPTURE(size);
    if (oracle <= 4) {
      REQUIRE(fast.has_value());
      CHECK(*fast == oracle);
    } else {
      CHECK_FALSE(fast.has_value());
    }
  }
}

TEST_CASE("chromatic number dominates |V|/alpha on brute-forceable instances") {
  SplitMix64 rng(2718);
  for (int trial = 0; trial < 6; ++trial) {
    const GraphSpec g(8);
    const int size = 8 + static_cast<int>(rng.next_below(7));  // 8..14 vertices
    const auto vertices = random_subset(g, size, rng);
    const int alpha = brute_force_alpha(vertices, g);
    const auto chi = exact_chromatic_number(vertices, g, size);
    REQUIRE(chi.has_value());
    CHECK(*chi >= static_cast<int>(chromatic_lower_bound(vertices.size(), alpha)));
  }
  // And on the whole of G_4, where brute-force alpha is still feasible.
  const GraphSpec g4(4);
  const int alpha4 = brute_force_alpha(all_vertices(g4), g4);
  CHECK(alpha4 == 4);
  CHECK(chromatic_lower_bound(16, alpha4) == 4);
}

TEST_CASE("sylvester_clique: orders 4 and 8, pairwise re-verified") {
  for (int n : {4, 8}) {
    const GraphSpec g(n);
    const auto clique = sylvester_clique(g);
    REQUIRE(clique.size() == static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < clique.size(); ++i) {
      for (std::size_t j = i + 1; j < clique.size(); ++j) {
        CHECK(std::popcount(clique[i] ^ clique[j]) == n / 2);
      }
    }
  }
}

TEST_CASE("sylvester_clique: non-power-of-two order rejected") {
  CHECK_THROWS_AS(sylvester_clique(GraphSpec(12)), std::domain_error);
  CHECK_THROWS_AS(sylvester_clique(GraphSpec(24)), std::domain_error);
}

TEST_CASE("edge list export: sorted, deduplicated, complete for G_4") {
  std::ostringstream out;
  write_edge_list(out, GraphSpec(4));
  std::istringstream in(out.str());
  std::vector<std::pair<unsigned, unsigned>> edges;
  unsigned u = 0;
  unsigned v = 0;
  while (in >> u >> v) {
    edges.emplace_back(u, v);
  }
  CHECK(edges.size() == 48);  // 16 * 6 / 2
  CHECK(edges.front() == std::pair<unsigned, unsigned>{0, 3});
  CHECK(std::is_sorted(edges.begin(), edges.end()));
  const GraphSpec g(4);
  for (const auto& [a, b] : edges) {
    CHECK(a < b);
    CHECK(is_edge(a, b, g));
  }
}

TEST_CASE("u128 decimal rendering") {
  CHECK(to_string(Uint128{0}) == "0");
  CHECK(to_string(Uint128{268}) == "268");
  CHECK(to_string(frankl_alpha(25)) == "350704725791100765959344");
}
