#include "ptlab/hadamard_graph.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "ptlab/errors.hpp"
#include "ptlab/jsonio.hpp"

namespace ptlab {

namespace {

constexpr Uint128 kU128Max = ~Uint128{0};

/// Words of weight n/2 in ascending order via Gosper's hack; 64-bit
/// internals so the n = 32 wraparound is handled.
void for_each_half_weight_mask(int n, const std::function<void(Vertex)>& fn) {
  const int k = n / 2;
  std::uint64_t m = (std::uint64_t{1} << k) - 1;
  const std::uint64_t limit = std::uint64_t{1} << n;
  while (m < limit) {
    fn(static_cast<Vertex>(m));
    const std::uint64_t c = m & (~m + 1);
    const std::uint64_t r = m + c;
    m = (((r ^ m) >> 2) / c) | r;
  }
}

}  // namespace

std::string to_string(Uint128 value) {
  if (value == 0) {
    return "0";
  }
  std::string out;
  while (value > 0) {
    out += static_cast<char>('0' + static_cast<unsigned>(value % 10));
    value /= 10;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

Uint128 binomial_u128(unsigned n, unsigned k) {
  if (k > n) {
    return 0;
  }
  k = std::min(k, n - k);
  Uint128 result = 1;
  for (unsigned i = 1; i <= k; ++i) {
    const Uint128 factor = n - k + i;
    if (result > kU128Max / factor) {
      throw std::overflow_error("binomial_u128: value exceeds 128 bits");
    }
    result = result * factor / i;  // exact: the running product is C(n-k+i, i)
  }
  return result;
}

std::uint64_t binomial_u64(unsigned n, unsigned k) {
  const Uint128 v = binomial_u128(n, k);
  if (v > std::numeric_limits<std::uint64_t>::max()) {
    throw std::overflow_error("binomial_u64: value exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(v);
}

GraphSpec::GraphSpec(int n) : n_bits(n) {
  if (n < 4 || n > 32 || n % 4 != 0) {
    throw std::invalid_argument("GraphSpec: order must be a multiple of 4 in [4, 32]");
  }
}

std::uint64_t GraphSpec::degree() const {
  return binomial_u64(static_cast<unsigned>(n_bits), static_cast<unsigned>(n_bits / 2));
}

Vertex GraphSpec::word_mask() const {
  return n_bits == 32 ? ~Vertex{0} : (Vertex{1} << n_bits) - 1;
}

int hamming_distance(Vertex u, Vertex v) { return std::popcount(u ^ v); }

bool is_edge(Vertex u, Vertex v, const GraphSpec& g) {
  return hamming_distance(u, v) == g.n_bits / 2;
}

std::vector<Vertex> half_weight_masks(const GraphSpec& g) {
  if (g.n_bits > 24) {
    throw ResourceLimitError("half_weight_masks: mask list too large beyond N = 24");
  }
  std::vector<Vertex> masks;
  masks.reserve(g.degree());
  for_each_half_weight_mask(g.n_bits, [&](Vertex m) { masks.push_back(m); });
  return masks;
}

void for_each_neighbor(Vertex u, const GraphSpec& g, const std::function<void(Vertex)>& fn) {
  if ((u & ~g.word_mask()) != 0) {
    throw std::invalid_argument("for_each_neighbor: vertex word out of range");
  }
  for_each_half_weight_mask(g.n_bits, [&](Vertex m) { fn(u ^ m); });
}

std::vector<Vertex> neighbors(Vertex u, const GraphSpec& g) {
  if (g.n_bits > 24) {
    throw ResourceLimitError("neighbors: use for_each_neighbor beyond N = 24");
  }
  std::vector<Vertex> out;
  out.reserve(g.degree());
  for_each_neighbor(u, g, [&](Vertex v) { out.push_back(v); });
  return out;
}

ComponentReport connected_components(const GraphSpec& g) {
  if (g.n_bits > 16) {
    throw ResourceLimitError("connected_components: BFS is capped at N = 16");
  }
  const std::uint64_t vertex_count = g.vertex_count();
  const std::vector<Vertex> masks = half_weight_masks(g);

  ComponentReport report;
  report.n_bits = g.n_bits;

  std::vector<int> component(vertex_count, -1);
  std::vector<Vertex> queue;
  for (std::uint64_t start = 0; start < vertex_count; ++start) {
    if (component[start] != -1) {
      continue;
    }
    const int id = report.component_count++;
    std::uint64_t size = 0;
    queue.clear();
    queue.push_back(static_cast<Vertex>(start));
    component[start] = id;
    while (!queue.empty()) {
      const Vertex u = queue.back();
      queue.pop_back();
      ++size;
      for (const Vertex m : masks) {
        const Vertex v = u ^ m;
        if (component[v] == -1) {
          component[v] = id;
          queue.push_back(v);
        }
      }
    }
    report.component_sizes.push_back(size);
  }

  if (report.component_count == 2) {
    // Vertex 0 has even weight, so component 0 is the even candidate.
    bool split = true;
    for (std::uint64_t v = 0; v < vertex_count && split; ++v) {
      const bool even = (std::popcount(static_cast<Vertex>(v)) & 1) == 0;
      split = (component[v] == 0) == even;
    }
    report.parity_split = split;
  }
  return report;
}

bool is_odd_prime_power(std::uint64_t k) {
  if (k < 3 || k % 2 == 0) {
    return false;
  }
  std::uint64_t p = 0;
  for (std::uint64_t d = 3; d * d <= k; d += 2) {
    if (k % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) {
    return true;  // k itself is an odd prime
  }
  while (k % p == 0) {
    k /= p;
  }
  return k == 1;
}

Uint128 frankl_alpha(std::uint64_t k) {
  if (!is_odd_prime_power(k)) {
    throw std::domain_error("frankl_alpha: formula requires k = p^q for an odd prime p, q >= 1");
  }
  if (k > (std::uint64_t{1} << 30)) {
    throw std::overflow_error("frankl_alpha: value exceeds 128 bits");
  }
  const unsigned n = static_cast<unsigned>(4 * k - 1);
  Uint128 sum = 0;
  for (unsigned i = 0; i < k; ++i) {
    const Uint128 term = binomial_u128(n, i);
    if (sum > kU128Max - term) {
      throw std::overflow_error("frankl_alpha: value exceeds 128 bits");
    }
    sum += term;
  }
  if (sum > kU128Max / 4) {
    throw std::overflow_error("frankl_alpha: value exceeds 128 bits");
  }
  return 4 * sum;
}

double frankl_upper_bound(std::uint64_t k) {
  if (k < 1) {
    throw std::invalid_argument("frankl_upper_bound: k must be positive");
  }
  const double kd = static_cast<double>(k);
  return std::exp(4.0 * kd * std::log(4.0) - 3.0 * kd * std::log(3.0));
}

Uint128 chromatic_lower_bound(Uint128 vertex_count, Uint128 alpha) {
  if (alpha == 0) {
    throw std::invalid_argument("chromatic_lower_bound: alpha must be positive");
  }
  if (vertex_count == 0) {
    throw std::invalid_argument("chromatic_lower_bound: vertex count must be positive");
  }
  return (vertex_count + alpha - 1) / alpha;
}

namespace {

/// Backtracking c-colouring with DSATUR branching: always extend the vertex
/// seeing the most distinct neighbour colours. Colour indices above the
/// current palette size are skipped, which prunes colour permutations.
class ColouringSearch {
 public:
  ColouringSearch(const std::vector<Vertex>& vertices, const GraphSpec& g)
      : count_(static_cast<int>(vertices.size())), adj_(vertices.size(), 0), colour_(vertices.size(), -1) {
    for (int i = 0; i < count_; ++i) {
      for (int j = i + 1; j < count_; ++j) {
        if (is_edge(vertices[static_cast<std::size_t>(i)], vertices[static_cast<std::size_t>(j)], g)) {
          adj_[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
          adj_[static_cast<std::size_t>(j)] |= std::uint64_t{1} << i;
        }
      }
    }
  }

  std::optional<std::vector<int>> solve(int colours) {
    target_ = std::min(colours, 64);
    std::fill(colour_.begin(), colour_.end(), -1);
    if (count_ == 0) {
      return colour_;
    }
    if (extend(0, 0)) {
      return colour_;
    }
    return std::nullopt;
  }

 private:
  std::uint64_t neighbour_colour_mask(int v) const {
    std::uint64_t mask = 0;
    std::uint64_t nb = adj_[static_cast<std::size_t>(v)];
    while (nb != 0) {
      const int w = std::countr_zero(nb);
      nb &= nb - 1;
      if (colour_[static_cast<std::size_t>(w)] >= 0) {
        mask |= std::uint64_t{1} << colour_[static_cast<std::size_t>(w)];
      }
    }
    return mask;
  }

  bool extend(int coloured, int palette) {
    if (coloured == count_) {
      return true;
    }
    int pick = -1;
    int pick_sat = -1;
    int pick_deg = -1;
    for (int v = 0; v < count_; ++v) {
      if (colour_[static_cast<std::size_t>(v)] >= 0) {
        continue;
      }
      const int sat = std::popcount(neighbour_colour_mask(v));
      const int deg = std::popcount(adj_[static_cast<std::size_t>(v)]);
      if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
        pick = v;
        pick_sat = sat;
        pick_deg = deg;
      }
    }
    const std::uint64_t blocked = neighbour_colour_mask(pick);
    const int limit = std::min(target_, palette + 1);
    for (int c = 0; c < limit; ++c) {
      if ((blocked >> c) & 1u) {
        continue;
      }
      colour_[static_cast<std::size_t>(pick)] = c;
      if (extend(coloured + 1, std::max(palette, c + 1))) {
        return true;
      }
      colour_[static_cast<std::size_t>(pick)] = -1;
    }
    return false;
  }

  int count_;
  int target_ = 0;
  std::vector<std::uint64_t> adj_;
  std::vector<int> colour_;
};

}  // namespace

std::optional<int> exact_chromatic_number(const std::vector<Vertex>& vertices,
                                          const GraphSpec& g, int max_colours) {
  if (vertices.size() > 64) {
    throw ResourceLimitError("exact_chromatic_number: at most 64 vertices");
  }
  if (max_colours < 1) {
    throw std::invalid_argument("exact_chromatic_number: max_colours must be positive");
  }
  ColouringSearch search(vertices, g);
  const int cap = std::min<int>(max_colours, std::max<int>(1, static_cast<int>(vertices.size())));
  for (int c = 1; c <= cap; ++c) {
    if (search.solve(c)) {
      return c;
    }
  }
  return std::nullopt;
}

std::optional<std::vector<int>> find_proper_colouring(const std::vector<Vertex>& vertices,
                                                      const GraphSpec& g, int colours) {
  if (vertices.size() > 64) {
    throw ResourceLimitError("find_proper_colouring: at most 64 vertices");
  }
  if (colours < 1) {
    throw std::invalid_argument("find_proper_colouring: colours must be positive");
  }
  ColouringSearch search(vertices, g);
  return search.solve(colours);
}

std::vector<Vertex> sylvester_clique(const GraphSpec& g) {
  const unsigned n = static_cast<unsigned>(g.n_bits);
  if ((n & (n - 1)) != 0) {
    throw std::domain_error("sylvester_clique: order must be a power of two");
  }
  // Row r of the Sylvester matrix has sign (-1)^<r, i> in column i; mapping
  // +1 -> 0, -1 -> 1 gives words pairwise at distance exactly N/2.
  std::vector<Vertex> rows(n);
  for (unsigned r = 0; r < n; ++r) {
    Vertex word = 0;
    for (unsigned i = 0; i < n; ++i) {
      if (std::popcount(r & i) & 1u) {
        word |= Vertex{1} << i;
      }
    }
    rows[r] = word;
  }
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = i + 1; j < n; ++j) {
      if (!is_edge(rows[i], rows[j], g)) {
        throw std::logic_error("sylvester_clique: construction failed verification");
      }
    }
  }
  return rows;
}

std::vector<Vertex> all_vertices(const GraphSpec& g) {
  if (g.n_bits > 16) {
    throw ResourceLimitError("all_vertices: vertex list capped at N = 16");
  }
  std::vector<Vertex> out(g.vertex_count());
  for (std::uint64_t v = 0; v < g.vertex_count(); ++v) {
    out[v] = static_cast<Vertex>(v);
  }
  return out;
}

std::string to_json(const ComponentReport& report) {
  JsonWriter w;
  w.begin_object();
  w.key("n_bits").value(report.n_bits);
  w.key("component_count").value(report.component_count);
  w.key("component_sizes").begin_array();
  for (const std::uint64_t s : report.component_sizes) {
    w.value(s);
  }
  w.end_array();
  w.key("parity_split").value(report.parity_split);
  w.end_object();
  return w.str();
}

void write_edge_list(std::ostream& out, const GraphSpec& g) {
  if (g.n_bits > 16) {
    throw ResourceLimitError("write_edge_list: edge export capped at N = 16");
  }
  const std::vector<Vertex> masks = half_weight_masks(g);
  std::vector<Vertex> upper;
  for (std::uint64_t u = 0; u < g.vertex_count(); ++u) {
    upper.clear();
    for (const Vertex m : masks) {
      const Vertex v = static_cast<Vertex>(u) ^ m;
      if (v > u) {
        upper.push_back(v);
      }
    }
    std::sort(upper.begin(), upper.end());
    for (const Vertex v : upper) {
      out << u << ' ' << v << '\n';
    }
  }
}

}  // namespace ptlab
