#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "lcmres/betti.hpp"
#include "lcmres/field.hpp"
#include "lcmres/monomial.hpp"

namespace lcmres {

/// A clutter on vertices 0..n-1: an antichain of non-empty vertex subsets.
/// Edges are stored sorted, each as an increasing vertex list.
class Clutter {
 public:
  Clutter() = default;
  /// Throws DomainError on out-of-range vertices, empty or duplicate edges,
  /// or an edge containing another.
  Clutter(std::size_t vertex_count, std::vector<std::vector<std::size_t>> edges);

  std::size_t vertex_count() const noexcept { return n_; }
  const std::vector<std::vector<std::size_t>>& edges() const noexcept { return edges_; }
  /// k when every edge has k vertices.
  std::optional<std::size_t> uniformity() const;

  friend bool operator==(const Clutter&, const Clutter&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::vector<std::size_t>> edges_;
};

/// Simple graph on vertices 0..n-1.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t vertex_count) : adj_(vertex_count, std::vector<bool>(vertex_count, false)) {}
  /// Throws DomainError on loops, repeated edges or out-of-range vertices.
  Graph(std::size_t vertex_count, const std::vector<std::pair<std::size_t, std::size_t>>& edges);

  std::size_t vertex_count() const noexcept { return adj_.size(); }
  bool adjacent(std::size_t a, std::size_t b) const { return adj_[a][b]; }
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;
  Clutter as_clutter() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<bool>> adj_;
};

/// (x_e : e in E(C)).
MonomialIdeal edge_ideal(const Clutter& clutter);
MonomialIdeal edge_ideal(const Graph& graph);
/// Edges are the generator supports. Throws DomainError unless square-free.
Clutter clutter_of_ideal(const MonomialIdeal& ideal);

Graph complement_graph(const Graph& graph);

/// An induced 4-cycle a-b-c-d-a (no chords a-c, b-d), in cycle order.
std::optional<std::array<std::size_t, 4>> find_induced_4cycle(const Graph& graph);
inline bool has_induced_4cycle(const Graph& graph) { return find_induced_4cycle(graph).has_value(); }

/// Maximum cardinality search followed by a perfect-elimination check.
bool is_chordal(const Graph& graph);

struct InducedMatching {
  std::size_t size = 0;
  std::vector<std::vector<std::size_t>> edges;
};

/// Exact maximum induced matching by branch and bound. Throws ResourceError
/// when the clutter has more than `edge_cap` edges.
InducedMatching induced_matching_number(const Clutter& clutter, std::size_t edge_cap = 20);

/// True when the edges are pairwise disjoint and no other edge of the
/// clutter lies inside their union.
bool is_induced_matching(const Clutter& clutter, const std::vector<std::vector<std::size_t>>& edges);

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

struct BettiBoundReport {
  std::size_t k = 0;
  std::size_t t = 0;
  unsigned s = 0;
  std::uint64_t first_degree = 0;   // ks + k
  std::uint64_t first_actual = 0;   // beta_{1, ks+k}(I^s)
  std::uint64_t first_bound = 0;    // 2 binom(t, 2)
  std::uint64_t second_degree = 0;  // ks + 2k
  std::uint64_t second_actual = 0;  // beta_{2, ks+2k}(I^s)
  std::uint64_t second_bound = 0;   // 3 binom(t, 3)
  bool pass = false;
};

struct RegularityReport {
  std::size_t k = 0;
  std::size_t t = 0;
  unsigned s = 0;
  bool applicable = false;  // t >= 2
  std::int64_t bound = 0;
  std::int64_t actual = 0;
  bool pass = true;
};

/// Lower bounds on beta_1 and beta_2 of powers of the edge ideal of a
/// k-uniform clutter in terms of its induced matching number.
/// Requires s >= 2; throws DomainError for non-uniform clutters.
BettiBoundReport verify_theorem_betti_bounds(const Clutter& clutter, unsigned s, const FieldSpec& field,
                                             const BettiOptions& options = {});

/// reg(I^s) >= ks + k - 1 when the induced matching number is 2, and
/// >= ks + 2k - 2 when it is at least 3.
RegularityReport verify_regularity_corollary(const Clutter& clutter, unsigned s, const FieldSpec& field,
                                             const BettiOptions& options = {});

/// t pairwise disjoint k-edges on kt vertices.
Clutter disjoint_edges(std::size_t k, std::size_t t);

/// Every simple graph on n vertices (2^(n choose 2) of them), or one
/// representative per isomorphism class when `up_to_isomorphism`.
std::vector<Graph> all_graphs(std::size_t n, bool up_to_isomorphism = false);

/// Random k-uniform clutter with `edge_count` distinct edges on n vertices.
Clutter random_uniform_clutter(std::size_t n, std::size_t k, std::size_t edge_count, std::mt19937_64& rng);

/// Random square-free ideal with no variable: `generator_count` random
/// supports of size 2..max_degree on n variables, minimalized.
MonomialIdeal random_squarefree_ideal(std::size_t n, std::size_t generator_count, std::size_t max_degree,
                                      std::mt19937_64& rng);

/// Random monomial ideal with exponents in 0..max_exponent.
MonomialIdeal random_monomial_ideal(std::size_t n, std::size_t generator_count, Exponent max_exponent,
                                    std::mt19937_64& rng);

}  // namespace lcmres
