#include "lcmres/clutters.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "lcmres/errors.hpp"

namespace lcmres {

Clutter::Clutter(std::size_t vertex_count, std::vector<std::vector<std::size_t>> edges) : n_(vertex_count) {
  for (auto& e : edges) {
    if (e.empty()) throw DomainError("clutter edges must be non-empty");
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) throw DomainError("edge repeats a vertex");
    if (e.back() >= n_) throw DomainError("edge vertex out of range");
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) throw DomainError("duplicate edge");
  for (std::size_t a = 0; a < edges.size(); ++a)
    for (std::size_t b = 0; b < edges.size(); ++b)
      if (a != b && std::includes(edges[b].begin(), edges[b].end(), edges[a].begin(), edges[a].end()))
        throw DomainError("clutter edges must form an antichain: an edge contains another");
  edges_ = std::move(edges);
}

std::optional<std::size_t> Clutter::uniformity() const {
  if (edges_.empty()) return std::nullopt;
  const std::size_t k = edges_.front().size();
  for (const auto& e : edges_)
    if (e.size() != k) return std::nullopt;
  return k;
}

Graph::Graph(std::size_t vertex_count, const std::vector<std::pair<std::size_t, std::size_t>>& edges)
    : Graph(vertex_count) {
  for (auto [a, b] : edges) {
    if (a >= vertex_count || b >= vertex_count) throw DomainError("graph vertex out of range");
    if (a == b) throw DomainError("graphs are simple: no loops");
    if (adj_[a][b]) throw DomainError("graphs are simple: repeated edge");
    adj_[a][b] = adj_[b][a] = true;
  }
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < adj_.size(); ++a)
    for (std::size_t b = a + 1; b < adj_.size(); ++b)
      if (adj_[a][b]) out.emplace_back(a, b);
  return out;
}

Clutter Graph::as_clutter() const {
  std::vector<std::vector<std::size_t>> e;
  for (auto [a, b] : edges()) e.push_back({a, b});
  return Clutter(vertex_count(), std::move(e));
}

MonomialIdeal edge_ideal(const Clutter& clutter) {
  std::vector<ExponentVector> gens;
  for (const auto& e : clutter.edges()) {
    ExponentVector m(clutter.vertex_count());
    for (std::size_t v : e) m = m * ExponentVector::variable(clutter.vertex_count(), v);
    gens.push_back(std::move(m));
  }
  return MonomialIdeal(clutter.vertex_count(), std::move(gens));
}

MonomialIdeal edge_ideal(const Graph& graph) { return edge_ideal(graph.as_clutter()); }

Clutter clutter_of_ideal(const MonomialIdeal& ideal) {
  std::vector<std::vector<std::size_t>> edges;
  for (const auto& g : ideal.generators()) {
    if (!g.is_squarefree()) throw DomainError("clutters correspond to square-free ideals; got " + to_string(g));
    edges.push_back(support(g));
  }
  return Clutter(ideal.ambient_dimension(), std::move(edges));
}

Graph complement_graph(const Graph& graph) {
  const std::size_t n = graph.vertex_count();
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (!graph.adjacent(a, b)) e.emplace_back(a, b);
  return Graph(n, e);
}

std::optional<std::array<std::size_t, 4>> find_induced_4cycle(const Graph& graph) {
  const std::size_t n = graph.vertex_count();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c)
        for (std::size_t d = c + 1; d < n; ++d) {
          // The three ways to close four vertices into a cycle.
          const std::array<std::array<std::size_t, 4>, 3> cycles{{{a, b, c, d}, {a, b, d, c}, {a, c, b, d}}};
          for (const auto& q : cycles) {
            bool sides = graph.adjacent(q[0], q[1]) && graph.adjacent(q[1], q[2]) &&
                         graph.adjacent(q[2], q[3]) && graph.adjacent(q[3], q[0]);
            bool chords = graph.adjacent(q[0], q[2]) || graph.adjacent(q[1], q[3]);
            if (sides && !chords) return q;
          }
        }
  return std::nullopt;
}

bool is_chordal(const Graph& graph) {
  const std::size_t n = graph.vertex_count();
  std::vector<std::size_t> weight(n, 0), order;
  std::vector<bool> visited(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t pick = n;
    for (std::size_t v = 0; v < n; ++v)
      if (!visited[v] && (pick == n || weight[v] > weight[pick])) pick = v;
    visited[pick] = true;
    order.push_back(pick);
    for (std::size_t w = 0; w < n; ++w)
      if (!visited[w] && graph.adjacent(pick, w)) ++weight[w];
  }
  // The reverse of an MCS order is a perfect elimination order iff the graph
  // is chordal: earlier-visited neighbours of each vertex form a clique.
  std::vector<std::size_t> position(n);
  for (std::size_t i = 0; i < n; ++i) position[order[i]] = i;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::size_t> earlier;
    for (std::size_t w = 0; w < n; ++w)
      if (graph.adjacent(order[i], w) && position[w] < i) earlier.push_back(w);
    for (std::size_t a = 0; a < earlier.size(); ++a)
      for (std::size_t b = a + 1; b < earlier.size(); ++b)
        if (!graph.adjacent(earlier[a], earlier[b])) return false;
  }
  return true;
}

bool is_induced_matching(const Clutter& clutter, const std::vector<std::vector<std::size_t>>& edges) {
  std::vector<bool> in_union(clutter.vertex_count(), false);
  for (const auto& e : edges)
    for (std::size_t v : e) {
      if (in_union[v]) return false;
      in_union[v] = true;
    }
  for (const auto& f : clutter.edges()) {
    bool inside = std::all_of(f.begin(), f.end(), [&](std::size_t v) { return in_union[v]; });
    if (inside && std::find(edges.begin(), edges.end(), f) == edges.end()) return false;
  }
  return true;
}

InducedMatching induced_matching_number(const Clutter& clutter, std::size_t edge_cap) {
  const auto& edges = clutter.edges();
  const std::size_t m = edges.size();
  if (m > edge_cap) throw ResourceError("induced matching edges", edge_cap, m);
  const std::size_t n = clutter.vertex_count();

  InducedMatching best;
  std::vector<std::size_t> chosen;
  std::vector<int> cover(n, 0);  // chosen edges covering each vertex (0 or 1)
  std::size_t covered = 0;
  std::size_t min_edge = n;
  for (const auto& e : edges) min_edge = std::min(min_edge, e.size());

  // An unchosen edge inside the union can never be repaired: it meets a
  // chosen edge, so it can never join the matching itself.
  auto union_is_clean = [&](std::size_t last) {
    for (std::size_t f = 0; f < m; ++f) {
      if (std::find(chosen.begin(), chosen.end(), f) != chosen.end()) continue;
      const auto& e = edges[f];
      bool touches_last = std::any_of(e.begin(), e.end(), [&](std::size_t v) {
        return std::binary_search(edges[last].begin(), edges[last].end(), v);
      });
      if (!touches_last) continue;
      if (std::all_of(e.begin(), e.end(), [&](std::size_t v) { return cover[v] > 0; })) return false;
    }
    return true;
  };

  auto search = [&](auto&& self, std::size_t next) -> void {
    if (chosen.size() > best.size) {
      best.size = chosen.size();
      best.edges.clear();
      for (std::size_t c : chosen) best.edges.push_back(edges[c]);
    }
    if (next == m) return;
    const std::size_t free_vertices = n - covered;
    const std::size_t bound = chosen.size() + std::min(m - next, min_edge ? free_vertices / min_edge : 0);
    if (bound <= best.size) return;
    for (std::size_t f = next; f < m; ++f) {
      const auto& e = edges[f];
      if (std::any_of(e.begin(), e.end(), [&](std::size_t v) { return cover[v] > 0; })) continue;
      for (std::size_t v : e) cover[v] = 1;
      covered += e.size();
      chosen.push_back(f);
      if (union_is_clean(f)) self(self, f + 1);
      chosen.pop_back();
      covered -= e.size();
      for (std::size_t v : e) cover[v] = 0;
    }
  };
  search(search, 0);
  return best;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

namespace {

std::size_t require_uniform(const Clutter& clutter, unsigned s) {
  if (s < 2) throw DomainError("the power must satisfy s >= 2");
  auto k = clutter.uniformity();
  if (!k) throw DomainError("the clutter must be uniform and non-empty");
  return *k;
}

}  // namespace

BettiBoundReport verify_theorem_betti_bounds(const Clutter& clutter, unsigned s, const FieldSpec& field,
                                             const BettiOptions& options) {
  BettiBoundReport r;
  r.k = require_uniform(clutter, s);
  r.s = s;
  r.t = induced_matching_number(clutter).size;
  const auto power_ideal = power(edge_ideal(clutter), s);
  r.first_degree = r.k * s + r.k;
  r.second_degree = r.k * s + 2 * r.k;
  r.first_bound = 2 * binomial(r.t, 2);
  r.second_bound = 3 * binomial(r.t, 3);
  r.first_actual = coarse_betti(power_ideal, field, 1, r.first_degree, options);
  r.second_actual = coarse_betti(power_ideal, field, 2, r.second_degree, options);
  r.pass = r.first_actual >= r.first_bound && r.second_actual >= r.second_bound;
  return r;
}

RegularityReport verify_regularity_corollary(const Clutter& clutter, unsigned s, const FieldSpec& field,
                                             const BettiOptions& options) {
  RegularityReport r;
  r.k = require_uniform(clutter, s);
  r.s = s;
  r.t = induced_matching_number(clutter).size;
  if (r.t < 2) return r;
  r.applicable = true;
  const auto k = static_cast<std::int64_t>(r.k), si = static_cast<std::int64_t>(s);
  r.bound = r.t == 2 ? k * si + k - 1 : k * si + 2 * k - 2;
  r.actual = regularity(power(edge_ideal(clutter), s), field, options);
  r.pass = r.actual >= r.bound;
  return r;
}

Clutter disjoint_edges(std::size_t k, std::size_t t) {
  std::vector<std::vector<std::size_t>> edges(t);
  for (std::size_t e = 0; e < t; ++e)
    for (std::size_t v = 0; v < k; ++v) edges[e].push_back(e * k + v);
  return Clutter(k * t, std::move(edges));
}

std::vector<Graph> all_graphs(std::size_t n, bool up_to_isomorphism) {
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) slots.emplace_back(a, b);
  if (slots.size() > 30) throw ResourceError("graph enumeration pairs", 30, slots.size());
  const std::uint64_t count = std::uint64_t{1} << slots.size();

  std::vector<std::vector<std::size_t>> perms;
  if (up_to_isomorphism) {
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
  }
  std::vector<std::vector<std::size_t>> slot_of(n, std::vector<std::size_t>(n, 0));
  for (std::size_t i = 0; i < slots.size(); ++i) {
    slot_of[slots[i].first][slots[i].second] = i;
    slot_of[slots[i].second][slots[i].first] = i;
  }

  std::vector<Graph> out;
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    if (up_to_isomorphism) {
      // Keep the mask only if it is the smallest relabelling of itself.
      bool canonical = true;
      for (const auto& p : perms) {
        std::uint64_t image = 0;
        for (std::size_t i = 0; i < slots.size(); ++i)
          if (mask >> i & 1) image |= std::uint64_t{1} << slot_of[p[slots[i].first]][p[slots[i].second]];
        if (image < mask) {
          canonical = false;
          break;
        }
      }
      if (!canonical) continue;
    }
    std::vector<std::pair<std::size_t, std::size_t>> e;
    for (std::size_t i = 0; i < slots.size(); ++i)
      if (mask >> i & 1) e.push_back(slots[i]);
    out.emplace_back(n, e);
  }
  return out;
}

Clutter random_uniform_clutter(std::size_t n, std::size_t k, std::size_t edge_count, std::mt19937_64& rng) {
  if (k == 0 || k > n) throw DomainError("edge size must be in 1..n");
  if (edge_count > binomial(n, k)) throw DomainError("not enough distinct k-subsets");
  std::set<std::vector<std::size_t>> edges;
  std::vector<std::size_t> vertices(n);
  std::iota(vertices.begin(), vertices.end(), 0);
  while (edges.size() < edge_count) {
    std::shuffle(vertices.begin(), vertices.end(), rng);
    std::vector<std::size_t> e(vertices.begin(), vertices.begin() + static_cast<std::ptrdiff_t>(k));
    std::sort(e.begin(), e.end());
    edges.insert(std::move(e));
  }
  return Clutter(n, {edges.begin(), edges.end()});
}

MonomialIdeal random_squarefree_ideal(std::size_t n, std::size_t generator_count, std::size_t max_degree,
                                      std::mt19937_64& rng) {
  if (max_degree < 2 || max_degree > n) throw DomainError("max degree must be in 2..n");
  std::uniform_int_distribution<std::size_t> degree(2, max_degree);
  std::vector<std::size_t> vertices(n);
  std::iota(vertices.begin(), vertices.end(), 0);
  std::vector<ExponentVector> gens;
  for (std::size_t g = 0; g < generator_count; ++g) {
    std::shuffle(vertices.begin(), vertices.end(), rng);
    ExponentVector m(n);
    for (std::size_t i = 0, d = degree(rng); i < d; ++i) m = m * ExponentVector::variable(n, vertices[i]);
    gens.push_back(std::move(m));
  }
  return MonomialIdeal(n, std::move(gens));
}

MonomialIdeal random_monomial_ideal(std::size_t n, std::size_t generator_count, Exponent max_exponent,
                                    std::mt19937_64& rng) {
  std::uniform_int_distribution<Exponent> exponent(0, max_exponent);
  std::vector<ExponentVector> gens;
  while (gens.size() < generator_count) {
    std::vector<Exponent> e(n);
    for (auto& x : e) x = exponent(rng);
    ExponentVector m(std::move(e));
    if (!m.is_one()) gens.push_back(std::move(m));
  }
  return MonomialIdeal(n, std::move(gens));
}

}  // namespace lcmres
