#include "lcmres/betti.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <iomanip>
#include <numeric>
#include <sstream>

#include "lcmres/errors.hpp"
#include "lcmres/parallel.hpp"

namespace lcmres {

std::uint64_t BettiTable::operator()(int i, const ExponentVector& m) const {
  auto it = fine_.find(Key{i, m});
  return it == fine_.end() ? 0 : it->second;
}

std::uint64_t BettiTable::coarse(int i, std::uint64_t j) const {
  std::uint64_t total = 0;
  for (const auto& [key, v] : fine_)
    if (key.first == i && key.second.degree() == j) total += v;
  return total;
}

std::map<std::pair<int, std::uint64_t>, std::uint64_t> BettiTable::coarse_table() const {
  std::map<std::pair<int, std::uint64_t>, std::uint64_t> out;
  for (const auto& [key, v] : fine_) out[{key.first, key.second.degree()}] += v;
  return out;
}

int BettiTable::projective_dimension() const {
  int top = -1;
  for (const auto& [key, v] : fine_) top = std::max(top, key.first);
  return top;
}

BettiTable multigraded_betti(const MonomialIdeal& ideal, const FieldSpec& field,
                             const BettiOptions& options) {
  if (ideal.is_zero()) throw DomainError("Betti numbers of the zero ideal are not defined here");
  const LcmLattice lattice(ideal, options.lattice_cap);
  std::vector<ReducedHomology> homology(lattice.size());
  // Index 0 is the bottom; atoms have a void interval and no higher Betti numbers.
  parallel_for(
      lattice.size() - 1,
      [&](std::size_t k) {
        const std::size_t idx = k + 1;
        if (lattice.rank(idx) < 2) return;
        homology[idx] =
            reduced_homology(order_complex(lattice.open_interval(idx)), field, options.homology);
      },
      options.threads);

  std::map<BettiTable::Key, std::uint64_t> fine;
  for (const auto& g : ideal.generators()) fine[{0, g}] = 1;
  for (std::size_t idx = 1; idx < lattice.size(); ++idx)
    for (const auto& [k, dim] : homology[idx].dims)
      if (k >= 0 && dim > 0) fine[{k + 1, lattice[idx]}] = dim;
  return BettiTable(ideal, field, std::move(fine));
}

std::uint64_t taylor_strand_betti(const MonomialIdeal& ideal, const FieldSpec& field,
                                  const ExponentVector& m, int i, std::size_t generator_cap) {
  if (i < 0) throw DomainError("homological index must be non-negative");
  if (m.size() != ideal.ambient_dimension()) throw DimensionError("multidegree has wrong length");
  std::vector<ExponentVector> below;
  for (const auto& g : ideal.generators())
    if (divides(g, m)) below.push_back(g);
  if (below.empty()) return 0;
  if (below.size() > generator_cap || below.size() >= 31)
    throw ResourceError("Taylor generators", std::min<std::size_t>(generator_cap, 30), below.size());

  // Faces: subsets of the generators dividing m whose lcm is a proper divisor of m.
  const std::size_t d = below.size();
  const std::uint32_t full = (1u << d) - 1;
  std::vector<ExponentVector> lcms(std::size_t{1} << d, ExponentVector(m.size()));
  std::vector<bool> is_face(lcms.size(), false);
  is_face[0] = true;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    const std::uint32_t low = mask & (~mask + 1);
    const std::size_t bit = static_cast<std::size_t>(std::countr_zero(low));
    lcms[mask] = lcm(lcms[mask ^ low], below[bit]);
    is_face[mask] = lcms[mask] != m;
  }
  std::vector<std::vector<Vertex>> facets;
  for (std::uint32_t mask = 0; mask <= full; ++mask) {
    if (!is_face[mask]) continue;
    bool maximal = true;
    for (std::size_t b = 0; b < d && maximal; ++b)
      if (!(mask >> b & 1) && is_face[mask | (1u << b)]) maximal = false;
    if (!maximal) continue;
    std::vector<Vertex> f;
    for (std::size_t b = 0; b < d; ++b)
      if (mask >> b & 1) f.push_back(static_cast<Vertex>(b));
    facets.push_back(std::move(f));
  }
  const SimplicialComplex strand(d, std::move(facets));
  return reduced_homology(strand, i - 1, i - 1, field)[i - 1];
}

std::uint64_t coarse_betti(const MonomialIdeal& ideal, const FieldSpec& field, int i, std::uint64_t j,
                           const BettiOptions& options) {
  if (i < 0) throw DomainError("homological index must be non-negative");
  if (ideal.is_zero()) throw DomainError("Betti numbers of the zero ideal are not defined here");
  if (i == 0) {
    return static_cast<std::uint64_t>(std::count_if(ideal.generators().begin(), ideal.generators().end(),
                                                    [&](const auto& g) { return g.degree() == j; }));
  }
  const LcmLattice lattice(ideal, options.lattice_cap);
  std::uint64_t total = 0;
  for (std::size_t idx = 1; idx < lattice.size(); ++idx) {
    if (lattice[idx].degree() != j || lattice.rank(idx) < static_cast<std::size_t>(i) + 1) continue;
    const auto complex = order_complex(lattice.open_interval(idx));
    if (i == 1) {
      total += complex.component_count() - 1;
    } else {
      total += reduced_homology(complex, i - 1, i - 1, field, options.homology)[i - 1];
    }
  }
  return total;
}

std::int64_t regularity(const BettiTable& table) {
  std::int64_t reg = std::numeric_limits<std::int64_t>::min();
  for (const auto& [key, v] : table.coarse_table())
    reg = std::max(reg, static_cast<std::int64_t>(key.second) - key.first);
  return reg;
}

std::int64_t regularity(const MonomialIdeal& ideal, const FieldSpec& field,
                        const BettiOptions& options) {
  return regularity(multigraded_betti(ideal, field, options));
}

namespace {

/// Searches for beta_{i,m} != 0 with |m| != i + d. With `first_only` only
/// i = 1 is examined.
std::optional<std::pair<int, std::uint64_t>> off_strand_witness(const MonomialIdeal& ideal,
                                                                 const FieldSpec& field,
                                                                 const BettiOptions& options,
                                                                 bool first_only) {
  const std::uint64_t d = ideal.min_degree();
  if (ideal.max_degree() != d) return std::pair<int, std::uint64_t>{0, ideal.max_degree()};
  const LcmLattice lattice(ideal, options.lattice_cap);

  // beta_{i,m} needs 1 <= i <= rank(m) - 1, and always i <= |m| - d, so
  // off-strand means i <= |m| - d - 1.
  auto max_off_strand = [&](std::size_t idx) -> std::int64_t {
    const auto& m = lattice[idx];
    return std::min<std::int64_t>(static_cast<std::int64_t>(lattice.rank(idx)) - 1,
                                  static_cast<std::int64_t>(m.degree() - d) - 1);
  };

  std::optional<std::pair<int, std::uint64_t>> best;
  auto consider = [&](int i, std::uint64_t j) {
    if (!best || std::pair{i, j} < *best) best = std::pair<int, std::uint64_t>{i, j};
  };

  for (std::size_t idx = 1; idx < lattice.size(); ++idx) {
    if (max_off_strand(idx) < 1) continue;
    if (order_complex(lattice.open_interval(idx)).component_count() > 1)
      consider(1, lattice[idx].degree());
  }
  if (best || first_only) return best;

  std::vector<std::size_t> order;
  for (std::size_t idx = 1; idx < lattice.size(); ++idx)
    if (max_off_strand(idx) >= 2) order.push_back(idx);
  // Small intervals first; they are cheap and often already witness failure.
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return lattice.rank(a) < lattice.rank(b); });
  for (std::size_t idx : order) {
    const auto hi = static_cast<int>(max_off_strand(idx)) - 1;
    auto h = reduced_homology(order_complex(lattice.open_interval(idx)), 1, hi, field,
                              options.homology);
    if (!h.is_acyclic()) consider(h.dims.begin()->first + 1, lattice[idx].degree());
  }
  return best;
}

}  // namespace

LinearityResult has_linear_resolution(const MonomialIdeal& ideal, const FieldSpec& field,
                                      const BettiOptions& options) {
  if (ideal.is_zero()) throw DomainError("linearity of the zero ideal is not defined here");
  LinearityResult result;
  result.witness = off_strand_witness(ideal, field, options, false);
  result.linear = !result.witness;
  return result;
}

ComponentwiseReport is_componentwise_linear(const MonomialIdeal& ideal, const FieldSpec& field,
                                            const ComponentwiseOptions& options) {
  if (ideal.is_zero()) throw DomainError("componentwise linearity of the zero ideal is not defined here");
  ComponentwiseReport report;
  std::vector<MonomialIdeal> pieces;
  for (std::uint64_t j = ideal.min_degree(); j <= ideal.max_degree(); ++j) {
    pieces.push_back(componentwise_piece(ideal, j, options.piece_generator_cap));
    PieceReport piece;
    piece.degree = j;
    piece.generator_count = pieces.back().size();
    report.pieces.push_back(piece);
  }
  if (options.early_exit) {
    for (std::size_t k = 0; k < pieces.size(); ++k) {
      if (auto w = off_strand_witness(pieces[k], field, options.betti, true)) {
        report.pieces[k].linear = false;
        report.pieces[k].witness = w;
        return report;
      }
    }
  }
  report.componentwise_linear = true;
  for (std::size_t k = 0; k < pieces.size(); ++k) {
    auto r = has_linear_resolution(pieces[k], field, options.betti);
    report.pieces[k].linear = r.linear;
    report.pieces[k].witness = r.witness;
    if (!r.linear) {
      report.componentwise_linear = false;
      if (options.early_exit) break;
    }
  }
  return report;
}

std::string render_betti_diagram(const BettiTable& table, bool quotient) {
  std::map<std::pair<int, std::uint64_t>, std::uint64_t> coarse;
  for (const auto& [key, v] : table.coarse_table())
    coarse[{key.first + (quotient ? 1 : 0), key.second}] = v;
  if (quotient) coarse[{0, 0}] = 1;

  int max_i = 0;
  std::int64_t min_row = 0, max_row = 0;
  bool first = true;
  for (const auto& [key, v] : coarse) {
    const std::int64_t row = static_cast<std::int64_t>(key.second) - key.first;
    max_i = std::max(max_i, key.first);
    if (first) min_row = max_row = row;
    min_row = std::min(min_row, row);
    max_row = std::max(max_row, row);
    first = false;
  }
  std::vector<std::uint64_t> totals(static_cast<std::size_t>(max_i) + 1, 0);
  for (const auto& [key, v] : coarse) totals[static_cast<std::size_t>(key.first)] += v;

  std::size_t width = 1;
  for (auto t : totals) width = std::max(width, std::to_string(t).size());
  for (int i = 0; i <= max_i; ++i) width = std::max(width, std::to_string(i).size());
  const std::size_t label = std::max<std::size_t>(6, std::to_string(max_row).size() + 1);

  std::ostringstream out;
  auto cell = [&](const std::string& s) { out << ' ' << std::setw(static_cast<int>(width)) << s; };
  out << std::setw(static_cast<int>(label)) << "";
  for (int i = 0; i <= max_i; ++i) cell(std::to_string(i));
  out << '\n' << std::setw(static_cast<int>(label)) << "total:";
  for (auto t : totals) cell(t ? std::to_string(t) : ".");
  out << '\n';
  for (std::int64_t row = min_row; row <= max_row; ++row) {
    out << std::setw(static_cast<int>(label)) << (std::to_string(row) + ":");
    for (int i = 0; i <= max_i; ++i) {
      auto it = coarse.find({i, static_cast<std::uint64_t>(row + i)});
      cell(it == coarse.end() ? "." : std::to_string(it->second));
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace lcmres
