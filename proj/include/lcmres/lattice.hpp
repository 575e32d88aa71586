#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "lcmres/complex.hpp"
#include "lcmres/monomial.hpp"

namespace lcmres {

inline constexpr std::size_t kDefaultLatticeCap = std::size_t{1} << 20;

/// The lcm lattice L_I: 1 together with the lcm of every non-empty subset
/// of G(I), ordered by divisibility.
///
/// Elements are stored along a linear extension (ascending degree, then
/// lexicographic), so index 0 is the bottom 1 and the last index is the top.
class LcmLattice {
 public:
  /// Join-closure of the generators by a worklist. Throws DomainError for
  /// the zero ideal and ResourceError when more than `cap` elements arise.
  explicit LcmLattice(const MonomialIdeal& ideal, std::size_t cap = kDefaultLatticeCap);

  std::size_t size() const noexcept { return elements_.size(); }
  const std::vector<ExponentVector>& elements() const noexcept { return elements_; }
  const ExponentVector& operator[](std::size_t i) const noexcept { return elements_[i]; }
  const ExponentVector& bottom() const noexcept { return elements_.front(); }
  const ExponentVector& top() const noexcept { return elements_.back(); }
  const std::vector<ExponentVector>& atoms() const noexcept { return atoms_; }

  bool contains(const ExponentVector& m) const { return index_.count(m) > 0; }
  std::optional<std::size_t> index_of(const ExponentVector& m) const;

  /// Length of the longest chain 1 < p_1 < ... < p_r = m, i.e. r.
  std::size_t rank(std::size_t index) const noexcept { return rank_[index]; }
  /// Elements strictly between 1 and m, in storage order.
  std::vector<ExponentVector> open_interval(std::size_t index) const;
  /// Indices of the elements covered by element `index`.
  std::vector<std::size_t> lower_covers(std::size_t index) const;

 private:
  std::vector<ExponentVector> elements_;
  std::vector<ExponentVector> atoms_;
  std::vector<std::size_t> rank_;
  std::unordered_map<ExponentVector, std::size_t, ExponentVectorHash> index_;
};

inline LcmLattice build_lcm_lattice(const MonomialIdeal& ideal,
                                    std::size_t cap = kDefaultLatticeCap) {
  return LcmLattice(ideal, cap);
}

/// (1, m) in L. Throws DomainError when m is not a lattice element.
std::vector<ExponentVector> open_interval(const LcmLattice& lattice, const ExponentVector& m);

/// Debug dump: one element per line, `<monomial> : <covered> <covered> ...`.
std::string dump_lattice(const LcmLattice& lattice);

}  // namespace lcmres
