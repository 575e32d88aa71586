#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lcmres/field.hpp"
#include "lcmres/homology.hpp"
#include "lcmres/lattice.hpp"
#include "lcmres/monomial.hpp"

namespace lcmres {

struct BettiOptions {
  std::size_t lattice_cap = kDefaultLatticeCap;
  HomologyOptions homology;
  /// Worker threads for the per-multidegree map; 0 = hardware concurrency.
  unsigned threads = 0;
};

/// Multigraded Betti numbers beta_{i,m}(I) of the ideal I (not S/I).
/// Only nonzero entries are stored; coarse numbers are derived on request.
class BettiTable {
 public:
  using Key = std::pair<int, ExponentVector>;

  BettiTable(MonomialIdeal subject, FieldSpec field, std::map<Key, std::uint64_t> fine)
      : subject_(std::move(subject)), field_(field), fine_(std::move(fine)) {}

  const MonomialIdeal& subject() const noexcept { return subject_; }
  const FieldSpec& field() const noexcept { return field_; }
  const std::map<Key, std::uint64_t>& fine() const noexcept { return fine_; }

  std::uint64_t operator()(int i, const ExponentVector& m) const;
  /// beta_{i,j} = sum over |m| = j of beta_{i,m}.
  std::uint64_t coarse(int i, std::uint64_t j) const;
  std::map<std::pair<int, std::uint64_t>, std::uint64_t> coarse_table() const;
  /// Largest i with a nonzero entry.
  int projective_dimension() const;

 private:
  MonomialIdeal subject_;
  FieldSpec field_;
  std::map<Key, std::uint64_t> fine_;
};

/// beta_{i,m}(I) = dim H~_{i-1}(order complex of (1,m) in L_I) for i >= 1,
/// beta_{0,m} = [m in G(I)].
BettiTable multigraded_betti(const MonomialIdeal& ideal, const FieldSpec& field,
                             const BettiOptions& options = {});

/// beta_{i,m}(I) from the degree-m strand of the Taylor complex: the reduced
/// homology H~_{i-1} of the complex of generator subsets whose lcm strictly
/// divides m. Independent of the lcm lattice; throws ResourceError when more
/// than `generator_cap` generators divide m.
std::uint64_t taylor_strand_betti(const MonomialIdeal& ideal, const FieldSpec& field,
                                  const ExponentVector& m, int i, std::size_t generator_cap = 16);

/// Coarse beta_{i,j}(I) computed only from the lattice elements of degree j.
std::uint64_t coarse_betti(const MonomialIdeal& ideal, const FieldSpec& field, int i, std::uint64_t j,
                           const BettiOptions& options = {});

/// reg(I) = max { j : beta_{i,i+j}(I) != 0 for some i }.
std::int64_t regularity(const BettiTable& table);
std::int64_t regularity(const MonomialIdeal& ideal, const FieldSpec& field,
                        const BettiOptions& options = {});

struct LinearityResult {
  bool linear = false;
  /// (i, j) with beta_{i,j} != 0 off the linear strand; set when !linear.
  std::optional<std::pair<int, std::uint64_t>> witness;
};

/// Decides whether I has a d-linear resolution without computing on-strand
/// Betti numbers: only multidegrees m and indices i with |m| != i + d are
/// examined, first syzygies (cheap connectivity) before higher homology.
LinearityResult has_linear_resolution(const MonomialIdeal& ideal, const FieldSpec& field,
                                      const BettiOptions& options = {});

struct PieceReport {
  std::uint64_t degree = 0;
  std::size_t generator_count = 0;
  /// Unset when the piece was skipped after an earlier failure.
  std::optional<bool> linear;
  std::optional<std::pair<int, std::uint64_t>> witness;
};

struct ComponentwiseOptions {
  BettiOptions betti;
  std::size_t piece_generator_cap = 4096;
  /// Stop at the first non-linear piece. Pieces are first screened for
  /// non-linear first syzygies, which is cheap, before full checks.
  bool early_exit = false;
};

struct ComponentwiseReport {
  bool componentwise_linear = false;
  std::vector<PieceReport> pieces;
  /// Degrees above the top generator degree are not checked; linearity
  /// there follows from the top piece (an external lemma, not computed).
  bool relies_on_degree_propagation = true;
};

ComponentwiseReport is_componentwise_linear(const MonomialIdeal& ideal, const FieldSpec& field,
                                            const ComponentwiseOptions& options = {});

/// Triangular Betti diagram: rows j - i, columns i, `.` for zero. With
/// `quotient` the table of S/I is shown (beta_{i,j}(S/I) = beta_{i-1,j}(I)).
std::string render_betti_diagram(const BettiTable& table, bool quotient = false);

}  // namespace lcmres
