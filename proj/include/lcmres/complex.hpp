#pragma once

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "lcmres/monomial.hpp"

namespace lcmres {

using Vertex = std::uint32_t;

/// Dimension reported by a complex with no faces at all (not even the empty face).
inline constexpr int kVoidDimension = -2;
inline constexpr std::size_t kUnlimited = std::numeric_limits<std::size_t>::max();

/// Flat list of faces of one dimension. Each face is a strictly increasing
/// vertex list of length dimension()+1. The single face of dimension -1 is
/// the empty face.
class FaceList {
 public:
  explicit FaceList(int dimension) : dim_(dimension) {}

  int dimension() const noexcept { return dim_; }
  std::size_t stride() const noexcept { return static_cast<std::size_t>(dim_ + 1); }
  std::size_t size() const noexcept { return count_; }
  bool empty() const noexcept { return count_ == 0; }

  std::span<const Vertex> operator[](std::size_t i) const noexcept {
    return {data_.data() + i * stride(), stride()};
  }

  void push_back(std::span<const Vertex> face);
  /// Sorts lexicographically and removes duplicates.
  void normalize();
  /// Index of `face`; the list must be normalized.
  std::optional<std::size_t> find(std::span<const Vertex> face) const;

 private:
  int dim_;
  std::size_t count_ = 0;
  std::vector<Vertex> data_;
};

/// Anything reduced_homology can consume.
template <class C>
concept FaceComplex = requires(const C& c, int d, std::size_t limit) {
  { c.is_void() } -> std::convertible_to<bool>;
  { c.dimension() } -> std::convertible_to<int>;
  { c.faces(d, limit) } -> std::same_as<FaceList>;
};

/// Abstract simplicial complex stored through its facets.
///
/// The default-constructed complex is VOID (no faces). The EMPTY complex has
/// exactly one face, the empty set, and dimension -1. Faces of a given
/// dimension are enumerated on demand from the facets.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  /// Facets may be given in any order and may include non-maximal faces.
  SimplicialComplex(std::size_t vertex_count, std::vector<std::vector<Vertex>> facets);

  static SimplicialComplex void_complex() { return {}; }
  static SimplicialComplex empty_complex();

  bool is_void() const noexcept { return void_; }
  bool is_empty() const noexcept { return !void_ && dim_ == -1; }
  int dimension() const noexcept { return dim_; }
  std::size_t vertex_count() const noexcept { return vertex_count_; }
  const std::vector<std::vector<Vertex>>& facets() const noexcept { return facets_; }

  /// Throws ResourceError when more than `limit` faces arise.
  FaceList faces(int d, std::size_t limit = kUnlimited) const;

 private:
  bool void_ = true;
  int dim_ = kVoidDimension;
  std::size_t vertex_count_ = 0;
  std::vector<std::vector<Vertex>> facets_;
};

/// Order complex of a finite poset of monomials under divisibility.
///
/// Vertices are the poset elements, numbered along a linear extension
/// (ascending degree, then lexicographic), so every chain is an increasing
/// vertex list. Faces are chains; facets are maximal chains.
class OrderComplex {
 public:
  explicit OrderComplex(std::vector<ExponentVector> elements);

  bool is_void() const noexcept { return elements_.empty(); }
  /// Longest chain length minus one; kVoidDimension for an empty poset.
  int dimension() const noexcept { return dim_; }
  const std::vector<ExponentVector>& vertices() const noexcept { return elements_; }

  /// Chains with d+1 elements. Throws ResourceError beyond `limit`.
  FaceList faces(int d, std::size_t limit = kUnlimited) const;
  /// Maximal chains, i.e. saturated chains from a minimal to a maximal element.
  std::vector<std::vector<Vertex>> facets(std::size_t limit = kUnlimited) const;
  /// Number of connected components of the complex (0 when void).
  std::size_t component_count() const;

 private:
  std::vector<ExponentVector> elements_;
  std::vector<std::vector<Vertex>> above_;  // strictly greater elements, ascending
  int dim_ = kVoidDimension;
};

OrderComplex order_complex(std::vector<ExponentVector> interval);

}  // namespace lcmres
