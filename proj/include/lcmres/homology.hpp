#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <vector>

#include "lcmres/complex.hpp"
#include "lcmres/errors.hpp"
#include "lcmres/field.hpp"

namespace lcmres {

/// Column-major sparse matrix over a field's scalar type.
template <class Scalar>
class SparseMatrix {
 public:
  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return columns_.size(); }
  SparseColumn<Scalar>& col(std::size_t j) { return columns_[j]; }
  const SparseColumn<Scalar>& col(std::size_t j) const { return columns_[j]; }
  std::vector<SparseColumn<Scalar>>& columns() noexcept { return columns_; }

  /// Builds from a dense row-major integer table, mapping entries into `field`.
  template <class Field>
  static SparseMatrix from_dense(const std::vector<std::vector<std::int64_t>>& rows,
                                 const Field& field) {
    const std::size_t r = rows.size(), c = r ? rows.front().size() : 0;
    SparseMatrix m(r, c);
    for (std::size_t j = 0; j < c; ++j)
      for (std::size_t i = 0; i < r; ++i) {
        auto v = field.from_int(rows[i][j]);
        if (!field.is_zero(v)) m.col(j).emplace_back(static_cast<std::uint32_t>(i), v);
      }
    return m;
  }

 private:
  std::size_t rows_;
  std::vector<SparseColumn<Scalar>> columns_;
};

/// Rank by exact column elimination. Columns are processed in order of
/// increasing support size; each column is reduced against the stored pivot
/// owning its lowest nonzero row until it vanishes or claims a new pivot.
template <class Field>
std::size_t exact_rank(SparseMatrix<typename Field::value_type> matrix, const Field& field) {
  auto& cols = matrix.columns();
  std::stable_sort(cols.begin(), cols.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });
  std::vector<std::optional<std::size_t>> pivot_of(matrix.rows());
  std::size_t rank = 0;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    auto& col = cols[j];
    while (!col.empty()) {
      const auto low = col.back().first;
      if (!pivot_of[low]) {
        pivot_of[low] = j;
        ++rank;
        break;
      }
      field.eliminate(col, cols[*pivot_of[low]]);
    }
  }
  return rank;
}

/// dim_K H~_i for every i >= -1; only nonzero dimensions are stored.
struct ReducedHomology {
  std::map<int, std::uint64_t> dims;

  std::uint64_t operator[](int i) const {
    auto it = dims.find(i);
    return it == dims.end() ? 0 : it->second;
  }
  bool is_acyclic() const noexcept { return dims.empty(); }

  friend bool operator==(const ReducedHomology&, const ReducedHomology&) = default;
};

struct HomologyOptions {
  /// Maximum number of faces in any one dimension.
  std::size_t face_cap = std::size_t{1} << 24;
  /// Check that consecutive boundary maps compose to zero.
  bool verify_boundaries = true;
};

namespace detail {

/// Signed boundary of the d-faces into the (d-1)-faces, d >= 1. Sign of a
/// face's k-th facet is (-1)^k.
template <class Field>
SparseMatrix<typename Field::value_type> boundary_matrix(const FaceList& faces,
                                                         const FaceList& lower,
                                                         const Field& field) {
  SparseMatrix<typename Field::value_type> m(lower.size(), faces.size());
  const std::size_t k = faces.stride();
  std::vector<Vertex> facet(k - 1);
  for (std::size_t c = 0; c < faces.size(); ++c) {
    auto face = faces[c];
    auto& col = m.col(c);
    for (std::size_t drop = 0; drop < k; ++drop) {
      for (std::size_t i = 0, o = 0; i < k; ++i)
        if (i != drop) facet[o++] = face[i];
      auto row = lower.find(facet);
      if (!row) throw InvariantViolation("face list is not closed under taking facets");
      col.emplace_back(static_cast<std::uint32_t>(*row), field.from_int(drop % 2 ? -1 : 1));
    }
    std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  }
  return m;
}

/// Asserts lower * upper == 0.
template <class Field>
void check_composition_zero(const SparseMatrix<typename Field::value_type>& lower,
                            const SparseMatrix<typename Field::value_type>& upper,
                            const Field& field) {
  using Scalar = typename Field::value_type;
  std::map<std::uint32_t, Scalar> acc;
  for (std::size_t c = 0; c < upper.cols(); ++c) {
    acc.clear();
    for (const auto& [mid, a] : upper.col(c))
      for (const auto& [row, b] : lower.col(mid)) {
        auto [it, fresh] = acc.try_emplace(row, field.from_int(0));
        it->second = field.add(it->second, field.mul(a, b));
      }
    for (const auto& [row, v] : acc)
      if (!field.is_zero(v)) throw InvariantViolation("boundary maps do not compose to zero");
  }
}

/// rank of d_1 via connected components (rank = #vertices - #components over any field).
inline std::size_t graph_boundary_rank(std::size_t vertices, const FaceList& edges) {
  std::vector<std::size_t> parent(vertices);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t rank = 0;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    auto a = find(edges[e][0]), b = find(edges[e][1]);
    if (a != b) {
      parent[a] = b;
      ++rank;
    }
  }
  return rank;
}

/// Vertex ids appearing in 0-faces are not necessarily 0..f0-1; remap.
inline FaceList remap_edges(const FaceList& vertices, const FaceList& edges) {
  FaceList out(1);
  Vertex pair[2];
  for (std::size_t e = 0; e < edges.size(); ++e) {
    pair[0] = static_cast<Vertex>(*vertices.find(edges[e].subspan(0, 1)));
    pair[1] = static_cast<Vertex>(*vertices.find(edges[e].subspan(1, 1)));
    out.push_back(pair);
  }
  return out;
}

template <FaceComplex C, class Field>
ReducedHomology homology_range(const C& complex, int lo, int hi, const Field& field,
                               const HomologyOptions& options, bool euler_check) {
  ReducedHomology out;
  if (complex.is_void()) return out;
  const int top = complex.dimension();
  lo = std::max(lo, -1);
  hi = std::min(hi, top);
  if (lo > hi) return out;

  // Faces in dimensions lo-1 .. hi+1 and ranks of d_lo .. d_{hi+1}.
  std::map<int, FaceList> faces;
  auto faces_of = [&](int d) -> const FaceList& {
    auto it = faces.find(d);
    if (it == faces.end()) it = faces.emplace(d, complex.faces(d, options.face_cap)).first;
    return it->second;
  };
  using Matrix = SparseMatrix<typename Field::value_type>;
  std::map<int, Matrix> boundaries;
  std::map<int, std::size_t> ranks;
  auto rank_of = [&](int d) -> std::size_t {
    if (auto it = ranks.find(d); it != ranks.end()) return it->second;
    std::size_t r = 0;
    if (d <= -1 || d > top) {
      r = 0;
    } else if (d == 0) {
      r = faces_of(0).empty() ? 0 : 1;  // augmentation
    } else if (d == 1) {
      r = graph_boundary_rank(faces_of(0).size(), remap_edges(faces_of(0), faces_of(1)));
    } else {
      auto m = boundary_matrix(faces_of(d), faces_of(d - 1), field);
      if (options.verify_boundaries) {
        auto below = boundaries.find(d - 1);
        if (below == boundaries.end())
          below = boundaries.emplace(d - 1, boundary_matrix(faces_of(d - 1), faces_of(d - 2), field)).first;
        check_composition_zero(below->second, m, field);
      }
      r = exact_rank(m, field);
      if (options.verify_boundaries) boundaries.emplace(d, std::move(m));
    }
    ranks.emplace(d, r);
    return r;
  };
  for (int k = lo; k <= hi; ++k) {
    const std::size_t f = faces_of(k).size();
    const std::size_t rk = rank_of(k), rk1 = rank_of(k + 1);
    if (rk + rk1 > f) throw InvariantViolation("rank exceeds face count");
    if (f - rk - rk1 > 0) out.dims[k] = f - rk - rk1;
  }
  if (euler_check) {
    // sum (-1)^i f_i over i >= -1 equals sum (-1)^i dim H~_i.
    std::int64_t lhs = 0, rhs = 0;
    for (int d = -1; d <= top; ++d)
      lhs += (d % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(faces_of(d).size());
    for (const auto& [d, v] : out.dims) rhs += (d % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(v);
    if (lhs != rhs) throw InvariantViolation("Euler characteristic mismatch");
  }
  return out;
}

}  // namespace detail

/// Reduced homology of the augmented chain complex over `field`.
/// VOID has no homology; EMPTY has H~_{-1} = K.
template <FaceComplex C>
ReducedHomology reduced_homology(const C& complex, const FieldSpec& field,
                                 const HomologyOptions& options = {}) {
  return visit_field(field, [&](const auto& f) {
    return detail::homology_range(complex, -1, complex.dimension(), f, options, true);
  });
}

/// Reduced homology restricted to dimensions lo..hi (only the faces those
/// dimensions need are enumerated).
template <FaceComplex C>
ReducedHomology reduced_homology(const C& complex, int lo, int hi, const FieldSpec& field,
                                 const HomologyOptions& options = {}) {
  return visit_field(field, [&](const auto& f) {
    const bool full = lo <= -1 && hi >= complex.dimension();
    return detail::homology_range(complex, lo, hi, f, options, full);
  });
}

}  // namespace lcmres
