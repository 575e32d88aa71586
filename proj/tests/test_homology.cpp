#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "lcmres/errors.hpp"
#include "lcmres/field.hpp"
#include "lcmres/homology.hpp"

using namespace lcmres;

namespace {

const FieldSpec kFields[] = {FieldSpec::prime(2), FieldSpec::prime(3), FieldSpec::rationals()};

SimplicialComplex tetrahedron_boundary() { return {4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}}; }

template <class Field>
std::size_t rank_of(const std::vector<std::vector<std::int64_t>>& rows, const Field& f) {
  return exact_rank(SparseMatrix<typename Field::value_type>::from_dense(rows, f), f);
}

}  // namespace

TEST_CASE("field specs") {
  CHECK(FieldSpec::parse("gf2") == FieldSpec::prime(2));
  CHECK(FieldSpec::parse("GF7") == FieldSpec::prime(7));
  CHECK(FieldSpec::parse("rational") == FieldSpec::rationals());
  CHECK(FieldSpec::parse("qq") == FieldSpec::rationals());
  CHECK_THROWS_AS(FieldSpec::parse("gf4"), DomainError);
  CHECK_THROWS(FieldSpec::parse("reals"));
  CHECK(FieldSpec::prime(5).name() == "GF(5)");
}

TEST_CASE("exact rank") {
  const std::vector<std::vector<std::int64_t>> id{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  const std::vector<std::vector<std::int64_t>> ones{{1, 1}, {1, 1}};
  // Boundary of the hollow triangle: edges 01, 02, 12 into vertices.
  const std::vector<std::vector<std::int64_t>> d1{{-1, -1, 0}, {1, 0, -1}, {0, 1, 1}};
  CHECK(rank_of(id, PrimeField(2)) == 3);
  CHECK(rank_of(id, RationalField()) == 3);
  CHECK(rank_of(ones, PrimeField(2)) == 1);
  CHECK(rank_of(d1, RationalField()) == 2);
  CHECK(rank_of(d1, PrimeField(2)) == 2);
  // det = 2: full rank over QQ and GF(3), rank 1 over GF(2).
  const std::vector<std::vector<std::int64_t>> two{{1, 1}, {1, -1}};
  CHECK(rank_of(two, RationalField()) == 2);
  CHECK(rank_of(two, PrimeField(3)) == 2);
  CHECK(rank_of(two, PrimeField(2)) == 1);
}

TEST_CASE("homology convention fixtures") {
  for (const auto& f : kFields) {
    CAPTURE(f.name());
    CHECK(reduced_homology(SimplicialComplex::void_complex(), f).dims.empty());
    const auto empty = reduced_homology(SimplicialComplex::empty_complex(), f);
    CHECK(empty[-1] == 1);
    CHECK(empty.dims.size() == 1);
    const auto points = reduced_homology(SimplicialComplex(2, {{0}, {1}}), f);
    CHECK(points.dims == std::map<int, std::uint64_t>{{0, 1}});
    const auto triangle = reduced_homology(SimplicialComplex(3, {{0, 1}, {1, 2}, {0, 2}}), f);
    CHECK(triangle.dims == std::map<int, std::uint64_t>{{1, 1}});
    const auto sphere = reduced_homology(tetrahedron_boundary(), f);
    CHECK(sphere.dims == std::map<int, std::uint64_t>{{2, 1}});
    CHECK(reduced_homology(SimplicialComplex(3, {{0, 1, 2}}), f).is_acyclic());
  }
}

TEST_CASE("real projective plane is field sensitive") {
  // The 6-vertex triangulation: H~_1 = H~_2 = 1 over GF(2), acyclic over QQ.
  // Its facets are the ten triangles that are not minimal non-faces.
  const std::set<std::vector<Vertex>> non_faces{{0, 1, 2}, {0, 1, 4}, {0, 2, 5}, {0, 3, 4}, {0, 3, 5},
                                                {1, 2, 3}, {1, 3, 5}, {1, 4, 5}, {2, 3, 4}, {2, 4, 5}};
  std::vector<std::vector<Vertex>> facets;
  for (Vertex a = 0; a < 6; ++a)
    for (Vertex b = a + 1; b < 6; ++b)
      for (Vertex c = b + 1; c < 6; ++c)
        if (!non_faces.count({a, b, c})) facets.push_back({a, b, c});
  const SimplicialComplex rp2(6, facets);
  const auto gf2 = reduced_homology(rp2, FieldSpec::prime(2));
  CHECK(gf2[1] == 1);
  CHECK(gf2[2] == 1);
  CHECK(reduced_homology(rp2, FieldSpec::rationals()).is_acyclic());
  CHECK(reduced_homology(rp2, FieldSpec::prime(3)).is_acyclic());
}

TEST_CASE("face cap") {
  HomologyOptions o;
  o.face_cap = 3;
  CHECK_THROWS_AS(reduced_homology(tetrahedron_boundary(), FieldSpec::prime(2), o), ResourceError);
}

TEST_CASE("property: H~_0 is field independent and labels do not matter") {
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<int> coin(0, 2);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 6;
    std::vector<std::vector<Vertex>> facets;
    for (Vertex a = 0; a < n; ++a)
      for (Vertex b = a + 1; b < n; ++b)
        for (Vertex c = b + 1; c < n; ++c)
          if (coin(rng) == 0 && facets.size() < 7) facets.push_back({a, b, c});
    if (facets.empty()) continue;
    const SimplicialComplex K(n, facets);
    const auto gf2 = reduced_homology(K, FieldSpec::prime(2));
    const auto gf3 = reduced_homology(K, FieldSpec::prime(3));
    const auto qq = reduced_homology(K, FieldSpec::rationals());
    CHECK(gf2[0] == gf3[0]);
    CHECK(gf2[0] == qq[0]);

    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    auto relabelled = facets;
    for (auto& f : relabelled) {
      for (auto& v : f) v = perm[v];
      std::sort(f.begin(), f.end());
    }
    CHECK(reduced_homology(SimplicialComplex(n, relabelled), FieldSpec::rationals()) == qq);
    CHECK(reduced_homology(SimplicialComplex(n, relabelled), FieldSpec::prime(2)) == gf2);
  }
}
