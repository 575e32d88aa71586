#include <numeric>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "lcmres/betti.hpp"
#include "lcmres/clutters.hpp"
#include "lcmres/errors.hpp"

using namespace lcmres;
using namespace lcmres::test;

namespace {

const FieldSpec kGF2 = FieldSpec::prime(2);
const FieldSpec kQQ = FieldSpec::rationals();

MonomialIdeal relabel(const MonomialIdeal& I, const std::vector<std::size_t>& perm) {
  std::vector<ExponentVector> gens;
  for (const auto& g : I.generators()) {
    std::vector<Exponent> e(I.ambient_dimension());
    for (std::size_t v = 0; v < e.size(); ++v) e[perm[v]] = g[v];
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal(I.ambient_dimension(), gens);
}

}  // namespace

TEST_CASE("betti examples") {
  const auto two = multigraded_betti(ideal(4, {"x1*x2", "x3*x4"}), kGF2);
  CHECK(two(1, mono(4, "x1*x2*x3*x4")) == 1);
  CHECK(two(0, mono(4, "x1*x2")) == 1);
  CHECK(two.coarse(1, 4) == 1);

  for (const auto& f : {kGF2, kQQ}) {
    const auto tri = multigraded_betti(ideal(3, {"x1*x2", "x1*x3", "x2*x3"}), f);
    CHECK(tri.coarse(0, 2) == 3);
    CHECK(tri.coarse(1, 3) == 2);
    CHECK(tri.projective_dimension() == 1);
  }
  const auto principal = multigraded_betti(ideal(1, {"x1"}), kGF2);
  CHECK(principal.fine().size() == 1);
  CHECK(principal(0, mono(1, "x1")) == 1);
  CHECK_THROWS_AS(multigraded_betti(MonomialIdeal(2), kGF2), DomainError);
}

TEST_CASE("taylor strand oracle examples") {
  const auto tri = ideal(3, {"x1*x2", "x1*x3", "x2*x3"});
  CHECK(taylor_strand_betti(tri, kGF2, mono(3, "x1*x2*x3"), 1) == 2);
  CHECK(taylor_strand_betti(tri, kGF2, mono(3, "x1^2*x2"), 1) == 0);
  CHECK(taylor_strand_betti(tri, kGF2, mono(3, "x1*x2"), 0) == 1);
  const auto two = ideal(4, {"x1*x2", "x3*x4"});
  const auto table = multigraded_betti(two, kQQ);
  const LcmLattice lattice(two);
  for (const auto& m : lattice.elements())
    for (int i = 0; i <= 2; ++i) CHECK(table(i, m) == taylor_strand_betti(two, kQQ, m, i));
}

TEST_CASE("regularity") {
  CHECK(regularity(ideal(4, {"x1*x2", "x3*x4"}), kGF2) == 3);
  CHECK(regularity(ideal(3, {"x1*x2*x3"}), kGF2) == 3);
  CHECK(regularity(sturmfels(), kQQ) == 3);
}

TEST_CASE("linear resolutions") {
  CHECK(has_linear_resolution(sturmfels(), kQQ).linear);
  CHECK(has_linear_resolution(sturmfels(), kGF2).linear);
  const auto two = has_linear_resolution(ideal(4, {"x1*x2", "x3*x4"}), kGF2);
  CHECK_FALSE(two.linear);
  REQUIRE(two.witness);
  CHECK(*two.witness == std::pair<int, std::uint64_t>{1, 4});
  CHECK_FALSE(has_linear_resolution(ideal(3, {"x1", "x2*x3"}), kGF2).linear);
  CHECK(has_linear_resolution(terai(), kQQ).linear);
  CHECK_FALSE(has_linear_resolution(terai(), kGF2).linear);
}

TEST_CASE("componentwise linearity") {
  CHECK(is_componentwise_linear(sturmfels(), kQQ).componentwise_linear);
  const auto two = is_componentwise_linear(ideal(4, {"x1*x2", "x3*x4"}), kGF2);
  CHECK_FALSE(two.componentwise_linear);
  REQUIRE(two.pieces.size() == 1);
  CHECK(two.pieces.front().degree == 2);
  const auto mixed = is_componentwise_linear(ideal(3, {"x1", "x2*x3"}), kGF2);
  REQUIRE(mixed.pieces.size() == 2);
  CHECK(mixed.pieces[0].degree == 1);
  CHECK(mixed.pieces[1].degree == 2);
  CHECK(mixed.componentwise_linear);
  CHECK(mixed.relies_on_degree_propagation);
}

TEST_CASE("betti diagram layout") {
  const auto text = render_betti_diagram(multigraded_betti(ideal(3, {"x1*x2", "x1*x3", "x2*x3"}), kGF2));
  CHECK(text.find("total: 3 2") != std::string::npos);
  CHECK(text.find("2: 3 2") != std::string::npos);
  const auto q = render_betti_diagram(multigraded_betti(ideal(4, {"x1*x2", "x3*x4"}), kGF2), true);
  CHECK(q.find("total: 1 2 1") != std::string::npos);
  CHECK(q.find("0: 1 . .") != std::string::npos);
}

TEST_CASE("coarse_betti matches the full table") {
  const auto I = power(ideal(4, {"x1*x2", "x3*x4"}), 2);
  const auto table = multigraded_betti(I, kQQ);
  for (int i = 0; i <= 2; ++i)
    for (std::uint64_t j = 4; j <= 8; ++j) CHECK(coarse_betti(I, kQQ, i, j) == table.coarse(i, j));
}

TEST_CASE("property: betti invariants on random ideals") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const auto I = random_monomial_ideal(4, 5, 2, rng);
    const auto gf2 = multigraded_betti(I, kGF2);
    const auto qq = multigraded_betti(I, kQQ);
    const LcmLattice L(I);
    for (const auto& [key, value] : gf2.fine()) {
      CHECK(L.contains(key.second));
      CHECK(key.first <= static_cast<int>(I.size()) - 1);
    }
    for (const auto& g : I.generators()) CHECK(gf2(0, g) == 1);
    for (const auto& m : L.elements()) CHECK(gf2(1, m) == qq(1, m));
    CHECK(regularity(gf2) >= static_cast<std::int64_t>(I.max_degree()));
    if (I.min_degree() == I.max_degree())
      CHECK((regularity(gf2) == static_cast<std::int64_t>(I.max_degree())) == has_linear_resolution(I, kGF2).linear);

    std::vector<std::size_t> perm(4);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(multigraded_betti(relabel(I, perm), kGF2).coarse_table() == gf2.coarse_table());
  }
}

TEST_CASE("property: linearity predicate agrees with the full table") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 60; ++trial) {
    const auto I = random_squarefree_ideal(5, 4, 3, rng);
    for (const auto& f : {kGF2, kQQ}) {
      const auto table = multigraded_betti(I, f);
      bool linear = I.min_degree() == I.max_degree();
      for (const auto& [key, value] : table.coarse_table())
        if (key.second != key.first + I.min_degree()) linear = false;
      CHECK(has_linear_resolution(I, f).linear == linear);
    }
  }
}
