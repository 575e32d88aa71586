#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "lcmres/clutters.hpp"
#include "lcmres/complex.hpp"
#include "lcmres/errors.hpp"
#include "lcmres/lattice.hpp"

using namespace lcmres;
using namespace lcmres::test;

namespace {

std::vector<ExponentVector> sorted(std::vector<ExponentVector> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("lattice examples") {
  CHECK(sorted(LcmLattice(ideal(4, {"x1*x2", "x3*x4"})).elements()) ==
        sorted({ExponentVector(4), mono(4, "x1*x2"), mono(4, "x3*x4"), mono(4, "x1*x2*x3*x4")}));
  CHECK(sorted(LcmLattice(ideal(3, {"x1*x2", "x1*x3", "x2*x3"})).elements()) ==
        sorted({ExponentVector(3), mono(3, "x1*x2"), mono(3, "x1*x3"), mono(3, "x2*x3"), mono(3, "x1*x2*x3")}));
  const LcmLattice principal(ideal(1, {"x1"}));
  CHECK(principal.size() == 2);
  CHECK(principal.bottom().is_one());
  CHECK(principal.top() == mono(1, "x1"));
  CHECK_THROWS_AS(LcmLattice(MonomialIdeal(2)), DomainError);
  CHECK_THROWS_AS(LcmLattice(sturmfels(), 10), ResourceError);
}

TEST_CASE("open intervals") {
  const LcmLattice two(ideal(4, {"x1*x2", "x3*x4"}));
  CHECK(sorted(open_interval(two, mono(4, "x1*x2*x3*x4"))) == sorted(monos(4, {"x1*x2", "x3*x4"})));
  CHECK(open_interval(two, mono(4, "x1*x2")).empty());
  const LcmLattice tri(ideal(3, {"x1*x2", "x1*x3", "x2*x3"}));
  CHECK(sorted(open_interval(tri, mono(3, "x1*x2*x3"))) == sorted(monos(3, {"x1*x2", "x1*x3", "x2*x3"})));
  CHECK_THROWS_AS(open_interval(two, mono(4, "x1*x3")), DomainError);
}

TEST_CASE("order complexes") {
  auto isolated = order_complex(monos(4, {"x1*x2", "x3*x4"}));
  CHECK(isolated.dimension() == 0);
  CHECK(isolated.faces(0).size() == 2);
  CHECK(isolated.component_count() == 2);
  auto edge = order_complex(monos(3, {"x1*x2", "x1*x2*x3"}));
  CHECK(edge.dimension() == 1);
  CHECK(edge.faces(1).size() == 1);
  CHECK(order_complex({}).is_void());
  CHECK(order_complex({}).dimension() == kVoidDimension);
}

TEST_CASE("dump format") {
  const LcmLattice tri(ideal(3, {"x1*x2", "x1*x3", "x2*x3"}));
  const auto dump = dump_lattice(tri);
  CHECK(dump.find("x1*x2*x3 : ") != std::string::npos);
  CHECK(std::count(dump.begin(), dump.end(), '\n') == 5);
}

TEST_CASE("property: lattice invariants on random ideals") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 80; ++trial) {
    const auto I = random_monomial_ideal(4, 5, 2, rng);
    const LcmLattice L(I);
    const auto& e = L.elements();
    CHECK(L.bottom().is_one());
    CHECK(L.size() <= (std::size_t{1} << I.size()) + 1);
    ExponentVector top(4);
    for (const auto& g : I.generators()) top = lcm(top, g);
    CHECK(L.top() == top);
    CHECK(sorted(L.atoms()) == sorted(I.generators()));
    for (const auto& p : e)
      for (const auto& q : e) CHECK(L.contains(lcm(p, q)));
    for (std::size_t i = 1; i < e.size(); ++i) {
      // Each element is the join of the atoms below it.
      ExponentVector join(4);
      for (const auto& a : I.generators())
        if (divides(a, e[i])) join = lcm(join, a);
      CHECK(join == e[i]);
      // Chains of the interval complex are pairwise comparable.
      const auto complex = order_complex(L.open_interval(i));
      for (int d = 1; d <= complex.dimension(); ++d) {
        const auto faces = complex.faces(d);
        for (std::size_t f = 0; f < faces.size(); ++f) {
          auto face = faces[f];
          for (std::size_t a = 0; a < face.size(); ++a)
            for (std::size_t b = a + 1; b < face.size(); ++b) {
              const auto& x = complex.vertices()[face[a]];
              const auto& y = complex.vertices()[face[b]];
              CHECK((divides(x, y) || divides(y, x)));
            }
        }
      }
    }
  }
}
