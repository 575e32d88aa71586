#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "lcmres/monomial.hpp"

namespace lcmres::test {

inline ExponentVector mono(std::size_t n, const std::string& text) { return parse_monomial(text, n); }

inline MonomialIdeal ideal(std::size_t n, std::initializer_list<const char*> gens) {
  std::vector<ExponentVector> m;
  for (auto g : gens) m.push_back(parse_monomial(g, n));
  return MonomialIdeal(n, m);
}

inline std::vector<ExponentVector> monos(std::size_t n, std::initializer_list<const char*> texts) {
  std::vector<ExponentVector> out;
  for (auto t : texts) out.push_back(parse_monomial(t, n));
  return out;
}

/// The Sturmfels ideal (8 cubics in 6 variables).
inline MonomialIdeal sturmfels() {
  return ideal(6, {"x4*x5*x6", "x3*x5*x6", "x3*x4*x6", "x3*x4*x5", "x2*x5*x6", "x2*x3*x4", "x1*x3*x6", "x1*x4*x5"});
}

/// Stanley-Reisner ideal of the 6-vertex triangulation of the real
/// projective plane; the last generator completes the truncated listing.
inline MonomialIdeal terai() {
  return ideal(6, {"x1*x2*x3", "x1*x2*x5", "x1*x3*x6", "x1*x4*x5", "x1*x4*x6", "x2*x3*x4", "x2*x4*x6", "x2*x5*x6",
                   "x3*x4*x5", "x3*x5*x6"});
}

/// Monomial membership by direct divisibility against a list of generators.
inline bool member(const std::vector<ExponentVector>& gens, const ExponentVector& m) {
  for (const auto& g : gens)
    if (divides(g, m)) return true;
  return false;
}

}  // namespace lcmres::test
