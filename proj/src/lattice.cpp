#include "lcmres/lattice.hpp"

#include <algorithm>
#include <deque>

#include "lcmres/errors.hpp"

namespace lcmres {

LcmLattice::LcmLattice(const MonomialIdeal& ideal, std::size_t cap) : atoms_(ideal.generators()) {
  if (ideal.is_zero()) throw DomainError("the lcm lattice of the zero ideal is undefined");
  std::unordered_map<ExponentVector, std::size_t, ExponentVectorHash> seen;
  std::vector<ExponentVector> found;
  std::deque<std::size_t> work;
  auto add = [&](ExponentVector m) {
    if (seen.count(m)) return;
    if (found.size() + 1 > cap) throw ResourceError("lattice elements", cap, found.size() + 1);
    seen.emplace(m, found.size());
    work.push_back(found.size());
    found.push_back(std::move(m));
  };
  for (const auto& a : atoms_) add(a);
  // Every subset lcm is reached by joining atoms one at a time.
  while (!work.empty()) {
    std::size_t i = work.front();
    work.pop_front();
    for (const auto& a : atoms_) add(lcm(found[i], a));
  }
  if (found.size() + 1 > cap) throw ResourceError("lattice elements", cap, found.size() + 1);
  found.emplace_back(ideal.ambient_dimension());
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    auto da = a.degree(), db = b.degree();
    return da != db ? da < db : a < b;
  });
  elements_ = std::move(found);
  index_.reserve(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], i);

  // rank(p) = 1 + max rank over elements strictly below p; atoms have rank 1.
  rank_.assign(elements_.size(), 0);
  for (std::size_t i = 1; i < elements_.size(); ++i) {
    std::size_t best = 0;
    for (std::size_t j = 1; j < i; ++j)
      if (rank_[j] >= best && strictly_divides(elements_[j], elements_[i])) best = rank_[j];
    rank_[i] = best + 1;
  }
}

std::optional<std::size_t> LcmLattice::index_of(const ExponentVector& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<ExponentVector> LcmLattice::open_interval(std::size_t index) const {
  std::vector<ExponentVector> out;
  const auto& m = elements_[index];
  for (std::size_t j = 1; j < index; ++j)
    if (elements_[j].degree() < m.degree() && divides(elements_[j], m)) out.push_back(elements_[j]);
  return out;
}

std::vector<std::size_t> LcmLattice::lower_covers(std::size_t index) const {
  std::vector<std::size_t> below;
  for (std::size_t j = 0; j < index; ++j)
    if (strictly_divides(elements_[j], elements_[index])) below.push_back(j);
  std::vector<std::size_t> out;
  for (std::size_t j : below) {
    bool covered = std::none_of(below.begin(), below.end(), [&](std::size_t k) {
      return k != j && strictly_divides(elements_[j], elements_[k]);
    });
    if (covered) out.push_back(j);
  }
  return out;
}

std::vector<ExponentVector> open_interval(const LcmLattice& lattice, const ExponentVector& m) {
  auto idx = lattice.index_of(m);
  if (!idx) throw DomainError(to_string(m) + " is not an element of the lcm lattice");
  return lattice.open_interval(*idx);
}

std::string dump_lattice(const LcmLattice& lattice) {
  std::string out;
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    out += to_string(lattice[i]);
    out += " :";
    for (std::size_t j : lattice.lower_covers(i)) {
      out += ' ';
      out += to_string(lattice[j]);
    }
    out += '\n';
  }
  return out;
}

}  // namespace lcmres
