#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lcmres/monomial.hpp"

namespace lcmres {

enum class OrderFamily { lex, deglex, degrevlex, weight };

std::string to_string(OrderFamily family);

/// A monomial order: one of the standard families under a variable
/// permutation, or a caller-supplied weight order.
///
/// `priority[0]` is the most significant variable (0-based). Weight orders
/// compare w.a only and are therefore partial; callers must reject ties on
/// the monomials they sort.
class MonomialOrder {
 public:
  MonomialOrder(OrderFamily family, std::vector<std::size_t> priority);
  static MonomialOrder weighted(std::vector<std::int64_t> weights);

  OrderFamily family() const noexcept { return family_; }
  const std::vector<std::size_t>& priority() const noexcept { return priority_; }
  const std::vector<std::int64_t>& weights() const noexcept { return weights_; }

  /// -1, 0, +1. Zero for distinct monomials only happens for weight orders.
  int compare(const ExponentVector& a, const ExponentVector& b) const;
  bool less(const ExponentVector& a, const ExponentVector& b) const { return compare(a, b) < 0; }

  /// Sorts ascending. Throws DomainError if two distinct monomials tie.
  std::vector<ExponentVector> sorted(std::span<const ExponentVector> monomials) const;

  std::string describe() const;

 private:
  OrderFamily family_;
  std::vector<std::size_t> priority_;
  std::vector<std::int64_t> weights_;
};

}  // namespace lcmres
