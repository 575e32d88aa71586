#include "lcmres/monomial_order.hpp"

#include <algorithm>
#include <numeric>

#include "lcmres/errors.hpp"

namespace lcmres {

std::string to_string(OrderFamily family) {
  switch (family) {
    case OrderFamily::lex: return "lex";
    case OrderFamily::deglex: return "deglex";
    case OrderFamily::degrevlex: return "degrevlex";
    case OrderFamily::weight: return "weight";
  }
  return "?";
}

MonomialOrder::MonomialOrder(OrderFamily family, std::vector<std::size_t> priority)
    : family_(family), priority_(std::move(priority)) {
  if (family == OrderFamily::weight) throw DomainError("use MonomialOrder::weighted for weight orders");
  std::vector<std::size_t> check = priority_;
  std::sort(check.begin(), check.end());
  for (std::size_t i = 0; i < check.size(); ++i)
    if (check[i] != i) throw DomainError("variable priority is not a permutation");
}

MonomialOrder MonomialOrder::weighted(std::vector<std::int64_t> weights) {
  MonomialOrder order(OrderFamily::lex, {});
  order.family_ = OrderFamily::weight;
  order.weights_ = std::move(weights);
  return order;
}

int MonomialOrder::compare(const ExponentVector& a, const ExponentVector& b) const {
  if (a.size() != b.size()) throw DimensionError("monomials live in different rings");
  auto sign = [](auto x, auto y) { return x < y ? -1 : (x > y ? 1 : 0); };
  if (family_ == OrderFamily::weight) {
    if (weights_.size() != a.size()) throw DimensionError("weight vector has wrong length");
    std::int64_t wa = 0, wb = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      wa += weights_[i] * static_cast<std::int64_t>(a[i]);
      wb += weights_[i] * static_cast<std::int64_t>(b[i]);
    }
    return sign(wa, wb);
  }
  if (priority_.size() != a.size()) throw DimensionError("variable priority has wrong length");
  if (family_ != OrderFamily::lex) {
    if (int c = sign(a.degree(), b.degree())) return c;
  }
  if (family_ == OrderFamily::degrevlex) {
    // Larger monomial has the smaller exponent in the least significant differing variable.
    for (std::size_t k = priority_.size(); k-- > 0;) {
      const auto v = priority_[k];
      if (int c = sign(a[v], b[v])) return -c;
    }
    return 0;
  }
  for (std::size_t v : priority_)
    if (int c = sign(a[v], b[v])) return c;
  return 0;
}

std::vector<ExponentVector> MonomialOrder::sorted(std::span<const ExponentVector> monomials) const {
  std::vector<ExponentVector> out(monomials.begin(), monomials.end());
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) { return less(a, b); });
  for (std::size_t i = 1; i < out.size(); ++i) {
    if (compare(out[i - 1], out[i]) == 0 && out[i - 1] != out[i]) {
      throw DomainError("order " + describe() + " ties " + to_string(out[i - 1]) + " and " +
                        to_string(out[i]) + "; it is not total on these monomials");
    }
  }
  return out;
}

std::string MonomialOrder::describe() const {
  std::string out = to_string(family_) + "(";
  if (family_ == OrderFamily::weight) {
    for (std::size_t i = 0; i < weights_.size(); ++i)
      out += (i ? "," : "") + std::to_string(weights_[i]);
  } else {
    for (std::size_t i = 0; i < priority_.size(); ++i)
      out += (i ? ">" : "") + std::string("x") + std::to_string(priority_[i] + 1);
  }
  return out + ")";
}

}  // namespace lcmres
