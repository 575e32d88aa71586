#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lcmres {

using Exponent = std::uint32_t;

/// Exponent vector a = (a_1, ..., a_n) of the monomial x^a.
///
/// The ambient variable count n is part of the value; binary operations on
/// vectors of different length throw DimensionError. Ordering is
/// lexicographic on the exponent tuple.
class ExponentVector {
 public:
  ExponentVector() = default;

  /// The monomial 1 in n variables.
  explicit ExponentVector(std::size_t n) : exps_(n, 0) {}
  explicit ExponentVector(std::vector<Exponent> exps) : exps_(std::move(exps)) {}
  ExponentVector(std::initializer_list<Exponent> exps) : exps_(exps) {}

  /// x_{index+1} in n variables (index is 0-based).
  static ExponentVector variable(std::size_t n, std::size_t index);

  std::size_t size() const noexcept { return exps_.size(); }
  Exponent operator[](std::size_t i) const noexcept { return exps_[i]; }
  std::span<const Exponent> exponents() const noexcept { return exps_; }

  /// Total degree |a| = a_1 + ... + a_n.
  std::uint64_t degree() const noexcept;
  bool is_one() const noexcept;
  bool is_squarefree() const noexcept;

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
  friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;

 private:
  std::vector<Exponent> exps_;
};

struct ExponentVectorHash {
  std::size_t operator()(const ExponentVector& a) const noexcept;
};

/// Componentwise max.
ExponentVector lcm(const ExponentVector& a, const ExponentVector& b);
/// Componentwise min.
ExponentVector gcd(const ExponentVector& a, const ExponentVector& b);
/// a | b, i.e. a <= b componentwise.
bool divides(const ExponentVector& a, const ExponentVector& b);
/// Strict divisibility: a | b and a != b.
bool strictly_divides(const ExponentVector& a, const ExponentVector& b);
bool coprime(const ExponentVector& a, const ExponentVector& b);
/// Componentwise sum; throws DomainError on exponent overflow.
ExponentVector operator*(const ExponentVector& a, const ExponentVector& b);
/// a / b; requires b | a.
ExponentVector operator/(const ExponentVector& a, const ExponentVector& b);
ExponentVector pow(const ExponentVector& a, unsigned s);
/// 0-based indices of the variables dividing a.
std::vector<std::size_t> support(const ExponentVector& a);
/// True when supp(a) is contained in supp(b).
bool support_subset(const ExponentVector& a, const ExponentVector& b);

/// Renders as `x1*x2^2`; the monomial 1 renders as `1`.
std::string to_string(const ExponentVector& a);

/// Parses the grammar `x<idx>[^<exp>]` joined by `*` (1-indexed variables).
/// Repeated variables multiply. Throws ParseError with the 1-based column
/// (offset by `column_offset`) of the offending character.
ExponentVector parse_monomial(std::string_view text, std::size_t n, std::size_t line = 0,
                              std::size_t column_offset = 0);

/// A monomial ideal stored through its minimal generating set G(I).
///
/// Generators are kept as a divisibility antichain in ascending lexicographic
/// order, so two ideals are equal iff their generator lists are equal. The
/// unit ideal is rejected at construction.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  /// The zero ideal in n variables.
  explicit MonomialIdeal(std::size_t n) : n_(n) {}
  /// Minimalizes the input; throws DomainError if 1 is among the monomials.
  MonomialIdeal(std::size_t n, std::vector<ExponentVector> monomials);

  std::size_t ambient_dimension() const noexcept { return n_; }
  const std::vector<ExponentVector>& generators() const noexcept { return gens_; }
  std::size_t size() const noexcept { return gens_.size(); }
  bool is_zero() const noexcept { return gens_.empty(); }
  bool contains(const ExponentVector& m) const;
  std::uint64_t min_degree() const;
  std::uint64_t max_degree() const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<ExponentVector> gens_;
};

/// Divisibility-minimal elements of `monomials`, as an ideal in n variables.
MonomialIdeal minimalize(std::size_t n, std::span<const ExponentVector> monomials);

MonomialIdeal operator*(const MonomialIdeal& a, const MonomialIdeal& b);
/// Minimal generators of I^s, s >= 1, by iterated product and minimalization.
MonomialIdeal power(const MonomialIdeal& ideal, unsigned s);
/// I_<j>: the ideal generated by the degree-j monomials of I.
/// Throws ResourceError when more than `max_generators` monomials arise.
MonomialIdeal componentwise_piece(const MonomialIdeal& ideal, std::uint64_t j,
                                  std::size_t max_generators = 1u << 16);
/// I : u. Throws DomainError when u lies in I (the colon is the unit ideal).
MonomialIdeal colon(const MonomialIdeal& ideal, const ExponentVector& u);

struct StructuralFlags {
  bool is_squarefree = true;
  bool contains_variable = false;
  std::uint64_t min_degree = 0;
  std::uint64_t max_degree = 0;
};

StructuralFlags structural_flags(const MonomialIdeal& ideal);

/// All monomials of total degree d in n variables, in descending lex order.
std::vector<ExponentVector> monomials_of_degree(std::size_t n, std::uint64_t d);

/// Renders as `(x1*x2, x3*x4)`; the zero ideal renders as `(0)`.
std::string to_string(const MonomialIdeal& ideal);

}  // namespace lcmres
