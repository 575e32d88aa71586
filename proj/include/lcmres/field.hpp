#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lcmres {

/// Coefficient field selector: GF(p) for a prime p, or the rationals.
class FieldSpec {
 public:
  enum class Kind { prime, rational };

  /// GF(2).
  FieldSpec() = default;

  /// Throws DomainError unless p is prime and below 2^31.
  static FieldSpec prime(std::uint32_t p);
  static FieldSpec rationals() { return FieldSpec(Kind::rational, 0); }
  /// Accepts `gf2`, `gf<p>`, `rational` (also `qq`, `q`, `char0`).
  static FieldSpec parse(std::string_view token);

  Kind kind() const noexcept { return kind_; }
  std::uint32_t characteristic() const noexcept { return p_; }
  /// `GF(2)`, `GF(3)`, `QQ`.
  std::string name() const;
  /// Round-trips through parse(): `gf2`, `gf3`, `rational`.
  std::string token() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  FieldSpec(Kind kind, std::uint32_t p) : kind_(kind), p_(p) {}

  Kind kind_ = Kind::prime;
  std::uint32_t p_ = 2;
};

bool is_prime(std::uint64_t p);

/// Column of a sparse matrix: (row, value) pairs with strictly increasing rows.
template <class Scalar>
using SparseColumn = std::vector<std::pair<std::uint32_t, Scalar>>;

/// Arithmetic of GF(p).
class PrimeField {
 public:
  using value_type = std::uint32_t;

  explicit PrimeField(std::uint32_t p) : p_(p) {}

  std::uint32_t characteristic() const noexcept { return p_; }
  value_type from_int(std::int64_t v) const noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<value_type>(r < 0 ? r + p_ : r);
  }
  value_type add(value_type a, value_type b) const noexcept {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<value_type>(s >= p_ ? s - p_ : s);
  }
  value_type sub(value_type a, value_type b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  value_type mul(value_type a, value_type b) const noexcept {
    return static_cast<value_type>(std::uint64_t{a} * b % p_);
  }
  value_type inv(value_type a) const noexcept;
  bool is_zero(value_type a) const noexcept { return a == 0; }

  /// target -= (target.back / pivot.back) * pivot. Both columns share their
  /// last row, which cancels.
  void eliminate(SparseColumn<value_type>& target, const SparseColumn<value_type>& pivot) const;

 private:
  std::uint32_t p_;
};

/// The rationals, realized by fraction-free elimination over the integers.
class RationalField {
 public:
  using value_type = mpz_class;

  std::uint32_t characteristic() const noexcept { return 0; }
  value_type from_int(std::int64_t v) const { return value_type(static_cast<long>(v)); }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  bool is_zero(const value_type& a) const { return sgn(a) == 0; }

  /// target <- (b/g) * target - (a/g) * pivot with a, b the last entries and
  /// g = gcd(a, b), then divides target by the gcd of its entries.
  void eliminate(SparseColumn<value_type>& target, const SparseColumn<value_type>& pivot) const;
};

/// Calls f with the PrimeField or RationalField described by `spec`.
template <class F>
decltype(auto) visit_field(const FieldSpec& spec, F&& f) {
  if (spec.kind() == FieldSpec::Kind::rational) return std::forward<F>(f)(RationalField{});
  return std::forward<F>(f)(PrimeField{spec.characteristic()});
}

}  // namespace lcmres
