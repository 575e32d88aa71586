#include "lcmres/field.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "lcmres/errors.hpp"

namespace lcmres {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime(std::uint32_t p) {
  if (!is_prime(p) || p >= (1u << 31)) throw DomainError(std::to_string(p) + " is not a usable prime");
  return FieldSpec(Kind::prime, p);
}

FieldSpec FieldSpec::parse(std::string_view token) {
  std::string t(token);
  std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return std::tolower(c); });
  if (t == "rational" || t == "rationals" || t == "qq" || t == "q" || t == "char0") return rationals();
  if (t.rfind("gf", 0) == 0) {
    std::uint32_t p = 0;
    auto [ptr, ec] = std::from_chars(t.data() + 2, t.data() + t.size(), p);
    if (ec == std::errc() && ptr == t.data() + t.size()) return prime(p);
  }
  throw ParseError("unknown field '" + std::string(token) + "' (expected gf2, gf<p> or rational)", 0, 0);
}

std::string FieldSpec::name() const {
  return kind_ == Kind::rational ? "QQ" : "GF(" + std::to_string(p_) + ")";
}

std::string FieldSpec::token() const {
  return kind_ == Kind::rational ? "rational" : "gf" + std::to_string(p_);
}

PrimeField::value_type PrimeField::inv(value_type a) const noexcept {
  // a^(p-2) by square and multiply.
  value_type result = 1, base = a;
  for (std::uint32_t e = p_ - 2; e; e >>= 1) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
  }
  return result;
}

void PrimeField::eliminate(SparseColumn<value_type>& target,
                           const SparseColumn<value_type>& pivot) const {
  const value_type factor = mul(target.back().second, inv(pivot.back().second));
  SparseColumn<value_type> out;
  out.reserve(target.size() + pivot.size());
  auto a = target.cbegin();
  auto b = pivot.cbegin();
  while (a != target.cend() || b != pivot.cend()) {
    if (b == pivot.cend() || (a != target.cend() && a->first < b->first)) {
      out.push_back(*a++);
    } else if (a == target.cend() || b->first < a->first) {
      out.emplace_back(b->first, sub(0, mul(factor, b->second)));
      ++b;
    } else {
      value_type v = sub(a->second, mul(factor, b->second));
      if (v != 0) out.emplace_back(a->first, v);
      ++a;
      ++b;
    }
  }
  target = std::move(out);
}

void RationalField::eliminate(SparseColumn<value_type>& target,
                              const SparseColumn<value_type>& pivot) const {
  mpz_class g = gcd(target.back().second, pivot.back().second);
  const mpz_class scale_target = pivot.back().second / g;
  const mpz_class scale_pivot = target.back().second / g;
  SparseColumn<value_type> out;
  out.reserve(target.size() + pivot.size());
  auto a = target.cbegin();
  auto b = pivot.cbegin();
  while (a != target.cend() || b != pivot.cend()) {
    if (b == pivot.cend() || (a != target.cend() && a->first < b->first)) {
      out.emplace_back(a->first, scale_target * a->second);
      ++a;
    } else if (a == target.cend() || b->first < a->first) {
      out.emplace_back(b->first, -(scale_pivot * b->second));
      ++b;
    } else {
      mpz_class v = scale_target * a->second - scale_pivot * b->second;
      if (sgn(v) != 0) out.emplace_back(a->first, std::move(v));
      ++a;
      ++b;
    }
  }
  if (!out.empty()) {
    mpz_class content = 0;
    for (const auto& [row, v] : out) {
      content = gcd(content, v);
      if (content == 1) break;
    }
    if (content > 1)
      for (auto& entry : out) entry.second /= content;
  }
  target = std::move(out);
}

}  // namespace lcmres
