#include "lcmres/monomial.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <numeric>
#include <unordered_set>

#include "lcmres/errors.hpp"

namespace lcmres {

namespace {

void check_same_dimension(const ExponentVector& a, const ExponentVector& b) {
  if (a.size() != b.size()) {
    throw DimensionError("monomials live in " + std::to_string(a.size()) + " and " +
                         std::to_string(b.size()) + " variables");
  }
}

template <class Op>
ExponentVector zip(const ExponentVector& a, const ExponentVector& b, Op op) {
  check_same_dimension(a, b);
  std::vector<Exponent> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = op(a[i], b[i]);
  return ExponentVector(std::move(out));
}

}  // namespace

ExponentVector ExponentVector::variable(std::size_t n, std::size_t index) {
  if (index >= n) throw DomainError("variable index out of range");
  ExponentVector v(n);
  v.exps_[index] = 1;
  return v;
}

std::uint64_t ExponentVector::degree() const noexcept {
  return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

bool ExponentVector::is_one() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

bool ExponentVector::is_squarefree() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e <= 1; });
}

std::size_t ExponentVectorHash::operator()(const ExponentVector& a) const noexcept {
  // FNV-1a over the exponents.
  std::uint64_t h = 1469598103934665603ull;
  for (Exponent e : a.exponents()) {
    h ^= e;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

ExponentVector lcm(const ExponentVector& a, const ExponentVector& b) {
  return zip(a, b, [](Exponent x, Exponent y) { return std::max(x, y); });
}

ExponentVector gcd(const ExponentVector& a, const ExponentVector& b) {
  return zip(a, b, [](Exponent x, Exponent y) { return std::min(x, y); });
}

bool divides(const ExponentVector& a, const ExponentVector& b) {
  check_same_dimension(a, b);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

bool strictly_divides(const ExponentVector& a, const ExponentVector& b) {
  return divides(a, b) && a != b;
}

bool coprime(const ExponentVector& a, const ExponentVector& b) {
  check_same_dimension(a, b);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

ExponentVector operator*(const ExponentVector& a, const ExponentVector& b) {
  return zip(a, b, [](Exponent x, Exponent y) {
    if (x > std::numeric_limits<Exponent>::max() - y) throw DomainError("exponent overflow");
    return x + y;
  });
}

ExponentVector operator/(const ExponentVector& a, const ExponentVector& b) {
  if (!divides(b, a)) throw DomainError(to_string(b) + " does not divide " + to_string(a));
  return zip(a, b, [](Exponent x, Exponent y) { return x - y; });
}

ExponentVector pow(const ExponentVector& a, unsigned s) {
  ExponentVector out(a.size());
  for (unsigned k = 0; k < s; ++k) out = out * a;
  return out;
}

std::vector<std::size_t> support(const ExponentVector& a) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0) out.push_back(i);
  return out;
}

bool support_subset(const ExponentVector& a, const ExponentVector& b) {
  check_same_dimension(a, b);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] == 0) return false;
  return true;
}

std::string to_string(const ExponentVector& a) {
  std::string out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x';
    out += std::to_string(i + 1);
    if (a[i] > 1) {
      out += '^';
      out += std::to_string(a[i]);
    }
  }
  return out.empty() ? "1" : out;
}

ExponentVector parse_monomial(std::string_view text, std::size_t n, std::size_t line,
                              std::size_t column_offset) {
  std::vector<Exponent> exps(n, 0);
  std::size_t pos = 0;
  auto fail = [&](const std::string& what) -> ParseError {
    return ParseError(what + " in monomial '" + std::string(text) + "'", line,
                      column_offset + pos + 1);
  };
  auto skip_space = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  auto read_number = [&](const char* what) -> std::uint64_t {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc() || ptr == text.data() + pos) throw fail(std::string("expected ") + what);
    pos = static_cast<std::size_t>(ptr - text.data());
    return value;
  };

  skip_space();
  if (pos < text.size() && text[pos] == '1') {
    ++pos;
    skip_space();
    if (pos != text.size()) throw fail("trailing characters");
    return ExponentVector(std::move(exps));
  }
  while (true) {
    skip_space();
    if (pos >= text.size() || text[pos] != 'x') throw fail("expected 'x'");
    ++pos;
    std::size_t index_pos = pos;
    std::uint64_t index = read_number("variable index");
    if (index < 1 || index > n) {
      pos = index_pos;
      throw fail("variable index " + std::to_string(index) + " outside 1.." + std::to_string(n));
    }
    std::uint64_t e = 1;
    skip_space();
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      skip_space();
      std::size_t exp_pos = pos;
      e = read_number("exponent");
      if (e < 1) {
        pos = exp_pos;
        throw fail("exponent must be at least 1");
      }
    }
    std::uint64_t total = exps[index - 1] + e;
    if (total > std::numeric_limits<Exponent>::max()) throw fail("exponent overflow");
    exps[index - 1] = static_cast<Exponent>(total);
    skip_space();
    if (pos == text.size()) break;
    if (text[pos] != '*') throw fail("expected '*'");
    ++pos;
  }
  return ExponentVector(std::move(exps));
}

MonomialIdeal minimalize(std::size_t n, std::span<const ExponentVector> monomials) {
  return MonomialIdeal(n, std::vector<ExponentVector>(monomials.begin(), monomials.end()));
}

MonomialIdeal::MonomialIdeal(std::size_t n, std::vector<ExponentVector> monomials) : n_(n) {
  for (const auto& m : monomials) {
    if (m.size() != n) {
      throw DimensionError("generator " + to_string(m) + " has " + std::to_string(m.size()) +
                           " variables, expected " + std::to_string(n));
    }
    if (m.is_one()) throw DomainError("the unit ideal is not supported");
  }
  // Ascending degree first: a divisor always has degree <= its multiple, so
  // each candidate only needs testing against already-accepted generators.
  std::sort(monomials.begin(), monomials.end(), [](const auto& a, const auto& b) {
    auto da = a.degree(), db = b.degree();
    return da != db ? da < db : a < b;
  });
  monomials.erase(std::unique(monomials.begin(), monomials.end()), monomials.end());
  for (auto& m : monomials) {
    bool redundant = std::any_of(gens_.begin(), gens_.end(),
                                 [&](const ExponentVector& g) { return divides(g, m); });
    if (!redundant) gens_.push_back(std::move(m));
  }
  std::sort(gens_.begin(), gens_.end());
}

bool MonomialIdeal::contains(const ExponentVector& m) const {
  return std::any_of(gens_.begin(), gens_.end(),
                     [&](const ExponentVector& g) { return divides(g, m); });
}

std::uint64_t MonomialIdeal::min_degree() const {
  std::uint64_t d = std::numeric_limits<std::uint64_t>::max();
  for (const auto& g : gens_) d = std::min(d, g.degree());
  return gens_.empty() ? 0 : d;
}

std::uint64_t MonomialIdeal::max_degree() const {
  std::uint64_t d = 0;
  for (const auto& g : gens_) d = std::max(d, g.degree());
  return d;
}

MonomialIdeal operator*(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.ambient_dimension() != b.ambient_dimension())
    throw DimensionError("ideals live in different polynomial rings");
  std::vector<ExponentVector> products;
  products.reserve(a.size() * b.size());
  for (const auto& u : a.generators())
    for (const auto& v : b.generators()) products.push_back(u * v);
  return MonomialIdeal(a.ambient_dimension(), std::move(products));
}

MonomialIdeal power(const MonomialIdeal& ideal, unsigned s) {
  if (s == 0) throw DomainError("power exponent must be at least 1");
  MonomialIdeal out = ideal;
  for (unsigned k = 1; k < s; ++k) out = out * ideal;
  return out;
}

std::vector<ExponentVector> monomials_of_degree(std::size_t n, std::uint64_t d) {
  std::vector<ExponentVector> out;
  if (n == 0) {
    if (d == 0) out.emplace_back(0);
    return out;
  }
  std::vector<Exponent> cur(n, 0);
  // Compositions of d into n parts, first coordinate descending.
  auto rec = [&](auto&& self, std::size_t i, std::uint64_t left) -> void {
    if (i + 1 == n) {
      cur[i] = static_cast<Exponent>(left);
      out.emplace_back(cur);
      return;
    }
    for (std::uint64_t e = left + 1; e-- > 0;) {
      cur[i] = static_cast<Exponent>(e);
      self(self, i + 1, left - e);
    }
  };
  rec(rec, 0, d);
  return out;
}

MonomialIdeal componentwise_piece(const MonomialIdeal& ideal, std::uint64_t j,
                                  std::size_t max_generators) {
  const std::size_t n = ideal.ambient_dimension();
  std::unordered_set<ExponentVector, ExponentVectorHash> seen;
  for (const auto& g : ideal.generators()) {
    if (g.degree() > j) continue;
    for (const auto& m : monomials_of_degree(n, j - g.degree())) {
      seen.insert(g * m);
      if (seen.size() > max_generators) {
        throw ResourceError("componentwise piece generators (j=" + std::to_string(j) + ")",
                            max_generators, seen.size());
      }
    }
  }
  return MonomialIdeal(n, std::vector<ExponentVector>(seen.begin(), seen.end()));
}

MonomialIdeal colon(const MonomialIdeal& ideal, const ExponentVector& u) {
  if (u.size() != ideal.ambient_dimension())
    throw DimensionError("colon by a monomial in a different ring");
  std::vector<ExponentVector> quotients;
  quotients.reserve(ideal.size());
  for (const auto& g : ideal.generators()) {
    auto q = g / gcd(g, u);
    if (q.is_one()) throw DomainError(to_string(u) + " lies in the ideal; colon is the unit ideal");
    quotients.push_back(std::move(q));
  }
  return MonomialIdeal(ideal.ambient_dimension(), std::move(quotients));
}

StructuralFlags structural_flags(const MonomialIdeal& ideal) {
  StructuralFlags flags;
  flags.min_degree = ideal.min_degree();
  flags.max_degree = ideal.max_degree();
  for (const auto& g : ideal.generators()) {
    flags.is_squarefree = flags.is_squarefree && g.is_squarefree();
    flags.contains_variable = flags.contains_variable || g.degree() == 1;
  }
  return flags;
}

std::string to_string(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) return "(0)";
  std::string out = "(";
  for (std::size_t i = 0; i < ideal.size(); ++i) {
    if (i) out += ", ";
    out += to_string(ideal.generators()[i]);
  }
  return out + ")";
}

}  // namespace lcmres
