#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lcmres/monomial.hpp"
#include "lcmres/monomial_order.hpp"

namespace lcmres {

/// A linear order on G(I), listed from smallest to largest.
struct OrderWitness {
  enum class Kind { arbitrary, monomial_order };

  std::vector<ExponentVector> sequence;
  Kind kind = Kind::arbitrary;
  /// Set for Kind::monomial_order.
  std::optional<MonomialOrder> order;
  /// The sequence lists the monomial order's descending direction.
  bool descending = false;

  std::string describe() const;
};

/// Result of a pairwise condition over coprime generator pairs.
struct PairCondition {
  bool holds = true;
  std::optional<std::pair<ExponentVector, ExponentVector>> failing_pair;
};

/// For every coprime u, v in G(I) some w != u, v in G(I) divides uv.
PairCondition gcd_condition(const MonomialIdeal& ideal);

/// For every coprime u, v in G(I) some w != u, v in G(I) has
/// supp(w) contained in supp(u) | supp(v). Equals gcd_condition on
/// square-free ideals.
PairCondition support_condition(const MonomialIdeal& ideal);

/// True when `sequence` (a permutation of G(I), smallest first) witnesses
/// the strong gcd condition: each coprime u < v has some w != u, v with
/// u < w and w | uv. With `by_support`, w | uv is replaced by the support
/// inclusion.
bool is_strong_gcd_order(const MonomialIdeal& ideal, std::span<const ExponentVector> sequence,
                         bool by_support = false);

/// Exact search for a strong gcd order. Returns nullopt when none exists.
/// Throws ResourceError when |G(I)| > cap.
std::optional<OrderWitness> strong_gcd_condition(const MonomialIdeal& ideal, std::size_t cap = 12);

struct LinearQuotientCheck {
  bool holds = true;
  /// 1-based position i >= 2 of the first generator whose colon against its
  /// predecessors is not generated by variables.
  std::optional<std::size_t> first_failing_index;
};

/// Tests (u_1..u_{i-1}) : u_i for i = 2..t. Throws DomainError unless the
/// sequence is a permutation of G(I).
LinearQuotientCheck linear_quotient_for_order(const MonomialIdeal& ideal,
                                              std::span<const ExponentVector> sequence);

struct LinearQuotientOptions {
  /// Up to this many generators the search is exhaustive by construction.
  std::size_t exhaustive_cap = 10;
  /// Beyond the cap, pruned backtracking may expand at most this many
  /// prefixes before giving up with a ResourceError.
  std::size_t node_budget = 2'000'000;
};

/// Backtracking search for any linear-quotient order.
std::optional<OrderWitness> has_linear_quotient(const MonomialIdeal& ideal,
                                                const LinearQuotientOptions& options = {});

struct OrderFamilySpec {
  std::vector<OrderFamily> families{OrderFamily::lex, OrderFamily::deglex, OrderFamily::degrevlex};
  /// When set, only this weight order is tried.
  std::optional<std::vector<std::int64_t>> weights;
  /// Variable permutations are enumerated only for n <= this cap.
  std::size_t max_variables = 8;
};

/// Sorts G(I) by each order of the family (ascending and descending) and
/// returns the first sequence with linear quotients.
std::optional<OrderWitness> monomial_order_linear_quotient(const MonomialIdeal& ideal,
                                                           const OrderFamilySpec& family = {});

struct DerivedOrderResult {
  /// Linear-quotient order of G(I^s) induced by a monomial order.
  std::optional<OrderWitness> power_order;
  /// The reversed induced order on G(I).
  std::optional<OrderWitness> derived;
  /// The derived order satisfies the support form of the strong gcd condition.
  bool verified = false;
  bool hypothesis_holds = false;  // I contains no variable
  /// Set when the hypotheses hold but the conclusion fails to verify.
  std::optional<std::string> anomaly;
};

/// If I^s has linear quotients for a monomial order <, sorts G(I) by <,
/// reverses it, and checks that every coprime u before v admits w != u, v
/// after u with supp(w) inside supp(u) | supp(v).
DerivedOrderResult prop_main_derived_order(const MonomialIdeal& ideal, unsigned s,
                                           const OrderFamilySpec& family = {});

struct CertificateStep {
  std::string claim;
  std::string license;
};

struct GolodCertificate {
  MonomialIdeal subject;
  std::vector<CertificateStep> chain;
  /// Power used by the monomial-order route; unset for the direct strong gcd route.
  std::optional<unsigned> s;
  /// Strong gcd order on G(I).
  OrderWitness witness;
  std::optional<OrderWitness> power_witness;
};

struct GolodOptions {
  OrderFamilySpec family;
  std::size_t strong_gcd_cap = 12;
};

/// Emits a Golod certificate for a square-free ideal without variables, via
/// linear quotients of some I^s (s in [s_min, s_max]) for a monomial order,
/// or else via a strong gcd order found directly. Never claims non-Golodness.
/// Throws PreconditionError when I is not square-free or contains a variable.
std::optional<GolodCertificate> golod_certificate(const MonomialIdeal& ideal, unsigned s_min,
                                                  unsigned s_max, const GolodOptions& options = {});

}  // namespace lcmres
