#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lcmres/betti.hpp"
#include "lcmres/field.hpp"
#include "lcmres/monomial.hpp"

namespace lcmres {

enum class OpenProblem {
  /// I^s has linear quotients but I has no strong gcd order.
  conjecture,
  /// I^s componentwise linear; is S/I Golod?
  question,
};

std::string to_string(OpenProblem problem);

struct ScanOptions {
  OpenProblem problem = OpenProblem::conjecture;
  /// Number of instances examined; the stream is truncated to this.
  std::size_t budget = 100;
  unsigned s_max = 2;
  FieldSpec field;
  BettiOptions betti;
  std::size_t strong_gcd_cap = 12;
  /// Instances whose I^s has more generators than this are skipped.
  std::size_t power_generator_cap = 64;
  /// Also run the induced-matching Betti bounds on uniform instances.
  bool check_betti_bounds = true;
  unsigned threads = 0;
};

struct ScanRecord {
  std::size_t index = 0;
  MonomialIdeal ideal;
  unsigned s = 0;
  bool gcd = false;
  /// A strong gcd order exists (unset if not searched or over cap).
  std::optional<bool> strong_gcd;
  /// "certificate via s=..", "certificate via strong gcd", or "none found".
  std::string certificate;
};

struct ScanContradiction {
  std::size_t index = 0;
  MonomialIdeal ideal;
  unsigned s = 0;
  std::string detail;
};

struct ScanReport {
  OpenProblem problem = OpenProblem::conjecture;
  std::size_t examined = 0;
  /// Instances (or single powers) dropped because a cap was reached.
  std::size_t skipped = 0;
  /// Ideals whose power had linear quotients (conjecture) or was
  /// componentwise linear (question), at the smallest such s.
  std::vector<ScanRecord> hits;
  /// Conjecture counterexamples; expected empty, never assumed.
  std::vector<ScanContradiction> counterexamples;
  /// Contradictions with proven results; these are bugs.
  std::vector<ScanContradiction> theorem_violations;
};

/// Deterministic stream of random square-free, variable-free ideals.
std::vector<MonomialIdeal> seeded_squarefree_stream(std::uint64_t seed, std::size_t count, std::size_t n = 5,
                                                    std::size_t max_generators = 5, std::size_t max_degree = 3);

/// Edge ideals of all graphs on 2..max_vertices vertices (up to isomorphism)
/// with at least one edge.
std::vector<MonomialIdeal> graph_edge_ideal_stream(std::size_t max_vertices);

/// Budget-bounded evidence gathering. Instances that are not square-free,
/// contain a variable or exceed caps are skipped, never failed.
ScanReport open_problem_scan(const std::vector<MonomialIdeal>& stream, const ScanOptions& options);

}  // namespace lcmres
