#include "lcmres/scan.hpp"

#include <mutex>
#include <random>

#include "lcmres/clutters.hpp"
#include "lcmres/conditions.hpp"
#include "lcmres/errors.hpp"
#include "lcmres/parallel.hpp"

namespace lcmres {

std::string to_string(OpenProblem problem) {
  return problem == OpenProblem::conjecture ? "conjecture" : "question";
}

std::vector<MonomialIdeal> seeded_squarefree_stream(std::uint64_t seed, std::size_t count, std::size_t n,
                                                    std::size_t max_generators, std::size_t max_degree) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> generators(std::min<std::size_t>(3, max_generators), max_generators);
  std::vector<MonomialIdeal> out;
  out.reserve(count);
  while (out.size() < count) out.push_back(random_squarefree_ideal(n, generators(rng), max_degree, rng));
  return out;
}

std::vector<MonomialIdeal> graph_edge_ideal_stream(std::size_t max_vertices) {
  std::vector<MonomialIdeal> out;
  for (std::size_t n = 2; n <= max_vertices; ++n)
    for (const auto& g : all_graphs(n, true))
      if (!g.edges().empty()) out.push_back(edge_ideal(g));
  return out;
}

namespace {

struct InstanceOutcome {
  bool skipped = false;
  std::optional<ScanRecord> hit;
  std::optional<ScanContradiction> counterexample;
  std::vector<ScanContradiction> violations;
};

bool eligible(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) return false;
  for (const auto& g : ideal.generators())
    if (!g.is_squarefree() || g.degree() < 2) return false;
  return true;
}

std::string certificate_status(const MonomialIdeal& ideal, const ScanOptions& options) {
  try {
    GolodOptions golod;
    golod.strong_gcd_cap = options.strong_gcd_cap;
    auto cert = golod_certificate(ideal, 1, options.s_max, golod);
    if (!cert) return "none found";
    return cert->s ? "certificate via s=" + std::to_string(*cert->s) : "certificate via strong gcd";
  } catch (const ResourceError&) {
    return "over cap";
  }
}

void check_betti_bounds(std::size_t index, const MonomialIdeal& ideal, const ScanOptions& options,
                        InstanceOutcome& out) {
  const Clutter clutter = clutter_of_ideal(ideal);
  if (!clutter.uniformity()) return;
  for (unsigned s = 2; s <= options.s_max; ++s) {
    try {
      auto r = verify_theorem_betti_bounds(clutter, s, options.field, options.betti);
      if (!r.pass)
        out.violations.push_back({index, ideal, s,
                                  "induced matching Betti bound: beta_1 " + std::to_string(r.first_actual) +
                                      " vs " + std::to_string(r.first_bound) + ", beta_2 " +
                                      std::to_string(r.second_actual) + " vs " + std::to_string(r.second_bound)});
    } catch (const ResourceError&) {
      out.skipped = true;
    }
  }
}

InstanceOutcome scan_one(std::size_t index, const MonomialIdeal& ideal, const ScanOptions& options) {
  InstanceOutcome out;
  if (!eligible(ideal)) {
    out.skipped = true;
    return out;
  }
  const bool gcd = gcd_condition(ideal).holds;
  for (unsigned s = 1; s <= options.s_max; ++s) {
    bool property = false;
    try {
      const auto p = power(ideal, s);
      if (p.generators().size() > options.power_generator_cap) {
        out.skipped = true;
        break;
      }
      if (options.problem == OpenProblem::conjecture) {
        property = has_linear_quotient(p).has_value();
      } else {
        ComponentwiseOptions cw;
        cw.betti = options.betti;
        cw.betti.threads = 1;
        cw.early_exit = true;
        property = is_componentwise_linear(p, options.field, cw).componentwise_linear;
      }
    } catch (const ResourceError&) {
      out.skipped = true;
      break;
    }
    if (!property) continue;
    // Linear quotients imply componentwise linearity, so both modes test
    // the statement that a cwl power forces the gcd condition.
    if (!gcd)
      out.violations.push_back({index, ideal, s, "componentwise linear power but gcd condition fails"});

    ScanRecord rec{index, ideal, s, gcd, std::nullopt, {}};
    try {
      rec.strong_gcd = strong_gcd_condition(ideal, options.strong_gcd_cap).has_value();
    } catch (const ResourceError&) {
    }
    if (options.problem == OpenProblem::conjecture && rec.strong_gcd == false)
      out.counterexample = ScanContradiction{index, ideal, s, "linear quotients on the power, no strong gcd order"};
    if (options.problem == OpenProblem::question) rec.certificate = certificate_status(ideal, options);
    out.hit = std::move(rec);
    break;
  }
  if (options.check_betti_bounds) check_betti_bounds(index, ideal, options, out);
  return out;
}

}  // namespace

ScanReport open_problem_scan(const std::vector<MonomialIdeal>& stream, const ScanOptions& options) {
  ScanReport report;
  report.problem = options.problem;
  const std::size_t count = std::min(stream.size(), options.budget);
  std::vector<InstanceOutcome> outcomes(count);
  parallel_for(count, [&](std::size_t i) { outcomes[i] = scan_one(i, stream[i], options); }, options.threads);

  report.examined = count;
  for (auto& o : outcomes) {
    if (o.skipped) ++report.skipped;
    if (o.hit) report.hits.push_back(std::move(*o.hit));
    if (o.counterexample) report.counterexamples.push_back(std::move(*o.counterexample));
    for (auto& v : o.violations) report.theorem_violations.push_back(std::move(v));
  }
  return report;
}

}  // namespace lcmres
