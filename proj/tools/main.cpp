#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "lcmres/errors.hpp"

int main(int argc, char** argv) {
  using namespace lcmres::cli;
  CLI::App app{"Betti numbers, linearity and Golod certificates for monomial ideals via lcm lattices"};
  app.require_subcommand(1);

  JobSpec job;
  std::string field = "gf2", format = "text", input, cache_dir;
  unsigned s = 0, s_max = 0;

  const std::vector<std::pair<std::string, std::string>> commands{
      {"betti", "multigraded Betti numbers and the Betti diagram of I^s"},
      {"power", "minimal generators of I^s"},
      {"check-linear", "does I^s have a linear resolution"},
      {"check-cwl", "is I^s componentwise linear"},
      {"check-gcd", "gcd condition and its support form"},
      {"check-strong-gcd", "search for a strong gcd order"},
      {"check-linquot", "linear quotients of I^s (any order, then monomial orders)"},
      {"golod-cert", "Golod certificate via linear quotients of powers or a strong gcd order"},
      {"verify-thm34", "induced-matching lower bounds on beta_1, beta_2 of I(C)^s"},
      {"verify-cor35", "induced-matching lower bound on reg I(C)^s"},
      {"scan", "open-problem scan over a seeded instance stream"},
      {"lattice", "dump the lcm lattice of I^s"},
      {"selftest", "run built-in consistency checks"},
  };
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    if (name != "selftest") {
      auto* opt = sub->add_option("input", input, "ideal {n, gens} or clutter {vertex_count, edges} JSON file")
                      ->check(CLI::ExistingFile);
      if (name != "scan") opt->required();
    }
    sub->add_option("--field", field, "gf2, gf<p> or rational")->capture_default_str();
    sub->add_option("--s", s, "power s (>= 1)");
    sub->add_option("--s-max", s_max, "largest power tried");
    sub->add_option("--cap-lattice", job.cap_lattice, "maximum lcm lattice size")
        ->check(CLI::PositiveNumber)->capture_default_str();
    sub->add_option("--cap-gens", job.cap_gens, "maximum generator count")
        ->check(CLI::PositiveNumber)->capture_default_str();
    sub->add_option("--format", format, "text or structured")
        ->check(CLI::IsMember({"text", "structured"}))->capture_default_str();
    sub->add_option("--cache-dir", cache_dir, "result cache directory");
    sub->add_option("--seed", job.seed, "seed for generated instance streams")->capture_default_str();
    if (name == "scan") {
      sub->add_option("--problem", job.problem, "conjecture or question")
          ->check(CLI::IsMember({"conjecture", "question"}))->capture_default_str();
      sub->add_option("--stream", job.stream, "random or graphs")
          ->check(CLI::IsMember({"random", "graphs"}))->capture_default_str();
      sub->add_option("--budget", job.budget, "number of instances")->capture_default_str();
    }
    if (name == "betti") sub->add_flag("--quotient", job.quotient, "show the table of S/I instead of I");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  job.command = app.get_subcommands().front()->get_name();
  if (!input.empty()) job.input = input;
  if (!cache_dir.empty()) job.cache_dir = cache_dir;
  if (s) job.s = s;
  if (s_max) job.s_max = s_max;
  job.format = format == "structured" ? Format::structured : Format::text;
  try {
    job.field = lcmres::FieldSpec::parse(field);
  } catch (const lcmres::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }

  const auto result = run(job);
  std::cout << result.output;
  std::cerr << result.diagnostics;
  return result.exit_code;
}
