#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "lcmres/field.hpp"
#include "lcmres/lattice.hpp"

namespace lcmres::cli {

enum class Format { text, structured };

struct JobSpec {
  std::string command;
  std::optional<std::filesystem::path> input;
  FieldSpec field;
  std::optional<unsigned> s;
  std::optional<unsigned> s_max;
  std::size_t cap_lattice = kDefaultLatticeCap;
  std::size_t cap_gens = 4096;
  Format format = Format::text;
  std::optional<std::filesystem::path> cache_dir;
  std::uint64_t seed = 1;
  // scan only
  std::string problem = "conjecture";
  std::string stream = "random";
  std::size_t budget = 100;
  // betti only
  bool quotient = false;
};

enum ExitCode : int { kOk = 0, kFalsified = 1, kUsage = 2, kResource = 3 };

struct RunResult {
  int exit_code = kOk;
  std::string output;       // stdout
  std::string diagnostics;  // stderr
};

/// Runs one job. Never throws: errors map to exit codes with a message.
RunResult run(const JobSpec& job);

}  // namespace lcmres::cli
