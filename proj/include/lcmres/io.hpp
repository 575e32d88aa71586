#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"

#include "lcmres/betti.hpp"
#include "lcmres/clutters.hpp"
#include "lcmres/conditions.hpp"
#include "lcmres/monomial.hpp"
#include "lcmres/scan.hpp"

namespace lcmres {

struct ParsedIdeal {
  MonomialIdeal ideal;
  /// The listed generators were already a minimal generating set.
  bool input_minimal = true;
  std::vector<std::string> warnings;
};

/// {"n": 4, "gens": ["x1*x2", "x3*x4"]}. Errors carry 1-based line/column.
ParsedIdeal parse_ideal_document(std::string_view text);
/// {"vertex_count": 5, "edges": [[1,2],[2,3]]}, vertices 1-indexed.
Clutter parse_clutter_document(std::string_view text);

using InputDocument = std::variant<ParsedIdeal, Clutter>;
/// Dispatches on the keys present ("gens" or "edges").
InputDocument parse_input_document(std::string_view text);
InputDocument load_input(const std::filesystem::path& path);

nlohmann::json to_json(const MonomialIdeal& ideal);
nlohmann::json to_json(const Clutter& clutter);
nlohmann::json to_json(const OrderWitness& witness);
nlohmann::json to_json(const BettiTable& table);
nlohmann::json to_json(const LinearityResult& result);
nlohmann::json to_json(const ComponentwiseReport& report);
nlohmann::json to_json(const GolodCertificate& certificate);
nlohmann::json to_json(const BettiBoundReport& report);
nlohmann::json to_json(const RegularityReport& report);
nlohmann::json to_json(const ScanReport& report);

/// FNV-1a 64-bit, rendered as 16 hex digits.
std::string content_hash(std::string_view data);

/// Directory of result entries keyed by content hash. Entries are written
/// to a unique temporary name and renamed into place, so concurrent
/// processes never observe partial files.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path directory);

  /// Key over the canonical ideal text, field token and operation string.
  static std::string key(std::string_view canonical_input, std::string_view field, std::string_view operation);

  std::optional<std::string> get(const std::string& key) const;
  void put(const std::string& key, std::string_view content) const;
  const std::filesystem::path& directory() const noexcept { return dir_; }

 private:
  std::filesystem::path entry(const std::string& key) const { return dir_ / (key + ".json"); }
  std::filesystem::path dir_;
};

}  // namespace lcmres
