#include "lcmres/io.hpp"

#include <atomic>
#include <fstream>
#include <random>
#include <sstream>

#include <unistd.h>

#include "lcmres/errors.hpp"

namespace lcmres {

using nlohmann::json;

namespace {

/// 1-based line and column of a byte offset.
std::pair<std::size_t, std::size_t> locate(std::string_view text, std::size_t offset) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // byte is 1-based and points just past the offending character.
    auto [line, column] = locate(text, e.byte > 0 ? e.byte - 1 : 0);
    std::string what = e.what();
    if (auto pos = what.find("parse error"); pos != std::string::npos) what = what.substr(pos);
    throw ParseError("malformed JSON: " + what, line, column);
  }
}

/// Offset of the first occurrence of `needle` at or after `from`.
std::size_t find_from(std::string_view text, std::string_view needle, std::size_t from) {
  auto pos = text.find(needle, from);
  return pos == std::string_view::npos ? from : pos;
}

std::size_t require_count(const json& doc, const char* field, std::string_view text) {
  auto [line, column] = locate(text, find_from(text, std::string("\"") + field + "\"", 0));
  if (!doc.contains(field)) throw ParseError(std::string("missing field '") + field + "'", 1, 1);
  const auto& v = doc.at(field);
  if (!v.is_number_integer() || v.get<std::int64_t>() < 1)
    throw ParseError(std::string("'") + field + "' must be a positive integer", line, column);
  return v.get<std::size_t>();
}

}  // namespace

ParsedIdeal parse_ideal_document(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("ideal document must be a JSON object", 1, 1);
  const std::size_t n = require_count(doc, "n", text);
  if (!doc.contains("gens") || !doc.at("gens").is_array())
    throw ParseError("missing array field 'gens'", 1, 1);

  std::vector<ExponentVector> monomials;
  std::size_t cursor = find_from(text, "\"gens\"", 0);
  for (const auto& g : doc.at("gens")) {
    auto [line, column] = locate(text, cursor);
    if (!g.is_string()) throw ParseError("generators must be strings", line, column);
    const auto s = g.get<std::string>();
    cursor = find_from(text, "\"" + s + "\"", cursor);
    std::tie(line, column) = locate(text, cursor);
    // Column offset points at the opening quote; the monomial starts after it.
    monomials.push_back(parse_monomial(s, n, line, column));
    cursor += s.size() + 2;
  }
  if (monomials.empty()) throw ParseError("'gens' must be non-empty (the zero ideal is not an input)", 1, 1);

  ParsedIdeal out;
  out.ideal = MonomialIdeal(n, monomials);
  if (out.ideal.generators().size() != monomials.size()) {
    out.input_minimal = false;
    out.warnings.push_back("input generators were not minimal: " + std::to_string(monomials.size()) +
                           " listed, " + std::to_string(out.ideal.generators().size()) + " minimal");
  }
  return out;
}

Clutter parse_clutter_document(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("clutter document must be a JSON object", 1, 1);
  const std::size_t n = require_count(doc, "vertex_count", text);
  if (!doc.contains("edges") || !doc.at("edges").is_array())
    throw ParseError("missing array field 'edges'", 1, 1);
  auto [line, column] = locate(text, find_from(text, "\"edges\"", 0));
  std::vector<std::vector<std::size_t>> edges;
  for (const auto& e : doc.at("edges")) {
    if (!e.is_array()) throw ParseError("each edge must be an array of vertices", line, column);
    std::vector<std::size_t> edge;
    for (const auto& v : e) {
      if (!v.is_number_integer() || v.get<std::int64_t>() < 1 || v.get<std::size_t>() > n)
        throw ParseError("edge vertex " + v.dump() + " outside 1.." + std::to_string(n), line, column);
      edge.push_back(v.get<std::size_t>() - 1);
    }
    edges.push_back(std::move(edge));
  }
  if (edges.empty()) throw ParseError("'edges' must be non-empty", line, column);
  return Clutter(n, std::move(edges));
}

InputDocument parse_input_document(std::string_view text) {
  const json doc = parse_json(text);
  if (doc.is_object() && doc.contains("gens")) return parse_ideal_document(text);
  if (doc.is_object() && doc.contains("edges")) return parse_clutter_document(text);
  throw ParseError("input must contain 'gens' (ideal) or 'edges' (clutter)", 1, 1);
}

InputDocument load_input(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read input file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_input_document(buffer.str());
}

json to_json(const MonomialIdeal& ideal) {
  json gens = json::array();
  for (const auto& g : ideal.generators()) gens.push_back(to_string(g));
  return {{"n", ideal.ambient_dimension()}, {"gens", gens}};
}

json to_json(const Clutter& clutter) {
  json edges = json::array();
  for (const auto& e : clutter.edges()) {
    json edge = json::array();
    for (auto v : e) edge.push_back(v + 1);
    edges.push_back(edge);
  }
  return {{"vertex_count", clutter.vertex_count()}, {"edges", edges}};
}

json to_json(const OrderWitness& witness) {
  json seq = json::array();
  for (const auto& m : witness.sequence) seq.push_back(to_string(m));
  return {{"sequence", seq},
          {"kind", witness.kind == OrderWitness::Kind::monomial_order ? "monomial_order" : "arbitrary"},
          {"description", witness.describe()}};
}

json to_json(const BettiTable& table) {
  json coarse = json::array();
  for (const auto& [key, value] : table.coarse_table())
    coarse.push_back({{"i", key.first}, {"j", key.second}, {"value", value}});
  json fine = json::array();
  for (const auto& [key, value] : table.fine())
    fine.push_back({{"i", key.first}, {"m", to_string(key.second)}, {"value", value}});
  return {{"field", table.field().name()},
          {"projective_dimension", table.projective_dimension()},
          {"regularity", regularity(table)},
          {"coarse", coarse},
          {"multigraded", fine}};
}

json to_json(const LinearityResult& result) {
  json out{{"linear", result.linear}};
  if (result.witness) out["witness"] = {{"i", result.witness->first}, {"j", result.witness->second}};
  return out;
}

json to_json(const ComponentwiseReport& report) {
  json pieces = json::array();
  for (const auto& p : report.pieces) {
    json piece{{"degree", p.degree}, {"generator_count", p.generator_count}};
    piece["linear"] = p.linear ? json(*p.linear) : json(nullptr);
    if (p.witness) piece["witness"] = {{"i", p.witness->first}, {"j", p.witness->second}};
    pieces.push_back(piece);
  }
  return {{"componentwise_linear", report.componentwise_linear},
          {"pieces", pieces},
          {"relies_on_degree_propagation", report.relies_on_degree_propagation}};
}

json to_json(const GolodCertificate& certificate) {
  json chain = json::array();
  for (const auto& step : certificate.chain) chain.push_back({{"claim", step.claim}, {"license", step.license}});
  json out{{"subject", to_json(certificate.subject)}, {"chain", chain}, {"witness", to_json(certificate.witness)}};
  out["s"] = certificate.s ? json(*certificate.s) : json(nullptr);
  if (certificate.power_witness) out["power_witness"] = to_json(*certificate.power_witness);
  return out;
}

json to_json(const BettiBoundReport& r) {
  return {{"k", r.k},
          {"t", r.t},
          {"s", r.s},
          {"beta1", {{"degree", r.first_degree}, {"actual", r.first_actual}, {"bound", r.first_bound}}},
          {"beta2", {{"degree", r.second_degree}, {"actual", r.second_actual}, {"bound", r.second_bound}}},
          {"pass", r.pass}};
}

json to_json(const RegularityReport& r) {
  return {{"k", r.k},         {"t", r.t},           {"s", r.s},
          {"applicable", r.applicable}, {"bound", r.bound}, {"actual", r.actual},
          {"pass", r.pass}};
}

json to_json(const ScanReport& report) {
  auto contradiction = [](const ScanContradiction& c) {
    return json{{"index", c.index}, {"ideal", to_string(c.ideal)}, {"s", c.s}, {"detail", c.detail}};
  };
  json hits = json::array(), counter = json::array(), violations = json::array();
  for (const auto& h : report.hits) {
    json rec{{"index", h.index}, {"ideal", to_string(h.ideal)}, {"s", h.s}, {"gcd", h.gcd}};
    rec["strong_gcd"] = h.strong_gcd ? json(*h.strong_gcd) : json(nullptr);
    if (!h.certificate.empty()) rec["certificate"] = h.certificate;
    hits.push_back(rec);
  }
  for (const auto& c : report.counterexamples) counter.push_back(contradiction(c));
  for (const auto& c : report.theorem_violations) violations.push_back(contradiction(c));
  return {{"problem", to_string(report.problem)},
          {"examined", report.examined},
          {"skipped", report.skipped},
          {"hits", hits},
          {"counterexamples", counter},
          {"theorem_violations", violations}};
}

std::string content_hash(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

ResultCache::ResultCache(std::filesystem::path directory) : dir_(std::move(directory)) {
  std::filesystem::create_directories(dir_);
}

std::string ResultCache::key(std::string_view canonical_input, std::string_view field, std::string_view operation) {
  std::string material;
  // Length prefixes keep field boundaries unambiguous.
  for (auto part : {canonical_input, field, operation})
    material += std::to_string(part.size()) + ":" + std::string(part) + ";";
  return content_hash(material);
}

std::optional<std::string> ResultCache::get(const std::string& key) const {
  std::ifstream in(entry(key), std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void ResultCache::put(const std::string& key, std::string_view content) const {
  static std::atomic<unsigned> counter{0};
  std::random_device rd;
  const auto tmp = dir_ / (key + ".tmp." + std::to_string(::getpid()) + "." + std::to_string(counter++) + "." +
                           std::to_string(rd()));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write cache entry " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw Error("short write to cache entry " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, entry(key), ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw Error("cannot publish cache entry " + entry(key).string());
  }
}

}  // namespace lcmres
