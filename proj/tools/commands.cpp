#include "commands.hpp"

#include <functional>
#include <map>
#include <sstream>

#include "json.hpp"
#include "lcmres/betti.hpp"
#include "lcmres/clutters.hpp"
#include "lcmres/complex.hpp"
#include "lcmres/conditions.hpp"
#include "lcmres/errors.hpp"
#include "lcmres/homology.hpp"
#include "lcmres/io.hpp"
#include "lcmres/lattice.hpp"
#include "lcmres/scan.hpp"

namespace lcmres::cli {

using nlohmann::json;

namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

struct Context {
  const JobSpec& job;
  std::optional<MonomialIdeal> ideal;
  std::optional<Clutter> clutter;
  std::vector<std::string> warnings;

  BettiOptions betti() const {
    BettiOptions o;
    o.lattice_cap = job.cap_lattice;
    return o;
  }

  const MonomialIdeal& require_ideal() const {
    if (!ideal) throw UsageError(job.command + " needs an input file");
    return *ideal;
  }

  const Clutter& require_clutter() const {
    if (!clutter) throw UsageError(job.command + " needs a clutter input or a square-free ideal");
    return *clutter;
  }

  unsigned s_or(unsigned fallback) const { return job.s.value_or(fallback); }

  /// I^s with the generator cap applied.
  MonomialIdeal subject(unsigned s) const {
    auto p = power(require_ideal(), s);
    if (p.generators().size() > job.cap_gens)
      throw ResourceError("generators of I^" + std::to_string(s), job.cap_gens, p.generators().size());
    return p;
  }
};

json pair_json(const PairCondition& c) {
  json out{{"holds", c.holds}};
  if (c.failing_pair) out["failing_pair"] = {to_string(c.failing_pair->first), to_string(c.failing_pair->second)};
  return out;
}

json cmd_betti(Context& ctx) {
  const auto subject = ctx.subject(ctx.s_or(1));
  const auto table = multigraded_betti(subject, ctx.job.field, ctx.betti());
  json out = to_json(table);
  out["s"] = ctx.s_or(1);
  out["quotient"] = ctx.job.quotient;
  out["diagram"] = render_betti_diagram(table, ctx.job.quotient);
  return out;
}

json cmd_power(Context& ctx) {
  if (!ctx.job.s) throw UsageError("power needs --s");
  return {{"s", *ctx.job.s}, {"ideal", to_json(ctx.subject(*ctx.job.s))}};
}

json cmd_check_linear(Context& ctx) {
  json out = to_json(has_linear_resolution(ctx.subject(ctx.s_or(1)), ctx.job.field, ctx.betti()));
  out["s"] = ctx.s_or(1);
  return out;
}

json cmd_check_cwl(Context& ctx) {
  ComponentwiseOptions o;
  o.betti = ctx.betti();
  o.piece_generator_cap = ctx.job.cap_gens;
  json out = to_json(is_componentwise_linear(ctx.subject(ctx.s_or(1)), ctx.job.field, o));
  out["s"] = ctx.s_or(1);
  return out;
}

json cmd_check_gcd(Context& ctx) {
  const auto& ideal = ctx.require_ideal();
  const auto gcd = gcd_condition(ideal);
  const auto main = support_condition(ideal);
  const auto flags = structural_flags(ideal);
  if (flags.is_squarefree && gcd.holds != main.holds)
    throw InvariantViolation("gcd and support conditions disagree on a square-free ideal");
  return {{"gcd_condition", pair_json(gcd)}, {"support_condition", pair_json(main)}};
}

json cmd_check_strong_gcd(Context& ctx) {
  auto w = strong_gcd_condition(ctx.require_ideal(), std::min<std::size_t>(ctx.job.cap_gens, 24));
  json out{{"holds", w.has_value()}};
  if (w) out["witness"] = to_json(*w);
  return out;
}

json cmd_check_linquot(Context& ctx) {
  const unsigned s = ctx.s_or(1);
  const auto subject = ctx.subject(s);
  json out{{"s", s}};
  auto any = has_linear_quotient(subject);
  out["linear_quotients"] = any.has_value();
  if (any) out["witness"] = to_json(*any);
  try {
    auto mono = monomial_order_linear_quotient(subject);
    out["monomial_order"] = mono ? to_json(*mono) : json(nullptr);
  } catch (const ResourceError& e) {
    out["monomial_order_skipped"] = e.what();
  }
  return out;
}

json cmd_golod_cert(Context& ctx) {
  GolodOptions o;
  o.strong_gcd_cap = std::min<std::size_t>(ctx.job.cap_gens, 24);
  const unsigned lo = ctx.s_or(1);
  const unsigned hi = ctx.job.s_max.value_or(std::max(lo, 3u));
  if (hi < lo) throw UsageError("--s-max must be at least --s");
  auto cert = golod_certificate(ctx.require_ideal(), lo, hi, o);
  json out{{"s_range", {lo, hi}}, {"certified", cert.has_value()}};
  if (cert) out["certificate"] = to_json(*cert);
  else out["note"] = "no certificate found; this is not a claim that S/I is not Golod";
  return out;
}

json cmd_verify_thm34(Context& ctx) {
  const unsigned lo = ctx.s_or(2);
  const unsigned hi = ctx.job.s_max.value_or(lo);
  json reports = json::array();
  bool pass = true;
  for (unsigned s = lo; s <= hi; ++s) {
    auto r = verify_theorem_betti_bounds(ctx.require_clutter(), s, ctx.job.field, ctx.betti());
    pass = pass && r.pass;
    reports.push_back(to_json(r));
  }
  return {{"reports", reports}, {"pass", pass}};
}

json cmd_verify_cor35(Context& ctx) {
  const unsigned lo = ctx.s_or(2);
  const unsigned hi = ctx.job.s_max.value_or(lo);
  json reports = json::array();
  bool pass = true;
  for (unsigned s = lo; s <= hi; ++s) {
    auto r = verify_regularity_corollary(ctx.require_clutter(), s, ctx.job.field, ctx.betti());
    pass = pass && r.pass;
    reports.push_back(to_json(r));
  }
  return {{"reports", reports}, {"pass", pass}};
}

json cmd_scan(Context& ctx) {
  ScanOptions o;
  if (ctx.job.problem == "conjecture") o.problem = OpenProblem::conjecture;
  else if (ctx.job.problem == "question") o.problem = OpenProblem::question;
  else throw UsageError("--problem must be conjecture or question");
  o.budget = ctx.job.budget;
  o.s_max = ctx.job.s_max.value_or(2);
  o.field = ctx.job.field;
  o.betti = ctx.betti();
  o.power_generator_cap = std::min<std::size_t>(ctx.job.cap_gens, 64);

  std::vector<MonomialIdeal> stream;
  if (ctx.ideal) stream.push_back(*ctx.ideal);
  else if (ctx.job.stream == "random") stream = seeded_squarefree_stream(ctx.job.seed, ctx.job.budget);
  else if (ctx.job.stream == "graphs") stream = graph_edge_ideal_stream(5);
  else throw UsageError("--stream must be random or graphs");
  json out = to_json(open_problem_scan(stream, o));
  out["stream"] = ctx.ideal ? "input" : ctx.job.stream;
  out["s_max"] = o.s_max;
  return out;
}

json cmd_lattice(Context& ctx) {
  const LcmLattice lattice(ctx.subject(ctx.s_or(1)), ctx.job.cap_lattice);
  return {{"size", lattice.size()}, {"dump", dump_lattice(lattice)}};
}

json cmd_selftest(Context& ctx) {
  json checks = json::array();
  bool pass = true;
  auto record = [&](const std::string& name, bool ok) {
    checks.push_back({{"name", name}, {"pass", ok}});
    pass = pass && ok;
  };
  const auto& field = ctx.job.field;
  auto ideal = [](std::size_t n, std::initializer_list<const char*> gens) {
    std::vector<ExponentVector> m;
    for (auto g : gens) m.push_back(parse_monomial(g, n));
    return MonomialIdeal(n, m);
  };

  record("void complex has no homology", reduced_homology(SimplicialComplex::void_complex(), field).is_acyclic());
  record("empty complex has H~_{-1} = 1", reduced_homology(SimplicialComplex::empty_complex(), field)[-1] == 1);
  record("two points have H~_0 = 1", reduced_homology(SimplicialComplex(2, {{0}, {1}}), field)[0] == 1);
  record("hollow triangle has H~_1 = 1",
         reduced_homology(SimplicialComplex(3, {{0, 1}, {1, 2}, {0, 2}}), field)[1] == 1);

  const auto triangle = ideal(3, {"x1*x2", "x1*x3", "x2*x3"});
  const auto t = multigraded_betti(triangle, field);
  record("triangle ideal betti 3, 2", t.coarse(0, 2) == 3 && t.coarse(1, 3) == 2);
  record("triangle ideal has linear quotients", has_linear_quotient(triangle).has_value());
  const auto two = ideal(4, {"x1*x2", "x3*x4"});
  record("(x1x2, x3x4) fails gcd", !gcd_condition(two).holds);
  record("(x1x2, x3x4) is not linear", !has_linear_resolution(two, field).linear);
  record("taylor strand agrees at x1*x2*x3",
         taylor_strand_betti(triangle, field, parse_monomial("x1*x2*x3", 3), 1) == 2);
  auto r = verify_theorem_betti_bounds(disjoint_edges(2, 3), 2, field);
  record("induced matching bounds on 3 disjoint edges, s=2", r.pass);
  return {{"checks", checks}, {"pass", pass}};
}

using Handler = std::function<json(Context&)>;

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table{
      {"betti", cmd_betti},
      {"power", cmd_power},
      {"check-linear", cmd_check_linear},
      {"check-cwl", cmd_check_cwl},
      {"check-gcd", cmd_check_gcd},
      {"check-strong-gcd", cmd_check_strong_gcd},
      {"check-linquot", cmd_check_linquot},
      {"golod-cert", cmd_golod_cert},
      {"verify-thm34", cmd_verify_thm34},
      {"verify-cor35", cmd_verify_cor35},
      {"scan", cmd_scan},
      {"lattice", cmd_lattice},
      {"selftest", cmd_selftest},
  };
  return table;
}

/// Exit status implied by a result; only theorem checks can falsify.
int result_status(const std::string& command, const json& result) {
  if (command == "verify-thm34" || command == "verify-cor35" || command == "selftest")
    return result.at("pass").get<bool>() ? kOk : kFalsified;
  if (command == "scan") return result.at("theorem_violations").empty() ? kOk : kFalsified;
  return kOk;
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string render_text(const std::string& command, const json& doc) {
  const json& r = doc.at("result");
  std::ostringstream out;
  if (command == "betti") {
    out << r.at("diagram").get<std::string>();
  } else if (command == "power") {
    out << "(";
    const auto& g = r.at("ideal").at("gens");
    for (std::size_t i = 0; i < g.size(); ++i) out << (i ? ", " : "") << g[i].get<std::string>();
    out << ")\n";
  } else if (command == "check-linear") {
    out << yes_no(r.at("linear"));
    if (r.contains("witness"))
      out << " (beta_{" << r["witness"]["i"] << "," << r["witness"]["j"] << "} off the linear strand)";
    out << "\n";
  } else if (command == "check-cwl") {
    out << yes_no(r.at("componentwise_linear")) << "\n";
    for (const auto& p : r.at("pieces")) {
      out << "  degree " << p["degree"] << " (" << p["generator_count"] << " generators): ";
      out << (p["linear"].is_null() ? "skipped" : p["linear"].get<bool>() ? "linear" : "not linear") << "\n";
    }
  } else if (command == "check-gcd") {
    for (const char* key : {"gcd_condition", "support_condition"}) {
      const auto& c = r.at(key);
      out << key << ": " << yes_no(c.at("holds"));
      if (c.contains("failing_pair"))
        out << " (fails on " << c["failing_pair"][0].get<std::string>() << ", "
            << c["failing_pair"][1].get<std::string>() << ")";
      out << "\n";
    }
  } else if (command == "check-strong-gcd") {
    out << yes_no(r.at("holds")) << "\n";
    if (r.contains("witness")) out << "  order: " << r["witness"]["description"].get<std::string>() << "\n";
  } else if (command == "check-linquot") {
    out << "linear quotients: " << yes_no(r.at("linear_quotients")) << "\n";
    if (r.contains("witness")) out << "  order: " << r["witness"]["description"].get<std::string>() << "\n";
    if (r.contains("monomial_order"))
      out << "monomial order: "
          << (r["monomial_order"].is_null() ? std::string("none")
                                            : r["monomial_order"]["description"].get<std::string>())
          << "\n";
  } else if (command == "golod-cert") {
    if (!r.at("certified").get<bool>()) {
      out << "no certificate: " << r.at("note").get<std::string>() << "\n";
    } else {
      for (const auto& step : r["certificate"]["chain"])
        out << "  " << step["claim"].get<std::string>() << "  [" << step["license"].get<std::string>() << "]\n";
    }
  } else if (command == "verify-thm34") {
    for (const auto& rep : r.at("reports")) {
      out << "k=" << rep["k"] << " t=" << rep["t"] << " s=" << rep["s"] << ": beta_{1," << rep["beta1"]["degree"]
          << "}: bound " << rep["beta1"]["bound"] << " <= actual " << rep["beta1"]["actual"] << "; beta_{2,"
          << rep["beta2"]["degree"] << "}: bound " << rep["beta2"]["bound"] << " <= actual "
          << rep["beta2"]["actual"] << "; " << (rep["pass"].get<bool>() ? "PASS" : "FAIL") << "\n";
    }
  } else if (command == "verify-cor35") {
    for (const auto& rep : r.at("reports")) {
      out << "k=" << rep["k"] << " t=" << rep["t"] << " s=" << rep["s"] << ": ";
      if (!rep["applicable"].get<bool>()) out << "not applicable (t < 2)\n";
      else
        out << "reg bound " << rep["bound"] << " <= actual " << rep["actual"] << "; "
            << (rep["pass"].get<bool>() ? "PASS" : "FAIL") << "\n";
    }
  } else if (command == "scan") {
    out << r.at("problem").get<std::string>() << " scan over " << r.at("examined") << " instances (" << r["skipped"]
        << " skipped), " << r["hits"].size() << " hits\n";
    out << "counterexamples: " << r["counterexamples"].size() << "\n";
    for (const auto& c : r["counterexamples"])
      out << "  #" << c["index"] << " " << c["ideal"].get<std::string>() << " s=" << c["s"] << ": "
          << c["detail"].get<std::string>() << "\n";
    out << "theorem violations: " << r["theorem_violations"].size() << "\n";
    for (const auto& c : r["theorem_violations"])
      out << "  #" << c["index"] << " " << c["ideal"].get<std::string>() << " s=" << c["s"] << ": "
          << c["detail"].get<std::string>() << "\n";
  } else if (command == "lattice") {
    out << r.at("dump").get<std::string>();
  } else if (command == "selftest") {
    for (const auto& c : r.at("checks"))
      out << (c["pass"].get<bool>() ? "PASS " : "FAIL ") << c["name"].get<std::string>() << "\n";
  }
  return out.str();
}

json job_parameters(const JobSpec& job) {
  json p{{"field", job.field.token()}, {"cap_lattice", job.cap_lattice}, {"cap_gens", job.cap_gens}};
  p["s"] = job.s ? json(*job.s) : json(nullptr);
  p["s_max"] = job.s_max ? json(*job.s_max) : json(nullptr);
  if (job.command == "scan") {
    p["problem"] = job.problem;
    p["stream"] = job.stream;
    p["budget"] = job.budget;
    p["seed"] = job.seed;
  }
  if (job.command == "betti") p["quotient"] = job.quotient;
  return p;
}

}  // namespace

RunResult run(const JobSpec& job) {
  RunResult result;
  try {
    auto it = handlers().find(job.command);
    if (it == handlers().end()) throw UsageError("unknown command '" + job.command + "'");
    Context ctx{job, std::nullopt, std::nullopt, {}};
    json input = nullptr;
    if (job.input) {
      auto doc = load_input(*job.input);
      if (auto* parsed = std::get_if<ParsedIdeal>(&doc)) {
        ctx.ideal = parsed->ideal;
        ctx.warnings = parsed->warnings;
        if (structural_flags(parsed->ideal).is_squarefree) ctx.clutter = clutter_of_ideal(parsed->ideal);
        input = to_json(parsed->ideal);
      } else {
        ctx.clutter = std::get<Clutter>(doc);
        ctx.ideal = edge_ideal(*ctx.clutter);
        input = to_json(*ctx.clutter);
      }
    }
    const json parameters = job_parameters(job);

    json payload;
    std::optional<ResultCache> cache;
    std::string key;
    if (job.cache_dir && job.command != "selftest") {
      cache.emplace(*job.cache_dir);
      key = ResultCache::key(input.dump(), job.field.token(), job.command + " " + parameters.dump());
      if (auto hit = cache->get(key)) payload = json::parse(*hit);
    }
    if (payload.is_null()) {
      payload = it->second(ctx);
      if (cache) cache->put(key, payload.dump());
    }

    json doc{{"command", job.command},
             {"input", input},
             {"parameters", parameters},
             {"warnings", ctx.warnings},
             {"result", payload}};
    result.exit_code = result_status(job.command, payload);
    doc["exit_code"] = result.exit_code;
    for (const auto& w : ctx.warnings) result.diagnostics += "warning: " + w + "\n";
    result.output = job.format == Format::structured ? doc.dump(2) + "\n" : render_text(job.command, doc);
  } catch (const ResourceError& e) {
    result.exit_code = kResource;
    result.diagnostics += std::string("resource cap: ") + e.what() + "\n";
  } catch (const InvariantViolation& e) {
    result.exit_code = kFalsified;
    result.diagnostics += std::string("invariant violated: ") + e.what() + "\n";
  } catch (const std::exception& e) {
    result.exit_code = kUsage;
    result.diagnostics += std::string("error: ") + e.what() + "\n";
  }
  return result;
}

}  // namespace lcmres::cli
