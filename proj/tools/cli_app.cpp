#include "cli_app.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "planarity/cache.hpp"
#include "planarity/hirzebruch.hpp"
#include "planarity/hurwitz.hpp"
#include "planarity/singularity.hpp"
#include "planarity/strata.hpp"

namespace planarity::cli {

namespace {

using nlohmann::json;

constexpr const char* kStrataSchema = "planarity/strata/1";
constexpr const char* kHurwitzSchema = "planarity/hurwitz/1";
constexpr const char* kHirzebruchSchema = "planarity/hirzebruch/1";
constexpr const char* kDeltaSchema = "planarity/delta/1";

struct Output {
  std::ostream& out;
  std::ostream& err;
  bool as_json = false;

  void emit(const json& j) const { out << j.dump(2) << "\n"; }

  int fail(int code, const std::string& kind, const std::string& message, json extra = json::object()) const {
    if (as_json) {
      extra["kind"] = kind;
      extra["message"] = message;
      emit(json::object({{"error", extra}}));
    } else {
      err << "error (" << kind << "): " << message << "\n";
    }
    return code;
  }
};

template <class Body>
int guarded(const Output& io, Body body) {
  try {
    return body();
  } catch (const BudgetExceeded& e) {
    return io.fail(kBudget, "budget", e.what(), {{"visited", e.visited()}, {"budget", e.budget()}});
  } catch (const CacheIntegrityError& e) {
    return io.fail(kCacheIntegrity, "cache-integrity", e.what());
  } catch (const TreeParseError& e) {
    return io.fail(kDomainError, "parse", e.what());
  } catch (const ParseError& e) {
    return io.fail(kDomainError, "parse", e.what());
  } catch (const UnsupportedEngine& e) {
    return io.fail(kDomainError, "unsupported-engine", e.what());
  } catch (const DomainError& e) {
    return io.fail(kDomainError, "domain", e.what());
  }
}

Partition resolve_profile(const std::optional<int>& degree, const std::string& partition_text) {
  if (!partition_text.empty()) {
    Partition mu = Partition::parse(partition_text);
    if (degree && *degree != mu.size())
      throw DomainError("partition " + mu.str() + " is not a partition of degree " + std::to_string(*degree));
    return mu;
  }
  if (!degree) throw DomainError("give --degree or --partition");
  if (*degree < 1) throw DomainError("degree must be >= 1");
  return Partition::ones(*degree);
}

// ---------------------------------------------------------------- strata

struct StrataArgs {
  int genus = 0;
  std::optional<int> degree;
  std::string partition;
};

int cmd_strata(const StrataArgs& args, const Output& io) {
  return guarded(io, [&] {
    if (args.genus < 0) throw DomainError("genus must be >= 0");
    if (!args.partition.empty()) {
      resolve_profile(args.degree, args.partition);
    } else if (!args.degree) {
      throw DomainError("give --degree or --partition");
    }
    if (args.degree && *args.degree < 2) throw DomainError("degree must be >= 2");

    const StratificationReport rep = args.partition.empty()
                                         ? stratification_report(args.genus, *args.degree)
                                         : stratification_report(args.genus, Partition::parse(args.partition));
    json strata = json::array();
    for (const auto& s : rep.strata)
      strata.push_back({{"l", s.l},
                        {"dim", s.stratum_dim},
                        {"severi_dim", s.severi_expected_dim},
                        {"nodes", to_string(s.node_count)}});
    json j = {{"schema", kStrataSchema},
              {"g", rep.g},
              {"d", rep.d},
              {"m", rep.m},
              {"M", rep.M},
              {"ambient_dim", rep.ambient_dim},
              {"single_stratum", rep.single_stratum},
              {"strata", strata},
              {"flags",
               {{"corollary_single", rep.corollary_single},
                {"corollary_exception", rep.corollary_exception},
                {"m_exceeds_M", rep.m_exceeds_M},
                {"exceeds_d_plus_2", rep.exceeds_d_plus_2}}},
              {"notes", rep.notes}};
    if (rep.mu) j["mu"] = rep.mu->str();

    if (io.as_json) {
      io.emit(j);
      return int{kOk};
    }
    io.out << "g = " << rep.g << ", d = " << rep.d;
    if (rep.mu) io.out << ", mu = (" << rep.mu->str() << ")";
    io.out << "\nm = " << rep.m << ", M = " << rep.M << ", ambient dim = " << rep.ambient_dim
           << (rep.single_stratum ? ", single stratum" : "") << "\n";
    for (const auto& s : rep.strata)
      io.out << "  l = " << s.l << ": dim " << s.stratum_dim << ", Severi dim " << s.severi_expected_dim << ", nodes "
             << to_string(s.node_count) << (s.is_top ? " (whole space)" : "") << "\n";
    for (const auto& note : rep.notes) io.out << "note: " << note << "\n";
    return int{kOk};
  });
}

// ---------------------------------------------------------------- hurwitz

struct HurwitzArgs {
  int genus = 0;
  std::optional<int> degree;
  std::string partition;
  std::string engine = "character";
  std::string convention = "labeled-poles";
  bool verify = false;
  std::uint64_t budget = BruteOptions{}.budget;
  unsigned threads = 0;
  std::string cache_path;
};

std::string_view status_name(OrbitCountStatus s) {
  switch (s) {
    case OrbitCountStatus::BridgedToHurwitz: return "bridged-to-hurwitz";
    case OrbitCountStatus::DocumentedUnresolved: return "documented-unresolved";
    case OrbitCountStatus::ReferenceOnly: return "reference-only";
  }
  return "unknown";
}

int cmd_hurwitz(const HurwitzArgs& args, const Output& io) {
  return guarded(io, [&]() -> int {
    if (args.genus < 0) throw DomainError("genus must be >= 0");
    const Partition mu = resolve_profile(args.degree, args.partition);
    const Convention convention = parse_convention(args.convention);
    const Engine engine = parse_engine(args.engine);
    const int d = mu.size();

    std::optional<HurwitzCache> cache;
    std::string cache_path = args.cache_path;
    if (cache_path.empty())
      if (const char* env = std::getenv("HURWITZ_CACHE")) cache_path = env;
    if (!cache_path.empty()) cache.emplace(cache_path);

    BruteOptions options;
    options.budget = args.budget;
    options.threads = args.threads;

    HurwitzQuery query{args.genus, mu, convention, engine};
    const long r = query.r();

    json j = {{"schema", kHurwitzSchema}, {"g", args.genus},          {"d", d},
              {"mu", mu.str()},           {"r", r},                   {"convention", to_string(convention)},
              {"engine", to_string(engine)}};

    ExactInt raw = 0;
    bool disagreement = false;
    if (r < 0) {
      j["void"] = true;
    } else {
      j["void"] = false;
      const CacheKey key{d, r, mu.str(), "n_trans"};
      if (!args.verify) {
        if (engine == Engine::ClosedForm && args.genus != 0)
          throw UnsupportedEngine("the closed-form engine only covers genus 0");
        if (auto hit = cache ? cache->lookup(key) : std::nullopt) {
          raw = *hit;
        } else {
          raw = hurwitz_number(query, options).raw_transitive_tuples;
          if (cache) cache->store(key, raw, std::string(to_string(engine)));
        }
      } else {
        std::vector<Engine> engines{Engine::Brute, Engine::Character, Engine::CutAndJoin};
        if (args.genus == 0) engines.push_back(Engine::ClosedForm);
        json per_engine = json::object();
        std::optional<ExactInt> first;
        bool have_requested = false;
        for (Engine e : engines) {
          HurwitzQuery q = query;
          q.engine = e;
          const ExactInt v = hurwitz_number(q, options).raw_transitive_tuples;
          per_engine[std::string(to_string(e))] = v.get_str();
          if (!first) first = v;
          if (v != *first) disagreement = true;
          if (e == engine) {
            raw = v;
            have_requested = true;
          }
        }
        if (!have_requested) raw = *first;
        j["verify"] = {{"engines", per_engine}, {"agree", !disagreement}};
        if (!disagreement && cache) cache->store(key, raw, "verify");
      }
    }

    const ExactRat value = apply_convention(raw, mu, convention);
    ExactRat over_factorial(raw, factorial(d));
    over_factorial.canonicalize();
    j["value"] = to_string(value);
    j["raw_transitive_tuples"] = raw.get_str();
    j["tuples_over_d_factorial"] = to_string(over_factorial);

    std::optional<PlaneOrbitReference> ref;
    if (mu == Partition::ones(d) && binomial(d - 1, 2) == args.genus) ref = plane_orbit_reference(d);
    if (ref)
      j["plane_orbit_reference"] = {{"d", ref->degree},
                                    {"published", ref->published.get_str()},
                                    {"status", status_name(ref->status)},
                                    {"note", ref->note}};

    if (io.as_json) {
      io.emit(j);
    } else {
      io.out << "h = " << to_string(value) << "\n";
      io.out << "  genus " << args.genus << ", mu = (" << mu.str() << "), r = " << r << (r < 0 ? " (void query)" : "")
             << "\n";
      io.out << "  convention " << to_string(convention) << ", engine " << to_string(engine) << "\n";
      io.out << "  raw transitive tuples = " << raw.get_str() << "; divided by " << d
             << "! = " << to_string(over_factorial) << "\n";
      if (j.contains("verify")) {
        io.out << "  verify:";
        for (const auto& [name, v] : j["verify"]["engines"].items()) io.out << " " << name << "=" << v.get<std::string>();
        io.out << (disagreement ? "  DISAGREE" : "  agree") << "\n";
      }
      if (ref) io.out << "note: [" << status_name(ref->status) << "] " << ref->note << "\n";
    }
    return disagreement ? int{kDisagreement} : int{kOk};
  });
}

// ---------------------------------------------------------------- hirzebruch

struct HirzebruchArgs {
  int n = 1;
  std::string class_dk;
  std::string expr;
  bool genus = false;
  std::vector<std::string> intersect;
  bool canonical = false;
  bool self_intersection = false;
  bool adjunction = false;
  bool effective = false;
  std::optional<int> severi_genus;
  std::string partition;
};

json class_json(const DivisorClass& c) {
  return {{"Linf", c.a},
          {"F", c.b},
          {"L0_coeff", c.l0_coefficient()},
          {"F_coeff_in_L0_basis", c.f_coefficient_in_l0_basis()},
          {"text", c.str()}};
}

DivisorClass parse_dk(int n, const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw ParseError("--class expects 'd,k' for d*L0 + k*F");
  try {
    std::size_t used1 = 0, used2 = 0;
    const long d = std::stol(text.substr(0, comma), &used1);
    const long k = std::stol(text.substr(comma + 1), &used2);
    if (used1 != comma || used2 != text.size() - comma - 1) throw ParseError("trailing characters");
    return DivisorClass::from_l0_basis(n, d, k);
  } catch (const std::logic_error&) {
    throw ParseError("--class expects 'd,k' for d*L0 + k*F, got '" + text + "'");
  }
}

int cmd_hirzebruch(const HirzebruchArgs& args, const Output& io) {
  return guarded(io, [&] {
    if (args.n < 0) throw DomainError("Hirzebruch index must be >= 0");
    std::optional<DivisorClass> c;
    if (!args.class_dk.empty()) c = parse_dk(args.n, args.class_dk);
    if (!args.expr.empty()) c = DivisorClass::parse(args.n, args.expr);
    auto need_class = [&]() -> const DivisorClass& {
      if (!c) throw DomainError("this query needs --class d,k or --expr");
      return *c;
    };

    json j = {{"schema", kHirzebruchSchema}, {"n", args.n}};
    std::vector<std::string> lines;
    if (c) j["class"] = class_json(*c);

    if (args.genus) {
      const auto& cls = need_class();
      const ExactInt g = smooth_genus(args.n, cls.l0_coefficient(), cls.f_coefficient_in_l0_basis());
      j["genus"] = g.get_str();
      lines.push_back("genus: " + g.get_str());
    }
    if (!args.intersect.empty()) {
      if (args.intersect.size() != 2) throw ParseError("--intersect takes two class expressions");
      const DivisorClass x = DivisorClass::parse(args.n, args.intersect[0]);
      const DivisorClass y = DivisorClass::parse(args.n, args.intersect[1]);
      const long v = intersect(x, y);
      j["intersection"] = {{"lhs", x.str()}, {"rhs", y.str()}, {"value", v}};
      lines.push_back("intersection: " + std::to_string(v));
    }
    if (args.canonical) {
      const DivisorClass k = canonical_class(args.n);
      j["canonical"] = class_json(k);
      j["canonical_square"] = intersect(k, k);
      lines.push_back("canonical: " + k.str() + " (K^2 = " + std::to_string(intersect(k, k)) + ")");
    }
    if (args.self_intersection) {
      const auto& cls = need_class();
      j["self_intersection"] = intersect(cls, cls);
      lines.push_back("self-intersection: " + std::to_string(intersect(cls, cls)));
    }
    if (args.adjunction) {
      const auto g = adjunction_genus(need_class());
      j["adjunction_genus"] = to_string(g);
      lines.push_back("adjunction genus: " + to_string(g));
    }
    if (args.effective) {
      const auto e = is_effective_combination(need_class());
      j["effective"] = {{"F_Linf", e.in_f_linf}, {"F_L0", e.in_f_l0}};
      lines.push_back(std::string("non-negative in (F, Linf): ") + (e.in_f_linf ? "yes" : "no") +
                      ", in (F, L0): " + (e.in_f_l0 ? "yes" : "no"));
    }
    if (args.severi_genus) {
      std::optional<Partition> mu;
      if (!args.partition.empty()) mu = Partition::parse(args.partition);
      const long dim = expected_severi_dim_hirz(*args.severi_genus, need_class(), mu);
      j["severi_dim"] = dim;
      lines.push_back("expected Severi dimension: " + std::to_string(dim));
    }
    if (lines.empty()) {
      if (!c) throw DomainError("nothing to compute; see --help");
      lines.push_back("class: " + c->str());
    }

    if (io.as_json) io.emit(j);
    else
      for (const auto& line : lines) io.out << line << "\n";
    return int{kOk};
  });
}

// ---------------------------------------------------------------- delta

struct DeltaArgs {
  std::string tree;
  std::optional<int> degree;
  std::vector<std::string> trees;
  int nodes = 0;
};

int cmd_delta(const DeltaArgs& args, const Output& io) {
  return guarded(io, [&] {
    json j = {{"schema", kDeltaSchema}};
    std::vector<std::string> lines;
    SingularityProfile profile;
    if (!args.tree.empty()) {
      const MultiplicityTree t = parse_tree(args.tree);
      const ExactInt delta = delta_invariant(t);
      j["tree"] = format_tree(t);
      j["delta"] = delta.get_str();
      lines.push_back("delta: " + delta.get_str());
      profile.push_back(t);
    }
    for (const auto& text : args.trees)
      for (auto& t : parse_profile(text)) profile.push_back(std::move(t));
    if (args.nodes < 0) throw DomainError("--nodes must be >= 0");
    for (int i = 0; i < args.nodes; ++i) profile.push_back(MultiplicityTree::ordinary(2));

    if (args.degree) {
      ExactInt total = 0;
      json listed = json::array();
      for (const auto& t : profile) {
        total += delta_invariant(t);
        listed.push_back(format_tree(t));
      }
      const ExactInt g = plane_genus(*args.degree, profile);
      j["degree"] = *args.degree;
      j["profile"] = listed;
      j["total_delta"] = total.get_str();
      j["genus"] = g.get_str();
      lines.push_back("genus: " + g.get_str());
    } else if (args.tree.empty()) {
      throw DomainError("give --tree, or --degree with --trees/--nodes");
    } else if (!args.trees.empty() || args.nodes > 0) {
      throw DomainError("--trees and --nodes need --degree");
    }

    if (io.as_json) io.emit(j);
    else
      for (const auto& line : lines) io.out << line << "\n";
    return int{kOk};
  });
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact planarity stratification, Hurwitz numbers and plane-curve invariants", "planarity"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  bool json_flag = false;

  StrataArgs strata;
  auto* strata_cmd = app.add_subcommand("strata", "planarity stratification of H_{g,d} or H_{g,mu}");
  strata_cmd->add_option("--genus,-g", strata.genus, "genus g >= 0")->required();
  strata_cmd->add_option("--degree,-d", strata.degree, "degree d >= 2");
  strata_cmd->add_option("--partition,-p", strata.partition, "profile mu over infinity, e.g. 2,1");
  strata_cmd->add_flag("--json", json_flag, "machine-readable output");

  HurwitzArgs hurwitz;
  auto* hurwitz_cmd = app.add_subcommand("hurwitz", "Hurwitz numbers h_{g,d} and h_{g,mu}");
  hurwitz_cmd->add_option("--genus,-g", hurwitz.genus, "genus g >= 0")->required();
  hurwitz_cmd->add_option("--degree,-d", hurwitz.degree, "degree; alone it means mu = (1^d)");
  hurwitz_cmd->add_option("--partition,-p", hurwitz.partition, "profile mu, e.g. 2,1");
  hurwitz_cmd->add_option("--engine,-e", hurwitz.engine, "brute | character | closed-form | cut-and-join")
      ->capture_default_str();
  hurwitz_cmd->add_option("--convention,-c", hurwitz.convention, "tuples | labeled-poles")->capture_default_str();
  hurwitz_cmd->add_flag("--verify", hurwitz.verify, "run every applicable engine and compare");
  hurwitz_cmd->add_option("--budget", hurwitz.budget, "brute-force node budget")->capture_default_str();
  hurwitz_cmd->add_option("--threads", hurwitz.threads, "brute-force worker threads (0 = all cores)");
  hurwitz_cmd->add_option("--cache", hurwitz.cache_path, "JSON-lines cache file (default: $HURWITZ_CACHE)");
  hurwitz_cmd->add_flag("--json", json_flag, "machine-readable output");

  HirzebruchArgs hirz;
  auto* hirz_cmd = app.add_subcommand("hirzebruch", "divisor classes on the Hirzebruch surface Sigma_n");
  hirz_cmd->add_option("--n,-n", hirz.n, "surface index n >= 0")->required();
  hirz_cmd->add_option("--class", hirz.class_dk, "class d,k meaning d*L0 + k*F");
  hirz_cmd->add_option("--expr", hirz.expr, "class expression, e.g. 2L0+F or K");
  hirz_cmd->add_flag("--genus", hirz.genus, "genus of a smooth curve in the class");
  hirz_cmd->add_option("--intersect", hirz.intersect, "intersection number of two class expressions")
      ->expected(2);
  hirz_cmd->add_flag("--canonical", hirz.canonical, "canonical class");
  hirz_cmd->add_flag("--self-intersection", hirz.self_intersection, "C.C");
  hirz_cmd->add_flag("--adjunction", hirz.adjunction, "1 + (C.C + K.C)/2");
  hirz_cmd->add_flag("--effective", hirz.effective, "non-negativity in the (F, Linf) and (F, L0) bases");
  hirz_cmd->add_option("--severi-dim", hirz.severi_genus, "expected Severi dimension for genus g (Sigma_1)");
  hirz_cmd->add_option("--partition,-p", hirz.partition, "tangency profile mu for --severi-dim");
  hirz_cmd->add_flag("--json", json_flag, "machine-readable output");

  DeltaArgs delta;
  auto* delta_cmd = app.add_subcommand("delta", "delta invariants and genera of singular plane curves");
  delta_cmd->add_option("--tree,-t", delta.tree, "multiplicity tree, e.g. 2[2]");
  delta_cmd->add_option("--degree,-d", delta.degree, "plane curve degree");
  delta_cmd->add_option("--trees", delta.trees, "singular points, ';'-separated or repeated");
  delta_cmd->add_option("--nodes", delta.nodes, "additional ordinary nodes");
  delta_cmd->add_flag("--json", json_flag, "machine-readable output");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? int{kOk} : int{kDomainError};
  }

  const Output io{out, err, json_flag};
  if (*strata_cmd) return cmd_strata(strata, io);
  if (*hurwitz_cmd) return cmd_hurwitz(hurwitz, io);
  if (*hirz_cmd) return cmd_hirzebruch(hirz, io);
  return cmd_delta(delta, io);
}

}  // namespace planarity::cli
