#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <exception>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "zircon/corpus.hpp"
#include "zircon/errors.hpp"
#include "zircon/fixed_points.hpp"
#include "zircon/io.hpp"
#include "zircon/matching.hpp"
#include "zircon/mobius.hpp"
#include "zircon/poset.hpp"
#include "zircon/poset_map.hpp"
#include "zircon/zircon_property.hpp"

namespace zircon {

/// Which posets a sweep visits. Parsed from a manifest such as
/// {"mode": "exhaustive", "max_n": 6} or
/// {"mode": "random", "n": 10, "seeds": [1, 2], "density": 0.3}.
/// An exhaustive sweep covers sizes min_n..max_n; min_n defaults to max_n, so
/// {"max_n": 4} visits the 16 classes on four elements and {"min_n": 1,
/// "max_n": 6} the whole corpus of 405. In random mode "n" may also be a list
/// of sizes.
struct SweepConfig {
  enum class Mode { exhaustive, random };
  Mode mode = Mode::exhaustive;
  std::size_t min_n = 0;
  std::size_t max_n = 0;
  std::vector<std::size_t> sizes;
  std::vector<std::uint64_t> seeds;
  double density = 0.3;
  std::size_t matching_cap = kDefaultMatchingCap;
  std::size_t shuffles = 20;

  static SweepConfig from_json(const json& j) {
    SweepConfig c;
    try {
      if (!j.is_object() || !j.contains("mode") || !j["mode"].is_string())
        throw InputError("manifest needs a string \"mode\"");
      const auto mode = j["mode"].get<std::string>();
      if (mode == "exhaustive") {
        c.mode = Mode::exhaustive;
        c.max_n = j.at("max_n").get<std::size_t>();
        c.min_n = j.contains("min_n") ? j["min_n"].get<std::size_t>() : c.max_n;
        if (c.min_n < 1 || c.min_n > c.max_n) throw InputError("need 1 <= min_n <= max_n");
        if (c.max_n > kMaxExhaustiveSize)
          throw InputError("exhaustive sweeps are capped at max_n = " +
                           std::to_string(kMaxExhaustiveSize));
      } else if (mode == "random") {
        c.mode = Mode::random;
        const auto& n = j.at("n");
        if (n.is_array()) c.sizes = n.get<std::vector<std::size_t>>();
        else c.sizes = {n.get<std::size_t>()};
        c.seeds = j.at("seeds").get<std::vector<std::uint64_t>>();
        if (j.contains("density")) c.density = j["density"].get<double>();
        if (!(c.density >= 0.0 && c.density <= 1.0)) throw InputError("density must lie in [0, 1]");
      } else {
        throw InputError("unknown sweep mode: " + mode);
      }
      if (j.contains("cap_matchings")) c.matching_cap = j["cap_matchings"].get<std::size_t>();
      if (j.contains("shuffles")) c.shuffles = j["shuffles"].get<std::size_t>();
    } catch (const json::exception& e) {
      throw InputError(std::string("malformed manifest: ") + e.what());
    }
    return c;
  }

  json to_json() const {
    json j;
    if (mode == Mode::exhaustive) {
      j = {{"mode", "exhaustive"}, {"min_n", min_n}, {"max_n", max_n}};
    } else {
      j = {{"mode", "random"}, {"n", sizes}, {"seeds", seeds}, {"density", density}};
    }
    j["cap_matchings"] = matching_cap;
    j["shuffles"] = shuffles;
    return j;
  }
};

/// One (P, M, φ) run of the fixed-point construction.
struct CaseRecord {
  std::string poset;
  std::size_t matching = 0;      // position in the canonical special-matching list
  std::size_t automorphism = 0;  // position in the automorphism list
  std::size_t order = 1;
  std::size_t components = 0;
  std::size_t fixed_points = 0;
  bool special = false;
  std::optional<IdPair> witness;
  bool proof_steps = true;
  bool greedy = true;
  std::vector<std::string> violations;

  bool operator==(const CaseRecord&) const = default;
};

/// Poset-level checks.
struct PosetRecord {
  std::string poset;
  std::size_t n = 0;
  bool bounded = false;
  bool zircon = false;
  bool zircon_ranked = false;
  bool definitions_agree = true;
  std::size_t special_matchings = 0;
  bool truncated = false;
  std::size_t automorphisms = 0;
  std::size_t lifting_failures = 0;
  std::size_t corollary_failures = 0;
  bool sphericity = true;
  bool unique_minimum = true;
  bool oracles = true;
  std::size_t matching_dependence = 0;  // automorphisms whose M^φ varies with M
  std::vector<std::string> violations;

  bool operator==(const PosetRecord&) const = default;
};

/// Totals derived from the records by `summarize`.
struct SweepSummary {
  std::size_t posets = 0;
  std::size_t theorem_posets = 0;  // bounded with at least one special matching
  std::size_t zircons = 0;
  std::size_t cases = 0;
  std::size_t special_matchings = 0;
  std::size_t theorem_violations = 0;
  std::size_t proof_step_violations = 0;
  std::size_t lifting_violations = 0;
  std::size_t corollary_violations = 0;
  std::size_t definition_violations = 0;
  std::size_t sphericity_violations = 0;
  std::size_t unique_minimum_violations = 0;
  std::size_t oracle_violations = 0;
  std::size_t truncated = 0;
  std::size_t matching_dependence = 0;
  std::size_t skipped = 0;
  std::size_t panics = 0;
  std::size_t total_violations = 0;

  bool operator==(const SweepSummary&) const = default;
};

/// A unit whose checks threw something other than a recorded violation.
struct Panic {
  std::string poset;
  json serialized;
  std::string message;
  bool operator==(const Panic&) const = default;
};

struct SweepReport {
  json config;
  std::vector<PosetRecord> posets;
  std::vector<CaseRecord> cases;
  std::vector<Panic> panics;
  SweepSummary summary;
  std::optional<double> duration_seconds;

  bool operator==(const SweepReport&) const = default;
};

inline SweepSummary summarize(const std::vector<PosetRecord>& posets,
                              const std::vector<CaseRecord>& cases, std::size_t panics,
                              std::size_t skipped) {
  SweepSummary s;
  s.posets = posets.size();
  s.panics = panics;
  s.skipped = skipped;
  std::set<std::string> theorem_posets;
  for (const auto& p : posets) {
    if (p.zircon) ++s.zircons;
    s.special_matchings += p.special_matchings;
    s.lifting_violations += p.lifting_failures;
    s.corollary_violations += p.corollary_failures;
    if (!p.definitions_agree) ++s.definition_violations;
    if (!p.sphericity) ++s.sphericity_violations;
    if (!p.unique_minimum) ++s.unique_minimum_violations;
    if (!p.oracles) ++s.oracle_violations;
    if (p.truncated) ++s.truncated;
    s.matching_dependence += p.matching_dependence;
    s.total_violations += p.violations.size();
  }
  for (const auto& c : cases) {
    ++s.cases;
    theorem_posets.insert(c.poset);
    if (!c.special) ++s.theorem_violations;
    if (!c.proof_steps || !c.greedy) ++s.proof_step_violations;
    s.total_violations += c.violations.size();
  }
  s.theorem_posets = theorem_posets.size();
  s.total_violations += panics;
  return s;
}

namespace detail {

inline std::uint64_t fnv1a(const std::string& s, std::uint64_t h = 1469598103934665603ULL) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

struct UnitResult {
  PosetRecord record;
  std::vector<CaseRecord> cases;
};

inline void check_greedy(const Poset& p, const FixedPointAnalysis& a, std::size_t shuffles,
                         std::uint64_t seed, CaseRecord& rec) {
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> ks(a.family.order);
  std::iota(ks.begin(), ks.end(), std::size_t{1});
  for (std::size_t round = 0; round <= shuffles && rec.greedy; ++round) {
    if (round > 0) std::shuffle(ks.begin(), ks.end(), rng);
    for (Index q = 0; q < p.size(); ++q) {
      const auto& ext = a.extrema[a.component_of[q]];
      if (!ext) continue;
      if (greedy_descend(p, a.family, q, Direction::down, ks) != ext->min ||
          greedy_descend(p, a.family, q, Direction::up, ks) != ext->max) {
        rec.greedy = false;
        rec.violations.push_back("greedy descent from " + p.id(q) + " misses its component extremum");
        break;
      }
    }
  }
}

inline CaseRecord run_case(const std::string& name, const Poset& p, const Matching& m,
                           std::size_t mi, const PosetMap& phi, std::size_t pi,
                           std::size_t shuffles, std::vector<Matching>& fixed_matchings) {
  CaseRecord rec;
  rec.poset = name;
  rec.matching = mi;
  rec.automorphism = pi;
  try {
    auto a = analyze_fixed_points(p, m, phi);
    rec.order = a.family.order;
    rec.components = a.components.size();
    rec.fixed_points = a.fixed_points.size();
    rec.special = a.is_matching && a.special.special;
    if (a.special.witness)
      rec.witness = IdPair{a.subposet.id(a.special.witness->first), a.subposet.id(a.special.witness->second)};
    rec.proof_steps = a.members_special && a.extrema_unique && a.fixed_extremal && a.min_max_fixed_agree;
    if (!a.extrema_unique) rec.violations.push_back("orbit component without unique extrema");
    if (!a.fixed_extremal) rec.violations.push_back("fixed point not extremal in its component");
    if (!a.min_max_fixed_agree) rec.violations.push_back("component extrema disagree on being fixed");
    if (!a.is_matching) rec.violations.push_back("fixed-point construction is not a matching");
    else if (!a.special.special) rec.violations.push_back("fixed-point matching is not special");
    check_greedy(p, a, shuffles, fnv1a(name, mi * 1000003ULL + pi), rec);
    if (a.is_matching) fixed_matchings.push_back(Matching{a.candidate});
  } catch (const InvariantViolation& e) {
    rec.special = false;
    rec.proof_steps = false;
    rec.violations.push_back(e.what());
  }
  return rec;
}

}  // namespace detail

/// Runs every check that applies to one poset: both zircon definitions, the
/// lifting property for each special matching, the fixed-point construction
/// for every (M, φ) when bounded, the fixed-point zircon property, the Möbius
/// sign pattern on zircons, and the brute-force oracles.
inline detail::UnitResult sweep_poset(const std::string& name, const Poset& p,
                                      const SweepConfig& config) {
  detail::UnitResult out;
  PosetRecord& r = out.record;
  r.poset = name;
  r.n = p.size();
  r.bounded = p.is_bounded();

  r.zircon = is_zircon(p);
  r.zircon_ranked = is_zircon_ranked(p);
  r.definitions_agree = r.zircon == r.zircon_ranked;
  if (!r.definitions_agree) r.violations.push_back("zircon definitions disagree");

  auto specials = enumerate_special_matchings(p, config.matching_cap);
  r.special_matchings = specials.matchings.size();
  r.truncated = specials.truncated;
  auto autos = automorphisms(p);
  r.automorphisms = autos.size();

  for (const auto& m : specials.matchings) {
    if (!verify_lifting(p, m)) {
      ++r.lifting_failures;
      r.violations.push_back("lifting property fails");
    }
  }

  if (!specials.truncated) {
    std::set<Matching> expected;
    for (auto& m : enumerate_matchings(p))
      if (is_special(p, m)) expected.insert(std::move(m));
    std::set<Matching> found(specials.matchings.begin(), specials.matchings.end());
    if (found != expected || found.size() != specials.matchings.size()) {
      r.oracles = false;
      r.violations.push_back("special-matching enumeration disagrees with brute force");
    }
  }
  for (Index x = 0; x < p.size() && r.oracles; ++x) {
    auto column = mobius_column(p, x);
    for (Index y : p.up_set(x)) {
      if (column[y] != mobius_oracle(p, x, y)) {
        r.oracles = false;
        r.violations.push_back("Möbius recursion disagrees with zeta inversion");
        break;
      }
    }
  }

  if (r.zircon) {
    r.unique_minimum = ideals_have_unique_minimum(p);
    if (!r.unique_minimum) r.violations.push_back("zircon ideal without a unique minimum");
    auto rank = rank_function(p);
    if (!rank) {
      r.sphericity = false;
      r.violations.push_back("zircon without a rank function");
    } else {
      for (Index x = 0; x < p.size() && r.sphericity; ++x) {
        auto column = mobius_column(p, x);
        for (Index y : p.up_set(x)) {
          std::int64_t expected = ((*rank)[y] - (*rank)[x]) % 2 == 0 ? 1 : -1;
          if (column[y] != expected) {
            r.sphericity = false;
            r.violations.push_back("Möbius value on [" + p.id(x) + ", " + p.id(y) +
                                   "] is not (-1)^(rank difference)");
            break;
          }
        }
      }
    }
    for (const auto& phi : autos) {
      if (!is_zircon(fixed_point_subposet(p, phi))) {
        ++r.corollary_failures;
        r.violations.push_back("fixed-point subposet of a zircon is not a zircon");
      }
    }
  }

  if (r.bounded && !specials.matchings.empty()) {
    for (std::size_t pi = 0; pi < autos.size(); ++pi) {
      std::vector<Matching> fixed_matchings;
      for (std::size_t mi = 0; mi < specials.matchings.size(); ++mi)
        out.cases.push_back(detail::run_case(name, p, specials.matchings[mi], mi, autos[pi], pi,
                                             config.shuffles, fixed_matchings));
      std::set<Matching> distinct(fixed_matchings.begin(), fixed_matchings.end());
      if (distinct.size() > 1) ++r.matching_dependence;
    }
  }
  return out;
}

struct SweepOptions {
  std::size_t jobs = 1;
  bool timing = true;
};

/// A poset scheduled for `sweep_poset`.
struct SweepUnit {
  std::string name;
  Poset poset;
};

/// Units for a configuration. Exhaustive mode yields every isomorphism class
/// with min_n..max_n elements. Random mode yields each sampled poset P and,
/// because the fixed-point construction needs a bounded poset, its bounded
/// completion "P^" and every interval [x, y] with x < y, each kept only if it
/// has a special matching and a non-trivial automorphism; `skipped` counts the
/// bounded candidates left out.
inline std::vector<SweepUnit> sweep_units(const SweepConfig& config, std::size_t& skipped) {
  std::vector<SweepUnit> units;
  skipped = 0;
  if (config.mode == SweepConfig::Mode::exhaustive) {
    for (auto& e : exhaustive_corpus(config.max_n, config.min_n)) units.push_back({e.name, std::move(e.poset)});
    return units;
  }
  for (std::size_t n : config.sizes) {
    for (std::uint64_t seed : config.seeds) {
      std::string base = "r" + std::to_string(n) + "_s" + std::to_string(seed);
      Poset p = random_poset(n, seed, config.density);
      units.push_back({base, p});
      Poset hat = bounded_completion(p);
      if (find_special_matching(hat) && automorphisms(hat).size() > 1) units.push_back({base + "^", std::move(hat)});
      else ++skipped;
      for (Index x = 0; x < p.size(); ++x) {
        for (Index y : p.up_set(x)) {
          if (x == y) continue;
          Poset iv = p.interval(x, y);
          if (!find_special_matching(iv) || automorphisms(iv).size() < 2) {
            ++skipped;
            continue;
          }
          units.push_back({base + "[" + p.id(x) + "," + p.id(y) + "]", std::move(iv)});
        }
      }
    }
  }
  return units;
}

inline SweepReport run_sweep(const SweepConfig& config, const SweepOptions& options = {}) {
  const auto start = std::chrono::steady_clock::now();
  std::size_t skipped = 0;
  const auto units = sweep_units(config, skipped);

  std::vector<detail::UnitResult> results(units.size());
  std::vector<std::optional<Panic>> panics(units.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < units.size();) {
      try {
        results[i] = sweep_poset(units[i].name, units[i].poset, config);
      } catch (const std::exception& e) {
        panics[i] = Panic{units[i].name, poset_to_json(units[i].poset), e.what()};
      }
    }
  };
  const std::size_t jobs = std::max<std::size_t>(1, std::min(options.jobs, units.size()));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < jobs; ++t) pool.emplace_back(worker);
  }

  SweepReport report;
  report.config = config.to_json();
  for (std::size_t i = 0; i < units.size(); ++i) {
    if (panics[i]) {
      report.panics.push_back(*panics[i]);
      continue;
    }
    report.posets.push_back(std::move(results[i].record));
    for (auto& c : results[i].cases) report.cases.push_back(std::move(c));
  }
  report.summary = summarize(report.posets, report.cases, report.panics.size(), skipped);
  if (options.timing)
    report.duration_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

// JSON encoding -------------------------------------------------------------

inline void to_json(json& j, const CaseRecord& c) {
  j = {{"poset", c.poset},
       {"matching", c.matching},
       {"automorphism", c.automorphism},
       {"order_N", c.order},
       {"components", c.components},
       {"fixed_points", c.fixed_points},
       {"special", c.special},
       {"witness", c.witness ? json{c.witness->first, c.witness->second} : json(nullptr)},
       {"proof_steps", c.proof_steps},
       {"greedy", c.greedy},
       {"violations", c.violations}};
}

inline void from_json(const json& j, CaseRecord& c) {
  j.at("poset").get_to(c.poset);
  j.at("matching").get_to(c.matching);
  j.at("automorphism").get_to(c.automorphism);
  j.at("order_N").get_to(c.order);
  j.at("components").get_to(c.components);
  j.at("fixed_points").get_to(c.fixed_points);
  j.at("special").get_to(c.special);
  if (j.at("witness").is_null()) c.witness.reset();
  else c.witness = IdPair{j["witness"][0].get<std::string>(), j["witness"][1].get<std::string>()};
  j.at("proof_steps").get_to(c.proof_steps);
  j.at("greedy").get_to(c.greedy);
  j.at("violations").get_to(c.violations);
}

inline void to_json(json& j, const PosetRecord& r) {
  j = {{"poset", r.poset},
       {"n", r.n},
       {"bounded", r.bounded},
       {"zircon", r.zircon},
       {"zircon_ranked", r.zircon_ranked},
       {"definitions_agree", r.definitions_agree},
       {"special_matchings", r.special_matchings},
       {"truncated", r.truncated},
       {"automorphisms", r.automorphisms},
       {"lifting_failures", r.lifting_failures},
       {"corollary_failures", r.corollary_failures},
       {"sphericity", r.sphericity},
       {"unique_minimum", r.unique_minimum},
       {"oracles", r.oracles},
       {"matching_dependence", r.matching_dependence},
       {"violations", r.violations}};
}

inline void from_json(const json& j, PosetRecord& r) {
  j.at("poset").get_to(r.poset);
  j.at("n").get_to(r.n);
  j.at("bounded").get_to(r.bounded);
  j.at("zircon").get_to(r.zircon);
  j.at("zircon_ranked").get_to(r.zircon_ranked);
  j.at("definitions_agree").get_to(r.definitions_agree);
  j.at("special_matchings").get_to(r.special_matchings);
  j.at("truncated").get_to(r.truncated);
  j.at("automorphisms").get_to(r.automorphisms);
  j.at("lifting_failures").get_to(r.lifting_failures);
  j.at("corollary_failures").get_to(r.corollary_failures);
  j.at("sphericity").get_to(r.sphericity);
  j.at("unique_minimum").get_to(r.unique_minimum);
  j.at("oracles").get_to(r.oracles);
  j.at("matching_dependence").get_to(r.matching_dependence);
  j.at("violations").get_to(r.violations);
}

inline void to_json(json& j, const SweepSummary& s) {
  j = {{"posets", s.posets},
       {"theorem_posets", s.theorem_posets},
       {"zircons", s.zircons},
       {"cases", s.cases},
       {"special_matchings", s.special_matchings},
       {"theorem_violations", s.theorem_violations},
       {"proof_step_violations", s.proof_step_violations},
       {"lifting_violations", s.lifting_violations},
       {"corollary_violations", s.corollary_violations},
       {"definition_violations", s.definition_violations},
       {"sphericity_violations", s.sphericity_violations},
       {"unique_minimum_violations", s.unique_minimum_violations},
       {"oracle_violations", s.oracle_violations},
       {"truncated", s.truncated},
       {"matching_dependence", s.matching_dependence},
       {"skipped", s.skipped},
       {"panics", s.panics},
       {"total_violations", s.total_violations}};
}

inline void from_json(const json& j, SweepSummary& s) {
  j.at("posets").get_to(s.posets);
  j.at("theorem_posets").get_to(s.theorem_posets);
  j.at("zircons").get_to(s.zircons);
  j.at("cases").get_to(s.cases);
  j.at("special_matchings").get_to(s.special_matchings);
  j.at("theorem_violations").get_to(s.theorem_violations);
  j.at("proof_step_violations").get_to(s.proof_step_violations);
  j.at("lifting_violations").get_to(s.lifting_violations);
  j.at("corollary_violations").get_to(s.corollary_violations);
  j.at("definition_violations").get_to(s.definition_violations);
  j.at("sphericity_violations").get_to(s.sphericity_violations);
  j.at("unique_minimum_violations").get_to(s.unique_minimum_violations);
  j.at("oracle_violations").get_to(s.oracle_violations);
  j.at("truncated").get_to(s.truncated);
  j.at("matching_dependence").get_to(s.matching_dependence);
  j.at("skipped").get_to(s.skipped);
  j.at("panics").get_to(s.panics);
  j.at("total_violations").get_to(s.total_violations);
}

inline void to_json(json& j, const Panic& p) {
  j = {{"poset", p.poset}, {"serialized", p.serialized}, {"message", p.message}};
}

inline void from_json(const json& j, Panic& p) {
  j.at("poset").get_to(p.poset);
  p.serialized = j.at("serialized");
  j.at("message").get_to(p.message);
}

inline void to_json(json& j, const SweepReport& r) {
  j = {{"config", r.config},
       {"posets", r.posets},
       {"cases", r.cases},
       {"panics", r.panics},
       {"summary", r.summary}};
  if (r.duration_seconds) j["duration_seconds"] = *r.duration_seconds;
}

inline void from_json(const json& j, SweepReport& r) {
  r.config = j.at("config");
  j.at("posets").get_to(r.posets);
  j.at("cases").get_to(r.cases);
  j.at("panics").get_to(r.panics);
  j.at("summary").get_to(r.summary);
  if (j.contains("duration_seconds")) r.duration_seconds = j["duration_seconds"].get<double>();
  else r.duration_seconds.reset();
}

}  // namespace zircon
