// zircon: command-line front end for the poset library.
//
//   zircon check POSET MATCHING [AUTOMORPHISM]
//   zircon sweep MANIFEST
//   zircon coxeter TYPE export|zircon-check|twisted|fix-check [THETA] [--against TYPE]
//   zircon dot POSET
//   zircon mobius POSET [X Y]
//
// Exit codes: 0 all checks pass, 1 a check failed, 2 input error, 3 a sweep
// worker panicked.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "zircon/all.hpp"

namespace {

using namespace zircon;

enum Exit { kPass = 0, kFail = 1, kInputError = 2, kPanic = 3 };

struct Globals {
  std::string output;
  std::size_t jobs = 0;
  std::optional<std::size_t> cap;
  bool no_timing = false;
};

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

void emit(const Globals& g, const std::string& text) {
  if (g.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(g.output);
  if (!out) throw InputError("cannot write " + g.output);
  out << text;
}

void emit(const Globals& g, const json& j) { emit(g, j.dump(2) + "\n"); }

json cover_json(const Poset& p, const std::optional<Cover>& c) {
  if (!c) return nullptr;
  return {p.id(c->first), p.id(c->second)};
}

int cmd_check(const Globals& g, const std::string& poset_path, const std::string& matching_path,
              const std::string& map_path) {
  Poset p = poset_from_json(read_json(poset_path));
  Matching m{matching_from_json(p, read_json(matching_path))};
  json report = {{"is_matching", is_matching(p, m)}};
  bool pass = report["is_matching"];
  if (pass) {
    auto verdict = is_special(p, m);
    report["special"] = verdict.special;
    report["witness"] = cover_json(p, verdict.witness);
    pass = verdict.special;
    if (verdict.special) {
      auto lifting = verify_lifting(p, m);
      report["lifting"] = lifting.holds;
      if (lifting.witness)
        report["lifting_witness"] = {{"x", p.id(lifting.witness->x)},
                                     {"y", p.id(lifting.witness->y)},
                                     {"clause", lifting.witness->clause}};
      pass = pass && lifting.holds;
    }
  } else {
    report["special"] = false;
    report["witness"] = nullptr;
  }
  if (!map_path.empty()) {
    PosetMap phi = map_from_json(p, read_json(map_path));
    if (!is_automorphism(p, phi)) throw InputError("the given map is not an automorphism");
    if (pass) {
      auto analysis = analyze_fixed_points(p, m, phi);
      report["fixed_point"] = fixed_point_report(p, analysis);
      pass = analysis.ok();
    }
  }
  emit(g, report);
  return pass ? kPass : kFail;
}

int cmd_sweep(const Globals& g, const std::string& manifest_path) {
  auto config = SweepConfig::from_json(read_json(manifest_path));
  if (g.cap) config.matching_cap = *g.cap;
  SweepOptions options;
  options.jobs = g.jobs ? g.jobs : std::max(1U, std::thread::hardware_concurrency());
  options.timing = !g.no_timing;
  auto report = run_sweep(config, options);
  emit(g, json(report));
  const auto& s = report.summary;
  std::cerr << "processed " << s.posets << " posets, " << s.cases << " cases, " << s.total_violations
            << " violations, " << s.panics << " panics\n";
  if (s.panics) return kPanic;
  return s.total_violations == 0 ? kPass : kFail;
}

DiagramAutomorphism parse_theta(const CoxeterSystem& w, const std::string& spec) {
  if (spec.empty() || spec == "id") return trivial_automorphism(w);
  if (spec == "flip") return flip_automorphism(w);
  // Explicit generator images, 1-based: "3,2,1".
  std::vector<std::size_t> perm;
  std::stringstream in(spec);
  for (std::string item; std::getline(in, item, ',');) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || v < 1) throw InputError("bad theta spec: " + spec);
    perm.push_back(static_cast<std::size_t>(v - 1));
  }
  return diagram_automorphism(w, std::move(perm));
}

bool sphericity(const Poset& p) {
  auto rank = rank_function(p);
  if (!rank) return false;
  for (Index x = 0; x < p.size(); ++x) {
    auto column = mobius_column(p, x);
    for (Index y : p.up_set(x))
      if (column[y] != (((*rank)[y] - (*rank)[x]) % 2 == 0 ? 1 : -1)) return false;
  }
  return true;
}

int cmd_coxeter(const Globals& g, const std::string& type_spec, const std::string& action,
                const std::string& theta_spec, const std::string& against, const std::string& format) {
  auto w = CoxeterSystem::build(CoxeterType::parse(type_spec));
  auto bruhat = bruhat_poset(w);

  if (action == "export") {
    if (format == "dot") emit(g, to_dot(bruhat, w.type().name()));
    else emit(g, poset_to_json(bruhat));
    return kPass;
  }

  if (action == "zircon-check") {
    std::size_t checked = 0;
    json failures = json::array();
    for (Index x = 1; x < w.order(); ++x)
      for (std::size_t s = 0; s < w.rank(); ++s)
        for (Side side : {Side::left, Side::right}) {
          bool descent = side == Side::left ? w.is_left_descent(x, s) : w.is_right_descent(x, s);
          if (!descent) continue;
          auto m = descent_matching(w, bruhat, x, s, side);
          ++checked;
          auto verdict = is_special(m.ideal, m.matching);
          if (!verdict.special)
            failures.push_back({{"w", w.label(x)},
                                {"s", s + 1},
                                {"side", side == Side::left ? "left" : "right"},
                                {"witness", cover_json(m.ideal, verdict.witness)}});
        }
    bool zircon = is_zircon(bruhat);
    emit(g, json{{"type", w.type().name()},
                 {"elements", bruhat.size()},
                 {"zircon", zircon},
                 {"descent_matchings", checked},
                 {"failures", failures}});
    return zircon && failures.empty() ? kPass : kFail;
  }

  const auto theta = parse_theta(w, theta_spec);

  if (action == "twisted") {
    auto inv = twisted_involutions(w, theta);
    auto sub = bruhat.induced(inv);
    auto f = twisted_map(w, bruhat, theta);
    bool equals = sub == fixed_point_subposet(bruhat, f);
    bool zircon = is_zircon(sub);
    bool spherical = sphericity(sub);
    emit(g, json{{"type", w.type().name()},
                 {"theta", theta_spec.empty() ? "id" : theta_spec},
                 {"elements", sub.size()},
                 {"poset", poset_to_json(sub)},
                 {"equals_fixed_subposet", equals},
                 {"zircon", zircon},
                 {"sphericity", spherical ? "pass" : "fail"}});
    return equals && zircon && spherical ? kPass : kFail;
  }

  if (action == "fix-check") {
    if (against.empty()) throw InputError("fix-check needs --against TYPE");
    auto fix = fix_subgroup_poset(w, bruhat, theta);
    auto candidate = bruhat_poset(CoxeterSystem::build(CoxeterType::parse(against)));
    bool iso = are_isomorphic(fix, candidate).has_value();
    emit(g, json{{"type", w.type().name()},
                 {"theta", theta_spec.empty() ? "id" : theta_spec},
                 {"against", CoxeterType::parse(against).name()},
                 {"fix_elements", fix.size()},
                 {"candidate_elements", candidate.size()},
                 {"isomorphic", iso}});
    return iso ? kPass : kFail;
  }

  throw InputError("unknown coxeter action: " + action);
}

int cmd_dot(const Globals& g, const std::string& poset_path, const std::string& name) {
  emit(g, to_dot(poset_from_json(read_json(poset_path)), name));
  return kPass;
}

int cmd_mobius(const Globals& g, const std::string& poset_path, const std::string& x,
               const std::string& y) {
  Poset p = poset_from_json(read_json(poset_path));
  if (!x.empty()) {
    if (y.empty()) throw InputError("mobius needs both X and Y");
    Index a = p.index(x), b = p.index(y);
    if (!p.leq(a, b)) throw InputError(x + " is not <= " + y);
    emit(g, json{{"x", x}, {"y", y}, {"mu", mobius(p, a, b)}});
    return kPass;
  }
  json values = json::array();
  for (Index a = 0; a < p.size(); ++a) {
    auto column = mobius_column(p, a);
    for (Index b : p.up_set(a)) values.push_back({p.id(a), p.id(b), column[b]});
  }
  emit(g, json{{"mobius", values}});
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Special matchings, zircons and fixed-point constructions on finite posets"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--output,-o", g.output, "Write the report here instead of stdout");
  app.add_option("--jobs,-j", g.jobs, "Worker threads for sweeps (default: all cores)");
  app.add_option("--cap-matchings", g.cap, "Stop enumerating special matchings after K");
  app.add_flag("--no-timing", g.no_timing, "Omit wall-clock duration from sweep reports");

  std::string poset, matching, map, manifest, type, action, theta, against, x, y;
  std::string format = "json", name = "poset";
  auto* check = app.add_subcommand("check", "Check a matching, optionally with an automorphism");
  check->add_option("poset", poset)->required();
  check->add_option("matching", matching)->required();
  check->add_option("automorphism", map);

  auto* sweep = app.add_subcommand("sweep", "Run the invariant suite over a manifest");
  sweep->add_option("manifest", manifest)->required();

  auto* coxeter = app.add_subcommand("coxeter", "Bruhat order computations on a finite Coxeter group");
  coxeter->add_option("type", type, "A3, B3, D4, I2:7, ...")->required();
  coxeter->add_option("action", action)
      ->required()
      ->check(CLI::IsMember({"export", "zircon-check", "twisted", "fix-check"}));
  coxeter->add_option("theta", theta, "id, flip, or 1-based generator images such as 3,2,1");
  coxeter->add_option("--against", against, "Candidate type for fix-check");
  coxeter->add_option("--format", format, "export format")->check(CLI::IsMember({"json", "dot"}));

  auto* dot = app.add_subcommand("dot", "Graphviz rendering of a poset");
  dot->add_option("poset", poset)->required();
  dot->add_option("--name", name);

  auto* mob = app.add_subcommand("mobius", "Möbius function values");
  mob->add_option("poset", poset)->required();
  mob->add_option("x", x);
  mob->add_option("y", y);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kInputError;
  }

  try {
    if (*check) return cmd_check(g, poset, matching, map);
    if (*sweep) return cmd_sweep(g, manifest);
    if (*coxeter) return cmd_coxeter(g, type, action, theta, against, format);
    if (*dot) return cmd_dot(g, poset, name);
    if (*mob) return cmd_mobius(g, poset, x, y);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violated: " << e.what() << "\n";
    return kFail;
  }
  return kInputError;
}
