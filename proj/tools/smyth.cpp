// smyth: command-line front end. Every command writes one JSON report.
// Exit status: 0 when every asserted property held, 1 on bad input or an
// exceeded cap, 2 on a property violation (the report carries the witness).

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "smyth/smyth.hpp"

namespace {

using nlohmann::json;
using namespace smyth;

struct Options {
  std::size_t cap = Limits{}.element_cap;
  std::size_t family_bound = Limits{}.family_bound;
  std::uint64_t seed = 42;
  std::string out;

  Limits limits() const {
    Limits l;
    l.element_cap = cap;
    l.family_bound = family_bound;
    return l;
  }
};

void write_report(const Options& opt, const json& report) {
  if (opt.out.empty()) {
    std::cout << dump(report);
    return;
  }
  std::ofstream f(opt.out, std::ios::binary);
  if (!f) throw InvalidInput("cannot write '" + opt.out + "'");
  f << dump(report);
}

void write_file(const std::string& path, const json& j) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InvalidInput("cannot write '" + path + "'");
  f << dump(j);
}

int cmd_analyze(const Options& opt, const std::string& input) {
  const auto limits = opt.limits();
  const auto space = space_or_poset_from_json(read_json_file(input), limits);
  auto report = to_json(analyze(space, limits), space);
  report["points"] = space.names();
  report["seed"] = opt.seed;
  write_report(opt, report);
  return 0;
}

int cmd_scott(const Options& opt, const std::string& input) {
  const auto limits = opt.limits();
  const auto p = poset_from_json(read_json_file(input));
  const auto alex = alexandroff_topology(p);
  json report;
  bool agree = true;
  if (p.size() <= limits.directed_subset_points) {
    const auto scott = scott_topology(p, limits);
    agree = scott.opens() == alex.opens();
    report = to_json(scott);
    report["method"] = to_string(Method::definitional);
  } else {
    report = to_json(alex);
    report["method"] = to_string(Method::structural);
  }
  report["equals_alexandroff"] = agree;
  report["seed"] = opt.seed;
  write_report(opt, report);
  return agree ? 0 : 2;
}

int cmd_powerspace(const Options& opt, const std::string& input, std::size_t iterate, std::string sidecar) {
  const auto limits = opt.limits();
  const auto space = space_or_poset_from_json(read_json_file(input), limits);
  const auto ps = iterate_powerspace(space, iterate, limits);
  const auto xi = canonical_map(ps, limits);
  const bool t0 = specialization(ps.base()).t0;

  auto report = powerspace_json(ps);
  report["iterate"] = iterate;
  report["seed"] = opt.seed;
  auto side = powerspace_sidecar(ps, xi);
  side["base_t0"] = t0;
  side["seed"] = opt.seed;
  if (sidecar.empty()) sidecar = (opt.out.empty() ? std::string("powerspace") : opt.out) + ".sidecar.json";
  write_file(sidecar, side);
  write_report(opt, report);
  // On a non-T0 base the map is not injective, and nothing is claimed.
  return !t0 || xi.embedding() ? 0 : 2;
}

int cmd_frame_check(const Options& opt, const std::string& input) {
  const auto fr = build_frame(poset_from_json(read_json_file(input)), opt.limits());
  bool join_meet = true;
  try {
    for (std::size_t a = 0; a < fr.size(); ++a)
      for (std::size_t b = a; b < fr.size(); ++b) {
        PointSet pair(fr.size());
        pair.insert(a);
        pair.insert(b);
        check_join_meet(fr, pair);
      }
    check_join_meet(fr, PointSet(fr.size()));
    check_join_meet(fr, PointSet::full(fr.size()));
  } catch (const PropertyViolation&) {
    join_meet = false;
  }
  const auto law = frame_law_check(fr, opt.seed);
  const auto res = residuation_check(fr, opt.seed);
  const auto primes = primes_and_spatiality(fr);
  write_report(opt, to_json(fr, law, res, primes, join_meet));
  return law.value && res.value && primes.spatial && join_meet ? 0 : 2;
}

// {"space": <space or poset>, "family": [[...], ...], "closed": [...]}
int cmd_rudin(const Options& opt, const std::string& input) {
  const auto limits = opt.limits();
  const auto j = read_json_file(input);
  const auto space = space_or_poset_from_json(io_detail::require(j, "space", ""), limits);
  const io_detail::Index index(space.names());
  const auto ps = build_powerspace(space, limits);
  const auto& members = io_detail::require(j, "family", "");
  if (!members.is_array()) throw InvalidInput("field 'family' must be a list of point lists");
  PointSet family = ps.empty_family();
  for (std::size_t i = 0; i < members.size(); ++i) {
    const auto field = "family[" + std::to_string(i) + "]";
    const auto k = index.set(members[i], field);
    const auto at = ps.index_of(k);
    if (!at) throw InvalidInput("field '" + field + "' is not a nonempty saturated compact set");
    family.insert(*at);
  }
  const auto c = index.set(io_detail::require(j, "closed", ""), "closed");
  const auto r = rudin_minimal(ps, family, c, limits);
  auto report = to_json(r, space);
  const auto u = union_of_compact_family(ps, family);
  report["union"] = {{"set", names_json(space.names(), u.set)}, {"member", u.member}};
  report["seed"] = opt.seed;
  write_report(opt, report);
  return r.verified() && u.member ? 0 : 2;
}

int cmd_gallery(const Options& opt, const std::string& name, bool witnesses, std::optional<std::size_t> restrict_to) {
  const auto g = analyze_gallery(name, opt.seed);
  auto report = g.to_json(witnesses);
  report["seed"] = opt.seed;
  bool ok = g.all_witnesses_valid();
  if (restrict_to) {
    const auto sp = SymbolicSpace::named(name);
    report["restriction"] = to_json(sp.restrict(*restrict_to));
    const auto bad = restriction_disagreement(sp, *restrict_to);
    report["restriction_agrees"] = !bad;
    if (bad) report["restriction_disagreement"] = *bad;
    ok = ok && !bad;
  }
  write_report(opt, report);
  return ok ? 0 : 2;
}

int cmd_suite(const Options& opt, std::size_t exhaustive_upto, const std::vector<std::string>& fixtures) {
  SuiteConfig cfg;
  cfg.seed = opt.seed;
  cfg.exhaustive_upto = exhaustive_upto;
  cfg.limits = opt.limits();
  for (const auto& path : fixtures)
    cfg.fixtures.emplace_back(path, space_or_poset_from_json(read_json_file(path), cfg.limits));
  const auto report = run_suite(cfg, [](const CriterionResult& c) {
    std::cerr << "criterion " << c.id << " " << c.name << ": " << (c.passed() ? "pass" : "FAIL") << " ("
              << c.cases - c.failures << "/" << c.cases << ")\n";
  });
  write_report(opt, report.to_json());
  return report.passed() ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite topologies, Smyth power spaces and their frames"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--cap", opt.cap, "Maximum number of power-space elements")->check(CLI::PositiveNumber);
  app.add_option("--family-bound", opt.family_bound, "Generators per filtered family")->check(CLI::PositiveNumber);
  app.add_option("--seed", opt.seed, "Seed for sampled checks and random spaces");
  app.add_option("--out", opt.out, "Report path (default: stdout)");

  std::string input;
  auto* analyze_cmd = app.add_subcommand("analyze", "Decide T0, sober, well-filtered, d-space, coherent");
  analyze_cmd->add_option("input", input, "Space or poset JSON")->required();

  auto* scott_cmd = app.add_subcommand("scott", "Scott topology of a poset");
  scott_cmd->add_option("input", input, "Poset JSON")->required();

  std::size_t iterate = 1;
  std::string sidecar;
  auto* ps_cmd = app.add_subcommand("powerspace", "Upper Vietoris power space D(X)");
  ps_cmd->add_option("input", input, "Space or poset JSON")->required();
  ps_cmd->add_option("--iterate", iterate, "Apply D this many times")->check(CLI::PositiveNumber);
  ps_cmd->add_option("--sidecar", sidecar, "Order and canonical-map report (default: <out>.sidecar.json)");

  auto* frame_cmd = app.add_subcommand("frame-check", "Frame laws and spatiality of D(L)");
  frame_cmd->add_option("input", input, "Lattice JSON")->required();

  auto* rudin_cmd = app.add_subcommand("rudin", "Minimal closed set meeting an irreducible family");
  rudin_cmd->add_option("input", input, "{space, family, closed} JSON")->required();

  std::string name;
  bool witnesses = false;
  std::optional<std::size_t> restrict_to;
  auto* gallery_cmd = app.add_subcommand("gallery", "Verdicts for a countable gallery space");
  gallery_cmd->add_option("name", name, "nat-alexandroff, nat-cofinite or omega-cocountable-model")->required();
  gallery_cmd->add_flag("--witnesses", witnesses, "Include witnesses");
  gallery_cmd->add_option("--restrict", restrict_to, "Also emit the subspace {0..n}")->check(CLI::Range(0, 12));

  std::size_t exhaustive_upto = SuiteConfig{}.exhaustive_upto;
  std::vector<std::string> fixtures;
  auto* suite_cmd = app.add_subcommand("suite", "Run the acceptance battery");
  suite_cmd->add_option("--exhaustive-upto", exhaustive_upto, "Largest exhaustive poset size")
      ->check(CLI::Range(1, 6));
  suite_cmd->add_option("--fixture", fixtures, "Extra space or poset files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*analyze_cmd) return cmd_analyze(opt, input);
    if (*scott_cmd) return cmd_scott(opt, input);
    if (*ps_cmd) return cmd_powerspace(opt, input, iterate, sidecar);
    if (*frame_cmd) return cmd_frame_check(opt, input);
    if (*rudin_cmd) return cmd_rudin(opt, input);
    if (*gallery_cmd) return cmd_gallery(opt, name, witnesses, restrict_to);
    if (*suite_cmd) return cmd_suite(opt, exhaustive_upto, fixtures);
  } catch (const PropertyViolation& e) {
    try {
      write_report(opt, {{"property_violation", e.what()}, {"seed", opt.seed}});
    } catch (const Error&) {
    }
    std::cerr << "property violation: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
