#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "smyth/deciders.hpp"
#include "smyth/enumerate.hpp"
#include "smyth/error.hpp"
#include "smyth/frame.hpp"
#include "smyth/gallery.hpp"
#include "smyth/limits.hpp"
#include "smyth/powerspace.hpp"
#include "smyth/rudin.hpp"
#include "smyth/scott.hpp"

namespace smyth {

struct SuiteConfig {
  std::uint64_t seed = 42;
  /// Posets up to isomorphism with at most this many elements.
  std::size_t exhaustive_upto = 5;
  std::size_t random_posets = 500;
  std::size_t random_max_size = 8;
  /// Lattices up to isomorphism with at most this many elements.
  std::size_t lattice_upto = 5;
  std::size_t random_lattices = 200;
  std::size_t random_lattice_size = 6;
  /// Preorders up to isomorphism with at most this many points.
  std::size_t rudin_upto = 4;
  std::size_t rudin_family = 3;
  /// Extra spaces added to the population, with labels.
  std::vector<std::pair<std::string, TopSpace>> fixtures;
  Limits limits;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  /// First failing case in population order, which is smallest first.
  nlohmann::json witness;

  bool passed() const { return failures == 0 && cases > 0; }
};

struct SuitePopulation {
  struct Case {
    std::string label;
    TopSpace space;
    bool t0 = true;
    /// The poset the space was built from, when there is one.
    std::optional<Poset> poset;
  };
  std::vector<Case> spaces;
  std::size_t exhaustive_count = 0;
  std::size_t random_count = 0;
  std::size_t fixture_count = 0;
};

inline SuitePopulation build_population(const SuiteConfig& cfg) {
  SuitePopulation pop;
  for (std::size_t n = 1; n <= cfg.exhaustive_upto; ++n) {
    auto posets = posets_up_to_iso(n);
    for (std::size_t i = 0; i < posets.size(); ++i)
      pop.spaces.push_back({"poset n=" + std::to_string(n) + " #" + std::to_string(i),
                            TopSpace::alexandroff(posets[i]), true, posets[i]});
    pop.exhaustive_count += posets.size();
  }
  Rng rng(cfg.seed);
  for (std::size_t i = 0; i < cfg.random_posets; ++i) {
    auto n = 1 + rng.below(cfg.random_max_size);
    auto num = 1 + rng.below(3);
    auto p = random_poset(n, num, 6, rng);
    pop.spaces.push_back({"random #" + std::to_string(i) + " n=" + std::to_string(n),
                          TopSpace::alexandroff(p), true, p});
  }
  pop.random_count = cfg.random_posets;
  for (const auto& [label, space] : cfg.fixtures)
    pop.spaces.push_back({"fixture " + label, space, specialization(space).t0, std::nullopt});
  pop.fixture_count = cfg.fixtures.size();
  return pop;
}

namespace suite_detail {

using nlohmann::json;

// Runs `check` over `cases`; a false result or a thrown Error is a failure.
template <class Range, class Label, class Check>
void run_cases(CriterionResult& r, const Range& cases, Label label, Check check) {
  for (const auto& c : cases) {
    std::string detail;
    bool ok = false;
    try {
      ok = check(c, detail);
    } catch (const Error& e) {
      detail = e.what();
    }
    ++r.cases;
    if (ok) continue;
    if (r.failures++ == 0) r.witness = {{"case", label(c)}, {"detail", detail}};
  }
}

inline auto case_label() {
  return [](const SuitePopulation::Case& c) { return c.label; };
}

inline std::vector<SuitePopulation::Case> t0_cases(const SuitePopulation& pop) {
  std::vector<SuitePopulation::Case> out;
  for (const auto& c : pop.spaces)
    if (c.t0) out.push_back(c);
  return out;
}

}  // namespace suite_detail

/// 1. Definitional Scott topology equals the Alexandroff topology.
inline CriterionResult criterion_scott_alexandroff(const SuitePopulation& pop, const SuiteConfig& cfg) {
  CriterionResult r{1, "Scott topology equals Alexandroff topology on finite posets", 0, 0, {}};
  std::vector<SuitePopulation::Case> cases;
  for (const auto& c : pop.spaces)
    if (c.poset) cases.push_back(c);
  suite_detail::run_cases(r, cases, suite_detail::case_label(), [&](const auto& c, std::string& detail) {
    Limits wide = cfg.limits;
    wide.directed_subset_points = std::max(wide.directed_subset_points, c.poset->size());
    auto scott = scott_topology(*c.poset, wide);
    auto alex = up_sets(*c.poset, 1u << 20);
    if (scott.opens() == alex) return true;
    detail = "Scott topology has " + std::to_string(scott.opens().size()) + " opens, Alexandroff has " +
             std::to_string(alex.size());
    return false;
  });
  return r;
}

/// 2. Specialization order of the upper Vietoris topology is reverse inclusion.
inline CriterionResult criterion_specialization(const SuitePopulation& pop, const SuiteConfig& cfg) {
  CriterionResult r{2, "specialization order of D(X) is reverse inclusion", 0, 0, {}};
  suite_detail::run_cases(r, pop.spaces, suite_detail::case_label(), [&](const auto& c, std::string& detail) {
    auto ps = build_powerspace(c.space, cfg.limits);
    std::vector<PointSet> reverse_inclusion(ps.size(), PointSet(ps.size()));
    for (std::size_t i = 0; i < ps.size(); ++i)
      for (std::size_t j = 0; j < ps.size(); ++j)
        if (ps.element(j).is_subset_of(ps.element(i))) reverse_inclusion[i].insert(j);
    auto from_basis = uv_specialization_from_basis(ps, 1u << 16);
    if (!from_basis) throw ResourceError("base has too many opens");
    for (std::size_t i = 0; i < ps.size(); ++i)
      if (from_basis->up(i) != reverse_inclusion[i] || ps.uv().neighbourhood(i) != reverse_inclusion[i]) {
        detail = "element " + ps.order().name(i) + " disagrees";
        return false;
      }
    return true;
  });
  return r;
}

/// 3. x -> up(x) is a topological embedding.
inline CriterionResult criterion_embedding(const SuitePopulation& pop, const SuiteConfig& cfg) {
  CriterionResult r{3, "canonical map is a topological embedding", 0, 0, {}};
  suite_detail::run_cases(r, suite_detail::t0_cases(pop), suite_detail::case_label(),
                          [&](const auto& c, std::string& detail) {
                            auto ps = build_powerspace(c.space, cfg.limits);
                            auto xi = canonical_map(ps, cfg.limits);
                            if (xi.embedding() && xi.order_embedding) return true;
                            detail = std::string("injective=") + (xi.injective ? "1" : "0") +
                                     " continuous=" + (xi.continuous ? "1" : "0") +
                                     " open=" + (xi.open_onto_image ? "1" : "0");
                            return false;
                          });
  return r;
}

/// 4. D(L) is a spatial frame with the set formulas for join and meet.
inline CriterionResult criterion_frame(const SuiteConfig& cfg) {
  CriterionResult r{4, "D(L) is a spatial frame", 0, 0, {}};
  std::vector<std::pair<std::string, Poset>> lattices;
  for (std::size_t n = 1; n <= cfg.lattice_upto; ++n) {
    auto posets = posets_up_to_iso(n);
    for (std::size_t i = 0; i < posets.size(); ++i)
      if (!posets[i].lattice_failure())
        lattices.emplace_back("lattice n=" + std::to_string(n) + " #" + std::to_string(i), posets[i]);
  }
  Rng rng(cfg.seed ^ 0x9e3779b97f4a7c15ULL);
  for (std::size_t i = 0; i < cfg.random_lattices; ++i)
    lattices.emplace_back("random lattice #" + std::to_string(i), random_lattice(cfg.random_lattice_size, rng));

  suite_detail::run_cases(
      r, lattices, [](const auto& c) { return c.first; },
      [&](const auto& c, std::string& detail) {
        const auto& lat = c.second;
        auto fr = build_frame(lat, cfg.limits);
        if (fr.element(fr.top()) != PointSet::singleton(lat.size(), *lat.top()) ||
            fr.element(fr.bottom()) != PointSet::full(lat.size())) {
          detail = "top or bottom misplaced";
          return false;
        }
        // Join/meet formulas against the order on every family of at most three.
        const auto n = fr.size();
        for (std::size_t a = 0; a < n; ++a)
          for (std::size_t b = a; b < n; ++b)
            for (std::size_t d = b; d < n; ++d) check_join_meet(fr, PointSet::of(n, {a, b, d}));
        check_join_meet(fr, PointSet(n));
        check_join_meet(fr, PointSet::full(n));
        auto law = frame_law_check(fr, cfg.seed);
        auto res = residuation_check(fr, cfg.seed);
        auto primes = primes_and_spatiality(fr);
        auto ps = build_powerspace(TopSpace::alexandroff(lat), cfg.limits);
        bool agree = ps.elements() == fr.elements();
        if (law.value && res.value && primes.spatial && primes.principal_prime && primes.principal_decomposition &&
            agree)
          return true;
        detail = std::string("frame_law=") + (law.value ? "1" : "0") + " residuation=" + (res.value ? "1" : "0") +
                 " spatial=" + (primes.spatial ? "1" : "0") + " powerspace_agrees=" + (agree ? "1" : "0");
        return false;
      });
  return r;
}

/// 5. X and D(X) are both sober, and the proof replay recovers every generic point.
inline CriterionResult criterion_sobriety(const SuitePopulation& pop, const SuiteConfig& cfg) {
  CriterionResult r{5, "sobriety transfers to D(X) and the generic-point replay completes", 0, 0, {}};
  suite_detail::run_cases(r, suite_detail::t0_cases(pop), suite_detail::case_label(),
                          [&](const auto& c, std::string& detail) {
                            auto ps = build_powerspace(c.space, cfg.limits);
                            if (!is_sober(c.space, cfg.limits).value || !is_sober(ps.uv(), cfg.limits).value) {
                              detail = "X or D(X) is not sober";
                              return false;
                            }
                            auto setup = prepare_generic_point(ps, cfg.limits);
                            for (const auto& f : irreducible_closed_sets(c.space, cfg.limits).sets) {
                              auto oracle = generic_points(c.space, f);
                              auto trace = generic_point_via_powerspace(ps, setup, f, cfg.limits);
                              if (oracle.count() != 1 || !oracle.contains(trace.point)) {
                                detail = "generic point of " + c.space.format(f) + " disagrees";
                                return false;
                              }
                            }
                            return true;
                          });
  return r;
}

/// 6. X well-filtered, D(X) a d-space and D(X) well-filtered coincide.
inline CriterionResult criterion_well_filtered(const SuitePopulation& pop, const SuiteConfig& cfg) {
  CriterionResult r{6, "well-filteredness transfers to D(X)", 0, 0, {}};
  suite_detail::run_cases(r, suite_detail::t0_cases(pop), suite_detail::case_label(),
                          [&](const auto& c, std::string& detail) {
                            auto t = wf_transfer_check(c.space, cfg.limits);
                            if (t.agree && t.three_way && t.base.value) return true;
                            detail = std::string("X=") + (t.base.value ? "1" : "0") +
                                     " D(X)=" + (t.upper.value ? "1" : "0") +
                                     " D(X) d-space=" + (t.upper_d_space.value ? "1" : "0");
                            return false;
                          });
  return r;
}

/// 7. Minimal closed sets meeting an irreducible family, against a
/// brute-force search; unions of compact families stay in D(X).
inline CriterionResult criterion_rudin(const SuiteConfig& cfg) {
  CriterionResult r{7, "minimal irreducible closed sets and unions of compact families", 0, 0, {}};
  struct RudinCase {
    std::string label;
    Preorder order;
  };
  std::vector<RudinCase> spaces;
  for (std::size_t n = 1; n <= cfg.rudin_upto; ++n) {
    auto pre = preorders_up_to_iso(n);
    for (std::size_t i = 0; i < pre.size(); ++i)
      spaces.push_back({"preorder n=" + std::to_string(n) + " #" + std::to_string(i), pre[i]});
  }
  suite_detail::run_cases(
      r, spaces, [](const RudinCase& c) { return c.label; },
      [&](const RudinCase& c, std::string& detail) {
        auto space = TopSpace::alexandroff(c.order);
        auto ps = build_powerspace(space, cfg.limits);
        std::vector<PointSet> closed;
        for_each_subset(space.size(), [&](const PointSet& s) {
          if (space.is_closed(s)) closed.push_back(s);
        });
        auto meets_all = [&](const PointSet& family, const PointSet& s) {
          bool ok = true;
          family.for_each([&](std::size_t i) { ok = ok && ps.element(i).intersects(s); });
          return ok;
        };
        bool ok = true;
        for_each_subset(ps.size(), [&](const PointSet& family) {
          if (!ok || family.empty() || family.count() > cfg.rudin_family) return;
          auto u = union_of_compact_family(ps, family);
          if (!u.member) {
            ok = false;
            detail = "union of " + ps.format(family) + " is not in D(X)";
            return;
          }
          if (!is_irreducible(ps.uv(), family, cfg.limits)) return;
          for (const auto& cset : closed) {
            if (!meets_all(family, cset)) continue;
            std::vector<PointSet> minimal;
            for (const auto& f : closed) {
              if (!f.is_subset_of(cset) || !meets_all(family, f)) continue;
              bool proper_below = false;
              for (const auto& g : closed)
                if (g != f && g.is_subset_of(f) && meets_all(family, g)) proper_below = true;
              if (!proper_below) minimal.push_back(f);
            }
            sort_canonical(minimal);
            auto got = rudin_minimal(ps, family, cset, cfg.limits);
            if (!got.verified() || minimal.empty() || got.set != minimal.front()) {
              ok = false;
              detail = "family " + ps.format(family) + " in " + space.format(cset);
              return;
            }
          }
        });
        return ok;
      });
  return r;
}

/// The verdicts each gallery space must return.
inline const std::map<std::string, std::map<std::string, bool>>& expected_gallery() {
  static const std::map<std::string, std::map<std::string, bool>> table{
      {"omega-cocountable-model",
       {{"sober", false}, {"well_filtered", true}, {"d_space", true}, {"powerspace_characterized", true}}},
      {"nat-alexandroff",
       {{"sober", false},
        {"well_filtered", false},
        {"d_space", false},
        {"powerspace_isomorphic_to_n", true},
        {"d_powerspace_is_dcpo", false},
        {"uv_equals_scott", true},
        {"powerspace_characterized", true}}},
      {"nat-cofinite",
       {{"sober", false}, {"well_filtered", false}, {"d_space", true}, {"powerspace_characterized", true}}},
  };
  return table;
}

/// 8. Gallery verdicts, each carried by a witness that replays.
inline CriterionResult criterion_gallery(const SuiteConfig& cfg) {
  CriterionResult r{8, "gallery verdicts with validated witnesses", 0, 0, {}};
  std::vector<std::string> names = SymbolicSpace::names();
  suite_detail::run_cases(
      r, names, [](const std::string& n) { return n; },
      [&](const std::string& name, std::string& detail) {
        auto report = analyze_gallery(name, cfg.seed);
        for (const auto& [property, expected] : expected_gallery().at(name)) {
          const auto& v = report.at(property);
          if (v.value != expected || !v.witness_valid) {
            detail = property + " is " + (v.value ? "true" : "false") +
                     (v.witness_valid ? "" : " and its witness does not replay");
            return false;
          }
        }
        if (name == "omega-cocountable-model" && report.powerspace != "nonempty finite sets") {
          detail = "power space characterization is '" + report.powerspace + "'";
          return false;
        }
        return true;
      });
  return r;
}

struct SuiteReport {
  std::uint64_t seed = 0;
  nlohmann::json population;
  std::vector<CriterionResult> criteria;

  bool passed() const {
    for (const auto& c : criteria)
      if (!c.passed()) return false;
    return true;
  }

  nlohmann::json to_json() const {
    nlohmann::json crit = nlohmann::json::array();
    for (const auto& c : criteria) {
      nlohmann::json j{{"id", c.id}, {"name", c.name}, {"cases", c.cases}, {"failures", c.failures},
                       {"passed", c.passed()}};
      if (!c.witness.is_null()) j["witness"] = c.witness;
      crit.push_back(j);
    }
    return {{"seed", seed}, {"population", population}, {"criteria", crit}, {"passed", passed()}};
  }
};

inline nlohmann::json population_json(const SuitePopulation& pop, const SuiteConfig& cfg) {
  return {{"exhaustive_upto", cfg.exhaustive_upto},
          {"posets_up_to_isomorphism", pop.exhaustive_count},
          {"random_posets", pop.random_count},
          {"random_max_size", cfg.random_max_size},
          {"fixtures", pop.fixture_count},
          {"lattice_upto", cfg.lattice_upto},
          {"random_lattices", cfg.random_lattices},
          {"random_lattice_size", cfg.random_lattice_size},
          {"rudin_upto", cfg.rudin_upto},
          {"rudin_family", cfg.rudin_family}};
}

/// Criteria 1-8 in order. `on_done` sees each result as it finishes.
inline SuiteReport run_suite(const SuiteConfig& cfg,
                             const std::function<void(const CriterionResult&)>& on_done = {}) {
  SuiteReport report;
  report.seed = cfg.seed;
  const auto pop = build_population(cfg);
  report.population = population_json(pop, cfg);
  std::vector<std::function<CriterionResult()>> steps{
      [&] { return criterion_scott_alexandroff(pop, cfg); }, [&] { return criterion_specialization(pop, cfg); },
      [&] { return criterion_embedding(pop, cfg); },         [&] { return criterion_frame(cfg); },
      [&] { return criterion_sobriety(pop, cfg); },          [&] { return criterion_well_filtered(pop, cfg); },
      [&] { return criterion_rudin(cfg); },                  [&] { return criterion_gallery(cfg); },
  };
  for (auto& step : steps) {
    report.criteria.push_back(step());
    if (on_done) on_done(report.criteria.back());
  }
  return report;
}

}  // namespace smyth
