#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <json.hpp>

#include "smyth/deciders.hpp"
#include "smyth/error.hpp"
#include "smyth/frame.hpp"
#include "smyth/poset.hpp"
#include "smyth/powerspace.hpp"
#include "smyth/rudin.hpp"
#include "smyth/top_space.hpp"

namespace smyth {

using nlohmann::json;

/// Parses `text`; syntax errors are reported as "source:line:column: ...".
inline json parse_json(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string what = e.what();
    auto cut = what.find("; ");
    if (cut != std::string::npos) what = what.substr(cut + 2);
    throw InvalidInput(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + what);
  }
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str(), path);
}

/// Two-space indentation and a trailing newline; keys come out sorted.
inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

namespace io_detail {

inline const json& require(const json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) throw InvalidInput("field '" + where + "' must be an object");
  if (!j.contains(key)) throw InvalidInput("missing field '" + (where.empty() ? key : where + "." + key) + "'");
  return j.at(key);
}

inline std::vector<std::string> names_from(const json& j, const std::string& field) {
  if (!j.is_array()) throw InvalidInput("field '" + field + "' must be a list of identifiers");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_string()) throw InvalidInput("field '" + field + "[" + std::to_string(i) + "]' must be a string");
    names.push_back(j[i].get<std::string>());
  }
  return names;
}

class Index {
 public:
  explicit Index(const std::vector<std::string>& names) : n_(names.size()) {
    for (std::size_t i = 0; i < names.size(); ++i) map_.emplace(names[i], i);
  }

  std::size_t at(const json& id, const std::string& field) const {
    if (!id.is_string()) throw InvalidInput("field '" + field + "' must be a string");
    auto it = map_.find(id.get<std::string>());
    if (it == map_.end()) throw InvalidInput("field '" + field + "': unknown identifier '" + id.get<std::string>() + "'");
    return it->second;
  }

  PointSet set(const json& list, const std::string& field) const {
    if (!list.is_array()) throw InvalidInput("field '" + field + "' must be a list of identifiers");
    PointSet s(n_);
    for (std::size_t i = 0; i < list.size(); ++i) s.insert(at(list[i], field + "[" + std::to_string(i) + "]"));
    return s;
  }

 private:
  std::size_t n_;
  std::unordered_map<std::string, std::size_t> map_;
};

}  // namespace io_detail

/// {"elements": [...], "leq": [["a", "b"], ...]}; the order is the
/// reflexive-transitive closure of the listed pairs.
inline Poset poset_from_json(const json& j) {
  auto names = io_detail::names_from(io_detail::require(j, "elements", ""), "elements");
  const io_detail::Index index(names);
  std::vector<Pair> gens;
  if (j.contains("leq")) {
    const auto& leq = j.at("leq");
    if (!leq.is_array()) throw InvalidInput("field 'leq' must be a list of pairs");
    for (std::size_t i = 0; i < leq.size(); ++i) {
      const auto field = "leq[" + std::to_string(i) + "]";
      if (!leq[i].is_array() || leq[i].size() != 2) throw InvalidInput("field '" + field + "' must be a pair");
      gens.emplace_back(index.at(leq[i][0], field + "[0]"), index.at(leq[i][1], field + "[1]"));
    }
  }
  return Poset::from_generators(std::move(names), gens);
}

/// {"points": [...], "opens": [[...], ...], "generate": bool}. Without
/// "generate" the family must already be a topology.
inline TopSpace space_from_json(const json& j) {
  auto names = io_detail::names_from(io_detail::require(j, "points", ""), "points");
  const io_detail::Index index(names);
  const auto& opens = io_detail::require(j, "opens", "");
  if (!opens.is_array()) throw InvalidInput("field 'opens' must be a list of point lists");
  std::vector<PointSet> family;
  for (std::size_t i = 0; i < opens.size(); ++i) family.push_back(index.set(opens[i], "opens[" + std::to_string(i) + "]"));
  bool generate = false;
  if (j.contains("generate")) {
    if (!j.at("generate").is_boolean()) throw InvalidInput("field 'generate' must be true or false");
    generate = j.at("generate").get<bool>();
  }
  if (generate) return TopSpace::from_subbasis(std::move(names), family);
  return TopSpace::from_opens(std::move(names), std::move(family));
}

/// Reads a space file, or a poset file as the Scott space of the poset.
inline TopSpace space_or_poset_from_json(const json& j, const Limits& limits = {}) {
  if (j.is_object() && j.contains("elements") && !j.contains("points")) {
    auto p = poset_from_json(j);
    if (p.size() <= limits.directed_subset_points) return scott_topology(p, limits);
    return alexandroff_topology(p);
  }
  return space_from_json(j);
}

inline json names_json(const std::vector<std::string>& names, const PointSet& s) {
  json out = json::array();
  s.for_each([&](std::size_t i) { out.push_back(names.at(i)); });
  return out;
}

inline json sets_json(const std::vector<std::string>& names, const std::vector<PointSet>& sets) {
  json out = json::array();
  for (const auto& s : sets) out.push_back(names_json(names, s));
  return out;
}

/// Elements and the covering pairs.
inline json to_json(const Poset& p) {
  json leq = json::array();
  for (std::size_t x = 0; x < p.size(); ++x)
    for (std::size_t y = 0; y < p.size(); ++y) {
      if (x == y || !p.leq(x, y)) continue;
      bool cover = true;
      for (std::size_t z = 0; z < p.size() && cover; ++z)
        if (z != x && z != y && p.leq(x, z) && p.leq(z, y)) cover = false;
      if (cover) leq.push_back({p.name(x), p.name(y)});
    }
  return {{"elements", p.names()}, {"leq", leq}};
}

/// The full open family when it has at most `cap` members; otherwise the
/// minimal neighbourhoods with "generate": true.
inline json to_json(const TopSpace& t, std::size_t cap = 4096) {
  json out{{"points", t.names()}};
  if (auto opens = t.enumerate_opens(cap)) {
    out["opens"] = sets_json(t.names(), *opens);
  } else {
    auto basis = t.neighbourhoods();
    sort_canonical(basis);
    out["opens"] = sets_json(t.names(), basis);
    out["generate"] = true;
  }
  return out;
}

inline json pair_json(const std::vector<std::string>& names, const std::optional<Pair>& p) {
  if (!p) return nullptr;
  return json::array({names.at(p->first), names.at(p->second)});
}

inline json set_or_null(const std::vector<std::string>& names, const std::optional<PointSet>& s) {
  if (!s) return nullptr;
  return names_json(names, *s);
}

inline json to_json(const SpaceReport& r, const TopSpace& t) {
  const auto& n = t.names();
  json out;
  out["t0"] = {{"value", r.t0}, {"witness", pair_json(n, r.t0_failure)}};

  out["sober"] = {{"value", r.sober.value},
                  {"method", to_string(r.sober.method)},
                  {"irreducible_closed_sets", r.sober.irreducible_count}};
  if (r.sober.witness)
    out["sober"]["witness"] = {{"irreducible_closed_set", names_json(n, *r.sober.witness)},
                               {"generic_points", names_json(n, r.sober.witness_generic_points)}};
  else
    out["sober"]["note"] = "every irreducible closed set has exactly one generic point";

  auto& wf = out["well_filtered"];
  wf = {{"value", r.well_filtered.value},
        {"method", to_string(r.well_filtered.method)},
        {"t0_hypothesis", r.well_filtered.t0_hypothesis},
        {"families_checked", r.well_filtered.families_checked}};
  if (!r.well_filtered.t0_hypothesis) wf["note"] = "space is not T0; verdict extends the definition";
  if (r.well_filtered.witness_open)
    wf["witness"] = {{"family", sets_json(n, r.well_filtered.witness_family)},
                     {"open", names_json(n, *r.well_filtered.witness_open)}};
  else if (r.well_filtered.method == Method::structural)
    wf["proof"] = "every filtered family of subsets of a finite set contains its intersection";
  else
    wf["proof"] = "no bounded filtered family escapes an open set";

  auto& d = out["d_space"];
  d = {{"value", r.d_space.value}, {"method", to_string(r.d_space.method)}};
  if (r.d_space.t0_failure) d["witness"] = {{"t0_failure", pair_json(n, r.d_space.t0_failure)}};
  if (r.d_space.directed_without_sup) d["witness"] = {{"directed_without_sup", names_json(n, *r.d_space.directed_without_sup)}};
  if (r.d_space.non_scott_open) d["witness"] = {{"non_scott_open", names_json(n, *r.d_space.non_scott_open)}};
  if (r.d_space.value)
    d["proof"] = r.d_space.method == Method::structural
                     ? "directed subsets of a finite poset contain their maximum; opens are up-sets"
                     : "every directed subset has a supremum and every open is Scott open";

  auto& c = out["coherent"];
  c = {{"value", r.coherent.value}, {"method", to_string(r.coherent.method)},
       {"pairs_checked", r.coherent.pairs_checked}};
  if (r.coherent.witness)
    c["witness"] = {names_json(n, r.coherent.elements[r.coherent.witness->first]),
                    names_json(n, r.coherent.elements[r.coherent.witness->second])};
  else
    c["proof"] = r.coherent.method == Method::structural ? "every subset of a finite space is compact"
                                                         : "all pairwise intersections checked compact";
  return out;
}

/// D(X) as a space file: element names, the box basis, "generate": true.
inline json powerspace_json(const PowerSpace& ps, std::size_t cap = 4096) {
  json out{{"points", ps.order().names()}, {"generate", true}};
  if (auto basis = ps.box_basis(cap)) {
    std::vector<PointSet> nonempty;
    for (auto& b : *basis)
      if (!b.empty()) nonempty.push_back(b);
    out["opens"] = sets_json(ps.order().names(), nonempty);
  } else {
    auto nb = ps.uv().neighbourhoods();
    sort_canonical(nb);
    out["opens"] = sets_json(ps.order().names(), nb);
  }
  return out;
}

/// The reverse-inclusion order and the graph of x -> up(x).
inline json powerspace_sidecar(const PowerSpace& ps, const CanonicalMap& xi) {
  const auto& base = ps.base();
  json graph = json::object();
  for (std::size_t x = 0; x < base.size(); ++x) graph[base.name(x)] = ps.order().name(xi.graph[x]);
  json map{{"graph", graph},
           {"injective", xi.injective},
           {"order_embedding", xi.order_embedding},
           {"continuous", xi.continuous},
           {"open_onto_image", xi.open_onto_image}};
  if (xi.injectivity_failure) map["injectivity_failure"] = pair_json(base.names(), xi.injectivity_failure);
  if (xi.discontinuity) map["discontinuity"] = names_json(ps.order().names(), *xi.discontinuity);
  if (xi.non_open_image) map["non_open_image"] = names_json(base.names(), *xi.non_open_image);
  return {{"order", to_json(ps.order())}, {"xi", map}};
}

inline json to_json(const Frame& fr, const FrameLawReport& law, const ResiduationReport& res,
                    const PrimeReport& primes, bool join_meet) {
  auto name = [&](std::size_t i) { return fr.format(fr.element(i)); };
  json prime_names = json::array();
  for (auto p : primes.primes) prime_names.push_back(name(p));
  json out{{"element_count", fr.size()},
           {"frame_law", law.value},
           {"frame_law_checks", law.checks},
           {"frame_law_exhaustive", law.exhaustive},
           {"residuation", res.value},
           {"residuation_triples", res.triples},
           {"residuation_exhaustive", res.exhaustive},
           {"join_meet_formulas", join_meet},
           {"primes", prime_names},
           {"principal_filters_prime", primes.principal_prime},
           {"principal_decomposition", primes.principal_decomposition},
           {"spatial", primes.spatial},
           {"seed", law.seed}};
  if (law.witness) {
    json s = json::array();
    law.witness->second.for_each([&](std::size_t i) { s.push_back(name(i)); });
    out["frame_law_witness"] = {{"a", name(law.witness->first)}, {"family", s}};
  }
  if (res.witness)
    out["residuation_witness"] = {name((*res.witness)[0]), name((*res.witness)[1]), name((*res.witness)[2])};
  if (primes.witness) out["spatiality_witness"] = name(*primes.witness);
  return out;
}

inline json to_json(const RudinResult& r, const TopSpace& base) {
  return {{"set", names_json(base.names(), r.set)},
          {"verified", r.verified()},
          {"clauses",
           {{"closed", r.closed},
            {"irreducible", r.irreducible},
            {"within", r.within},
            {"meets_all", r.meets_all},
            {"minimal", r.minimal}}}};
}

}  // namespace smyth
