#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "smyth/deciders.hpp"
#include "smyth/enumerate.hpp"
#include "smyth/error.hpp"
#include "smyth/scott.hpp"
#include "smyth/symbolic.hpp"

namespace smyth {

/// Default number of points or elements replayed by sampled witness clauses.
inline constexpr std::uint64_t kGallerySample = 64;

namespace gallery_detail {

using nlohmann::json;

inline const json& field(const json& w, const std::string& key) {
  if (!w.is_object() || !w.contains(key)) throw InvalidInput("witness is missing field '" + key + "'");
  return w.at(key);
}

inline std::uint64_t count_field(const json& w, const std::string& key) {
  const auto& v = field(w, key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
    throw InvalidInput("witness field '" + key + "' must be a natural number");
  auto n = v.get<std::uint64_t>();
  if (n > 4096) throw InvalidInput("witness field '" + key + "' exceeds 4096");
  return n;
}

inline std::vector<SymbolicSet> set_list(const json& v, const std::string& key) {
  if (!v.is_array()) throw InvalidInput("witness field '" + key + "' must be a list of sets");
  std::vector<SymbolicSet> out;
  for (std::size_t i = 0; i < v.size(); ++i)
    out.push_back(symbolic_from_json(v[i], key + "[" + std::to_string(i) + "]"));
  return out;
}

inline bool in_d(const SymbolicSpace& sp, const SymbolicSet& k) {
  return !k.empty_set() && sp.is_saturated(k) && sp.is_compact(k);
}

inline bool filtered(const std::vector<SymbolicSet>& family) {
  if (family.empty()) return false;
  for (const auto& a : family)
    for (const auto& b : family) {
      auto meet = a & b;
      bool below = false;
      for (const auto& c : family) below = below || c.is_subset_of(meet);
      if (!below) return false;
    }
  return true;
}

inline std::optional<SymbolicSet> least_member(const std::vector<SymbolicSet>& family) {
  for (const auto& m : family) {
    bool least = true;
    for (const auto& f : family) least = least && m.is_subset_of(f);
    if (least) return m;
  }
  return std::nullopt;
}

// Every nonempty open is cofinite: no nonempty finite subset of a small
// window is open.
inline bool nonempty_opens_cofinite(const SymbolicSpace& sp) {
  bool ok = true;
  for_each_subset(6, [&](const PointSet& s) {
    if (!s.empty() && sp.is_open(SymbolicSet::from_points(s))) ok = false;
  });
  return ok;
}

inline bool irreducible_closed(const SymbolicSpace& sp, const SymbolicSet& s) {
  if (s.empty_set() || !sp.is_closed(s)) return false;
  if (s.is_finite()) {
    for (auto x : s.support())
      if (s.is_subset_of(sp.closure(SymbolicSet::point(x)))) return true;
    return false;
  }
  // Two nonempty opens are cofinite, so they meet in a cofinite, hence
  // nonempty, set; a cofinite closed set is the whole space.
  return s.full_set() && nonempty_opens_cofinite(sp);
}

inline bool check_irreducible(const SymbolicSpace& sp, const json& w) {
  auto s = symbolic_from_json(field(w, "set"), "set");
  auto sample = count_field(w, "sample");
  if (!irreducible_closed(sp, s)) return false;
  for (std::uint64_t x = 0; x < sample; ++x) {
    auto cl = sp.closure(SymbolicSet::point(x));
    // Point closures are finite in these spaces; `s` is cofinite.
    if (cl == s || !cl.is_finite()) return false;
  }
  return s.is_cofinite();
}

inline bool check_escape(const SymbolicSpace& sp, const json& w) {
  const auto& fam = field(w, "family");
  auto open = symbolic_from_json(field(w, "open"), "open");
  std::vector<SymbolicSet> members;
  SymbolicSet meet = SymbolicSet::full();
  if (fam.is_object() && fam.contains("tails")) {
    auto count = count_field(fam, "tails");
    if (count < 2) return false;
    for (std::uint64_t n = 0; n < count; ++n) members.push_back(SymbolicSet::tail(n));
    // The whole chain {n, n+1, ...} has empty intersection: x leaves at x+1.
    for (std::uint64_t x = 0; x + 1 < count; ++x)
      if (members[x + 1].contains(x)) return false;
    meet = SymbolicSet::empty();
  } else if (fam.is_object() && fam.contains("members")) {
    members = set_list(fam.at("members"), "family.members");
    for (const auto& m : members) meet = meet & m;
  } else {
    throw InvalidInput("witness field 'family' must hold 'tails' or 'members'");
  }
  if (!filtered(members) || !sp.is_open(open) || !meet.is_subset_of(open)) return false;
  for (const auto& m : members)
    if (!in_d(sp, m) || m.is_subset_of(open)) return false;
  return true;
}

inline bool check_point_closure(const SymbolicSpace& sp, const json& w) {
  auto x = count_field(w, "point");
  auto claimed = symbolic_from_json(field(w, "claimed"), "claimed");
  return sp.closure(SymbolicSet::point(x)) == claimed;
}

inline bool check_directed_without_sup(const SymbolicSpace& sp, const json& w) {
  const auto& where = field(w, "poset");
  auto count = count_field(w, "count");
  if (!where.is_string()) throw InvalidInput("witness field 'poset' must be a string");
  if (count < 2) return false;
  if (where == "space") {
    // 0 <= 1 <= 2 <= ...; no u is above u + 1.
    for (std::uint64_t n = 0; n + 1 < count; ++n)
      if (!sp.leq(n, n + 1) || sp.leq(n + 1, n)) return false;
    return true;
  }
  if (where == "powerspace") {
    // up(0) contains up(1) contains ...; a nonempty K with least point m
    // lies inside no up(n) with n > m.
    for (std::uint64_t n = 0; n + 1 < count; ++n) {
      auto k = SymbolicSet::tail(n), next = SymbolicSet::tail(n + 1);
      if (!in_d(sp, k) || !next.is_subset_of(k) || k.is_subset_of(next)) return false;
      if (sp.saturation(SymbolicSet::point(n)) != k) return false;
    }
    return true;
  }
  throw InvalidInput("witness field 'poset' must be 'space' or 'powerspace'");
}

inline bool check_order_isomorphism(const SymbolicSpace& sp, const json& w) {
  auto count = count_field(w, "count");
  std::vector<SymbolicSet> image;
  for (std::uint64_t n = 0; n < count; ++n) {
    auto k = sp.saturation(SymbolicSet::point(n));
    if (!in_d(sp, k) || k != SymbolicSet::tail(n)) return false;
    image.push_back(k);
  }
  for (std::uint64_t n = 0; n < count; ++n)
    for (std::uint64_t m = 0; m < count; ++m)
      if ((n <= m) != image[m].is_subset_of(image[n])) return false;
  // Every element of D(N) is up(m) for m its least point.
  for (std::uint64_t m = 0; m < count; ++m) {
    if (!sp.is_saturated(SymbolicSet::tail(m))) return false;
    for (std::uint64_t extra = m + 1; extra < std::min<std::uint64_t>(count, m + 4); ++extra)
      if (sp.is_saturated(SymbolicSet::tail(m) - SymbolicSet::point(extra))) return false;
  }
  return true;
}

inline bool check_topology_equality(const SymbolicSpace& sp, const json& w) {
  auto count = count_field(w, "count");
  auto prefix = count_field(w, "scott_prefix");
  if (prefix > 10 || prefix == 0) throw InvalidInput("witness field 'scott_prefix' must be 1..10");
  // Boxes of the opens up(k) and the empty set, on elements up(0..count-1),
  // are exactly the up-sets {k..count-1} of the chain.
  std::vector<PointSet> boxes, up_sets;
  for (std::uint64_t k = 0; k <= count; ++k) {
    auto u = SymbolicSet::tail(k);
    if (!sp.is_open(u)) return false;
    PointSet box(count);
    for (std::uint64_t n = 0; n < count; ++n)
      if (SymbolicSet::tail(n).is_subset_of(u)) box.insert(n);
    boxes.push_back(box);
    PointSet suffix(count);
    for (std::uint64_t n = k; n < count; ++n) suffix.insert(n);
    up_sets.push_back(suffix);
  }
  if (!sp.is_open(SymbolicSet::empty())) return false;
  sort_canonical(boxes);
  sort_canonical(up_sets);
  if (boxes != up_sets) return false;
  // On a finite chain the definitional Scott topology is the Alexandroff one.
  std::vector<Pair> covers;
  for (std::size_t i = 0; i + 1 < prefix; ++i) covers.emplace_back(i, i + 1);
  auto chain = Poset::from_generators(numbered_names(prefix), covers);
  Limits wide;
  wide.directed_subset_points = prefix;
  return scott_topology(chain, wide) == alexandroff_topology(chain);
}

inline bool check_least_member(const SymbolicSpace& sp, const json& w) {
  const auto& fams = field(w, "families");
  if (!fams.is_array() || fams.empty()) throw InvalidInput("witness field 'families' must be a nonempty list");
  for (std::size_t i = 0; i < fams.size(); ++i) {
    auto family = set_list(fams[i], "families[" + std::to_string(i) + "]");
    for (const auto& k : family)
      if (!in_d(sp, k)) return false;
    if (filtered(family) && !least_member(family)) return false;
  }
  return true;
}

inline bool check_discrete(const SymbolicSpace& sp, const json& w) {
  auto sample = count_field(w, "sample");
  for (std::uint64_t x = 0; x < sample; ++x)
    for (std::uint64_t y = 0; y < sample; ++y)
      if (x != y && sp.leq(x, y)) return false;
  return true;
}

inline bool check_d_characterization(const SymbolicSpace& sp, const json& w) {
  auto members = set_list(field(w, "members"), "members");
  auto non_members = set_list(field(w, "non_members"), "non_members");
  if (members.empty()) return false;
  for (const auto& k : members)
    if (!in_d(sp, k)) return false;
  for (const auto& k : non_members)
    if (in_d(sp, k)) return false;
  return true;
}

}  // namespace gallery_detail

/// Replays the witness's defining clauses in the symbolic algebra. True iff
/// every clause holds; throws InvalidInput on an unknown space or a witness
/// of the wrong shape.
inline bool check_witness(const std::string& space, const nlohmann::json& witness) {
  using namespace gallery_detail;
  auto sp = SymbolicSpace::named(space);
  const auto& kind = field(witness, "kind");
  if (!kind.is_string()) throw InvalidInput("witness field 'kind' must be a string");
  const auto k = kind.get<std::string>();
  if (k == "irreducible-not-point-closure") return check_irreducible(sp, witness);
  if (k == "filtered-family-escapes-open") return check_escape(sp, witness);
  if (k == "point-closure") return check_point_closure(sp, witness);
  if (k == "directed-without-sup") return check_directed_without_sup(sp, witness);
  if (k == "order-isomorphism") return check_order_isomorphism(sp, witness);
  if (k == "topology-equality") return check_topology_equality(sp, witness);
  if (k == "least-member-argument") return check_least_member(sp, witness);
  if (k == "discrete-specialization") return check_discrete(sp, witness);
  if (k == "d-characterization") return check_d_characterization(sp, witness);
  throw InvalidInput("unknown witness kind '" + k + "'");
}

struct GalleryVerdict {
  bool value = false;
  nlohmann::json witness;
  bool witness_valid = false;
};

struct GalleryReport {
  std::string name;
  std::string model;
  std::string powerspace;
  std::map<std::string, GalleryVerdict> verdicts;

  const GalleryVerdict& at(const std::string& property) const {
    auto it = verdicts.find(property);
    if (it == verdicts.end()) throw InvalidInput(name + " has no verdict for '" + property + "'");
    return it->second;
  }

  bool all_witnesses_valid() const {
    for (const auto& [_, v] : verdicts)
      if (!v.witness_valid) return false;
    return true;
  }

  nlohmann::json to_json(bool with_witnesses) const {
    nlohmann::json out{{"name", name}, {"model", model}, {"powerspace", powerspace}};
    for (const auto& [property, v] : verdicts) {
      out["verdicts"][property] = v.value;
      out["witness_valid"][property] = v.witness_valid;
      if (with_witnesses) out["witnesses"][property] = v.witness;
    }
    return out;
  }
};

namespace gallery_detail {

inline json set_array(const std::vector<SymbolicSet>& sets) {
  json out = json::array();
  for (const auto& s : sets) out.push_back(to_json(s));
  return out;
}

inline json irreducible_witness() {
  return {{"kind", "irreducible-not-point-closure"}, {"set", to_json(SymbolicSet::full())},
          {"sample", kGallerySample}};
}

inline json tails_witness() {
  return {{"kind", "filtered-family-escapes-open"},
          {"family", {{"tails", kGallerySample}}},
          {"open", to_json(SymbolicSet::empty())}};
}

inline json discrete_witness() { return {{"kind", "discrete-specialization"}, {"sample", kGallerySample}}; }

// Families of nonempty finite subsets of {0..7}: intersection-closed ones,
// which are filtered, and unconstrained ones.
inline json generated_families(std::uint64_t seed, std::size_t count) {
  Rng rng(seed);
  json fams = json::array();
  for (std::size_t f = 0; f < count; ++f) {
    std::vector<SymbolicSet> family;
    auto core = SymbolicSet::point(rng.below(8));
    auto size = 1 + rng.below(5);
    for (std::uint64_t i = 0; i < size; ++i) {
      std::vector<std::uint64_t> extra;
      for (std::uint64_t x = 0; x < 8; ++x)
        if (rng.chance(1, 3)) extra.push_back(x);
      family.push_back(f % 2 == 0 ? core | SymbolicSet::finite(extra)
                                  : SymbolicSet::finite(extra) | SymbolicSet::point(rng.below(8)));
    }
    if (f % 2 == 0)
      for (std::size_t i = 0; i < family.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) {
          auto meet = family[i] & family[j];
          if (std::find(family.begin(), family.end(), meet) == family.end()) family.push_back(meet);
        }
    fams.push_back(set_array(family));
  }
  return fams;
}

}  // namespace gallery_detail

/// Verdicts for a gallery space, each read off a witness that has just been
/// replayed by check_witness.
inline GalleryReport analyze_gallery(const std::string& name, std::uint64_t seed = 0) {
  using namespace gallery_detail;
  auto sp = SymbolicSpace::named(name);
  GalleryReport r;
  r.name = sp.id();
  // `holds` states whether the verdict is what a valid witness establishes.
  auto add = [&](const std::string& property, json witness, bool holds_if_valid) {
    bool valid = check_witness(r.name, witness);
    r.verdicts[property] = {valid ? holds_if_valid : !holds_if_valid, std::move(witness), valid};
  };
  using S = SymbolicSet;
  switch (sp.kind()) {
    case SymbolicSpace::Name::omega_cocountable: {
      r.model =
          "uncountable set with the co-countable topology; Finite sets stand for countable sets and "
          "CoFinite sets for co-countable ones";
      r.powerspace = "nonempty finite sets";
      add("sober", irreducible_witness(), false);
      add("well_filtered",
          {{"kind", "least-member-argument"}, {"families", generated_families(seed, 200)}}, true);
      add("d_space", discrete_witness(), true);
      add("powerspace_characterized",
          {{"kind", "d-characterization"},
           {"members", set_array({S::point(0), S::finite({1, 5}), S::finite({0, 2, 3, 7, 40})})},
           {"non_members", set_array({S::empty(), S::full(), S::cofinite({0}), S::tail(10)})}},
          true);
      break;
    }
    case SymbolicSpace::Name::nat_cofinite: {
      r.model = "natural numbers with the cofinite topology";
      r.powerspace = "all nonempty subsets";
      add("sober", irreducible_witness(), false);
      add("well_filtered", tails_witness(), false);
      add("d_space", discrete_witness(), true);
      add("powerspace_characterized",
          {{"kind", "d-characterization"},
           {"members", set_array({S::point(3), S::finite({0, 9}), S::tail(4), S::full()})},
           {"non_members", set_array({S::empty()})}},
          true);
      break;
    }
    case SymbolicSpace::Name::nat_alexandroff: {
      r.model = "natural numbers with the Alexandroff topology of the usual order";
      r.powerspace = "principal up-sets {n, n+1, ...}, order-isomorphic to the natural numbers";
      add("sober", irreducible_witness(), false);
      add("well_filtered", tails_witness(), false);
      add("d_space", {{"kind", "directed-without-sup"}, {"poset", "space"}, {"count", kGallerySample}}, false);
      add("powerspace_isomorphic_to_n", {{"kind", "order-isomorphism"}, {"count", kGallerySample}}, true);
      add("d_powerspace_is_dcpo",
          {{"kind", "directed-without-sup"}, {"poset", "powerspace"}, {"count", kGallerySample}}, false);
      add("uv_equals_scott", {{"kind", "topology-equality"}, {"count", kGallerySample}, {"scott_prefix", 8}},
          true);
      add("powerspace_characterized",
          {{"kind", "d-characterization"},
           {"members", set_array({S::full(), S::tail(1), S::tail(7)})},
           {"non_members", set_array({S::empty(), S::point(2), S::cofinite({3}), S::finite({0, 1})})}},
          true);
      break;
    }
  }
  return r;
}

/// Compares the symbolic predicates with the finite deciders on the
/// subspace {0..n}: for every subset S, closure and saturation cut down to
/// {0..n} and compactness must match. Returns the first disagreement.
inline std::optional<std::string> restriction_disagreement(const SymbolicSpace& sp, std::size_t n) {
  const auto fragment = sp.restrict(n);
  const auto size = n + 1;
  std::optional<std::string> bad;
  for_each_subset(size, [&](const PointSet& s) {
    if (bad) return;
    const auto sym = SymbolicSet::from_points(s);
    if (sp.closure(sym).restrict(size) != fragment.closure(s))
      bad = "closure of " + sym.to_string();
    else if (sp.saturation(sym).restrict(size) != saturation(fragment, s))
      bad = "saturation of " + sym.to_string();
    else if (sp.is_compact(sym) != is_compact(fragment, s))
      bad = "compactness of " + sym.to_string();
  });
  return bad;
}

}  // namespace smyth
