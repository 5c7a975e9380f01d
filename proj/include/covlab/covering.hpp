#pragma once

#include <optional>
#include <string>
#include <vector>

#include "covlab/conjugacy.hpp"
#include "covlab/element_table.hpp"
#include "covlab/error.hpp"
#include "covlab/group_ops.hpp"
#include "covlab/perm_group.hpp"

namespace covlab {

/// Ambient classes met by a subgroup, as a bit vector over class_table(ambient).
struct Fingerprint {
  Ambient ambient;
  Bitset hit;

  bool contains(const ClassId& c) const { return hit.test(class_table(ambient).index_of(c)); }

  std::vector<ClassId> classes() const {
    std::vector<ClassId> out;
    const auto& table = class_table(ambient);
    for (auto i : hit.indices()) out.push_back(table[i].id);
    return out;
  }

  bool is_subset_of(const Fingerprint& o) const { return hit.is_subset_of(o.hit); }

  friend Fingerprint operator|(const Fingerprint& a, const Fingerprint& b) { return {a.ambient, a.hit | b.hit}; }
};

/// Fingerprint together with the lexicographically least subgroup element in each hit class.
struct ClassWitnesses {
  Fingerprint fingerprint;
  std::vector<std::optional<Permutation>> witness;  // per table index
};

inline constexpr std::uint64_t kFingerprintBound = 10'000'000;

inline void require_in_ambient(const Ambient& ambient, const PermGroup& h, const char* what) {
  if (h.degree() != ambient.n)
    throw DegreeMismatch(std::string(what) + " has degree " + std::to_string(h.degree()) + ", ambient is " +
                         ambient.label());
  for (const auto& g : h.generators())
    if (!ambient.contains(g))
      throw PreconditionError(std::string(what) + " is not a subgroup of " + ambient.label() + " (generator " +
                              g.to_string() + ")");
}

inline ClassWitnesses class_witnesses(const Ambient& ambient, const PermGroup& h) {
  require_in_ambient(ambient, h, "subgroup");
  if (h.order() > kFingerprintBound)
    throw BoundExceeded("fingerprint of a subgroup of order " + std::to_string(h.order()) + " exceeds bound");
  const auto& table = class_table(ambient);
  ClassWitnesses out{{ambient, Bitset(table.size())}, std::vector<std::optional<Permutation>>(table.size())};
  std::size_t remaining = table.size();
  h.for_each_element([&](const Permutation& x) {
    const auto i = table.index_of(x);
    if (!out.witness[i]) {
      out.witness[i] = x;
      out.fingerprint.hit.set(i);
      --remaining;
    }
    return remaining > 0;
  });
  return out;
}

/// { class_of(ambient, h) : h in H }.
inline Fingerprint fingerprint(const Ambient& ambient, const PermGroup& h) {
  return class_witnesses(ambient, h).fingerprint;
}

enum class CoveringKind { generic, star, star_star };

inline const char* to_string(CoveringKind k) {
  switch (k) {
    case CoveringKind::generic: return "generic";
    case CoveringKind::star: return "star";
    case CoveringKind::star_star: return "star2";
  }
  return "?";
}

enum class CoveredBy { H, K, uncovered };

inline const char* to_string(CoveredBy c) {
  switch (c) {
    case CoveredBy::H: return "H";
    case CoveredBy::K: return "K";
    case CoveredBy::uncovered: return "uncovered";
  }
  return "?";
}

struct Component {
  std::string label;
  PermGroup group;
};

/// One row of a coverage table. For ambient (S_n/A_n) checks `id` is set; for
/// checks inside an arbitrary group the row is a conjugacy class of that group
/// named by its least element's cycle type.
struct ClassCoverage {
  std::string type;
  Split split = Split::whole;
  std::optional<ClassId> id;
  std::uint64_t size = 0;
  CoveredBy covered_by = CoveredBy::uncovered;
  std::optional<Permutation> witness;
};

struct InclusionCheck {
  bool evaluated = false;
  bool no_inclusions = false;
  std::string detail;
};

struct CoveringReport {
  std::string group_label;
  PermGroup group;
  std::optional<Ambient> ambient;
  CoveringKind kind = CoveringKind::star_star;
  std::vector<Component> components;
  bool verdict = false;
  bool union_full = false;
  std::vector<ClassCoverage> classes;
  InclusionCheck inclusion;
  /// star kind: K replaced by its normal core, and whether that still covers.
  std::optional<PermGroup> normalized_k;
  std::optional<bool> normalized_verdict;

  std::vector<ClassCoverage> uncovered() const {
    std::vector<ClassCoverage> out;
    for (const auto& c : classes)
      if (c.covered_by == CoveredBy::uncovered) out.push_back(c);
    return out;
  }
};

namespace detail {

inline void require_proper_components(const PermGroup& g, const PermGroup& h, const PermGroup& k) {
  if (!is_proper(g, h)) throw InvalidCandidate("component H is not a proper subgroup");
  if (!is_proper(g, k)) throw InvalidCandidate("component K is not a proper subgroup");
}

// Inclusion check for {H^g, K^g}: no conjugate of one component lies in a
// conjugate of the other. Equal-order conjugates coincide rather than nest.
inline InclusionCheck conjugate_inclusions(const PermGroup& g, const PermGroup& h, const PermGroup& k,
                                           bool k_conjugates) {
  InclusionCheck check;
  if (g.order() > kElementScanBound) {
    check.detail = "ambient too large for the inclusion scan";
    return check;
  }
  check.evaluated = true;
  if (k_conjugates) {
    if (h.order() != k.order() && conjugate_contained(g, h, k)) {
      check.detail = "a conjugate of H lies in K";
      return check;
    }
    if (h.order() != k.order() && conjugate_contained(g, k, h)) {
      check.detail = "a conjugate of K lies in H";
      return check;
    }
    if (are_conjugate(g, h, k)) {
      check.detail = "H and K are conjugate";
      return check;
    }
  } else {
    // {H^g, K}: K in some H^g, or some H^g in K.
    if (conjugate_contained(g, k, h)) {
      check.detail = "K lies in a conjugate of H";
      return check;
    }
    if (h.order() <= k.order() && k.order() % h.order() == 0) {
      const auto reps = right_transversal(g, normalizer_by_scan(g, h));
      for (const auto& t : reps)
        if (k.contains_group(conjugate_group(h, t))) {
          check.detail = "a conjugate of H lies in K";
          return check;
        }
    }
  }
  check.no_inclusions = true;
  check.detail = "no inclusions";
  return check;
}

}  // namespace detail

/// (**) check in S_n or A_n: the union of the conjugates of H and K is the
/// whole group iff their fingerprints jointly exhaust the class table.
inline CoveringReport check_star_star(const Ambient& ambient, const PermGroup& h, const PermGroup& k,
                                      std::string h_label = "H", std::string k_label = "K",
                                      bool evaluate_inclusions = true) {
  require_in_ambient(ambient, h, "H");
  require_in_ambient(ambient, k, "K");
  const auto g = ambient.group();
  detail::require_proper_components(g, h, k);
  const auto wh = class_witnesses(ambient, h);
  const auto wk = class_witnesses(ambient, k);
  const auto& table = class_table(ambient);

  CoveringReport r{ambient.label(), g, ambient, CoveringKind::star_star,
                   {{std::move(h_label), h}, {std::move(k_label), k}}};
  for (std::size_t i = 0; i < table.size(); ++i) {
    ClassCoverage row{table[i].id.ctype.to_string(), table[i].id.split, table[i].id, table[i].size};
    if (wh.witness[i]) {
      row.covered_by = CoveredBy::H;
      row.witness = wh.witness[i];
    } else if (wk.witness[i]) {
      row.covered_by = CoveredBy::K;
      row.witness = wk.witness[i];
    }
    r.classes.push_back(std::move(row));
  }
  r.union_full = (wh.fingerprint.hit | wk.fingerprint.hit).all();
  r.verdict = r.union_full;
  if (evaluate_inclusions) r.inclusion = detail::conjugate_inclusions(g, h, k, true);
  return r;
}

/// (*) check in an arbitrary group G: every element lies in K or in a conjugate of H.
inline CoveringReport check_star(const PermGroup& g, const PermGroup& h, const PermGroup& k,
                                 std::string group_label = "G", std::string h_label = "H",
                                 std::string k_label = "K", bool evaluate_inclusions = true) {
  require_subgroup(g, h, "H");
  require_subgroup(g, k, "K");
  detail::require_proper_components(g, h, k);
  const ElementTable table(g);
  const auto cls = table.conjugacy_partition(table.generator_indices(g));
  std::size_t nclasses = 0;
  for (auto c : cls) nclasses = std::max(nclasses, c + 1);

  const auto hset = table.set_of(h);
  const auto kset = table.set_of(k);

  // Least H element per class (table order is lexicographic).
  std::vector<std::optional<std::size_t>> h_witness(nclasses);
  for (auto i : hset.indices())
    if (!h_witness[cls[i]]) h_witness[cls[i]] = i;

  std::vector<std::size_t> first(nclasses, ElementTable::npos), size(nclasses, 0);
  std::vector<bool> inside_k(nclasses, true);
  for (std::size_t i = 0; i < table.size(); ++i) {
    const auto c = cls[i];
    if (first[c] == ElementTable::npos) first[c] = i;
    ++size[c];
    if (!kset.test(i)) inside_k[c] = false;
  }

  CoveringReport r{std::move(group_label), g, std::nullopt, CoveringKind::star,
                   {{std::move(h_label), h}, {std::move(k_label), k}}};
  bool full = true;
  for (std::size_t c = 0; c < nclasses; ++c) {
    ClassCoverage row{table[first[c]].cycle_type().to_string(), Split::whole, std::nullopt, size[c]};
    if (h_witness[c]) {
      row.covered_by = CoveredBy::H;
      row.witness = table[*h_witness[c]];
    } else if (inside_k[c]) {
      row.covered_by = CoveredBy::K;
      row.witness = table[first[c]];
    } else {
      full = false;
    }
    r.classes.push_back(std::move(row));
  }
  r.union_full = full;
  r.verdict = full;

  // Normalized form {K_G, H^g}.
  const auto core = normal_core(g, k);
  const auto coreset = table.set_of(core);
  bool normalized_full = true;
  for (std::size_t i = 0; i < table.size(); ++i)
    if (!h_witness[cls[i]] && !coreset.test(i)) {
      normalized_full = false;
      break;
    }
  r.normalized_k = core;
  r.normalized_verdict = normalized_full;
  if (evaluate_inclusions) r.inclusion = detail::conjugate_inclusions(g, h, k, false);
  return r;
}

/// Generic covering: the union of the listed subgroups is G and none contains another.
inline CoveringReport check_generic_covering(const PermGroup& g, const std::vector<PermGroup>& subgroups,
                                             std::string group_label = "G") {
  if (subgroups.empty()) throw PreconditionError("covering needs at least one component");
  CoveringReport r{std::move(group_label), g, std::nullopt, CoveringKind::generic, {}};
  for (std::size_t i = 0; i < subgroups.size(); ++i) {
    require_subgroup(g, subgroups[i], "component");
    if (!is_proper(g, subgroups[i]))
      throw InvalidCandidate("component " + std::to_string(i + 1) + " is not proper");
    r.components.push_back({"H" + std::to_string(i + 1), subgroups[i]});
  }
  const ElementTable table(g);
  Bitset all(table.size());
  for (const auto& s : subgroups) all |= table.set_of(s);
  r.union_full = all.all();

  r.inclusion.evaluated = true;
  r.inclusion.no_inclusions = true;
  r.inclusion.detail = "no inclusions";
  for (std::size_t i = 0; i < subgroups.size() && r.inclusion.no_inclusions; ++i)
    for (std::size_t j = 0; j < subgroups.size(); ++j) {
      if (i == j) continue;
      if (subgroups[j].contains_group(subgroups[i])) {
        r.inclusion.no_inclusions = false;
        r.inclusion.detail = "H" + std::to_string(i + 1) + " <= H" + std::to_string(j + 1);
        break;
      }
    }
  r.verdict = r.union_full && r.inclusion.no_inclusions;
  return r;
}

/// Re-checks directly that no component conjugate contains another in a
/// (*) or (**) report whose union is full.
inline bool no_inclusion_automatic(const CoveringReport& report) {
  if (report.kind == CoveringKind::generic)
    throw PreconditionError("the automatic no-inclusion property concerns (*) and (**) reports");
  if (!report.verdict) throw PreconditionError("report is not a covering");
  const auto& h = report.components.at(0).group;
  const auto& k = report.components.at(1).group;
  const auto check =
      detail::conjugate_inclusions(report.group, h, k, report.kind == CoveringKind::star_star);
  if (!check.evaluated) throw BoundExceeded(check.detail);
  return check.no_inclusions;
}

/// Covering of a normal subgroup N (itself S_m or A_m) by (H ∩ N, K ∩ N),
/// valid when G = NH = NK.
inline CoveringReport intersection_covering(const Ambient& ambient, const PermGroup& h, const PermGroup& k,
                                            const Ambient& normal) {
  if (normal.n != ambient.n) throw PreconditionError("normal subgroup must act on the same points");
  const auto g = ambient.group();
  const auto n = normal.group();
  require_subgroup(g, n, "N");
  if (!is_normalized_by(n, g)) throw PreconditionError("N is not normal in the ambient group");
  require_in_ambient(ambient, h, "H");
  require_in_ambient(ambient, k, "K");
  const auto hn = intersect(h, n);
  const auto kn = intersect(k, n);
  // |NH| = |N||H| / |N ∩ H|
  if (n.order() * (h.order() / hn.order()) != g.order())
    throw PreconditionError("G != NH: the intersection argument does not apply");
  if (n.order() * (k.order() / kn.order()) != g.order())
    throw PreconditionError("G != NK: the intersection argument does not apply");
  return check_star_star(normal, hn, kn, "H∩N", "K∩N");
}

}  // namespace covlab
