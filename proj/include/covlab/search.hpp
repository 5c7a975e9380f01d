#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "covlab/catalog.hpp"
#include "covlab/conjugacy.hpp"
#include "covlab/covering.hpp"
#include "covlab/lattice.hpp"
#include "covlab/parallel.hpp"

namespace covlab {

enum class ListSource { automatic, lattice, catalog };

inline const char* to_string(ListSource s) {
  switch (s) {
    case ListSource::automatic: return "auto";
    case ListSource::lattice: return "lattice";
    case ListSource::catalog: return "catalog";
  }
  return "?";
}

inline ListSource parse_list_source(const std::string& s) {
  if (s == "auto") return ListSource::automatic;
  if (s == "lattice") return ListSource::lattice;
  if (s == "catalog") return ListSource::catalog;
  throw ParseError("source must be lattice, catalog or auto: " + s);
}

struct SearchOptions {
  ListSource source = ListSource::automatic;
  std::size_t jobs = 0;  // 0: COVERING_LAB_JOBS or hardware
  std::uint64_t lattice_bound = 50'000;
  /// Under `automatic`, groups up to this order are enumerated, larger ones use the catalog.
  std::uint64_t auto_lattice_limit = 5040;
};

/// Subgroup classes for the search, by the requested source.
inline SubgroupClassList subgroup_classes_for(const Ambient& ambient, const SearchOptions& opt, ListSource* used = nullptr) {
  auto source = opt.source;
  if (source == ListSource::automatic)
    source = ambient.order() <= opt.auto_lattice_limit || ambient.n > kCatalogMaxDegree ? ListSource::lattice
                                                                                       : ListSource::catalog;
  if (used) *used = source;
  if (source == ListSource::catalog) return catalog_subgroups(ambient);
  return all_subgroup_classes(ambient.group(), ambient.label(), {opt.lattice_bound});
}

/// A maximal-class pair that fails to cover, with the classes it misses.
struct PairCertificate {
  std::size_t h_index = 0;
  std::size_t k_index = 0;
  std::string h_label;
  std::string k_label;
  std::vector<ClassId> uncovered;
};

struct SearchWitness {
  std::string h_label;
  std::string k_label;
  PermGroup h;
  PermGroup k;
  CoveringReport report;
};

struct SearchVerdict {
  Ambient ambient;
  bool coverable = false;
  std::optional<SearchWitness> witness;
  /// Every non-covering pair, in search order. Complete when not coverable.
  std::vector<PairCertificate> certificate;
  Completeness completeness = Completeness::proven_by_enumeration;
  ListSource source = ListSource::lattice;
  std::vector<std::string> maximal_labels;
  std::vector<std::uint64_t> maximal_orders;
  std::size_t pairs_tested = 0;
};

/// Decides (**)-coverability of S_n / A_n: every unordered pair (equal pairs
/// included) of maximal classes is tested by fingerprint union. Restricting
/// to maximal classes is sound because fingerprints grow with the subgroup.
inline SearchVerdict decide_star_star(const Ambient& ambient, const SearchOptions& opt = {}) {
  SearchVerdict v{ambient};
  const auto list = subgroup_classes_for(ambient, opt, &v.source);
  const auto maximal = maximal_filter(list);
  v.completeness = list.completeness;
  const auto m = maximal.classes.size();
  for (const auto& e : maximal.classes) {
    v.maximal_labels.push_back(e.label);
    v.maximal_orders.push_back(e.group.order());
  }

  std::vector<Bitset> prints(m);
  parallel_for(m, resolve_jobs(opt.jobs), [&](std::size_t i) {
    prints[i] = fingerprint(ambient, maximal.classes[i].group).hit;
  });

  // Descending product of orders; ties by index.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) pairs.emplace_back(i, j);
  std::stable_sort(pairs.begin(), pairs.end(), [&](const auto& a, const auto& b) {
    const auto pa = v.maximal_orders[a.first] * v.maximal_orders[a.second];
    const auto pb = v.maximal_orders[b.first] * v.maximal_orders[b.second];
    return pa > pb;
  });

  const auto& table = class_table(ambient);
  std::optional<std::pair<std::size_t, std::size_t>> found;
  for (const auto& [i, j] : pairs) {
    ++v.pairs_tested;
    const auto u = prints[i] | prints[j];
    if (u.all()) {
      if (!found) found = std::make_pair(i, j);
      continue;
    }
    PairCertificate c{i, j, maximal.classes[i].label, maximal.classes[j].label, {}};
    for (std::size_t t = 0; t < table.size(); ++t)
      if (!u.test(t)) c.uncovered.push_back(table[t].id);
    v.certificate.push_back(std::move(c));
  }
  if (found) {
    const auto& h = maximal.classes[found->first];
    const auto& k = maximal.classes[found->second];
    auto report = check_star_star(ambient, h.group, k.group, h.label, k.label);
    if (!report.verdict) throw ConsistencyError("fingerprint witness failed re-verification");
    v.coverable = true;
    v.witness = SearchWitness{h.label, k.label, h.group, k.group, std::move(report)};
  }
  return v;
}

enum class Transitivity { both_transitive, exactly_one, neither };

inline const char* to_string(Transitivity t) {
  switch (t) {
    case Transitivity::both_transitive: return "bothTransitive";
    case Transitivity::exactly_one: return "exactlyOne";
    case Transitivity::neither: return "neither";
  }
  return "?";
}

inline Transitivity transitivity_report(const PermGroup& h, const PermGroup& k) {
  const int count = int(is_transitive(h)) + int(is_transitive(k));
  return count == 2 ? Transitivity::both_transitive : count == 1 ? Transitivity::exactly_one : Transitivity::neither;
}

/// Every covering pair among all proper subgroup classes (not just maximal
/// ones), smallest classes first. Used to test the maximality reduction.
inline std::vector<std::pair<std::size_t, std::size_t>> all_covering_pairs(const Ambient& ambient,
                                                                           const SubgroupClassList& list) {
  std::vector<Bitset> prints;
  for (const auto& e : list.classes) prints.push_back(fingerprint(ambient, e.group).hit);
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < prints.size(); ++i)
    for (std::size_t j = i; j < prints.size(); ++j)
      if ((prints[i] | prints[j]).all()) out.emplace_back(i, j);
  return out;
}

}  // namespace covlab
