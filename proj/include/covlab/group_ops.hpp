#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "covlab/element_table.hpp"
#include "covlab/error.hpp"
#include "covlab/perm.hpp"
#include "covlab/perm_group.hpp"

namespace covlab {

inline void require_subgroup(const PermGroup& g, const PermGroup& h, const char* what) {
  if (h.degree() != g.degree()) throw DegreeMismatch(std::string(what) + ": degree mismatch");
  if (!g.contains_group(h)) throw PreconditionError(std::string(what) + " is not a subgroup of the ambient group");
}

inline bool is_proper(const PermGroup& g, const PermGroup& h) { return h.order() < g.order(); }

/// N is normalized by every generator of G.
inline bool is_normalized_by(const PermGroup& n, const PermGroup& g) {
  for (const auto& s : g.generators())
    for (const auto& x : n.generators())
      if (!n.contains(conjugate(x, s))) return false;
  return true;
}

/// Right coset representatives of H in G (one per coset Hg), lexicographically least in each coset.
inline std::vector<Permutation> right_transversal(const PermGroup& g, const PermGroup& h) {
  if (g.order() > kElementScanBound) throw BoundExceeded("transversal scan bound exceeded");
  std::vector<Permutation> reps;
  const auto index = g.order() / h.order();
  g.for_each_element([&](const Permutation& x) {
    for (const auto& r : reps)
      if (h.contains(compose(x, inverse(r)))) return true;
    reps.push_back(x);
    return reps.size() < index;
  });
  return reps;
}

/// Largest normal subgroup of G contained in H: intersection of H^t over a transversal.
inline PermGroup normal_core(const PermGroup& g, const PermGroup& h) {
  require_subgroup(g, h, "H");
  if (is_normalized_by(h, g)) return h;
  const auto reps = right_transversal(g, h);
  GroupBuilder core(g.degree());
  h.for_each_element([&](const Permutation& x) {
    if (core.group().contains(x)) return;
    for (const auto& t : reps)
      if (!h.contains(conjugate(x, inverse(t)))) return;  // x in H^t  <=>  x^{t^-1} in H
    core.add(x);
  });
  return core.group();
}

/// N_G(H) by scanning G.
inline PermGroup normalizer_by_scan(const PermGroup& g, const PermGroup& h) {
  if (g.order() > kElementScanBound) throw BoundExceeded("normalizer scan bound exceeded");
  GroupBuilder norm(h);
  g.for_each_element([&](const Permutation& x) {
    if (norm.group().contains(x)) return;
    for (const auto& s : h.generators())
      if (!h.contains(conjugate(s, x))) return;
    norm.add(x);
  });
  return norm.group();
}

/// Some x in G with A^x <= B, if one exists (lexicographically least such x).
inline std::optional<Permutation> conjugate_into(const PermGroup& g, const PermGroup& a, const PermGroup& b) {
  if (a.order() > b.order() || b.order() % a.order() != 0) return std::nullopt;
  if (b.contains_group(a)) return Permutation::identity(g.degree());
  if (g.order() > kElementScanBound) throw BoundExceeded("conjugate containment scan bound exceeded");
  std::optional<Permutation> found;
  g.for_each_element([&](const Permutation& x) {
    for (const auto& s : a.generators())
      if (!b.contains(conjugate(s, x))) return true;
    found = x;
    return false;
  });
  return found;
}

inline bool conjugate_contained(const PermGroup& g, const PermGroup& a, const PermGroup& b) {
  return conjugate_into(g, a, b).has_value();
}

inline bool are_conjugate(const PermGroup& g, const PermGroup& a, const PermGroup& b) {
  return a.order() == b.order() && conjugate_contained(g, a, b);
}

}  // namespace covlab
