#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "covlab/element_table.hpp"
#include "covlab/error.hpp"
#include "covlab/group_ops.hpp"
#include "covlab/perm_group.hpp"

namespace covlab {

struct LatticeOptions {
  /// Largest group order the enumerator accepts.
  std::uint64_t bound = 50'000;
};

/// One conjugacy class of subgroups found by the enumerator.
struct LatticeClass {
  PermGroup representative;
  std::uint64_t order = 0;
  std::uint64_t conjugates = 0;       // class length |G : N_G(H)|
  std::uint64_t normalizer_order = 0;
  bool maximal = false;                // maximal among proper subgroups
  std::vector<std::size_t> covers;     // classes obtained by one cyclic extension (up to conjugacy)
};

/// All conjugacy classes of subgroups of G, including 1 and G, sorted by order.
struct SubgroupLattice {
  PermGroup group;
  std::vector<LatticeClass> classes;

  std::size_t size() const { return classes.size(); }

  std::uint64_t total_subgroups() const {
    std::uint64_t s = 0;
    for (const auto& c : classes) s += c.conjugates;
    return s;
  }
};

namespace detail {

class LatticeBuilder {
 public:
  LatticeBuilder(const PermGroup& g, const LatticeOptions& opt) : group_(g), table_(g, opt.bound) {
    if (g.order() > opt.bound)
      throw BoundExceeded("lattice enumeration of a group of order " + std::to_string(g.order()) +
                          " exceeds bound " + std::to_string(opt.bound));
    group_gens_ = table_.generator_indices(g);
    for (std::size_t i = 0; i < table_.size(); ++i) order_of_.push_back(table_[i].order());
  }

  SubgroupLattice run() {
    add_class({}, table_.closure({}));
    for (std::size_t c = 0; c < work_.size(); ++c) extend(c);

    // Sort by order, then discovery.
    std::vector<std::size_t> perm(work_.size());
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::stable_sort(perm.begin(), perm.end(),
                     [&](std::size_t a, std::size_t b) { return work_[a].order < work_[b].order; });
    std::vector<std::size_t> pos(work_.size());
    for (std::size_t i = 0; i < perm.size(); ++i) pos[perm[i]] = i;

    SubgroupLattice out{group_, {}};
    for (auto id : perm) {
      const auto& w = work_[id];
      std::vector<Permutation> gens;
      for (auto i : w.gens) gens.push_back(table_[i]);
      LatticeClass lc{PermGroup(group_.degree(), std::move(gens)), w.order, w.conjugates,
                      w.normalizer_order, false, {}};
      for (auto c : w.covers) lc.covers.push_back(pos[c]);
      std::sort(lc.covers.begin(), lc.covers.end());
      lc.covers.erase(std::unique(lc.covers.begin(), lc.covers.end()), lc.covers.end());
      lc.maximal = w.order < table_.size() &&
                   std::all_of(w.covers.begin(), w.covers.end(),
                               [&](std::size_t c) { return work_[c].order == table_.size(); });
      out.classes.push_back(std::move(lc));
    }
    return out;
  }

 private:
  struct Work {
    std::vector<std::size_t> gens;
    std::vector<std::size_t> members;
    Bitset set;
    std::uint64_t order = 0;
    std::uint64_t conjugates = 0;
    std::uint64_t normalizer_order = 0;
    std::vector<std::size_t> normalizer_gens;
    std::vector<std::size_t> covers;
  };

  struct Conj {
    std::size_t cls;
    std::size_t by;  // element index x with rep^x = this subgroup
  };

  Bitset conjugate_set(const Work& w, std::size_t x) const {
    Bitset s(table_.size());
    for (auto m : w.members) s.set(table_.conj(m, x));
    return s;
  }

  // Class containing the subgroup with element set `set`, or npos.
  std::size_t lookup(const Bitset& set) const {
    auto it = index_.find(set.hash());
    if (it == index_.end()) return ElementTable::npos;
    for (const auto& c : it->second)
      if (conjugate_set(work_[c.cls], c.by) == set) return c.cls;
    return ElementTable::npos;
  }

  std::size_t add_class(std::vector<std::size_t> gens, Bitset set) {
    Work w;
    w.gens = std::move(gens);
    w.members = set.indices();
    w.order = w.members.size();
    w.set = std::move(set);
    const auto id = work_.size();

    // Normalizer by scan; then one conjugate per right coset N x.
    Bitset norm(table_.size());
    for (std::size_t x = 0; x < table_.size(); ++x) {
      bool ok = true;
      for (auto s : w.gens)
        if (!w.set.test(table_.conj(s, x))) {
          ok = false;
          break;
        }
      if (ok) norm.set(x);
    }
    const auto nmembers = norm.indices();
    w.normalizer_order = nmembers.size();
    // Small generating set of N.
    Bitset ngen_closure = table_.closure({});
    for (auto x : nmembers)
      if (!ngen_closure.test(x)) {
        w.normalizer_gens.push_back(x);
        ngen_closure = table_.closure(w.normalizer_gens);
      }

    Bitset seen(table_.size());
    for (std::size_t x = 0; x < table_.size(); ++x) {
      if (seen.test(x)) continue;
      for (auto nm : nmembers) seen.set(table_.mul(nm, x));
      index_[conjugate_set(w, x).hash()].push_back({id, x});
      ++w.conjugates;
    }
    work_.push_back(std::move(w));
    return id;
  }

  void extend(std::size_t id) {
    // Copy what we need: work_ may reallocate while new classes are added.
    const auto gens = work_[id].gens;
    const auto members = work_[id].members;
    const auto set = work_[id].set;
    const auto ngens = work_[id].normalizer_gens;
    if (members.size() == table_.size()) return;

    // Orbit representatives of G \ H under left/right multiplication by H,
    // conjugation by N_G(H) and generating powers; each orbit yields conjugate
    // extensions <H, g>.
    Bitset marked = set;
    for (std::size_t g = 0; g < table_.size(); ++g) {
      if (marked.test(g)) continue;
      std::vector<std::size_t> orbit{g};
      marked.set(g);
      auto push = [&](std::size_t y) {
        if (!marked.test(y)) {
          marked.set(y);
          orbit.push_back(y);
        }
      };
      for (std::size_t k = 0; k < orbit.size(); ++k) {
        const auto y = orbit[k];
        for (auto s : gens) {
          push(table_.mul(s, y));
          push(table_.mul(y, s));
        }
        for (auto nx : ngens) push(table_.conj(y, nx));
        const auto ord = order_of_[y];
        std::size_t power = y;
        for (std::uint64_t e = 2; e < ord; ++e) {
          power = table_.mul(power, y);
          if (std::gcd(e, ord) == 1) push(power);
        }
      }

      auto new_gens = gens;
      new_gens.push_back(g);
      auto ext = table_.extend(members, set, new_gens);
      auto cls = lookup(ext);
      if (cls == ElementTable::npos) cls = add_class(std::move(new_gens), std::move(ext));
      work_[id].covers.push_back(cls);
    }
  }

  const PermGroup& group_;
  ElementTable table_;
  std::vector<std::size_t> group_gens_;
  std::vector<std::uint64_t> order_of_;
  std::deque<Work> work_;
  std::unordered_map<std::uint64_t, std::vector<Conj>> index_;
};

}  // namespace detail

/// Conjugacy classes of subgroups by cyclic extension: every class
/// representative H is extended by one element g from each orbit of
/// G \ H under (H x H)-multiplication, N_G(H)-conjugation and generating
/// powers, and <H, g> is identified up to conjugacy exactly, via a table of all
/// conjugates keyed by element-set hash and confirmed by comparison.
inline SubgroupLattice subgroup_lattice(const PermGroup& g, const LatticeOptions& opt = {}) {
  return detail::LatticeBuilder(g, opt).run();
}

enum class Completeness { proven_by_enumeration, assumed_catalog };

inline const char* to_string(Completeness c) {
  return c == Completeness::proven_by_enumeration ? "proven-by-enumeration" : "assumed-catalog";
}

struct SubgroupClassEntry {
  PermGroup group;
  std::string label;
  std::string provenance;  // "lattice-enumerated" or "catalog(<name>)"
  /// Set when the source already knows maximality (the lattice does).
  std::optional<bool> maximal_hint;
};

/// Representatives of conjugacy classes of proper subgroups of `group`.
struct SubgroupClassList {
  std::string group_label;
  PermGroup group;
  std::vector<SubgroupClassEntry> classes;
  Completeness completeness = Completeness::proven_by_enumeration;
};

namespace detail {

inline std::string orbit_signature(const PermGroup& h) {
  std::string s;
  for (auto l : orbit_lengths(h)) {
    if (!s.empty()) s += "+";
    s += std::to_string(l);
  }
  return s;
}

}  // namespace detail

/// Proper subgroup classes of G from the lattice, smallest first.
inline SubgroupClassList all_subgroup_classes(const PermGroup& g, std::string label = "G",
                                              const LatticeOptions& opt = {}) {
  const auto lattice = subgroup_lattice(g, opt);
  SubgroupClassList out{std::move(label), g, {}, Completeness::proven_by_enumeration};
  for (std::size_t i = 0; i < lattice.classes.size(); ++i) {
    const auto& c = lattice.classes[i];
    if (c.order == g.order()) continue;
    out.classes.push_back({c.representative,
                           "#" + std::to_string(i) + " order " + std::to_string(c.order) + " orbits " +
                               detail::orbit_signature(c.representative),
                           "lattice-enumerated", c.maximal});
  }
  return out;
}

/// Classes not contained, up to conjugacy, in another listed class. Uses the
/// lattice's maximality flags when every entry carries one, else scans.
inline SubgroupClassList maximal_filter(const SubgroupClassList& list, bool use_hints = true) {
  SubgroupClassList out{list.group_label, list.group, {}, list.completeness};
  const bool hinted = use_hints && std::all_of(list.classes.begin(), list.classes.end(),
                                               [](const auto& e) { return e.maximal_hint.has_value(); });
  for (std::size_t i = 0; i < list.classes.size(); ++i) {
    const auto& a = list.classes[i];
    bool maximal = true;
    if (hinted) {
      maximal = *a.maximal_hint;
    } else {
      for (std::size_t j = 0; j < list.classes.size() && maximal; ++j) {
        const auto& b = list.classes[j];
        if (i == j || b.group.order() <= a.group.order()) continue;
        if (conjugate_contained(list.group, a.group, b.group)) maximal = false;
      }
    }
    if (maximal) out.classes.push_back(a);
  }
  return out;
}

}  // namespace covlab
