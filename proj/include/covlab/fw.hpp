#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "covlab/covering.hpp"
#include "covlab/element_table.hpp"
#include "covlab/error.hpp"
#include "covlab/group_ops.hpp"
#include "covlab/lattice.hpp"
#include "covlab/perm_group.hpp"

namespace covlab {

/// Reason an (G, H, N) triple is not eligible for the Frobenius-Wielandt test.
enum class FwPrecondition { ok, h_trivial, h_equals_g, n_equals_h, n_not_normal, not_subgroup };

inline const char* to_string(FwPrecondition p) {
  switch (p) {
    case FwPrecondition::ok: return "ok";
    case FwPrecondition::h_trivial: return "H is trivial";
    case FwPrecondition::h_equals_g: return "H equals G";
    case FwPrecondition::n_equals_h: return "N equals H";
    case FwPrecondition::n_not_normal: return "N is not normal in H";
    case FwPrecondition::not_subgroup: return "N <= H <= G fails";
  }
  return "?";
}

class FwPreconditionError : public PreconditionError {
 public:
  FwPreconditionError(FwPrecondition reason)
      : PreconditionError(std::string("Frobenius-Wielandt precondition: ") + covlab::to_string(reason)),
        reason_(reason) {}
  FwPrecondition reason() const { return reason_; }

 private:
  FwPrecondition reason_;
};

inline FwPrecondition fw_precondition(const PermGroup& g, const PermGroup& h, const PermGroup& n) {
  if (h.degree() != g.degree() || n.degree() != g.degree()) return FwPrecondition::not_subgroup;
  if (!g.contains_group(h) || !h.contains_group(n)) return FwPrecondition::not_subgroup;
  if (h.is_trivial()) return FwPrecondition::h_trivial;
  if (h.order() == g.order()) return FwPrecondition::h_equals_g;
  if (n.order() == h.order()) return FwPrecondition::n_equals_h;
  if (!is_normalized_by(n, h)) return FwPrecondition::n_not_normal;
  return FwPrecondition::ok;
}

/// H ∩ H^g <= N for every g outside H. H ∩ H^g depends only on the coset Hg,
/// so one representative per right coset is checked.
inline bool is_fw(const PermGroup& g, const PermGroup& h, const PermGroup& n) {
  if (auto p = fw_precondition(g, h, n); p != FwPrecondition::ok) throw FwPreconditionError(p);
  const auto reps = right_transversal(g, h);
  for (const auto& t : reps) {
    if (h.contains(t)) continue;
    bool ok = true;
    h.for_each_element([&](const Permutation& x) {
      // x in H^t  <=>  x^{t^-1} in H
      if (h.contains(conjugate(x, inverse(t))) && !n.contains(x)) {
        ok = false;
        return false;
      }
      return true;
    });
    if (!ok) return false;
  }
  return true;
}

/// Outcome of every check performed on a computed kernel.
struct FwChecks {
  bool kernel_is_subgroup = false;
  bool kernel_normal = false;
  bool g_equals_hk = false;
  bool h_cap_k_equals_n = false;
  bool order_identity = false;  // |K| |H| = |G| |N|

  bool all() const { return kernel_is_subgroup && kernel_normal && g_equals_hk && h_cap_k_equals_n && order_identity; }
};

struct FwWitness {
  PermGroup g;
  PermGroup h;
  PermGroup n;
  PermGroup kernel;
  FwChecks checks;
};

/// Kernel K = G minus the union of the conjugates of H - N, with every
/// structural property verified.
inline FwWitness fw_kernel(const PermGroup& g, const PermGroup& h, const PermGroup& n) {
  if (!is_fw(g, h, n)) throw PreconditionError("(G, H, N) is not a Frobenius-Wielandt triple");
  const ElementTable table(g);
  const auto hset = table.set_of(h);
  const auto nset = table.set_of(n);
  // The union of the conjugates of H - N is the union of the G-classes it meets.
  const auto cls = table.conjugacy_partition(table.generator_indices(g));
  std::vector<bool> hit(table.size(), false);
  for (auto x : hset.indices())
    if (!nset.test(x)) hit[cls[x]] = true;
  Bitset removed(table.size());
  for (std::size_t i = 0; i < table.size(); ++i)
    if (hit[cls[i]]) removed.set(i);
  GroupBuilder kb(g.degree());
  std::size_t kcount = 0;
  for (std::size_t i = 0; i < table.size(); ++i)
    if (!removed.test(i)) {
      ++kcount;
      kb.add(table[i]);
    }
  FwWitness w{g, h, n, kb.group(), {}};
  auto& c = w.checks;
  c.kernel_is_subgroup = w.kernel.order() == kcount;
  if (!c.kernel_is_subgroup)
    throw ConsistencyError("set difference is not a subgroup; the intersection condition was violated");
  c.kernel_normal = is_normalized_by(w.kernel, g);
  const auto hk = intersect(h, w.kernel);
  c.h_cap_k_equals_n = hk.order() == n.order() && hk.contains_group(n);
  c.g_equals_hk = h.order() * w.kernel.order() / hk.order() == g.order();
  c.order_identity = w.kernel.order() * h.order() == g.order() * n.order();
  return w;
}

/// {H^g, K} for a valid witness.
inline CoveringReport star_covering_from_fw(const FwWitness& w) {
  return check_star(w.g, w.h, w.kernel, "G", "H", "K");
}

/// Conversely: a (*) covering {H^g, K} yields the triple (G, H, H ∩ K_G) with kernel K_G.
inline FwWitness fw_from_star_covering(const PermGroup& g, const PermGroup& h, const PermGroup& k) {
  const auto report = check_star(g, h, k, "G", "H", "K", false);
  if (!report.verdict) throw PreconditionError("{H^g, K} is not a covering of G");
  if (normalizer_by_scan(g, h).order() != h.order())
    throw ConsistencyError("H is not self-normalizing although {H^g, K} covers G");
  const auto core = normal_core(g, k);
  const auto n = intersect(h, core);
  auto w = fw_kernel(g, h, n);
  if (!(w.kernel == core)) throw ConsistencyError("computed kernel differs from K_G");
  return w;
}

/// Default largest order for the (*) and FW searches.
inline constexpr std::uint64_t kFwSearchBound = 5'000;

struct StarCoverability {
  bool coverable = false;
  std::optional<PermGroup> h;
  std::optional<PermGroup> k;
  std::size_t pairs_tested = 0;
};

/// Direct search for a (*) covering {H^g, K}: H and K range over subgroup
/// classes (conjugating K conjugates the whole covering). An element outside
/// every conjugate of H lies in a class H misses, so the pair covers iff K
/// contains every class missed by H.
inline StarCoverability is_star_coverable(const PermGroup& g, std::uint64_t bound = kFwSearchBound) {
  if (g.order() > bound) throw BoundExceeded("(*) search bound exceeded");
  StarCoverability out;
  if (g.order() == 1) return out;
  const auto lattice = subgroup_lattice(g, {bound});
  const ElementTable table(g);
  const auto cls = table.conjugacy_partition(table.generator_indices(g));

  std::vector<const LatticeClass*> proper;
  for (const auto& c : lattice.classes)
    if (c.order < g.order()) proper.push_back(&c);
  // Larger first; lattice order breaks ties.
  std::stable_sort(proper.begin(), proper.end(), [](auto a, auto b) { return a->order > b->order; });

  std::vector<Bitset> sets;
  for (auto c : proper) sets.push_back(table.set_of(c->representative));

  for (std::size_t i = 0; i < proper.size(); ++i) {
    if (proper[i]->order == 1) continue;
    std::vector<bool> met(table.size(), false);
    for (auto x : sets[i].indices()) met[cls[x]] = true;
    Bitset missed(table.size());
    for (std::size_t x = 0; x < table.size(); ++x)
      if (!met[cls[x]]) missed.set(x);
    for (std::size_t j = 0; j < proper.size(); ++j) {
      ++out.pairs_tested;
      if (missed.is_subset_of(sets[j])) {
        out.coverable = true;
        out.h = proper[i]->representative;
        out.k = proper[j]->representative;
        return out;
      }
    }
  }
  return out;
}

/// Independent search for an FW triple (G, H, N): H over proper nontrivial
/// subgroup classes by decreasing order, N over proper normal subgroups of H.
/// Returns the verified witness with its kernel.
inline std::optional<FwWitness> fw_search(const PermGroup& g, std::uint64_t bound = kFwSearchBound) {
  if (g.order() > bound) throw BoundExceeded("FW search bound exceeded");
  if (g.order() == 1) return std::nullopt;
  const auto lattice = subgroup_lattice(g, {bound});
  std::vector<const LatticeClass*> hs;
  for (const auto& c : lattice.classes)
    if (c.order > 1 && c.order < g.order()) hs.push_back(&c);
  std::stable_sort(hs.begin(), hs.end(), [](auto a, auto b) { return a->order > b->order; });
  for (auto hc : hs) {
    const auto& h = hc->representative;
    const auto h_lattice = subgroup_lattice(h, {bound});
    for (auto it = h_lattice.classes.rbegin(); it != h_lattice.classes.rend(); ++it) {
      if (it->conjugates != 1 || it->order == h.order()) continue;  // normal, proper
      if (is_fw(g, h, it->representative)) return fw_kernel(g, h, it->representative);
    }
  }
  return std::nullopt;
}

}  // namespace covlab
