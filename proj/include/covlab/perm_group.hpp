#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <type_traits>
#include <vector>

#include "covlab/error.hpp"
#include "covlab/perm.hpp"

namespace covlab {

/// A permutation group given by generators, with a deterministic stabilizer
/// chain. The base is a fixed point order (by default 0, 1, ..., n-2), so the
/// chain and everything derived from it are reproducible.
///
/// Immutable after construction; safe for concurrent reads.
class PermGroup {
 public:
  struct Level {
    std::size_t base_point = 0;
    std::vector<Permutation> strong_generators;
    std::vector<std::size_t> orbit;           // in discovery order
    std::vector<int> orbit_index;             // point -> position in orbit, or -1
    std::vector<Permutation> transversal;     // base^transversal[k] = orbit[k]
  };

  PermGroup() : PermGroup(1, {}) {}

  explicit PermGroup(std::size_t degree, std::vector<Permutation> generators = {})
      : PermGroup(degree, std::move(generators), default_base(degree)) {}

  /// Builds the chain for an explicit base order; `base` must list distinct
  /// points and cover all but at most one point.
  PermGroup(std::size_t degree, std::vector<Permutation> generators, std::vector<std::size_t> base)
      : degree_(degree) {
    if (degree == 0) throw PreconditionError("group degree must be positive");
    for (const auto& g : generators) {
      if (g.degree() != degree)
        throw DegreeMismatch("generator " + g.to_string() + " has degree " +
                             std::to_string(g.degree()) + ", expected " + std::to_string(degree));
      if (!g.is_identity()) generators_.push_back(g);
    }
    if (base.size() + 1 < degree) throw PreconditionError("base must cover n-1 points");
    build_chain(std::move(base));
  }

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<Level>& chain() const { return chain_; }

  std::uint64_t order() const { return order_; }

  bool is_trivial() const { return order_ == 1; }

  bool contains(const Permutation& x) const {
    if (x.degree() != degree_)
      throw DegreeMismatch("membership test with degree " + std::to_string(x.degree()) +
                           " in a group of degree " + std::to_string(degree_));
    return sift(x, 0).second.is_identity();
  }

  /// True iff every generator of `h` lies in this group.
  bool contains_group(const PermGroup& h) const {
    if (h.degree() != degree_) throw DegreeMismatch("subgroup degree mismatch");
    for (const auto& g : h.generators())
      if (!contains(g)) return false;
    return true;
  }

  /// Visits every element exactly once, in lexicographic order of base images.
  /// With the default base this is lexicographic order of image tables. A
  /// visitor returning bool stops the walk by returning false.
  template <class F>
  void for_each_element(F&& visit) const {
    Permutation acc = Permutation::identity(degree_);
    enumerate_level(0, acc, visit);
  }

  std::vector<Permutation> elements() const {
    std::vector<Permutation> out;
    out.reserve(static_cast<std::size_t>(order_));
    for_each_element([&](const Permutation& p) { out.push_back(p); });
    return out;
  }

  /// Uniformly random element.
  template <class Rng>
  Permutation random_element(Rng& rng) const {
    Permutation g = Permutation::identity(degree_);
    for (auto it = chain_.rbegin(); it != chain_.rend(); ++it) {
      std::uniform_int_distribution<std::size_t> pick(0, it->transversal.size() - 1);
      g = compose(g, it->transversal[pick(rng)]);
    }
    return g;
  }

  /// Stabilizer of the first `depth` base points.
  PermGroup stabilizer_of_base_prefix(std::size_t depth) const {
    if (depth >= chain_.size()) return PermGroup(degree_, {}, base_);
    return PermGroup(degree_, chain_[depth].strong_generators, base_);
  }

  const std::vector<std::size_t>& base() const { return base_; }

  friend bool operator==(const PermGroup& a, const PermGroup& b) {
    return a.degree_ == b.degree_ && a.order_ == b.order_ && a.contains_group(b);
  }

  static std::vector<std::size_t> default_base(std::size_t degree) {
    std::vector<std::size_t> base(degree > 1 ? degree - 1 : 0);
    std::iota(base.begin(), base.end(), std::size_t{0});
    return base;
  }

 private:
  // Returns (level reached, residue). Residue is identity iff x is a member.
  std::pair<std::size_t, Permutation> sift(Permutation x, std::size_t from) const {
    for (std::size_t i = from; i < chain_.size(); ++i) {
      const auto& lv = chain_[i];
      const auto img = x[lv.base_point];
      const int k = lv.orbit_index[img];
      if (k < 0) return {i, x};
      x = compose(x, inverse(lv.transversal[static_cast<std::size_t>(k)]));
    }
    return {chain_.size(), x};
  }

  void compute_orbit(Level& lv) const {
    lv.orbit.assign(1, lv.base_point);
    lv.orbit_index.assign(degree_, -1);
    lv.orbit_index[lv.base_point] = 0;
    lv.transversal.assign(1, Permutation::identity(degree_));
    for (std::size_t k = 0; k < lv.orbit.size(); ++k) {
      for (const auto& s : lv.strong_generators) {
        const auto next = s[lv.orbit[k]];
        if (lv.orbit_index[next] >= 0) continue;
        lv.orbit_index[next] = static_cast<int>(lv.orbit.size());
        lv.orbit.push_back(next);
        lv.transversal.push_back(compose(lv.transversal[k], s));
      }
    }
  }

  // Deterministic Schreier-Sims over a fixed base.
  void build_chain(std::vector<std::size_t> base) {
    base_ = std::move(base);
    chain_.assign(base_.size(), Level{});
    for (std::size_t i = 0; i < base_.size(); ++i) chain_[i].base_point = base_[i];
    for (const auto& g : generators_) {
      // Add g to every level whose base prefix it fixes.
      for (std::size_t i = 0; i < chain_.size(); ++i) {
        chain_[i].strong_generators.push_back(g);
        if (g[base_[i]] != base_[i]) break;
      }
    }
    for (auto& lv : chain_) compute_orbit(lv);

    std::size_t i = chain_.size();
    while (i > 0) {
      const std::size_t level = i - 1;
      bool restarted = false;
      auto& lv = chain_[level];
      for (std::size_t k = 0; k < lv.orbit.size() && !restarted; ++k) {
        for (std::size_t si = 0; si < lv.strong_generators.size() && !restarted; ++si) {
          const auto& s = lv.strong_generators[si];
          const auto target = s[lv.orbit[k]];
          const auto& u = lv.transversal[k];
          const auto& v = lv.transversal[static_cast<std::size_t>(lv.orbit_index[target])];
          const Permutation schreier = compose(compose(u, s), inverse(v));
          if (schreier.is_identity()) continue;
          auto [reached, residue] = sift(schreier, level + 1);
          if (reached == chain_.size() && residue.is_identity()) continue;
          if (reached == chain_.size())
            throw ConsistencyError("stabilizer chain base does not determine elements");
          for (std::size_t j = level + 1; j <= reached; ++j) {
            chain_[j].strong_generators.push_back(residue);
            compute_orbit(chain_[j]);
          }
          i = reached + 1;
          restarted = true;
        }
      }
      if (!restarted) --i;
    }

    order_ = 1;
    for (const auto& lv : chain_) {
      const auto len = static_cast<std::uint64_t>(lv.orbit.size());
      if (order_ > std::numeric_limits<std::uint64_t>::max() / len)
        throw BoundExceeded("group order exceeds 64 bits");
      order_ *= len;
    }
  }

  template <class F>
  bool enumerate_level(std::size_t level, const Permutation& suffix, F& visit) const {
    if (level == chain_.size()) {
      if constexpr (std::is_same_v<std::invoke_result_t<F&, const Permutation&>, bool>) {
        return visit(suffix);
      } else {
        visit(suffix);
        return true;
      }
    }
    const auto& lv = chain_[level];
    // Sort orbit positions by the image of the orbit point under the suffix.
    std::vector<std::size_t> idx(lv.orbit.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
      return suffix[lv.orbit[a]] < suffix[lv.orbit[b]];
    });
    for (auto k : idx)
      if (!enumerate_level(level + 1, compose(lv.transversal[k], suffix), visit)) return false;
    return true;
  }

  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::vector<std::size_t> base_;
  std::vector<Level> chain_;
  std::uint64_t order_ = 1;
};

inline PermGroup group_from_generators(std::size_t degree, std::vector<Permutation> gens) {
  return PermGroup(degree, std::move(gens));
}

/// Infers the degree from the first generator.
inline PermGroup group_from_generators(const std::vector<Permutation>& gens) {
  if (gens.empty()) throw PreconditionError("cannot infer degree from an empty generator list");
  return PermGroup(gens.front().degree(), gens);
}

/// Parses each generator string at degree n.
inline PermGroup group_from_strings(std::size_t degree, const std::vector<std::string>& gens) {
  std::vector<Permutation> perms;
  for (const auto& g : gens) perms.push_back(parse_perm(g, degree));
  return PermGroup(degree, std::move(perms));
}

/// Grows a group one element at a time, keeping only generators that enlarge it.
class GroupBuilder {
 public:
  explicit GroupBuilder(std::size_t degree) : group_(degree) {}
  explicit GroupBuilder(PermGroup start) : group_(std::move(start)) {}

  bool add(const Permutation& x) {
    if (group_.contains(x)) return false;
    auto gens = group_.generators();
    gens.push_back(x);
    group_ = PermGroup(group_.degree(), std::move(gens));
    return true;
  }

  const PermGroup& group() const { return group_; }

 private:
  PermGroup group_;
};

/// x^g for every generator of h.
inline PermGroup conjugate_group(const PermGroup& h, const Permutation& g) {
  std::vector<Permutation> gens;
  for (const auto& x : h.generators()) gens.push_back(conjugate(x, g));
  return PermGroup(h.degree(), std::move(gens));
}

// ---------------------------------------------------------------------------
// Orbits, blocks, primitivity.

/// Orbits as sorted 0-based point lists, ordered by least point.
inline std::vector<std::vector<std::size_t>> orbits(const PermGroup& g) {
  const auto n = g.degree();
  std::vector<int> owner(n, -1);
  std::vector<std::vector<std::size_t>> result;
  for (std::size_t p = 0; p < n; ++p) {
    if (owner[p] >= 0) continue;
    std::vector<std::size_t> orbit{p};
    owner[p] = static_cast<int>(result.size());
    for (std::size_t k = 0; k < orbit.size(); ++k)
      for (const auto& s : g.generators()) {
        const auto q = s[orbit[k]];
        if (owner[q] < 0) {
          owner[q] = static_cast<int>(result.size());
          orbit.push_back(q);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    result.push_back(std::move(orbit));
  }
  return result;
}

inline bool is_transitive(const PermGroup& g) { return orbits(g).size() == 1; }

/// Sorted orbit lengths.
inline std::vector<std::size_t> orbit_lengths(const PermGroup& g) {
  std::vector<std::size_t> lens;
  for (const auto& o : orbits(g)) lens.push_back(o.size());
  std::sort(lens.begin(), lens.end());
  return lens;
}

/// Partition of {0..n-1} into cells of equal size d, 1 < d < n.
struct BlockSystem {
  std::size_t degree = 0;
  std::vector<std::vector<std::size_t>> blocks;  // sorted cells, ordered by least point

  std::size_t block_size() const { return blocks.empty() ? 0 : blocks.front().size(); }

  std::string to_string() const {
    std::string out = "{";
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (b) out += ",";
      out += "{";
      for (std::size_t i = 0; i < blocks[b].size(); ++i) {
        if (i) out += ",";
        out += std::to_string(blocks[b][i] + 1);
      }
      out += "}";
    }
    return out + "}";
  }

  friend bool operator==(const BlockSystem&, const BlockSystem&) = default;
};

namespace detail {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent[b] = a;
    return true;
  }
};

}  // namespace detail

/// Finest G-invariant partition in which a and b share a cell (pair closure).
inline BlockSystem minimal_block_containing(const PermGroup& g, std::size_t a, std::size_t b) {
  const auto n = g.degree();
  detail::UnionFind uf(n);
  std::vector<std::pair<std::size_t, std::size_t>> pending{{a, b}};
  uf.unite(a, b);
  while (!pending.empty()) {
    auto [x, y] = pending.back();
    pending.pop_back();
    for (const auto& s : g.generators()) {
      const auto sx = s[x], sy = s[y];
      if (uf.unite(sx, sy)) pending.emplace_back(sx, sy);
    }
  }
  std::vector<std::vector<std::size_t>> cells(n);
  for (std::size_t p = 0; p < n; ++p) cells[uf.find(p)].push_back(p);
  BlockSystem sys{n, {}};
  for (auto& c : cells)
    if (!c.empty()) sys.blocks.push_back(std::move(c));
  return sys;
}

/// All minimal nontrivial block systems of a group (transitive or not: the
/// pair closure is computed for pairs {0, b}; only results with equal-size
/// cells strictly between 1 and n are kept).
inline std::vector<BlockSystem> block_systems(const PermGroup& g) {
  const auto n = g.degree();
  std::vector<BlockSystem> found;
  for (std::size_t b = 1; b < n; ++b) {
    auto sys = minimal_block_containing(g, 0, b);
    if (sys.blocks.size() <= 1) continue;
    const auto d = sys.blocks.front().size();
    const bool equal = std::all_of(sys.blocks.begin(), sys.blocks.end(),
                                   [&](const auto& c) { return c.size() == d; });
    if (!equal) continue;
    if (std::find(found.begin(), found.end(), sys) == found.end()) found.push_back(std::move(sys));
  }
  // Keep the systems whose block through 0 is minimal under inclusion.
  std::vector<BlockSystem> minimal;
  for (const auto& s : found) {
    const auto& cell = s.blocks.front();
    bool is_minimal = true;
    for (const auto& t : found) {
      const auto& other = t.blocks.front();
      if (other.size() < cell.size() &&
          std::includes(cell.begin(), cell.end(), other.begin(), other.end())) {
        is_minimal = false;
        break;
      }
    }
    if (is_minimal) minimal.push_back(s);
  }
  return minimal;
}

inline bool is_primitive(const PermGroup& g) {
  if (!is_transitive(g)) throw PreconditionError("primitivity is defined for transitive groups");
  return block_systems(g).empty();
}

enum class Lemma37Verdict { primitive_by_lemma, inconclusive };

namespace detail {

inline std::vector<std::uint64_t> prime_divisors(std::uint64_t m) {
  std::vector<std::uint64_t> ps;
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    ps.push_back(p);
    while (m % p == 0) m /= p;
  }
  if (m > 1) ps.push_back(m);
  return ps;
}

}  // namespace detail

/// Sufficient primitivity criterion: a transitive group of degree n whose order
/// has a prime divisor p > n / n0, with n0 the least nontrivial divisor of n.
inline Lemma37Verdict lemma37_primitive(const PermGroup& g) {
  if (!is_transitive(g)) throw PreconditionError("criterion requires a transitive group");
  const auto n = g.degree();
  if (n < 2) return Lemma37Verdict::inconclusive;
  std::size_t n0 = n;
  for (std::size_t d = 2; d <= n; ++d)
    if (n % d == 0) {
      n0 = d;
      break;
    }
  for (auto p : detail::prime_divisors(g.order()))
    if (p * n0 > n) return Lemma37Verdict::primitive_by_lemma;
  return Lemma37Verdict::inconclusive;
}

// ---------------------------------------------------------------------------
// Standard builders.

inline PermGroup symmetric_group(std::size_t n) {
  std::vector<Permutation> gens;
  if (n >= 2) {
    gens.push_back(Permutation::from_cycles(n, {{0, 1}}));
    std::vector<std::size_t> c(n);
    std::iota(c.begin(), c.end(), std::size_t{0});
    gens.push_back(Permutation::from_cycles(n, {c}));
  }
  return PermGroup(n, std::move(gens));
}

inline PermGroup alternating_group(std::size_t n) {
  std::vector<Permutation> gens;
  for (std::size_t i = 0; i + 2 < n; ++i) gens.push_back(Permutation::from_cycles(n, {{i, i + 1, i + 2}}));
  return PermGroup(n, std::move(gens));
}

/// Full symmetric group on a point set (transposition + cycle), as permutations of degree n.
inline std::vector<Permutation> symmetric_generators_on(std::size_t n, const std::vector<std::size_t>& cell) {
  std::vector<Permutation> gens;
  if (cell.size() >= 2) {
    gens.push_back(Permutation::from_cycles(n, {{cell[0], cell[1]}}));
    if (cell.size() >= 3) gens.push_back(Permutation::from_cycles(n, {cell}));
  }
  return gens;
}

inline std::vector<Permutation> alternating_generators_on(std::size_t n, const std::vector<std::size_t>& cell) {
  std::vector<Permutation> gens;
  for (std::size_t i = 0; i + 2 < cell.size(); ++i)
    gens.push_back(Permutation::from_cycles(n, {{cell[i], cell[i + 1], cell[i + 2]}}));
  return gens;
}

/// Direct product of the symmetric groups on pairwise disjoint cells (0-based).
inline PermGroup young_subgroup(std::size_t n, const std::vector<std::vector<std::size_t>>& cells) {
  std::vector<bool> used(n, false);
  std::vector<Permutation> gens;
  for (const auto& cell : cells) {
    for (auto p : cell) {
      if (p >= n) throw PreconditionError("point out of range in Young cell");
      if (used[p]) throw PreconditionError("Young cells are not disjoint");
      used[p] = true;
    }
    auto g = symmetric_generators_on(n, cell);
    gens.insert(gens.end(), g.begin(), g.end());
  }
  return PermGroup(n, std::move(gens));
}

/// Sym(d) wr Sym(m) acting imprimitively on d*m points with blocks of d consecutive points.
inline PermGroup wreath_imprimitive(std::size_t d, std::size_t m) {
  if (d == 0 || m == 0) throw PreconditionError("wreath parameters must be positive");
  const auto n = d * m;
  std::vector<std::size_t> first(d);
  std::iota(first.begin(), first.end(), std::size_t{0});
  auto gens = symmetric_generators_on(n, first);
  if (m >= 2) {
    std::vector<std::vector<std::size_t>> swap_cycles, shift_cycles;
    for (std::size_t i = 0; i < d; ++i) {
      swap_cycles.push_back({i, d + i});
      std::vector<std::size_t> c;
      for (std::size_t b = 0; b < m; ++b) c.push_back(b * d + i);
      shift_cycles.push_back(c);
    }
    gens.push_back(Permutation::from_cycles(n, swap_cycles));
    if (m >= 3) gens.push_back(Permutation::from_cycles(n, shift_cycles));
  }
  return PermGroup(n, std::move(gens));
}

/// H ∩ Alt(n), via Schreier generators for the transversal {1, t} with t an odd generator.
inline PermGroup intersect_with_alternating(const PermGroup& h) {
  const Permutation* odd = nullptr;
  for (const auto& g : h.generators())
    if (!g.is_even()) {
      odd = &g;
      break;
    }
  if (!odd) return h;
  const auto t = *odd;
  const auto t_inv = inverse(t);
  std::vector<Permutation> gens{compose(t, t)};
  for (const auto& s : h.generators()) {
    if (s.is_even()) {
      gens.push_back(s);
      gens.push_back(compose(compose(t, s), t_inv));
    } else {
      gens.push_back(compose(s, t_inv));
      gens.push_back(compose(t, s));
    }
  }
  return PermGroup(h.degree(), std::move(gens));
}

/// Stabilizer of point i, read off a chain whose base starts at i.
inline PermGroup point_stabilizer(const PermGroup& g, std::size_t point) {
  if (point >= g.degree()) throw PreconditionError("point out of range");
  std::vector<std::size_t> base{point};
  for (std::size_t p = 0; p < g.degree(); ++p)
    if (p != point) base.push_back(p);
  base.pop_back();
  const PermGroup rebased(g.degree(), g.generators(), base);
  if (rebased.chain().size() < 2) return PermGroup(g.degree());
  return PermGroup(g.degree(), rebased.chain()[1].strong_generators);
}

/// Default limit on explicit element scans.
inline constexpr std::uint64_t kElementScanBound = 10'000'000;

/// Elements of the smaller group that lie in the larger one.
inline PermGroup intersect(const PermGroup& a, const PermGroup& b) {
  if (a.degree() != b.degree()) throw DegreeMismatch("intersection of groups of different degree");
  const PermGroup& small = a.order() <= b.order() ? a : b;
  const PermGroup& large = a.order() <= b.order() ? b : a;
  if (large.contains_group(small)) return small;
  if (small.order() > kElementScanBound) throw BoundExceeded("intersection scan bound exceeded");
  GroupBuilder builder(a.degree());
  small.for_each_element([&](const Permutation& x) {
    if (large.contains(x) && !builder.group().contains(x)) builder.add(x);
  });
  return builder.group();
}

/// Setwise stabilizer of a point set (0-based).
inline PermGroup setwise_stabilizer(const PermGroup& g, const std::vector<std::size_t>& set) {
  const auto n = g.degree();
  std::vector<bool> in(n, false);
  for (auto p : set) {
    if (p >= n) throw PreconditionError("point out of range");
    in[p] = true;
  }
  std::vector<std::size_t> rest;
  std::vector<std::size_t> cell;
  for (std::size_t p = 0; p < n; ++p) (in[p] ? cell : rest).push_back(p);
  return intersect(g, young_subgroup(n, {cell, rest}));
}

/// Bound on candidate conjugators scanned by normalizer_of_cyclic.
inline constexpr std::uint64_t kNormalizerScanBound = 1'000'000;

namespace detail {

// Elements of the S_n-centralizer of x: rotations of each cycle times
// permutations of equal-length cycles. Calls visit(c) for each.
template <class F>
void for_each_symmetric_centralizer_element(const Permutation& x, F&& visit) {
  const auto n = x.degree();
  // Cycles (incl. fixed points) grouped by length.
  std::vector<std::vector<std::size_t>> cs;
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    std::vector<std::size_t> c;
    for (std::size_t j = i; !seen[j]; j = x[j]) {
      seen[j] = true;
      c.push_back(j);
    }
    cs.push_back(std::move(c));
  }
  std::stable_sort(cs.begin(), cs.end(), [](const auto& a, const auto& b) { return a.size() > b.size(); });
  // Each cycle k is sent to cycle target[k] (same length) with rotation rot[k].
  const auto m = cs.size();
  std::vector<std::size_t> target(m);
  std::vector<std::size_t> rot(m, 0);
  std::vector<bool> taken(m, false);
  std::vector<std::size_t> images(n);
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == m) {
      for (std::size_t c = 0; c < m; ++c) {
        const auto& src = cs[c];
        const auto& dst = cs[target[c]];
        for (std::size_t j = 0; j < src.size(); ++j) images[src[j]] = dst[(j + rot[c]) % dst.size()];
      }
      visit(Permutation::from_images(std::span<const std::size_t>(images)));
      return;
    }
    for (std::size_t t = 0; t < m; ++t) {
      if (taken[t] || cs[t].size() != cs[k].size()) continue;
      taken[t] = true;
      target[k] = t;
      for (std::size_t r = 0; r < cs[k].size(); ++r) {
        rot[k] = r;
        rec(k + 1);
      }
      taken[t] = false;
    }
  };
  rec(0);
}

inline std::uint64_t symmetric_centralizer_size(const Permutation& x) {
  std::vector<std::size_t> mult(x.degree() + 1, 0);
  const auto type = x.cycle_type();
  for (auto l : type.parts()) ++mult[l];
  std::uint64_t r = 1;
  for (std::size_t l = 1; l <= x.degree(); ++l)
    for (std::size_t i = 1; i <= mult[l]; ++i) r *= l * i;
  return r;
}

}  // namespace detail

/// N_G(<sigma>). Scans all S_n-conjugators carrying sigma to a generator of
/// <sigma> and keeps those in G; refuses when that candidate set exceeds the bound.
inline PermGroup normalizer_of_cyclic(const PermGroup& g, const Permutation& sigma,
                                      std::uint64_t bound = kNormalizerScanBound) {
  if (!g.contains(sigma)) throw PreconditionError("sigma " + sigma.to_string() + " is not in G");
  const auto ord = sigma.order();
  std::vector<long long> exps;
  for (std::uint64_t k = 1; k <= ord; ++k)
    if (std::gcd(k, ord) == 1) exps.push_back(static_cast<long long>(k));
  const auto csize = detail::symmetric_centralizer_size(sigma);
  if (csize > bound / exps.size())
    throw BoundExceeded("normalizer scan needs " + std::to_string(csize * exps.size()) +
                        " candidates, bound is " + std::to_string(bound));
  GroupBuilder builder(PermGroup(g.degree(), {sigma}));
  for (auto k : exps) {
    const auto target = sigma.pow(k);
    const auto c0 = canonical_conjugator(sigma, target);
    detail::for_each_symmetric_centralizer_element(sigma, [&](const Permutation& c) {
      const auto cand = compose(c, c0);
      if (!builder.group().contains(cand) && g.contains(cand)) builder.add(cand);
    });
  }
  return builder.group();
}

}  // namespace covlab
