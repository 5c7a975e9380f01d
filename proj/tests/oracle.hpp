#pragma once

// Brute-force reference computations on plain image vectors. Nothing here
// uses the library's chains, tables or class machinery; only conversion
// helpers touch library types.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "covlab/perm.hpp"
#include "covlab/perm_group.hpp"

namespace oracle {

using P = std::vector<int>;  // 0-based images
using Set = std::set<P>;

inline P identity(int n) {
  P p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  return p;
}

// a first, then b.
inline P mul(const P& a, const P& b) {
  P r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[a[i]];
  return r;
}

inline P inv(const P& a) {
  P r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[a[i]] = static_cast<int>(i);
  return r;
}

inline P conj(const P& x, const P& g) { return mul(mul(inv(g), x), g); }

inline P from(const covlab::Permutation& x) {
  P p(x.degree());
  for (std::size_t i = 0; i < x.degree(); ++i) p[i] = static_cast<int>(x[i]);
  return p;
}

inline covlab::Permutation to(const P& p) {
  std::vector<std::size_t> im(p.begin(), p.end());
  return covlab::Permutation::from_images(std::span<const std::size_t>(im));
}

/// Breadth-first closure of a generating set.
inline Set closure(int n, const std::vector<P>& gens) {
  Set seen{identity(n)};
  std::vector<P> frontier{identity(n)};
  while (!frontier.empty()) {
    std::vector<P> next;
    for (const auto& x : frontier)
      for (const auto& g : gens) {
        auto y = mul(x, g);
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    frontier = std::move(next);
  }
  return seen;
}

inline Set elements(const covlab::PermGroup& g) {
  std::vector<P> gens;
  for (const auto& x : g.generators()) gens.push_back(from(x));
  return closure(static_cast<int>(g.degree()), gens);
}

inline Set symmetric(int n) {
  P p = identity(n);
  Set s;
  do s.insert(p);
  while (std::next_permutation(p.begin(), p.end()));
  return s;
}

/// Parity by inversion count.
inline bool is_even(const P& p) {
  int inv_count = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inv_count;
  return inv_count % 2 == 0;
}

inline Set alternating(int n) {
  Set s;
  for (const auto& p : symmetric(n))
    if (is_even(p)) s.insert(p);
  return s;
}

/// Cycle lengths (fixed points included), non-increasing.
inline std::vector<int> cycle_type(const P& p) {
  std::vector<bool> seen(p.size(), false);
  std::vector<int> out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) {
      seen[j] = true;
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

/// Conjugacy classes of a group given by its element set.
inline std::vector<Set> conjugacy_classes(const Set& g) {
  std::vector<Set> out;
  Set done;
  for (const auto& x : g) {
    if (done.count(x)) continue;
    Set c;
    for (const auto& y : g) c.insert(conj(x, y));
    done.insert(c.begin(), c.end());
    out.push_back(std::move(c));
  }
  return out;
}

inline std::size_t centralizer_order(const P& x, const Set& g) {
  std::size_t c = 0;
  for (const auto& y : g)
    if (mul(x, y) == mul(y, x)) ++c;
  return c;
}

inline Set conjugate_set(const Set& h, const P& g) {
  Set out;
  for (const auto& x : h) out.insert(conj(x, g));
  return out;
}

/// Union of all G-conjugates of the listed subgroups.
inline Set conjugate_union(const Set& g, const std::vector<Set>& subgroups) {
  Set u;
  for (const auto& h : subgroups)
    for (const auto& x : g) {
      auto c = conjugate_set(h, x);
      u.insert(c.begin(), c.end());
    }
  return u;
}

inline bool covers_star_star(const Set& g, const Set& h, const Set& k) {
  return conjugate_union(g, {h, k}).size() == g.size();
}

inline bool covers_star(const Set& g, const Set& h, const Set& k) {
  auto u = conjugate_union(g, {h});
  u.insert(k.begin(), k.end());
  return u.size() == g.size();
}

inline bool is_subgroup_set(const Set& s) {
  for (const auto& a : s)
    for (const auto& b : s)
      if (!s.count(mul(a, b))) return false;
  return !s.empty();
}

/// Every subgroup, as element sets: cyclic subgroups closed under joins.
inline std::vector<Set> all_subgroups(const Set& g) {
  const int n = static_cast<int>(g.begin()->size());
  std::set<Set> found;
  std::vector<Set> cyclic;
  for (const auto& x : g) {
    auto c = closure(n, {x});
    if (found.insert(c).second) cyclic.push_back(c);
  }
  std::vector<Set> work(found.begin(), found.end());
  for (std::size_t i = 0; i < work.size(); ++i)
    for (const auto& c : cyclic) {
      if (std::includes(work[i].begin(), work[i].end(), c.begin(), c.end())) continue;
      std::vector<P> gens(work[i].begin(), work[i].end());
      gens.insert(gens.end(), c.begin(), c.end());
      auto j = closure(n, gens);
      if (found.insert(j).second) work.push_back(std::move(j));
    }
  return std::vector<Set>(found.begin(), found.end());
}

/// Subgroups grouped into G-conjugacy classes.
inline std::vector<std::vector<Set>> subgroup_classes(const Set& g, const std::vector<Set>& subgroups) {
  std::vector<std::vector<Set>> out;
  std::set<Set> done;
  for (const auto& h : subgroups) {
    if (done.count(h)) continue;
    std::set<Set> cls;
    for (const auto& x : g) cls.insert(conjugate_set(h, x));
    done.insert(cls.begin(), cls.end());
    out.emplace_back(cls.begin(), cls.end());
  }
  return out;
}

/// Imprimitivity by growing the block of {0, b} under all elements.
inline bool has_nontrivial_block(const Set& g, int n) {
  for (int b = 1; b < n; ++b) {
    std::set<int> block{0, b};
    bool changed = true;
    while (changed && static_cast<int>(block.size()) < n) {
      changed = false;
      for (const auto& x : g) {
        std::set<int> img;
        for (int p : block) img.insert(x[p]);
        if (img == block) continue;
        bool meets = false;
        for (int p : img)
          if (block.count(p)) meets = true;
        if (meets) {
          block.insert(img.begin(), img.end());
          changed = true;
        }
      }
    }
    if (static_cast<int>(block.size()) < n) return true;
  }
  return false;
}

inline bool transitive(const Set& g, int n) {
  std::set<int> orbit;
  for (const auto& x : g) orbit.insert(x[0]);
  return static_cast<int>(orbit.size()) == n;
}

/// Random permutation of degree n.
inline P random_perm(std::mt19937& rng, int n) {
  P p = identity(n);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

/// Group generated by one or two random elements of S_n (or A_n when `even`).
inline covlab::PermGroup random_subgroup(std::mt19937& rng, int n, bool even = false, int max_gens = 2) {
  std::uniform_int_distribution<int> count(1, max_gens);
  std::vector<covlab::Permutation> gens;
  const int k = count(rng);
  while (static_cast<int>(gens.size()) < k) {
    auto p = random_perm(rng, n);
    if (even && !is_even(p)) continue;
    gens.push_back(to(p));
  }
  return covlab::PermGroup(static_cast<std::size_t>(n), gens);
}

}  // namespace oracle
