#pragma once

// Small groups for the FW and (*)-covering property suites.

#include <random>
#include <vector>

#include "covlab/recipe.hpp"
#include "oracle.hpp"

namespace corpus {

using covlab::Permutation;
using covlab::PermGroup;

/// x -> a x + b over GF(p), with a in the subgroup of order d of GF(p)*.
inline PermGroup affine_subgroup(std::size_t p, std::size_t d) {
  std::size_t root = 2;
  for (;; ++root) {
    std::size_t x = 1, ord = 0;
    do {
      x = x * root % p;
      ++ord;
    } while (x != 1);
    if (ord == p - 1) break;
  }
  std::size_t a = 1;
  for (std::size_t i = 0; i < (p - 1) / d; ++i) a = a * root % p;
  std::vector<std::size_t> shift(p), scale(p);
  for (std::size_t x = 0; x < p; ++x) {
    shift[x] = (x + 1) % p;
    scale[x] = a * x % p;
  }
  return PermGroup(p, {Permutation::from_images(std::span<const std::size_t>(shift)),
                       Permutation::from_images(std::span<const std::size_t>(scale))});
}

/// G x C_m with C_m on m extra points. Stays FW with H and N multiplied by C_m.
inline PermGroup with_cyclic_factor(const PermGroup& g, std::size_t m) {
  const auto n = g.degree() + m;
  std::vector<Permutation> gens;
  for (const auto& x : g.generators()) {
    auto im = x.images();
    for (std::size_t i = g.degree(); i < n; ++i) im.push_back(i);
    gens.push_back(Permutation::from_images(std::span<const std::size_t>(im)));
  }
  std::vector<std::size_t> cycle;
  for (std::size_t i = g.degree(); i < n; ++i) cycle.push_back(i);
  gens.push_back(Permutation::from_cycles(n, {cycle}));
  return PermGroup(n, gens);
}

/// Named Frobenius-type groups, affine subgroups over GF(p) for the listed
/// primes with cyclic-factor products, and random small groups up to `total`.
inline std::vector<PermGroup> fw_rich_groups(std::mt19937& rng, std::initializer_list<std::size_t> primes,
                                             std::size_t total) {
  std::vector<PermGroup> groups;
  for (const char* name : {"S3", "A4", "S4", "D10", "D14", "F20", "F21", "F42", "D12", "SL(2,3)", "D18", "D22"})
    groups.push_back(covlab::resolve_recipe(name).group);
  for (std::size_t p : primes)
    for (std::size_t d = 2; d < p; ++d)
      if ((p - 1) % d == 0) {
        const auto f = affine_subgroup(p, d);
        groups.push_back(f);
        for (std::size_t m : {2, 3, 4}) groups.push_back(with_cyclic_factor(f, m));
      }
  for (int trial = 0; trial < 2000 && groups.size() < total; ++trial) {
    const auto g = oracle::random_subgroup(rng, 3 + trial % 4);
    if (g.order() >= 6 && g.order() <= 200) groups.push_back(g);
  }
  return groups;
}

}  // namespace corpus
