#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "covlab/classical.hpp"
#include "covlab/conjugacy.hpp"
#include "covlab/error.hpp"
#include "covlab/lattice.hpp"
#include "covlab/perm_group.hpp"

namespace covlab {

/// A catalogued subgroup: generators plus the order it must have.
struct CatalogEntry {
  std::string label;
  PermGroup group;
  std::uint64_t expected_order = 0;
  std::string provenance_note;
};

namespace detail {

inline std::vector<std::size_t> point_range(std::size_t from, std::size_t to) {
  std::vector<std::size_t> r(to - from);
  std::iota(r.begin(), r.end(), from);
  return r;
}

inline std::uint64_t factorial(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

// S_a x S_b on {0..a-1} and {a..a+b-1}.
inline PermGroup intransitive_young(std::size_t a, std::size_t b) {
  return young_subgroup(a + b, {point_range(0, a), point_range(a, a + b)});
}

inline PermGroup on_first_points(std::size_t n, std::size_t m, bool alternating) {
  const auto cell = point_range(0, m);
  return PermGroup(n, alternating ? alternating_generators_on(n, cell) : symmetric_generators_on(n, cell));
}

inline const char* kClassicalNote = "classical list of maximal subgroups of symmetric and alternating groups";

inline std::vector<CatalogEntry> symmetric_catalog(std::size_t n) {
  using detail::factorial;
  std::vector<CatalogEntry> c;
  const std::string note = kClassicalNote;
  if (n >= 2) c.push_back({"A" + std::to_string(n), alternating_group(n), factorial(n) / 2, note});
  // Intransitive S_{n-k} x S_k with k < n/2 (k = 1 is the point stabilizer).
  for (std::size_t k = 1; 2 * k < n; ++k) {
    const auto label = k == 1 ? "S" + std::to_string(n - 1)
                              : "S" + std::to_string(n - k) + " x S" + std::to_string(k);
    c.push_back({label, intransitive_young(n - k, k), factorial(n - k) * factorial(k), note});
  }
  // Imprimitive wreath products S_d wr S_m, d*m = n, 1 < d < n.
  for (std::size_t d = n - 1; d >= 2; --d) {
    if (n % d != 0) continue;
    const auto m = n / d;
    std::uint64_t ord = factorial(m);
    for (std::size_t i = 0; i < m; ++i) ord *= factorial(d);
    c.push_back({"S" + std::to_string(d) + " wr S" + std::to_string(m), wreath_imprimitive(d, m), ord, note});
  }
  // Primitive, not containing A_n.
  switch (n) {
    case 5: c.push_back({"AGL(1,5)", affine_line_group(5), 20, note}); break;
    case 6: c.push_back({"PGL(2,5)", projective_line_group(5, false), 120, note}); break;
    case 7: c.push_back({"AGL(1,7)", affine_line_group(7), 42, note}); break;
    case 8: c.push_back({"PGL(2,7)", projective_line_group(7, false), 336, note}); break;
    case 9: c.push_back({"AGL(2,3)", affine_plane_group_gf3(), 432, note}); break;
    case 10: c.push_back({"PGammaL(2,9)", projective_line_group(9, true), 1440, note}); break;
    default: break;
  }
  return c;
}

inline CatalogEntry even_part(const CatalogEntry& e, std::size_t n) {
  auto g = intersect_with_alternating(e.group);
  const bool has_odd = g.order() != e.group.order();
  const auto base = e.label.find(' ') == std::string::npos ? e.label : "(" + e.label + ")";
  return {base + " ∩ A" + std::to_string(n), std::move(g), has_odd ? e.expected_order / 2 : e.expected_order,
          e.provenance_note};
}

inline CatalogEntry conjugate_by_transposition(const CatalogEntry& e) {
  return {e.label + "^(1 2)", conjugate_group(e.group, Permutation::from_cycles(e.group.degree(), {{0, 1}})),
          e.expected_order, e.provenance_note + "; second class, conjugate under an odd permutation"};
}

inline std::vector<CatalogEntry> alternating_catalog(std::size_t n) {
  using detail::factorial;
  std::vector<CatalogEntry> c;
  const std::string note = kClassicalNote;
  auto young = [&](std::size_t k) { return even_part({"S" + std::to_string(n - k) + " x S" + std::to_string(k),
                                                      intransitive_young(n - k, k),
                                                      factorial(n - k) * factorial(k), note}, n); };
  auto wreath = [&](std::size_t d, std::size_t m) {
    std::uint64_t ord = factorial(m);
    for (std::size_t i = 0; i < m; ++i) ord *= factorial(d);
    return even_part({"S" + std::to_string(d) + " wr S" + std::to_string(m), wreath_imprimitive(d, m), ord, note}, n);
  };
  switch (n) {
    case 3: c.push_back({"1", PermGroup(3), 1, note}); break;
    case 4:
      c.push_back({"A3", on_first_points(4, 3, true), 3, note});
      c.push_back({"V4", group_from_strings(4, {"(1 2)(3 4)", "(1 3)(2 4)"}), 4, note});
      break;
    case 5:
      c.push_back({"A4", on_first_points(5, 4, true), 12, note});
      c.push_back({"D10", intersect_with_alternating(affine_line_group(5)), 10, note});
      c.push_back(young(2));
      break;
    case 6:
      c.push_back({"A5", on_first_points(6, 5, true), 60, note});
      c.push_back({"PSL(2,5)", intersect_with_alternating(projective_line_group(5, false)), 60, note});
      c.push_back(wreath(3, 2));
      c.push_back(young(2));
      c.push_back(wreath(2, 3));
      break;
    case 7: {
      c.push_back({"A6", on_first_points(7, 6, true), 360, note});
      CatalogEntry l27{"PSL(2,7)", linear_group_gf2_3_on_7(), 168, note};
      c.push_back(l27);
      c.push_back(conjugate_by_transposition(l27));
      c.push_back(young(2));
      c.push_back(young(3));
      break;
    }
    case 8: {
      c.push_back({"A7", on_first_points(8, 7, true), 2520, note});
      CatalogEntry agl{"AGL(3,2)", affine_group_gf2_3(), 1344, note};
      c.push_back(agl);
      c.push_back(conjugate_by_transposition(agl));
      c.push_back(young(2));
      c.push_back(young(3));
      c.push_back(wreath(4, 2));
      break;
    }
    case 9: {
      c.push_back({"A8", on_first_points(9, 8, true), 20160, note});
      c.push_back(young(2));
      c.push_back(young(3));
      c.push_back(young(4));
      c.push_back(wreath(3, 3));
      CatalogEntry pgl{"PGammaL(2,8)", projective_line_group(8, true), 1512, note};
      c.push_back(pgl);
      c.push_back(conjugate_by_transposition(pgl));
      c.push_back(even_part({"AGL(2,3)", affine_plane_group_gf3(), 432, note}, 9));
      break;
    }
    case 10:
      c.push_back({"A9", on_first_points(10, 9, true), 181440, note});
      c.push_back(young(2));
      c.push_back(young(3));
      c.push_back(young(4));
      c.push_back(wreath(5, 2));
      c.push_back(wreath(2, 5));
      c.push_back(even_part({"PGammaL(2,9)", projective_line_group(9, true), 1440, note}, 10));
      break;
    default: break;
  }
  return c;
}

}  // namespace detail

inline constexpr std::size_t kCatalogMaxDegree = 10;

/// Raw catalog entries (unvalidated) for S_n or A_n, n <= 10.
inline std::vector<CatalogEntry> catalog_entries(const Ambient& ambient) {
  if (ambient.n > kCatalogMaxDegree)
    throw PreconditionError("no maximal-subgroup catalog for degree " + std::to_string(ambient.n));
  if (ambient.order() <= 1) return {};
  return ambient.is_alternating() ? detail::alternating_catalog(ambient.n) : detail::symmetric_catalog(ambient.n);
}

/// Checks each entry is a proper subgroup of the ambient with the catalogued order.
inline void validate_catalog(const Ambient& ambient, const std::vector<CatalogEntry>& entries) {
  for (const auto& e : entries) {
    if (e.group.degree() != ambient.n)
      throw ConsistencyError("catalog entry " + e.label + " has the wrong degree");
    for (const auto& g : e.group.generators())
      if (!ambient.contains(g))
        throw ConsistencyError("catalog entry " + e.label + " is not a subgroup of " + ambient.label());
    if (e.group.order() != e.expected_order)
      throw ConsistencyError("catalog entry " + e.label + " has order " + std::to_string(e.group.order()) +
                             ", expected " + std::to_string(e.expected_order));
    if (e.group.order() >= ambient.order())
      throw ConsistencyError("catalog entry " + e.label + " is not proper");
  }
}

inline SubgroupClassList catalog_list(const Ambient& ambient, const std::vector<CatalogEntry>& entries,
                                      const std::string& name) {
  validate_catalog(ambient, entries);
  SubgroupClassList out{ambient.label(), ambient.group(), {}, Completeness::assumed_catalog};
  for (const auto& e : entries) out.classes.push_back({e.group, e.label, "catalog(" + name + ")", true});
  return out;
}

/// Maximal-subgroup classes of S_n / A_n (n <= 10) from the built-in catalog.
inline SubgroupClassList catalog_subgroups(const Ambient& ambient) {
  return catalog_list(ambient, catalog_entries(ambient), "builtin-" + ambient.label());
}

}  // namespace covlab
