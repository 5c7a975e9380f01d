#pragma once

#include <optional>
#include <string>
#include <vector>

#include "covlab/catalog.hpp"
#include "covlab/classical.hpp"
#include "covlab/conjugacy.hpp"
#include "covlab/covering.hpp"
#include "covlab/fw.hpp"
#include "covlab/perm_group.hpp"

namespace covlab {

/// A known covering {H^g, K} or {H^g, K^g} with the groups already built.
struct NamedConstruction {
  std::string label;          // "star2/A7"
  std::string ambient_label;  // "A7"
  PermGroup group;
  std::optional<Ambient> ambient;  // set for (**) entries
  PermGroup h;
  PermGroup k;
  std::string h_label;
  std::string k_label;
  CoveringKind kind = CoveringKind::star_star;
  std::string claim;  // what the entry demonstrates

  CoveringReport verify() const {
    if (kind == CoveringKind::star) return check_star(group, h, k, ambient_label, h_label, k_label);
    return check_star_star(*ambient, h, k, h_label, k_label);
  }
};

namespace detail {

inline PermGroup from_cycles_text(std::size_t n, std::initializer_list<const char*> gens) {
  std::vector<std::string> g(gens.begin(), gens.end());
  return group_from_strings(n, g);
}

inline NamedConstruction star_from_fw(std::string label, const PermGroup& g, const PermGroup& h,
                                      const PermGroup& n, std::string ambient_label, std::string h_label,
                                      std::string claim) {
  const auto w = fw_kernel(g, h, n);
  if (!w.checks.all()) throw ConsistencyError(label + ": kernel checks failed");
  return {std::move(label), std::move(ambient_label), g, std::nullopt, h, w.kernel, std::move(h_label),
          "kernel", CoveringKind::star, std::move(claim)};
}

inline NamedConstruction star2(std::string label, const Ambient& a, PermGroup h, PermGroup k, std::string h_label,
                               std::string k_label, std::string claim) {
  return {std::move(label), a.label(), a.group(), a, std::move(h), std::move(k), std::move(h_label),
          std::move(k_label), CoveringKind::star_star, std::move(claim)};
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Individual builders.

inline NamedConstruction star_s3() {
  return detail::star_from_fw("star/S3", symmetric_group(3), detail::from_cycles_text(3, {"(1 2)"}), PermGroup(3),
                              "S3", "<(1 2)>", "S3 is (*)-coverable: Frobenius complement and kernel");
}

inline NamedConstruction star_a4() {
  return detail::star_from_fw("star/A4", alternating_group(4), detail::from_cycles_text(4, {"(1 2 3)"}),
                              PermGroup(4), "A4", "<(1 2 3)>", "A4 is (*)-coverable: Frobenius complement and kernel");
}

/// D8 with N = V4: the Frobenius quotient S4/V4 = S3 pulled back.
inline NamedConstruction star_s4() {
  return detail::star_from_fw("star/S4", symmetric_group(4), detail::from_cycles_text(4, {"(1 2 3 4)", "(1 3)"}),
                              detail::from_cycles_text(4, {"(1 2)(3 4)", "(1 3)(2 4)"}), "S4", "D8",
                              "S4 is (*)-coverable via its Frobenius quotient S3");
}

/// H1 = stabilizer of {1,2}; K1 = normalizer of <(1 2 3 4 5)>.
inline PermGroup s5_h1() { return setwise_stabilizer(symmetric_group(5), {0, 1}); }
inline PermGroup s5_k1() {
  return normalizer_of_cyclic(symmetric_group(5), parse_perm("(1 2 3 4 5)", 5));
}

/// H2 = stabilizer of the partition {1,2,3},{4,5,6}; K2 = stabilizer of 6.
inline PermGroup s6_h2() { return wreath_imprimitive(3, 2); }
inline PermGroup s6_k2() { return point_stabilizer(symmetric_group(6), 5); }

inline NamedConstruction star2_s5() {
  return detail::star2("star2/S5", Ambient::symmetric(5), s5_h1(), s5_k1(), "S2 x S3", "AGL(1,5)",
                       "S5 is (**)-coverable by a 2-set stabilizer and a 5-cycle normalizer");
}

inline NamedConstruction star2_s6() {
  return detail::star2("star2/S6", Ambient::symmetric(6), s6_h2(), s6_k2(), "S3 wr S2", "S5",
                       "S6 is (**)-coverable by a partition stabilizer and a point stabilizer");
}

inline NamedConstruction star2_a5() {
  return detail::star2("star2/A5", Ambient::alternating(5), point_stabilizer(alternating_group(5), 4),
                       detail::from_cycles_text(5, {"(1 2 3 4 5)"}), "A4", "C5",
                       "A5 is covered by conjugates of A4 and of a Sylow 5-subgroup");
}

namespace detail {

inline NamedConstruction by_intersection(std::string label, std::size_t n, const PermGroup& h, const PermGroup& k,
                                         const std::string& h_label, const std::string& k_label, std::string claim) {
  const auto report = intersection_covering(Ambient::symmetric(n), h, k, Ambient::alternating(n));
  if (!report.verdict) throw ConsistencyError(label + ": intersection is not a covering");
  return star2(std::move(label), Ambient::alternating(n), report.components[0].group, report.components[1].group,
               "(" + h_label + ") ∩ A" + std::to_string(n), "(" + k_label + ") ∩ A" + std::to_string(n),
               std::move(claim));
}

}  // namespace detail

inline NamedConstruction star2_a5_alt() {
  return detail::by_intersection("star2/A5-alt", 5, s5_h1(), s5_k1(), "S2 x S3", "AGL(1,5)",
                                 "the S5 covering restricts to A5");
}

inline NamedConstruction star2_a6() {
  return detail::by_intersection("star2/A6", 6, s6_h2(), s6_k2(), "S3 wr S2", "S5", "the S6 covering restricts to A6");
}

inline NamedConstruction star2_a6_alt() {
  const std::vector<std::size_t> cell{1, 2, 3, 4, 5};
  return detail::star2("star2/A6-alt", Ambient::alternating(6), PermGroup(6, alternating_generators_on(6, cell)),
                       detail::from_cycles_text(6, {"(1 4)(2 3 5 6)", "(1 5)(2 4)"}), "Alt{2..6}", "S4",
                       "A6 is covered by conjugates of Alt{2..6} and of a transitive S4");
}

/// Lexicographically least 6-cycle mu with sigma^mu = sigma^3, sigma = (1 2 3 4 5 6 7).
inline Permutation a7_mu() {
  const auto sigma = parse_perm("(1 2 3 4 5 6 7)", 7);
  const auto target = sigma.pow(3);
  std::optional<Permutation> best;
  normalizer_of_cyclic(symmetric_group(7), sigma).for_each_element([&](const Permutation& x) {
    if (conjugate(sigma, x) != target) return true;
    const auto t = x.cycle_type();
    if (t.parts().front() != 6) return true;
    best = x;
    return false;  // lexicographic iteration: the first hit is least
  });
  if (!best) throw ConsistencyError("no 6-cycle normalizes the 7-cycle");
  return *best;
}

/// <(1 2 3 4 5 6 7), mu^2>, order 21.
inline PermGroup a7_h() {
  const auto mu = a7_mu();
  return PermGroup(7, {parse_perm("(1 2 3 4 5 6 7)", 7), mu.pow(2)});
}

inline PermGroup a7_k() { return intersect_with_alternating(young_subgroup(7, {{0, 1}, {2, 3, 4, 5, 6}})); }

inline NamedConstruction star2_a7() {
  return detail::star2("star2/A7", Ambient::alternating(7), a7_h(), a7_k(), "7:3", "(S2 x S5) ∩ A7",
                       "A7 is covered by a Frobenius group of order 21 and an intransitive subgroup");
}

inline PermGroup a8_k() { return intersect_with_alternating(young_subgroup(8, {{0, 1, 2}, {3, 4, 5, 6, 7}})); }

inline NamedConstruction star2_a8() {
  return detail::star2("star2/A8", Ambient::alternating(8), affine_group_gf2_3(), a8_k(), "AGL(3,2)",
                       "(S3 x S5) ∩ A8", "A8 is covered by the affine group of GF(2)^3 and an intransitive subgroup");
}

using ConstructionBuilder = NamedConstruction (*)();

inline const std::vector<std::pair<std::string, ConstructionBuilder>>& gallery_builders() {
  static const std::vector<std::pair<std::string, ConstructionBuilder>> builders{
      {"star/S3", star_s3},         {"star/A4", star_a4},       {"star/S4", star_s4},
      {"star2/S5", star2_s5},       {"star2/S6", star2_s6},     {"star2/A5", star2_a5},
      {"star2/A5-alt", star2_a5_alt}, {"star2/A6", star2_a6},   {"star2/A6-alt", star2_a6_alt},
      {"star2/A7", star2_a7},       {"star2/A8", star2_a8}};
  return builders;
}

/// All eleven constructions, in a fixed order.
inline std::vector<NamedConstruction> gallery() {
  std::vector<NamedConstruction> out;
  for (const auto& [label, build] : gallery_builders()) out.push_back(build());
  return out;
}

inline std::optional<NamedConstruction> gallery_entry(const std::string& label) {
  for (const auto& [l, build] : gallery_builders())
    if (l == label) return build();
  return std::nullopt;
}

}  // namespace covlab
