#pragma once

#include <string>

#include <json.hpp>

#include "covlab/conjugacy.hpp"
#include "covlab/covering.hpp"
#include "covlab/fw.hpp"
#include "covlab/search.hpp"

namespace covlab {

inline constexpr int kSchemaVersion = 1;

inline nlohmann::json group_json(const std::string& label, const PermGroup& g) {
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& x : g.generators()) gens.push_back(x.to_string());
  return {{"label", label}, {"degree", g.degree()}, {"order", g.order()}, {"generators", gens}};
}

inline nlohmann::json to_json(const CoveringReport& r) {
  nlohmann::json classes = nlohmann::json::array();
  for (const auto& c : r.classes) {
    nlohmann::json row{{"type", c.type},
                       {"split", to_string(c.split)},
                       {"size", c.size},
                       {"coveredBy", to_string(c.covered_by)}};
    if (c.id) row["class"] = c.id->to_string();
    row["witness"] = c.witness ? nlohmann::json(c.witness->to_string()) : nlohmann::json(nullptr);
    classes.push_back(std::move(row));
  }
  nlohmann::json comps = nlohmann::json::array();
  for (const auto& c : r.components) comps.push_back(group_json(c.label, c.group));
  nlohmann::json out{{"schemaVersion", kSchemaVersion},
                     {"ambient", r.ambient ? r.ambient->label() : r.group_label},
                     {"kind", to_string(r.kind)},
                     {"verdict", r.verdict},
                     {"unionFull", r.union_full},
                     {"components", comps},
                     {"classes", classes},
                     {"inclusionCheck",
                      {{"evaluated", r.inclusion.evaluated},
                       {"noInclusions", r.inclusion.no_inclusions},
                       {"detail", r.inclusion.detail}}}};
  if (r.normalized_k) {
    out["normalized"] = {{"kernelCore", group_json("K_G", *r.normalized_k)}, {"verdict", *r.normalized_verdict}};
  }
  return out;
}

inline nlohmann::json to_json(const SearchVerdict& v) {
  nlohmann::json maximal = nlohmann::json::array();
  for (std::size_t i = 0; i < v.maximal_labels.size(); ++i)
    maximal.push_back({{"label", v.maximal_labels[i]}, {"order", v.maximal_orders[i]}});
  nlohmann::json cert = nlohmann::json::array();
  for (const auto& c : v.certificate) {
    nlohmann::json unc = nlohmann::json::array();
    for (const auto& id : c.uncovered) unc.push_back(id.to_string());
    cert.push_back({{"H", c.h_label}, {"K", c.k_label}, {"uncovered", unc}});
  }
  nlohmann::json out{{"schemaVersion", kSchemaVersion},
                     {"ambient", v.ambient.label()},
                     {"coverable", v.coverable},
                     {"source", to_string(v.source)},
                     {"completeness", to_string(v.completeness)},
                     {"maximalClasses", maximal},
                     {"pairsTested", v.pairs_tested},
                     {"certificate", cert}};
  if (v.witness) {
    out["witness"] = {{"H", group_json(v.witness->h_label, v.witness->h)},
                      {"K", group_json(v.witness->k_label, v.witness->k)},
                      {"transitivity", to_string(transitivity_report(v.witness->h, v.witness->k))}};
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

inline nlohmann::json to_json(const FwWitness& w) {
  return {{"schemaVersion", kSchemaVersion},
          {"G", group_json("G", w.g)},
          {"H", group_json("H", w.h)},
          {"N", group_json("N", w.n)},
          {"kernel", group_json("K", w.kernel)},
          {"checks",
           {{"kernelIsSubgroup", w.checks.kernel_is_subgroup},
            {"kernelNormal", w.checks.kernel_normal},
            {"gEqualsHK", w.checks.g_equals_hk},
            {"hCapKEqualsN", w.checks.h_cap_k_equals_n},
            {"orderIdentity", w.checks.order_identity}}}};
}

/// Even cycle types of A_n with split verdicts and class sizes.
inline nlohmann::json split_classes_json(std::size_t n) {
  const auto& table = class_table(Ambient::alternating(n));
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& t : partitions_of(n)) {
    if (!t.is_even()) continue;
    const bool split = splits_in_alternating(t);
    const auto s_size = Ambient::symmetric(n).order() / centralizer_order_in_symmetric(t);
    nlohmann::json row{{"type", t.to_string()}, {"split", split}, {"symmetricClassSize", s_size}};
    if (split) {
      row["plusSize"] = table.class_size(ClassId{Ambient::alternating(n), t, Split::plus});
      row["minusSize"] = table.class_size(ClassId{Ambient::alternating(n), t, Split::minus});
    } else {
      row["classSize"] = table.class_size(ClassId{Ambient::alternating(n), t, Split::whole});
    }
    rows.push_back(std::move(row));
  }
  return {{"schemaVersion", kSchemaVersion}, {"ambient", "A" + std::to_string(n)}, {"types", rows}};
}

}  // namespace covlab
