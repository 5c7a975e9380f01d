#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "covlab/constructions.hpp"
#include "covlab/conjugacy.hpp"
#include "covlab/error.hpp"
#include "covlab/perm_group.hpp"

namespace covlab {

/// A group given by text: alias, gallery reference, inline generators or a JSON file.
struct Recipe {
  std::string label;
  PermGroup group;
};

namespace detail {

inline std::optional<std::size_t> parse_count(const std::string& s) {
  if (s.empty() || s.size() > 4) return std::nullopt;
  std::size_t v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') return std::nullopt;
    v = v * 10 + static_cast<std::size_t>(c - '0');
  }
  return v;
}

inline PermGroup cyclic_group(std::size_t n) {
  std::vector<std::size_t> c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = i;
  return PermGroup(n, n >= 2 ? std::vector<Permutation>{Permutation::from_cycles(n, {c})} : std::vector<Permutation>{});
}

// Dihedral group of order 2m on m points.
inline PermGroup dihedral_group(std::size_t m) {
  std::vector<std::size_t> c(m);
  for (std::size_t i = 0; i < m; ++i) c[i] = i;
  std::vector<std::vector<std::size_t>> refl;
  for (std::size_t i = 1; 2 * i < m; ++i) refl.push_back({i, m - i});
  return PermGroup(m, {Permutation::from_cycles(m, {c}), Permutation::from_cycles(m, refl)});
}

inline std::optional<PermGroup> named_small_group(const std::string& name) {
  if (name == "Q8") return group_from_strings(8, {"(1 2 3 4)(5 6 7 8)", "(1 5 3 7)(2 8 4 6)"});
  if (name == "V4") return group_from_strings(4, {"(1 2)(3 4)", "(1 3)(2 4)"});
  if (name == "F20") return group_from_strings(5, {"(1 2 3 4 5)", "(2 3 5 4)"});
  if (name == "F21") return group_from_strings(7, {"(1 2 3 4 5 6 7)", "(2 3 5)(4 7 6)"});
  if (name == "F42") return group_from_strings(7, {"(1 2 3 4 5 6 7)", "(2 4 3 7 5 6)"});
  if (name == "SL(2,3)") {
    // On the 8 nonzero vectors (x, y) of GF(3)^2, point x + 3y - 1.
    auto lin = [](std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
      std::vector<std::size_t> im(8);
      for (std::size_t p = 0; p < 8; ++p) {
        const auto x = (p + 1) % 3, y = (p + 1) / 3;
        im[p] = (a * x + b * y) % 3 + 3 * ((c * x + d * y) % 3) - 1;
      }
      return Permutation::from_images(std::span<const std::size_t>(im));
    };
    return PermGroup(8, {lin(1, 1, 0, 1), lin(1, 0, 1, 1)});
  }
  if (name == "PSL(2,7)") return group_from_strings(7, {"(1 2 3 4 5 6 7)", "(2 3 5)(4 7 6)", "(1 2)(3 6)"});
  if (name.size() >= 2 && (name[0] == 'C' || name[0] == 'D')) {
    const auto v = parse_count(name.substr(1));
    if (!v || *v == 0) return std::nullopt;
    if (name[0] == 'C') return *v <= kMaxDegree ? std::optional(cyclic_group(*v)) : std::nullopt;
    if (*v % 2 != 0 || *v < 6 || *v / 2 > kMaxDegree) return std::nullopt;
    return dihedral_group(*v / 2);
  }
  return std::nullopt;
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace detail

/// Recipe from a parsed JSON object {degree, generators: [strings], label}.
inline Recipe recipe_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("degree") || !j.contains("generators"))
    throw ParseError("recipe needs degree and generators");
  const auto degree = j.at("degree").get<std::size_t>();
  std::vector<std::string> gens;
  for (const auto& g : j.at("generators")) gens.push_back(g.get<std::string>());
  return {j.value("label", std::string("recipe")), group_from_strings(degree, gens)};
}

inline nlohmann::json recipe_to_json(const std::string& label, const PermGroup& g) {
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& x : g.generators()) gens.push_back(x.to_string());
  return {{"degree", g.degree()}, {"generators", gens}, {"label", label}};
}

/// Resolves:
///   S7, A9          symmetric / alternating groups
///   C6, D10, Q8, V4, F20, F21, F42, SL(2,3), PSL(2,7)   small named groups
///   star2/A7:H      component (G, H or K) of a gallery entry
///   5:(1 2 3 4 5);(2 3 5 4)   degree and generators
///   path.json       a recipe file
inline Recipe resolve_recipe(const std::string& text) {
  if (text.empty()) throw ParseError("empty group recipe");
  if (text.size() >= 5 && text.substr(text.size() - 5) == ".json") {
    std::ifstream in(text);
    if (!in) throw ParseError("cannot open recipe file " + text);
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw ParseError("invalid recipe file " + text + ": " + e.what());
    }
    return recipe_from_json(j);
  }
  if (const auto colon = text.rfind(':'); colon != std::string::npos && text.find('/') != std::string::npos) {
    const auto entry = gallery_entry(text.substr(0, colon));
    if (!entry) throw ParseError("unknown gallery entry in " + text);
    const auto part = text.substr(colon + 1);
    if (part == "G") return {text, entry->group};
    if (part == "H") return {text, entry->h};
    if (part == "K") return {text, entry->k};
    throw ParseError("gallery component must be G, H or K: " + text);
  }
  if (const auto colon = text.find(':'); colon != std::string::npos) {
    const auto degree = detail::parse_count(text.substr(0, colon));
    if (!degree || *degree == 0 || *degree > kMaxDegree) throw ParseError("bad degree in recipe " + text);
    std::vector<std::string> gens;
    for (auto& g : detail::split(text.substr(colon + 1), ';'))
      if (!g.empty()) gens.push_back(g);
    return {text, group_from_strings(*degree, gens)};
  }
  if ((text[0] == 'S' || text[0] == 'A') && detail::parse_count(text.substr(1))) {
    const auto a = Ambient::parse(text);
    return {a.label(), a.group()};
  }
  if (auto g = detail::named_small_group(text)) return {text, *g};
  throw ParseError("unrecognized group recipe: " + text);
}

/// The ambient S_n / A_n a group equals, if any.
inline std::optional<Ambient> as_ambient(const PermGroup& g) {
  const auto n = g.degree();
  const auto s = Ambient::symmetric(n);
  const auto a = Ambient::alternating(n);
  if (g.order() == s.order()) return s;
  if (g.order() == a.order() &&
      std::all_of(g.generators().begin(), g.generators().end(), [](const auto& x) { return x.is_even(); }))
    return a;
  return std::nullopt;
}

}  // namespace covlab
