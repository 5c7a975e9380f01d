#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "covlab/error.hpp"

namespace covlab {

/// Largest supported degree. Permutations are stored inline, so this is a hard limit.
inline constexpr std::size_t kMaxDegree = 32;

class CycleType;

/// A bijection of {0, ..., n-1}. Points are 0-based here and 1-based in every
/// text format. Composition is left-to-right: `compose(a, b)` applies `a` first,
/// matching the exponential notation i^(ab) = (i^a)^b.
class Permutation {
 public:
  Permutation() : Permutation(1) {}

  explicit Permutation(std::size_t degree) : degree_(static_cast<std::uint8_t>(degree)) {
    if (degree == 0 || degree > kMaxDegree)
      throw PreconditionError("permutation degree must be in 1.." + std::to_string(kMaxDegree));
    for (std::size_t i = 0; i < kMaxDegree; ++i) images_[i] = static_cast<std::uint8_t>(i);
  }

  static Permutation identity(std::size_t degree) { return Permutation(degree); }

  /// Builds from a 0-based image table; throws unless it is a bijection.
  static Permutation from_images(std::span<const std::size_t> images) {
    Permutation p(images.size());
    std::array<bool, kMaxDegree> seen{};
    for (std::size_t i = 0; i < images.size(); ++i) {
      if (images[i] >= images.size())
        throw ParseError("image " + std::to_string(images[i] + 1) + " out of range");
      if (seen[images[i]]) throw ParseError("image list is not a bijection");
      seen[images[i]] = true;
      p.images_[i] = static_cast<std::uint8_t>(images[i]);
    }
    return p;
  }

  static Permutation from_images(std::initializer_list<std::size_t> images) {
    std::vector<std::size_t> v(images);
    return from_images(std::span<const std::size_t>(v));
  }

  /// Builds from 0-based disjoint cycles.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<std::size_t>>& cycles) {
    Permutation p(degree);
    std::array<bool, kMaxDegree> used{};
    for (const auto& cycle : cycles) {
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        const std::size_t a = cycle[i];
        if (a >= degree) throw ParseError("point " + std::to_string(a + 1) + " out of range");
        if (used[a]) throw ParseError("point " + std::to_string(a + 1) + " repeated");
        used[a] = true;
        p.images_[a] = static_cast<std::uint8_t>(cycle[(i + 1) % cycle.size()]);
      }
    }
    return p;
  }

  std::size_t degree() const { return degree_; }
  std::size_t operator[](std::size_t point) const { return images_[point]; }
  std::size_t image(std::size_t point) const { return images_[point]; }

  std::vector<std::size_t> images() const {
    return std::vector<std::size_t>(images_.begin(), images_.begin() + degree_);
  }

  bool is_identity() const {
    for (std::size_t i = 0; i < degree_; ++i)
      if (images_[i] != i) return false;
    return true;
  }

  /// Disjoint cycles of length >= 2, each starting at its smallest point,
  /// ordered by that point.
  std::vector<std::vector<std::size_t>> cycles() const {
    std::vector<std::vector<std::size_t>> result;
    std::array<bool, kMaxDegree> seen{};
    for (std::size_t i = 0; i < degree_; ++i) {
      if (seen[i]) continue;
      std::vector<std::size_t> cycle;
      for (std::size_t j = i; !seen[j]; j = images_[j]) {
        seen[j] = true;
        cycle.push_back(j);
      }
      if (cycle.size() > 1) result.push_back(std::move(cycle));
    }
    return result;
  }

  std::size_t cycle_count() const {
    std::size_t count = 0;
    std::array<bool, kMaxDegree> seen{};
    for (std::size_t i = 0; i < degree_; ++i) {
      if (seen[i]) continue;
      ++count;
      for (std::size_t j = i; !seen[j]; j = images_[j]) seen[j] = true;
    }
    return count;
  }

  /// 0 for even, 1 for odd.
  int parity() const { return static_cast<int>((degree_ - cycle_count()) % 2); }
  bool is_even() const { return parity() == 0; }

  std::uint64_t order() const {
    std::uint64_t result = 1;
    std::array<bool, kMaxDegree> seen{};
    for (std::size_t i = 0; i < degree_; ++i) {
      if (seen[i]) continue;
      std::uint64_t len = 0;
      for (std::size_t j = i; !seen[j]; j = images_[j]) {
        seen[j] = true;
        ++len;
      }
      result = std::lcm(result, len);
    }
    return result;
  }

  /// Sorted list of moved points.
  std::vector<std::size_t> support() const {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < degree_; ++i)
      if (images_[i] != i) s.push_back(i);
    return s;
  }

  Permutation pow(long long k) const;

  CycleType cycle_type() const;

  /// Cycle notation with 1-based points, e.g. "(1 2 3)(4 5)"; identity is "()".
  std::string to_string() const {
    const auto cs = cycles();
    if (cs.empty()) return "()";
    std::string out;
    for (const auto& c : cs) {
      out += '(';
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(c[i] + 1);
      }
      out += ')';
    }
    return out;
  }

  std::size_t hash() const {
    std::uint64_t h = 1469598103934665603ULL;
    for (std::size_t i = 0; i < degree_; ++i) {
      h ^= images_[i];
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h ^ degree_);
  }

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.degree_ == b.degree_ &&
           std::equal(a.images_.begin(), a.images_.begin() + a.degree_, b.images_.begin());
  }

  /// Orders by degree, then lexicographically by image table.
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
    for (std::size_t i = 0; i < a.degree_; ++i)
      if (auto c = a.images_[i] <=> b.images_[i]; c != 0) return c;
    return std::strong_ordering::equal;
  }

  friend Permutation compose(const Permutation& a, const Permutation& b);
  friend Permutation inverse(const Permutation& a);

 private:
  std::array<std::uint8_t, kMaxDegree> images_{};
  std::uint8_t degree_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const { return p.hash(); }
};

inline void require_same_degree(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree())
    throw DegreeMismatch("degree mismatch: " + std::to_string(a.degree()) + " vs " +
                         std::to_string(b.degree()));
}

/// Apply `a`, then `b`.
inline Permutation compose(const Permutation& a, const Permutation& b) {
  require_same_degree(a, b);
  Permutation r(a.degree());
  for (std::size_t i = 0; i < a.degree_; ++i) r.images_[i] = b.images_[a.images_[i]];
  return r;
}

inline Permutation operator*(const Permutation& a, const Permutation& b) { return compose(a, b); }

inline Permutation inverse(const Permutation& a) {
  Permutation r(a.degree());
  for (std::size_t i = 0; i < a.degree_; ++i) r.images_[a.images_[i]] = static_cast<std::uint8_t>(i);
  return r;
}

/// x^g = g^-1 x g.
inline Permutation conjugate(const Permutation& x, const Permutation& g) {
  return compose(inverse(g), compose(x, g));
}

inline Permutation Permutation::pow(long long k) const {
  const auto ord = static_cast<long long>(order());
  k %= ord;
  if (k < 0) k += ord;
  Permutation result(degree());
  Permutation base = *this;
  while (k > 0) {
    if (k & 1) result = compose(result, base);
    base = compose(base, base);
    k >>= 1;
  }
  return result;
}

inline std::ostream& operator<<(std::ostream& os, const Permutation& p) { return os << p.to_string(); }

// ---------------------------------------------------------------------------

/// Multiset of cycle lengths, fixed points included, stored non-increasing.
class CycleType {
 public:
  CycleType() = default;

  explicit CycleType(std::vector<std::size_t> parts) : parts_(std::move(parts)) {
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
    for (auto p : parts_)
      if (p == 0) throw ParseError("cycle type parts must be positive");
    degree_ = std::accumulate(parts_.begin(), parts_.end(), std::size_t{0});
  }

  /// Builds a type of degree n from the nontrivial parts; the rest become fixed points.
  static CycleType with_fixed_points(std::size_t n, std::vector<std::size_t> nontrivial) {
    const auto moved = std::accumulate(nontrivial.begin(), nontrivial.end(), std::size_t{0});
    if (moved > n) throw ParseError("cycle lengths exceed degree");
    nontrivial.resize(nontrivial.size() + (n - moved), 1);
    return CycleType(std::move(nontrivial));
  }

  /// Parses "[3;5]" or "[1;3;3]" (also "3,5"); a degree larger than the sum pads with fixed points.
  static CycleType parse(std::string_view text, std::size_t degree = 0) {
    std::vector<std::size_t> parts;
    std::size_t value = 0;
    bool in_number = false;
    for (char ch : text) {
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        value = value * 10 + static_cast<std::size_t>(ch - '0');
        in_number = true;
      } else if (ch == ';' || ch == ',' || ch == ' ' || ch == '[' || ch == ']') {
        if (in_number) parts.push_back(value);
        value = 0;
        in_number = false;
      } else {
        throw ParseError("unexpected character in cycle type: " + std::string(text));
      }
    }
    if (in_number) parts.push_back(value);
    if (parts.empty()) throw ParseError("empty cycle type");
    if (degree == 0) return CycleType(parts);
    return with_fixed_points(degree, parts);
  }

  std::size_t degree() const { return degree_; }
  const std::vector<std::size_t>& parts() const { return parts_; }

  int parity() const {
    std::size_t s = 0;
    for (auto l : parts_) s += l - 1;
    return static_cast<int>(s % 2);
  }
  bool is_even() const { return parity() == 0; }

  std::size_t fixed_points() const {
    return static_cast<std::size_t>(std::count(parts_.begin(), parts_.end(), std::size_t{1}));
  }

  /// Ascending, fixed points included: "[1;3;3]".
  std::string to_string() const {
    std::string out = "[";
    for (auto it = parts_.rbegin(); it != parts_.rend(); ++it) {
      if (it != parts_.rbegin()) out += ';';
      out += std::to_string(*it);
    }
    return out + "]";
  }

  friend bool operator==(const CycleType&, const CycleType&) = default;
  friend auto operator<=>(const CycleType& a, const CycleType& b) {
    if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<std::size_t> parts_;
  std::size_t degree_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const CycleType& t) { return os << t.to_string(); }

inline CycleType Permutation::cycle_type() const {
  std::vector<std::size_t> parts;
  std::array<bool, kMaxDegree> seen{};
  for (std::size_t i = 0; i < degree_; ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    parts.push_back(len);
  }
  return CycleType(std::move(parts));
}

inline CycleType cycle_type(const Permutation& x) { return x.cycle_type(); }

// ---------------------------------------------------------------------------

namespace detail {

inline bool is_sep(char c) { return c == ' ' || c == ',' || c == '\t' || c == '\n'; }

inline std::vector<std::size_t> parse_cycle_body(std::string_view body, std::size_t degree) {
  std::vector<std::size_t> points;
  const bool has_sep = std::any_of(body.begin(), body.end(), is_sep);
  if (!has_sep && degree <= 9) {
    // Compact notation "(14)(2536)" with single-digit points.
    for (char c : body) {
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw ParseError("unexpected character '" + std::string(1, c) + "' in cycle");
      points.push_back(static_cast<std::size_t>(c - '0'));
    }
    return points;
  }
  std::size_t value = 0;
  bool in_number = false;
  for (char c : body) {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      value = value * 10 + static_cast<std::size_t>(c - '0');
      in_number = true;
    } else if (is_sep(c)) {
      if (in_number) points.push_back(value);
      value = 0;
      in_number = false;
    } else {
      throw ParseError("unexpected character '" + std::string(1, c) + "' in cycle");
    }
  }
  if (in_number) points.push_back(value);
  return points;
}

}  // namespace detail

/// Parses cycle notation "(1 2 3)(4 5)" / "(14)(2536)" / "()" or an image list
/// "3 1 2 5 4" (1-based). Unmentioned points are fixed.
inline Permutation parse_perm(std::string_view text, std::size_t degree) {
  if (degree == 0 || degree > kMaxDegree) throw PreconditionError("unsupported degree");
  std::size_t first = 0;
  while (first < text.size() && detail::is_sep(text[first])) ++first;
  text.remove_prefix(first);
  while (!text.empty() && detail::is_sep(text.back())) text.remove_suffix(1);

  if (text.empty()) throw ParseError("empty permutation text");

  if (text.front() != '(') {
    auto pts = detail::parse_cycle_body(text, kMaxDegree);  // always separator-based
    if (pts.size() != degree)
      throw ParseError("image list has " + std::to_string(pts.size()) + " entries, expected " +
                       std::to_string(degree));
    std::vector<std::size_t> images;
    for (auto p : pts) {
      if (p < 1 || p > degree) throw ParseError("point " + std::to_string(p) + " out of range");
      images.push_back(p - 1);
    }
    return Permutation::from_images(std::span<const std::size_t>(images));
  }

  std::vector<std::vector<std::size_t>> cycles;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (detail::is_sep(text[pos])) {
      ++pos;
      continue;
    }
    if (text[pos] != '(') throw ParseError("expected '(' in " + std::string(text));
    const auto close = text.find(')', pos);
    if (close == std::string_view::npos) throw ParseError("unbalanced parenthesis");
    auto body = detail::parse_cycle_body(text.substr(pos + 1, close - pos - 1), degree);
    std::vector<std::size_t> cycle;
    for (auto p : body) {
      if (p < 1 || p > degree) throw ParseError("point " + std::to_string(p) + " out of range");
      if (std::find(cycle.begin(), cycle.end(), p - 1) != cycle.end())
        throw ParseError("point " + std::to_string(p) + " repeated in a cycle");
      cycle.push_back(p - 1);
    }
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
    pos = close + 1;
  }
  // Non-disjoint cycles are composed left to right.
  Permutation result(degree);
  for (const auto& c : cycles) result = compose(result, Permutation::from_cycles(degree, {c}));
  return result;
}

/// Cycle normal form used for canonical conjugators: all cycles including fixed
/// points, sorted by length descending then by smallest point, each rotated to
/// start at its smallest point, flattened into one sequence.
inline std::vector<std::size_t> canonical_cycle_sequence(const Permutation& x) {
  std::vector<std::vector<std::size_t>> cs;
  std::array<bool, kMaxDegree> seen{};
  for (std::size_t i = 0; i < x.degree(); ++i) {
    if (seen[i]) continue;
    std::vector<std::size_t> c;
    for (std::size_t j = i; !seen[j]; j = x[j]) {
      seen[j] = true;
      c.push_back(j);
    }
    cs.push_back(std::move(c));
  }
  std::stable_sort(cs.begin(), cs.end(),
                   [](const auto& a, const auto& b) { return a.size() > b.size(); });
  std::vector<std::size_t> flat;
  flat.reserve(x.degree());
  for (const auto& c : cs) flat.insert(flat.end(), c.begin(), c.end());
  return flat;
}

/// The permutation g with from^g = to, read positionally off the canonical cycle
/// sequences. Requires equal cycle types.
inline Permutation canonical_conjugator(const Permutation& from, const Permutation& to) {
  require_same_degree(from, to);
  const auto a = canonical_cycle_sequence(from);
  const auto b = canonical_cycle_sequence(to);
  std::vector<std::size_t> images(from.degree());
  for (std::size_t k = 0; k < a.size(); ++k) images[a[k]] = b[k];
  return Permutation::from_images(std::span<const std::size_t>(images));
}

}  // namespace covlab
