#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <string>
#include <vector>

#include "covlab/error.hpp"
#include "covlab/perm.hpp"
#include "covlab/perm_group.hpp"

namespace covlab {

enum class AmbientKind { symmetric, alternating };

/// S_n or A_n acting naturally on {1..n}.
struct Ambient {
  AmbientKind kind = AmbientKind::symmetric;
  std::size_t n = 1;

  static Ambient symmetric(std::size_t n) { return {AmbientKind::symmetric, n}; }
  static Ambient alternating(std::size_t n) { return {AmbientKind::alternating, n}; }

  /// "S7", "A9" (case-insensitive letter).
  static Ambient parse(const std::string& text) {
    if (text.size() < 2) throw ParseError("ambient must look like S7 or A9: " + text);
    const char k = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
    if (k != 'S' && k != 'A') throw ParseError("ambient must look like S7 or A9: " + text);
    std::size_t n = 0;
    for (std::size_t i = 1; i < text.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw ParseError("ambient must look like S7 or A9: " + text);
      n = n * 10 + static_cast<std::size_t>(text[i] - '0');
    }
    if (n == 0 || n > kMaxDegree) throw ParseError("ambient degree out of range: " + text);
    return {k == 'S' ? AmbientKind::symmetric : AmbientKind::alternating, n};
  }

  bool is_alternating() const { return kind == AmbientKind::alternating; }

  std::string label() const { return (is_alternating() ? "A" : "S") + std::to_string(n); }

  std::uint64_t order() const {
    std::uint64_t f = 1;
    for (std::size_t i = 2; i <= n; ++i) f *= i;
    return (is_alternating() && n >= 2) ? f / 2 : f;
  }

  PermGroup group() const { return is_alternating() ? alternating_group(n) : symmetric_group(n); }

  bool contains(const Permutation& x) const {
    return x.degree() == n && (!is_alternating() || x.is_even());
  }

  friend bool operator==(const Ambient&, const Ambient&) = default;
  friend auto operator<=>(const Ambient&, const Ambient&) = default;
};

enum class Split { whole, plus, minus };

inline const char* to_string(Split s) {
  switch (s) {
    case Split::whole: return "whole";
    case Split::plus: return "plus";
    case Split::minus: return "minus";
  }
  return "?";
}

/// Conjugacy class label in S_n or A_n: cycle type plus split tag.
struct ClassId {
  Ambient ambient;
  CycleType ctype;
  Split split = Split::whole;

  /// "[3;5]+", "[2;2;1;1;1]" style label (type in ascending order).
  std::string to_string() const {
    auto s = ctype.to_string();
    if (split == Split::plus) s += "+";
    if (split == Split::minus) s += "-";
    return s;
  }

  friend bool operator==(const ClassId&, const ClassId&) = default;
};

/// All parts odd and pairwise distinct. Throws for odd types.
inline bool splits_in_alternating(const CycleType& t) {
  if (!t.is_even()) throw PreconditionError("type " + t.to_string() + " is odd");
  const auto& p = t.parts();
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] % 2 == 0) return false;
    if (i > 0 && p[i] == p[i - 1]) return false;
  }
  return true;
}

/// prod over distinct lengths l of l^{m_l} * m_l!.
inline std::uint64_t centralizer_order_in_symmetric(const CycleType& t) {
  std::map<std::size_t, std::size_t> mult;
  for (auto l : t.parts()) ++mult[l];
  std::uint64_t r = 1;
  for (auto [l, m] : mult)
    for (std::size_t i = 1; i <= m; ++i) r *= static_cast<std::uint64_t>(l) * i;
  return r;
}

/// All partitions of n, non-increasing parts, in lexicographic order starting at [1^n].
inline std::vector<CycleType> partitions_of(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t remaining, std::size_t max_part) -> void {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    for (std::size_t p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      self(self, remaining - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  std::sort(out.begin(), out.end());
  std::vector<CycleType> types;
  for (auto& p : out) types.emplace_back(std::move(p));
  return types;
}

/// Canonical representative: nontrivial cycles in ascending length on
/// consecutive points from 1, fixed points last. [3;5] gives (1 2 3)(4 5 6 7 8).
inline Permutation class_representative(const CycleType& t) {
  std::vector<std::size_t> nontrivial;
  for (auto l : t.parts())
    if (l > 1) nontrivial.push_back(l);
  std::sort(nontrivial.begin(), nontrivial.end());
  std::vector<std::vector<std::size_t>> cycles;
  std::size_t next = 0;
  for (auto l : nontrivial) {
    std::vector<std::size_t> c(l);
    std::iota(c.begin(), c.end(), next);
    next += l;
    cycles.push_back(std::move(c));
  }
  return Permutation::from_cycles(t.degree(), cycles);
}

/// Conjugacy classes of S_n or A_n in a fixed order: types as in partitions_of,
/// split types contributing plus then minus.
class ClassTable {
 public:
  struct Entry {
    ClassId id;
    Permutation representative;
    std::uint64_t size = 0;
  };

  static constexpr std::size_t kMaxDegree = 16;

  explicit ClassTable(Ambient ambient) : ambient_(ambient) {
    if (ambient.n == 0 || ambient.n > kMaxDegree)
      throw PreconditionError("class tables are generated for 1 <= n <= 16");
    const auto n = ambient.n;
    std::uint64_t nfact = 1;
    for (std::size_t i = 2; i <= n; ++i) nfact *= i;
    for (auto& t : partitions_of(n)) {
      if (ambient.is_alternating() && !t.is_even()) continue;
      const auto s_size = nfact / centralizer_order_in_symmetric(t);
      const auto rep = class_representative(t);
      std::size_t first = entries_.size();
      if (ambient.is_alternating() && n >= 2 && splits_in_alternating(t)) {
        entries_.push_back({{ambient, t, Split::plus}, rep, s_size / 2});
        // The minus class: conjugate of the representative by a transposition.
        const auto tr = Permutation::from_cycles(n, {{0, 1}});
        entries_.push_back({{ambient, t, Split::minus}, conjugate(rep, tr), s_size / 2});
        split_.push_back(true);
      } else {
        entries_.push_back({{ambient, t, Split::whole}, rep, s_size});
        split_.push_back(false);
      }
      type_first_.emplace(t.parts(), first);
    }
  }

  const Ambient& ambient() const { return ambient_; }
  std::size_t size() const { return entries_.size(); }
  const Entry& operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<Entry>& entries() const { return entries_; }

  /// Index of a ClassId in this table; throws for a foreign id.
  std::size_t index_of(const ClassId& c) const {
    if (c.ambient != ambient_) throw PreconditionError("class " + c.to_string() + " belongs to " + c.ambient.label());
    auto it = type_first_.find(c.ctype.parts());
    if (it == type_first_.end() || c.ctype.degree() != ambient_.n)
      throw PreconditionError("class " + c.to_string() + " is not in the table of " + ambient_.label());
    const auto i = it->second;
    if (entries_[i].id.split == Split::whole) {
      if (c.split != Split::whole) throw PreconditionError("type " + c.ctype.to_string() + " does not split");
      return i;
    }
    if (c.split == Split::whole) throw PreconditionError("split type needs a plus/minus tag");
    return c.split == Split::plus ? i : i + 1;
  }

  /// Class index of an element of the ambient group.
  std::size_t index_of(const Permutation& x) const {
    if (x.degree() != ambient_.n) throw DegreeMismatch("element degree differs from ambient");
    if (ambient_.is_alternating() && !x.is_even())
      throw PreconditionError("odd permutation " + x.to_string() + " is not in " + ambient_.label());
    const auto t = x.cycle_type();
    const auto i = type_first_.at(t.parts());
    if (entries_[i].id.split == Split::whole) return i;
    const auto g = canonical_conjugator(entries_[i].representative, x);
    return g.is_even() ? i : i + 1;
  }

  ClassId class_of(const Permutation& x) const { return entries_[index_of(x)].id; }

  std::uint64_t class_size(const ClassId& c) const { return entries_[index_of(c)].size; }

 private:
  Ambient ambient_;
  std::vector<Entry> entries_;
  std::vector<bool> split_;
  std::map<std::vector<std::size_t>, std::size_t> type_first_;
};

/// Cached, immutable class table for an ambient group. Cache population is serialized.
inline const ClassTable& class_table(const Ambient& ambient) {
  static std::mutex mutex;
  static std::map<Ambient, std::unique_ptr<ClassTable>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[ambient];
  if (!slot) slot = std::make_unique<ClassTable>(ambient);
  return *slot;
}

inline ClassId class_of(const Ambient& ambient, const Permutation& x) {
  return class_table(ambient).class_of(x);
}

inline std::uint64_t class_size(const Ambient& ambient, const ClassId& c) {
  return class_table(ambient).class_size(c);
}

}  // namespace covlab
