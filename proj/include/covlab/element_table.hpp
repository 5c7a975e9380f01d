#pragma once

#include <bit>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "covlab/error.hpp"
#include "covlab/perm.hpp"
#include "covlab/perm_group.hpp"

namespace covlab {

/// Fixed-size bit vector over the elements of an ElementTable (or over class indices).
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const { return size_; }

  void set(std::size_t i) { words_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool all() const { return count() == size_; }
  bool none() const { return count() == 0; }

  void set_all() {
    for (std::size_t i = 0; i < size_; ++i) set(i);
  }

  Bitset& operator|=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  Bitset& operator&=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }

  std::size_t intersection_count(const Bitset& o) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      c += static_cast<std::size_t>(std::popcount(words_[i] & o.words_[i]));
    return c;
  }

  bool is_subset_of(const Bitset& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  /// Indices of set bits, ascending.
  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
      auto bits = words_[w];
      while (bits) {
        out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
    return out;
  }

  /// First index not set, or size() if all set.
  std::size_t first_unset() const {
    for (std::size_t i = 0; i < size_; ++i)
      if (!test(i)) return i;
    return size_;
  }

  std::uint64_t hash() const {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (auto w : words_) {
      h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      h *= 0xff51afd7ed558ccdULL;
    }
    return h;
  }

  friend bool operator==(const Bitset&, const Bitset&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

struct BitsetHash {
  std::size_t operator()(const Bitset& b) const { return static_cast<std::size_t>(b.hash()); }
};

/// All elements of a group with dense indices, index lookup, and (for small
/// groups) a full multiplication table. Element 0 is the identity; indices
/// follow PermGroup::for_each_element order.
class ElementTable {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  static constexpr std::uint64_t kDefaultBound = 5'000'000;
  static constexpr std::uint64_t kTableBound = 6000;

  explicit ElementTable(const PermGroup& g, std::uint64_t bound = kDefaultBound)
      : degree_(g.degree()) {
    if (g.order() > bound)
      throw BoundExceeded("element table for a group of order " + std::to_string(g.order()) +
                          " exceeds bound " + std::to_string(bound));
    elems_.reserve(static_cast<std::size_t>(g.order()));
    g.for_each_element([&](const Permutation& p) { elems_.push_back(p); });
    use_rank_ = degree_ <= 8;
    if (use_rank_) {
      std::size_t fact = 1;
      for (std::size_t i = 2; i <= degree_; ++i) fact *= i;
      rank_to_index_.assign(fact, npos);
      for (std::size_t i = 0; i < elems_.size(); ++i) rank_to_index_[rank(elems_[i])] = i;
    } else {
      map_.reserve(elems_.size() * 2);
      for (std::size_t i = 0; i < elems_.size(); ++i) map_.emplace(elems_[i], i);
    }
    inverse_.resize(elems_.size());
    for (std::size_t i = 0; i < elems_.size(); ++i) inverse_[i] = index_of(inverse(elems_[i]));
    if (elems_.size() <= kTableBound) {
      const auto m = elems_.size();
      table_.resize(m * m);
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
          table_[i * m + j] = static_cast<std::uint16_t>(index_of(compose(elems_[i], elems_[j])));
    }
  }

  std::size_t size() const { return elems_.size(); }
  std::size_t degree() const { return degree_; }
  const Permutation& operator[](std::size_t i) const { return elems_[i]; }
  const std::vector<Permutation>& elements() const { return elems_; }

  /// Index of x, or npos when x is not in the group.
  std::size_t find(const Permutation& x) const {
    if (use_rank_) return rank_to_index_[rank(x)];
    auto it = map_.find(x);
    return it == map_.end() ? npos : it->second;
  }

  std::size_t index_of(const Permutation& x) const {
    const auto i = find(x);
    if (i == npos) throw PreconditionError("element " + x.to_string() + " not in group");
    return i;
  }

  std::size_t mul(std::size_t i, std::size_t j) const {
    if (!table_.empty()) return table_[i * elems_.size() + j];
    return index_of(compose(elems_[i], elems_[j]));
  }

  std::size_t inv(std::size_t i) const { return inverse_[i]; }

  /// x^g = g^-1 x g, by index.
  std::size_t conj(std::size_t x, std::size_t g) const { return mul(mul(inverse_[g], x), g); }

  Bitset empty_set() const { return Bitset(elems_.size()); }

  /// Element set of a subgroup given by generator indices (Dimino-style coset closure).
  Bitset closure(const std::vector<std::size_t>& gens) const {
    Bitset set(elems_.size());
    std::vector<std::size_t> members{0};
    set.set(0);
    for (std::size_t k = 0; k < members.size(); ++k)
      for (auto s : gens) {
        const auto y = mul(members[k], s);
        if (!set.test(y)) {
          set.set(y);
          members.push_back(y);
        }
      }
    return set;
  }

  /// Element set of <H, g> where `h_members` lists H's elements and `gens` generates <H, g>.
  /// Adds whole right cosets H*y at a time.
  Bitset extend(const std::vector<std::size_t>& h_members, const Bitset& h_set,
                const std::vector<std::size_t>& gens) const {
    Bitset set = h_set;
    std::vector<std::size_t> reps{0};
    for (std::size_t k = 0; k < reps.size(); ++k)
      for (auto s : gens) {
        const auto y = mul(reps[k], s);
        if (set.test(y)) continue;
        reps.push_back(y);
        for (auto h : h_members) set.set(mul(h, y));
      }
    return set;
  }

  Bitset set_of(const PermGroup& h) const {
    Bitset set(elems_.size());
    h.for_each_element([&](const Permutation& x) { set.set(index_of(x)); });
    return set;
  }

  std::vector<std::size_t> generator_indices(const PermGroup& h) const {
    std::vector<std::size_t> out;
    for (const auto& g : h.generators()) out.push_back(index_of(g));
    return out;
  }

  /// Conjugacy classes of the group itself by orbit closure under generators;
  /// returns class index per element (classes numbered by least element index).
  std::vector<std::size_t> conjugacy_partition(const std::vector<std::size_t>& group_gens) const {
    std::vector<std::size_t> cls(elems_.size(), npos);
    std::size_t next = 0;
    for (std::size_t i = 0; i < elems_.size(); ++i) {
      if (cls[i] != npos) continue;
      std::vector<std::size_t> orbit{i};
      cls[i] = next;
      for (std::size_t k = 0; k < orbit.size(); ++k)
        for (auto s : group_gens) {
          const auto y = conj(orbit[k], s);
          if (cls[y] == npos) {
            cls[y] = next;
            orbit.push_back(y);
          }
        }
      ++next;
    }
    return cls;
  }

 private:
  std::size_t rank(const Permutation& x) const {
    // Lehmer code.
    std::size_t r = 0;
    for (std::size_t i = 0; i < degree_; ++i) {
      std::size_t smaller = 0;
      for (std::size_t j = i + 1; j < degree_; ++j)
        if (x[j] < x[i]) ++smaller;
      r = r * (degree_ - i) + smaller;
    }
    return r;
  }

  std::size_t degree_;
  std::vector<Permutation> elems_;
  bool use_rank_ = false;
  std::vector<std::size_t> rank_to_index_;
  std::unordered_map<Permutation, std::size_t, PermutationHash> map_;
  std::vector<std::size_t> inverse_;
  std::vector<std::uint16_t> table_;
};

}  // namespace covlab
