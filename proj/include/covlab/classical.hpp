#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "covlab/error.hpp"
#include "covlab/perm.hpp"
#include "covlab/perm_group.hpp"

namespace covlab {

/// Small finite field GF(p^k) with elements encoded 0..q-1 as base-p digit
/// vectors (polynomials in the generator, constant term least significant).
class FiniteField {
 public:
  FiniteField(std::size_t p, std::size_t k, std::vector<std::size_t> modulus_low)
      : p_(p), k_(k), q_(1) {
    for (std::size_t i = 0; i < k; ++i) q_ *= p;
    add_.assign(q_ * q_, 0);
    mul_.assign(q_ * q_, 0);
    for (std::size_t a = 0; a < q_; ++a)
      for (std::size_t b = 0; b < q_; ++b) {
        auto da = digits(a), db = digits(b);
        std::vector<std::size_t> s(k);
        for (std::size_t i = 0; i < k; ++i) s[i] = (da[i] + db[i]) % p;
        add_[a * q_ + b] = encode(s);
        // Schoolbook product, then reduce with x^k = -(modulus_low).
        std::vector<std::size_t> prod(2 * k, 0);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
        for (std::size_t d = 2 * k - 1; d >= k; --d) {
          const auto c = prod[d];
          prod[d] = 0;
          for (std::size_t i = 0; i < k; ++i) prod[d - k + i] = (prod[d - k + i] + (p - modulus_low[i]) * c) % p;
        }
        prod.resize(k);
        mul_[a * q_ + b] = encode(prod);
      }
    for (std::size_t a = 1; a < q_; ++a) {
      std::size_t x = 1, ord = 0;
      do {
        x = mul(x, a);
        ++ord;
      } while (x != 1);
      if (ord == q_ - 1) {
        primitive_ = a;
        break;
      }
    }
    if (primitive_ == 0) throw PreconditionError("modulus is not irreducible");
  }

  /// Fields used by the catalog: prime fields and GF(4), GF(8), GF(9).
  static FiniteField of_order(std::size_t q) {
    switch (q) {
      case 2: case 3: case 5: case 7: case 11: case 13: return FiniteField(q, 1, {0});
      case 4: return FiniteField(2, 2, {1, 1});   // x^2 + x + 1
      case 8: return FiniteField(2, 3, {1, 1, 0});  // x^3 + x + 1
      case 9: return FiniteField(3, 2, {1, 0});   // x^2 + 1
      default: throw PreconditionError("unsupported field order " + std::to_string(q));
    }
  }

  std::size_t order() const { return q_; }
  std::size_t characteristic() const { return p_; }
  std::size_t degree() const { return k_; }
  std::size_t primitive() const { return primitive_; }

  std::size_t add(std::size_t a, std::size_t b) const { return add_[a * q_ + b]; }
  std::size_t mul(std::size_t a, std::size_t b) const { return mul_[a * q_ + b]; }
  std::size_t neg(std::size_t a) const {
    for (std::size_t b = 0; b < q_; ++b)
      if (add(a, b) == 0) return b;
    return 0;
  }
  std::size_t inv(std::size_t a) const {
    if (a == 0) throw PreconditionError("inverse of zero");
    for (std::size_t b = 1; b < q_; ++b)
      if (mul(a, b) == 1) return b;
    return 0;
  }
  std::size_t frobenius(std::size_t a) const {
    std::size_t r = 1;
    for (std::size_t i = 0; i < p_; ++i) r = mul(r, a);
    return r;
  }

 private:
  std::vector<std::size_t> digits(std::size_t a) const {
    std::vector<std::size_t> d(k_);
    for (std::size_t i = 0; i < k_; ++i, a /= p_) d[i] = a % p_;
    return d;
  }
  std::size_t encode(const std::vector<std::size_t>& d) const {
    std::size_t a = 0;
    for (std::size_t i = k_; i-- > 0;) a = a * p_ + d[i];
    return a;
  }

  std::size_t p_, k_, q_;
  std::size_t primitive_ = 0;
  std::vector<std::size_t> add_, mul_;
};

namespace detail {

template <class F>
Permutation perm_from_map(std::size_t n, F&& f) {
  std::vector<std::size_t> im(n);
  for (std::size_t i = 0; i < n; ++i) im[i] = f(i);
  return Permutation::from_images(std::span<const std::size_t>(im));
}

}  // namespace detail

/// AGL(1, q) on q points: x -> ax + b. Field element e is point e (0-based).
inline PermGroup affine_line_group(std::size_t q) {
  const auto f = FiniteField::of_order(q);
  std::vector<Permutation> gens;
  gens.push_back(detail::perm_from_map(q, [&](std::size_t x) { return f.add(x, 1); }));
  gens.push_back(detail::perm_from_map(q, [&](std::size_t x) { return f.mul(x, f.primitive()); }));
  return PermGroup(q, std::move(gens));
}

/// AGL(2, 3) on 9 points; vector (x, y) is point x + 3y (0-based).
inline PermGroup affine_plane_group_gf3() {
  auto pt = [](std::size_t x, std::size_t y) { return x % 3 + 3 * (y % 3); };
  auto map = [&](std::array<std::size_t, 4> a, std::array<std::size_t, 2> b) {
    return detail::perm_from_map(9, [&](std::size_t v) {
      const auto x = v % 3, y = v / 3;
      return pt(a[0] * x + a[1] * y + b[0], a[2] * x + a[3] * y + b[1]);
    });
  };
  return PermGroup(9, {map({1, 0, 0, 1}, {1, 0}), map({1, 1, 0, 1}, {0, 0}), map({0, 1, 1, 0}, {0, 0}),
                       map({2, 0, 0, 1}, {0, 0})});
}

/// Affine map x -> Ax + a on GF(2)^3. The vector with coordinates (x1, x2, x3)
/// is point x1 + 2 x2 + 4 x3 (0-based; 1-based label adds one). Rows of A given.
inline Permutation affine_map_gf2_3(const std::array<std::array<int, 3>, 3>& a, const std::array<int, 3>& t) {
  return detail::perm_from_map(8, [&](std::size_t v) {
    std::size_t out = 0;
    for (std::size_t r = 0; r < 3; ++r) {
      int bit = t[r];
      for (std::size_t c = 0; c < 3; ++c) bit ^= a[r][c] & static_cast<int>((v >> c) & 1U);
      out |= static_cast<std::size_t>(bit & 1) << r;
    }
    return out;
  });
}

/// All affine transformations of GF(2)^3, order 1344.
inline PermGroup affine_group_gf2_3() {
  const std::array<std::array<int, 3>, 3> id{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  const std::array<std::array<int, 3>, 3> transvection{{{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}};
  const std::array<std::array<int, 3>, 3> cycle{{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}};
  return PermGroup(8, {affine_map_gf2_3(id, {1, 0, 0}), affine_map_gf2_3(transvection, {0, 0, 0}),
                       affine_map_gf2_3(cycle, {0, 0, 0})});
}

/// GL(3, 2) on the 7 nonzero vectors of GF(2)^3 (vector v is point v - 1), order 168.
inline PermGroup linear_group_gf2_3_on_7() {
  auto lin = [](const std::array<std::array<int, 3>, 3>& a) {
    return detail::perm_from_map(7, [&](std::size_t p) {
      const auto v = p + 1;
      std::size_t out = 0;
      for (std::size_t r = 0; r < 3; ++r) {
        int bit = 0;
        for (std::size_t c = 0; c < 3; ++c) bit ^= a[r][c] & static_cast<int>((v >> c) & 1U);
        out |= static_cast<std::size_t>(bit & 1) << r;
      }
      return out - 1;
    });
  };
  return PermGroup(7, {lin({{{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}}), lin({{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}})});
}

/// Projective semilinear group on the q + 1 points of the projective line:
/// field element e is point e, infinity is point q. With `semilinear` false
/// this is PGL(2, q).
inline PermGroup projective_line_group(std::size_t q, bool semilinear) {
  const auto f = FiniteField::of_order(q);
  const std::size_t inf = q;
  std::vector<Permutation> gens;
  gens.push_back(detail::perm_from_map(q + 1, [&](std::size_t x) { return x == inf ? inf : f.add(x, 1); }));
  gens.push_back(
      detail::perm_from_map(q + 1, [&](std::size_t x) { return x == inf ? inf : f.mul(x, f.primitive()); }));
  // x -> -1/x
  gens.push_back(detail::perm_from_map(q + 1, [&](std::size_t x) {
    if (x == inf) return std::size_t{0};
    if (x == 0) return inf;
    return f.neg(f.inv(x));
  }));
  if (semilinear && f.degree() > 1)
    gens.push_back(detail::perm_from_map(q + 1, [&](std::size_t x) { return x == inf ? inf : f.frobenius(x); }));
  return PermGroup(q + 1, std::move(gens));
}

}  // namespace covlab
