#pragma once

#include <cstddef>
#include <vector>

#include "whapar/matrix.hpp"

namespace whapar {

// Dense 3-index tensor. For a multiplication table, t(i,j,k) is the
// coefficient of basis k in e_i * e_j; for a comultiplication table,
// t(i,j,k) is the coefficient of e_j (x) e_k in Delta(e_i).
struct Tensor3 {
  std::size_t d0 = 0, d1 = 0, d2 = 0;
  std::vector<Rat> v;

  Tensor3() = default;
  Tensor3(std::size_t a, std::size_t b, std::size_t c) : d0(a), d1(b), d2(c), v(a * b * c) {}

  Rat& at(std::size_t i, std::size_t j, std::size_t k) { return v[(i * d1 + j) * d2 + k]; }
  const Rat& at(std::size_t i, std::size_t j, std::size_t k) const { return v[(i * d1 + j) * d2 + k]; }
  bool operator==(const Tensor3& o) const { return d0 == o.d0 && d1 == o.d1 && d2 == o.d2 && v == o.v; }
};

// Leg calculus on elements of H^{(x)k} stored as dense vectors of length n^k,
// row-major with the leftmost leg major: index(i_0,...,i_{k-1}) =
// ((i_0*n + i_1)*n + ...)*n + i_{k-1}. This is the single global tensor
// ordering convention used everywhere.
class LegOps {
public:
  LegOps(std::size_t n, std::size_t arity) : n_(n), k_(arity) {}

  std::size_t n() const { return n_; }
  std::size_t arity() const { return k_; }
  std::size_t size() const;

  // x (x) y where x has this arity and y has arity ky.
  static Vec tensor(const Vec& x, std::size_t kx, const Vec& y, std::size_t ky, std::size_t n);

  // Apply an n x n linear map to one leg.
  Vec apply_leg(const Vec& t, std::size_t leg, const Matrix& m) const;

  // Contract adjacent legs (leg, leg+1) through a multiplication table;
  // result has arity k-1.
  Vec mult_legs(const Vec& t, std::size_t leg, const Tensor3& mult) const;

  // Expand one leg through a comultiplication table; result has arity k+1
  // with the two new legs at positions (leg, leg+1).
  Vec comult_leg(const Vec& t, std::size_t leg, const Tensor3& comult) const;

  // Contract one leg with a linear functional; result has arity k-1.
  Vec counit_leg(const Vec& t, std::size_t leg, const Vec& eps) const;

  // Swap two legs.
  Vec swap_legs(const Vec& t, std::size_t a, std::size_t b) const;

private:
  std::size_t n_, k_;
};

// Componentwise product on H^{(x)k}: (x1(x)...(x)xk)(y1(x)...(x)yk) =
// x1y1 (x) ... (x) xkyk, extended bilinearly.
Vec tensor_algebra_mult(const Vec& x, const Vec& y, std::size_t arity, const Tensor3& mult);

}  // namespace whapar
