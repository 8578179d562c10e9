#include "whapar/constructors.hpp"

namespace whapar {

WeakHopfAlgebra groupoid_algebra(const FiniteGroupoid& g) {
  g.validate();
  std::size_t n = g.size();
  WeakHopfAlgebra h;
  h.alg = FinDimAlgebra(n);
  h.coalg = FinDimCoalgebra(n);
  h.alg.labels = g.arrow_names;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      int k = g.compose((int)i, (int)j);
      if (k >= 0) h.alg.mult.at(i, j, (std::size_t)k) = Rat(1);
    }
  for (int e : g.identity_arrow) h.alg.unit[(std::size_t)e] = Rat(1);
  for (std::size_t i = 0; i < n; ++i) {
    h.coalg.comult.at(i, i, i) = Rat(1);
    h.coalg.counit[i] = Rat(1);
  }
  h.antipode = Matrix(n, n);
  for (std::size_t i = 0; i < n; ++i) h.antipode.at((std::size_t)g.inv[i], i) = Rat(1);
  h.antipode_inv = h.antipode;  // S(g) = g^-1 is involutive
  return h;
}

WeakHopfAlgebra trivial_group_algebra() { return groupoid_algebra(cyclic_group(1)); }

namespace {

// H4 tables on basis order {1, x, g, h} with x^2 = 0, g^2 = 1, h = xg = -gx.
struct H4Data {
  // prod[i][j] = (basis index, sign) or (-1, 0) when the product is 0.
  int prod_idx[4][4];
  int prod_sgn[4][4];
  // coproduct terms per basis element: list of (left, right, sign)
  std::vector<std::array<int, 3>> coprod[4];
  int counit[4];
  int s_idx[4], s_sgn[4];

  H4Data() {
    auto set = [&](int i, int j, int k, int s) {
      prod_idx[i][j] = k;
      prod_sgn[i][j] = s;
    };
    // 1,x,g,h = 0,1,2,3
    for (int j = 0; j < 4; ++j) set(0, j, j, 1), set(j, 0, j, 1);
    set(1, 1, -1, 0);        // x x = 0
    set(1, 2, 3, 1);         // x g = h
    set(1, 3, -1, 0);        // x h = x x g = 0
    set(2, 1, 3, -1);        // g x = -h
    set(2, 2, 0, 1);         // g g = 1
    set(2, 3, 1, -1);        // g h = -x
    set(3, 1, -1, 0);        // h x = 0
    set(3, 2, 1, 1);         // h g = x
    set(3, 3, -1, 0);        // h h = 0
    coprod[0] = {{0, 0, 1}};
    coprod[1] = {{1, 0, 1}, {2, 1, 1}};  // Delta(x) = x(x)1 + g(x)x
    coprod[2] = {{2, 2, 1}};
    coprod[3] = {{3, 2, 1}, {0, 3, 1}};  // Delta(h) = h(x)g + 1(x)h
    counit[0] = 1;
    counit[1] = 0;
    counit[2] = 1;
    counit[3] = 0;
    // S(1)=1, S(x)=h, S(g)=g, S(h)=-x
    s_idx[0] = 0; s_sgn[0] = 1;
    s_idx[1] = 3; s_sgn[1] = 1;
    s_idx[2] = 2; s_sgn[2] = 1;
    s_idx[3] = 1; s_sgn[3] = -1;
  }
};

// One or two H4 blocks packed into a weak Hopf algebra.
WeakHopfAlgebra sweedler_blocks(std::size_t blocks) {
  H4Data d;
  std::size_t n = 4 * blocks;
  WeakHopfAlgebra h;
  h.alg = FinDimAlgebra(n);
  h.coalg = FinDimCoalgebra(n);
  h.antipode = Matrix(n, n);
  Matrix sinv(n, n);
  const char* base[4] = {"1", "x", "g", "h"};
  for (std::size_t b = 0; b < blocks; ++b) {
    std::size_t off = 4 * b;
    std::string pre = blocks == 1 ? "" : (b == 0 ? "e" : "f");
    for (int i = 0; i < 4; ++i) {
      h.alg.labels[off + i] = pre.empty() ? base[i] : pre + base[i];
      h.coalg.counit[off + i] = Rat(d.counit[i]);
      h.antipode.at(off + d.s_idx[i], off + i) = Rat(d.s_sgn[i]);
      // S^-1: x -> -h, h -> x, fixed on 1 and g
      for (const auto& [to, from, sg] :
           std::vector<std::array<int, 3>>{{0, 0, 1}, {3, 1, -1}, {2, 2, 1}, {1, 3, 1}})
        if (from == i) sinv.at(off + to, off + i) = Rat(sg);
      for (const auto& t : d.coprod[i])
        h.coalg.comult.at(off + i, off + t[0], off + t[1]) = Rat(t[2]);
      for (int j = 0; j < 4; ++j)
        if (d.prod_idx[i][j] >= 0)
          h.alg.mult.at(off + i, off + j, off + d.prod_idx[i][j]) = Rat(d.prod_sgn[i][j]);
    }
    h.alg.unit[off] = Rat(1);
  }
  h.antipode_inv = sinv;
  return h;
}

}  // namespace

WeakHopfAlgebra sweedler_h4() { return sweedler_blocks(1); }
WeakHopfAlgebra sweedler_pair() { return sweedler_blocks(2); }

}  // namespace whapar
