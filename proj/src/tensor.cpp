#include "whapar/tensor.hpp"

namespace whapar {

namespace {

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

std::size_t LegOps::size() const { return ipow(n_, k_); }

Vec LegOps::tensor(const Vec& x, std::size_t kx, const Vec& y, std::size_t ky, std::size_t n) {
  (void)kx;
  (void)ky;
  Vec r(x.size() * y.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < y.size(); ++j)
      if (!y[j].is_zero()) r[i * y.size() + j] = x[i] * y[j];
  }
  return r;
}

// Decompose an index as (outer, mid, inner) with mid the addressed leg block.
// stride(leg) = n^(k-1-leg); outer enumerates legs to the left.
Vec LegOps::apply_leg(const Vec& t, std::size_t leg, const Matrix& m) const {
  if (t.size() != size() || leg >= k_) throw InputError("apply_leg: arity mismatch");
  std::size_t inner = ipow(n_, k_ - 1 - leg);
  std::size_t outer = t.size() / (inner * n_);
  Vec r(t.size());
  for (std::size_t o = 0; o < outer; ++o)
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t in = 0; in < inner; ++in) {
        const Rat& x = t[(o * n_ + i) * inner + in];
        if (x.is_zero()) continue;
        for (std::size_t j = 0; j < n_; ++j) {
          if (!m.at(j, i).is_zero()) r[(o * n_ + j) * inner + in] += m.at(j, i) * x;
        }
      }
  return r;
}

Vec LegOps::mult_legs(const Vec& t, std::size_t leg, const Tensor3& mult) const {
  if (t.size() != size() || leg + 1 >= k_) throw InputError("mult_legs: arity mismatch");
  std::size_t inner = ipow(n_, k_ - 2 - leg);
  std::size_t outer = t.size() / (inner * n_ * n_);
  Vec r(t.size() / n_);
  for (std::size_t o = 0; o < outer; ++o)
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        for (std::size_t in = 0; in < inner; ++in) {
          const Rat& x = t[((o * n_ + i) * n_ + j) * inner + in];
          if (x.is_zero()) continue;
          for (std::size_t k = 0; k < n_; ++k) {
            const Rat& c = mult.at(i, j, k);
            if (!c.is_zero()) r[(o * n_ + k) * inner + in] += c * x;
          }
        }
  return r;
}

Vec LegOps::comult_leg(const Vec& t, std::size_t leg, const Tensor3& comult) const {
  if (t.size() != size() || leg >= k_) throw InputError("comult_leg: arity mismatch");
  std::size_t inner = ipow(n_, k_ - 1 - leg);
  std::size_t outer = t.size() / (inner * n_);
  Vec r(t.size() * n_);
  for (std::size_t o = 0; o < outer; ++o)
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t in = 0; in < inner; ++in) {
        const Rat& x = t[(o * n_ + i) * inner + in];
        if (x.is_zero()) continue;
        for (std::size_t a = 0; a < n_; ++a)
          for (std::size_t b = 0; b < n_; ++b) {
            const Rat& c = comult.at(i, a, b);
            if (!c.is_zero()) r[((o * n_ + a) * n_ + b) * inner + in] += c * x;
          }
      }
  return r;
}

Vec LegOps::counit_leg(const Vec& t, std::size_t leg, const Vec& eps) const {
  if (t.size() != size() || leg >= k_) throw InputError("counit_leg: arity mismatch");
  std::size_t inner = ipow(n_, k_ - 1 - leg);
  std::size_t outer = t.size() / (inner * n_);
  Vec r(t.size() / n_);
  for (std::size_t o = 0; o < outer; ++o)
    for (std::size_t i = 0; i < n_; ++i) {
      if (eps[i].is_zero()) continue;
      for (std::size_t in = 0; in < inner; ++in) {
        const Rat& x = t[(o * n_ + i) * inner + in];
        if (!x.is_zero()) r[o * inner + in] += eps[i] * x;
      }
    }
  return r;
}

Vec LegOps::swap_legs(const Vec& t, std::size_t a, std::size_t b) const {
  if (t.size() != size() || a >= k_ || b >= k_) throw InputError("swap_legs: arity mismatch");
  if (a == b) return t;
  Vec r(t.size());
  std::vector<std::size_t> digits(k_);
  for (std::size_t idx = 0; idx < t.size(); ++idx) {
    if (t[idx].is_zero()) continue;
    std::size_t rem = idx;
    for (std::size_t l = k_; l-- > 0;) {
      digits[l] = rem % n_;
      rem /= n_;
    }
    std::swap(digits[a], digits[b]);
    std::size_t out = 0;
    for (std::size_t l = 0; l < k_; ++l) out = out * n_ + digits[l];
    r[out] = t[idx];
  }
  return r;
}

Vec tensor_algebra_mult(const Vec& x, const Vec& y, std::size_t arity, const Tensor3& mult) {
  std::size_t n = mult.d0;
  std::size_t sz = x.size();
  Vec r(sz);
  std::vector<std::size_t> dx(arity), dy(arity);
  for (std::size_t ix = 0; ix < sz; ++ix) {
    if (x[ix].is_zero()) continue;
    std::size_t rem = ix;
    for (std::size_t l = arity; l-- > 0;) {
      dx[l] = rem % n;
      rem /= n;
    }
    for (std::size_t iy = 0; iy < sz; ++iy) {
      if (y[iy].is_zero()) continue;
      rem = iy;
      for (std::size_t l = arity; l-- > 0;) {
        dy[l] = rem % n;
        rem /= n;
      }
      Rat coeff = x[ix] * y[iy];
      // expand the componentwise products leg by leg
      std::vector<std::pair<std::size_t, Rat>> acc{{0, coeff}};
      for (std::size_t l = 0; l < arity && !acc.empty(); ++l) {
        std::vector<std::pair<std::size_t, Rat>> next;
        for (const auto& [base, c] : acc)
          for (std::size_t k = 0; k < n; ++k) {
            const Rat& m = mult.at(dx[l], dy[l], k);
            if (!m.is_zero()) next.emplace_back(base * n + k, c * m);
          }
        acc = std::move(next);
      }
      for (const auto& [idx, c] : acc) r[idx] += c;
    }
  }
  return r;
}

}  // namespace whapar
