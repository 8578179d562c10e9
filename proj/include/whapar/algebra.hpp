#pragma once

#include <optional>
#include <string>
#include <vector>

#include "whapar/report.hpp"
#include "whapar/tensor.hpp"

namespace whapar {

// Finite-dimensional unital algebra by structure constants:
// mult(i,j,k) = coefficient of e_k in e_i e_j.
struct FinDimAlgebra {
  std::size_t dim = 0;
  Tensor3 mult;
  Vec unit;
  std::vector<std::string> labels;

  FinDimAlgebra() = default;
  FinDimAlgebra(std::size_t n) : dim(n), mult(n, n, n), unit(n), labels(n) {}

  Vec multiply(const Vec& x, const Vec& y) const;
  // Left/right multiplication operators of an element.
  Matrix left_mult(const Vec& x) const;
  Matrix right_mult(const Vec& x) const;
  std::string label(std::size_t i) const {
    return labels.size() > i && !labels[i].empty() ? labels[i] : "e" + std::to_string(i);
  }
};

// The full matrix algebra End(Q^m) with basis E_{pq} at index p*m+q.
FinDimAlgebra matrix_algebra(std::size_t m);

// Finite-dimensional coalgebra: comult(i,j,k) = coefficient of e_j (x) e_k in
// Delta(e_i); counit is a linear functional.
struct FinDimCoalgebra {
  std::size_t dim = 0;
  Tensor3 comult;
  Vec counit;

  FinDimCoalgebra() = default;
  FinDimCoalgebra(std::size_t n) : dim(n), comult(n, n, n), counit(n) {}

  Vec delta(const Vec& x) const;        // H -> H (x) H
  Vec delta2(const Vec& x) const;       // H -> H (x) H (x) H, (Delta (x) id) Delta
  Rat eps(const Vec& x) const;
};

struct WeakHopfAlgebra {
  FinDimAlgebra alg;
  FinDimCoalgebra coalg;
  Matrix antipode;                       // S(e_j) = sum_i antipode(i,j) e_i
  std::optional<Matrix> antipode_inv;    // supplied and verified, or computed

  std::size_t dim() const { return alg.dim; }
  Vec S(const Vec& x) const { return antipode.apply(x); }
  Vec Sinv(const Vec& x) const;
  bool has_antipode_inv() const { return antipode_inv.has_value(); }

  Vec eps_t(const Vec& x) const;  // eps(1_1 h) 1_2
  Vec eps_s(const Vec& x) const;  // 1_1 eps(h 1_2)
};

struct CanonicalProjections {
  Matrix eps_t, eps_s;
  Subspace Ht, Hs;
};

CheckReport check_algebra(const FinDimAlgebra& a, const SamplePlan& plan = {});
CheckReport check_coalgebra(const FinDimCoalgebra& c, const SamplePlan& plan = {});

// Axioms (iii)-(viii) on top of algebra/coalgebra checks. Also verifies a
// supplied antipode inverse, or tries to compute one and notes the outcome.
CheckReport check_weak_hopf(const WeakHopfAlgebra& h, const SamplePlan& plan = {});

// eps_t/eps_s matrices, their images, and the membership characterizations of
// H_t and H_s (z in H_t iff Delta(z) = 1_1 z (x) 1_2, and the H_s twin, plus
// Delta(H_t) in H (x) H_t and Delta(H_s) in H_s (x) H).
CanonicalProjections canonical_projections(const WeakHopfAlgebra& h);

// The five counital antipode identities:
//  ID1: h_1 (x) h_2 S(h_3) = 1_1 h (x) 1_2
//  ID2: S(h_1) h_2 (x) h_3 = 1_1 (x) h 1_2
//  ID3: S(1) = 1
//  ID4: h_1 (x) S(h_2) h_3 = h 1_1 (x) S(1_2)
//  ID5: h_1 S(h_2) (x) h_3 = S(1_1) (x) 1_2 h
CheckReport lemma21_suite(const WeakHopfAlgebra& h);

bool is_cocommutative(const WeakHopfAlgebra& h);

// Ensure an antipode inverse is available: verify the supplied one or invert.
// Returns a report naming the failure if S is singular or the pair mismatches.
CheckReport ensure_antipode_inverse(WeakHopfAlgebra& h);

}  // namespace whapar
