#pragma once

#include "whapar/algebra.hpp"
#include "whapar/groupoid.hpp"

namespace whapar {

// Groupoid algebra QG: basis = arrows, product = composition or 0,
// unit = sum of identity arrows, Delta(g) = g (x) g, eps(g) = 1, S(g) = g^-1.
WeakHopfAlgebra groupoid_algebra(const FiniteGroupoid& g);

// The 8-dimensional pairing of two copies of Sweedler's 4-dimensional Hopf
// algebra: basis {e_1,e_x,e_g,e_h,f_1,f_x,f_g,f_h} with e-block and f-block
// each a copy of H4 and e f = f e = 0.
WeakHopfAlgebra sweedler_pair();

// Sweedler's H4 itself (one block), basis {1,x,g,h}.
WeakHopfAlgebra sweedler_h4();

WeakHopfAlgebra trivial_group_algebra();

}  // namespace whapar
