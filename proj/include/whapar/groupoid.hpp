#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "whapar/report.hpp"

namespace whapar {

// A finite groupoid with explicit identity arrows. compose(g,h) = g o h is
// defined exactly when source(g) = target(h) (the composable pairs).
struct FiniteGroupoid {
  std::vector<std::string> arrow_names;
  std::vector<int> src, dst;                 // arrow -> object index
  std::vector<int> inv;                      // arrow -> arrow
  std::vector<std::vector<int>> comp;        // comp[g][h] = g o h, or -1
  std::vector<std::string> object_names;
  std::vector<int> identity_arrow;           // object -> arrow

  std::size_t size() const { return arrow_names.size(); }
  int compose(int g, int h) const { return comp[g][h]; }
  bool composable(int g, int h) const { return src[g] == dst[h]; }

  // Throws InputError naming the violated invariant.
  void validate() const;
};

// Groups as one-object groupoids.
FiniteGroupoid cyclic_group(std::size_t k);
FiniteGroupoid klein_four_group();
FiniteGroupoid from_group_table(const std::vector<std::vector<int>>& table,
                                const std::vector<std::string>& names);
// k objects with only identity arrows.
FiniteGroupoid discrete_groupoid(std::size_t k);
// Pair groupoid on k objects: arrows (i <- j) with (i<-j)(j<-l) = (i<-l).
FiniteGroupoid pair_groupoid(std::size_t k);

// Birget-Rhodes expansion: elements (A, g) with id_{src(g)}, g^{-1} in A and
// A a subset of Y_g = {h : dst(h) = src(g)}; (A,g)(B,h) = (B, gh) iff
// composable and A = hB. Subsets are bitmasks over the fixed arrow order.
struct BirgetRhodesGroupoid {
  FiniteGroupoid gpd;                                   // the expansion itself
  std::vector<std::pair<std::uint64_t, int>> elements;  // (mask, arrow) per arrow of gpd
};

BirgetRhodesGroupoid birget_rhodes(const FiniteGroupoid& g);

// |G^BR| for a one-object groupoid (group) by the independent counting
// formula sum_g 2^(|G| - |{e} U {g^-1}|); used as an oracle in tests.
std::size_t birget_rhodes_count_group(const FiniteGroupoid& group);

}  // namespace whapar
