#include "whapar/groupoid.hpp"

#include <algorithm>
#include <map>

namespace whapar {

void FiniteGroupoid::validate() const {
  std::size_t n = size();
  if (src.size() != n || dst.size() != n || inv.size() != n || comp.size() != n)
    throw InputError("groupoid: field sizes differ from arrow count");
  for (std::size_t i = 0; i < n; ++i)
    if (comp[i].size() != n) throw InputError("groupoid: ragged composition table");
  if (identity_arrow.size() != object_names.size())
    throw InputError("groupoid: one identity arrow per object required");
  for (std::size_t x = 0; x < identity_arrow.size(); ++x) {
    int e = identity_arrow[x];
    if (e < 0 || (std::size_t)e >= n) throw InputError("groupoid: identity arrow out of range");
    if (src[e] != (int)x || dst[e] != (int)x)
      throw InputError("groupoid: identity arrow of object '" + object_names[x] +
                       "' is not an endo-arrow of it");
  }
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h) {
      bool defined = comp[g][h] >= 0;
      if (defined != composable(g, h))
        throw InputError("groupoid: compose(" + arrow_names[g] + "," + arrow_names[h] +
                         ") defined iff source matches target violated");
      if (defined) {
        int gh = comp[g][h];
        if (src[gh] != src[h] || dst[gh] != dst[g])
          throw InputError("groupoid: compose endpoint mismatch at (" + arrow_names[g] + "," +
                           arrow_names[h] + ")");
      }
    }
  // identities act neutrally
  for (std::size_t g = 0; g < n; ++g) {
    if (comp[identity_arrow[dst[g]]][g] != (int)g || comp[g][identity_arrow[src[g]]] != (int)g)
      throw InputError("groupoid: identity law fails at " + arrow_names[g]);
  }
  // associativity on composable triples
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h) {
      if (!composable(g, h)) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (!composable(h, k)) continue;
        if (comp[comp[g][h]][k] != comp[g][comp[h][k]])
          throw InputError("groupoid: associativity fails at (" + arrow_names[g] + "," +
                           arrow_names[h] + "," + arrow_names[k] + ")");
      }
    }
  // inverses
  for (std::size_t g = 0; g < n; ++g) {
    int gi = inv[g];
    if (gi < 0 || (std::size_t)gi >= n) throw InputError("groupoid: inverse out of range");
    if (src[gi] != dst[g] || dst[gi] != src[g])
      throw InputError("groupoid: inverse endpoints wrong at " + arrow_names[g]);
    if (comp[g][gi] != identity_arrow[dst[g]] || comp[gi][g] != identity_arrow[src[g]])
      throw InputError("groupoid: g g^-1 != id at " + arrow_names[g]);
  }
}

FiniteGroupoid from_group_table(const std::vector<std::vector<int>>& table,
                                const std::vector<std::string>& names) {
  std::size_t n = table.size();
  FiniteGroupoid g;
  g.arrow_names = names;
  g.src.assign(n, 0);
  g.dst.assign(n, 0);
  g.comp.assign(n, std::vector<int>(n, -1));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g.comp[i][j] = table[i][j];
  g.inv.assign(n, -1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (table[i][j] == 0) g.inv[i] = (int)j;
  g.object_names = {"*"};
  g.identity_arrow = {0};
  g.validate();
  return g;
}

FiniteGroupoid cyclic_group(std::size_t k) {
  std::vector<std::vector<int>> table(k, std::vector<int>(k));
  std::vector<std::string> names(k);
  for (std::size_t i = 0; i < k; ++i) {
    names[i] = i == 0 ? "e" : (k <= 2 ? "g" : "a" + std::to_string(i));
    for (std::size_t j = 0; j < k; ++j) table[i][j] = (int)((i + j) % k);
  }
  return from_group_table(table, names);
}

FiniteGroupoid klein_four_group() {
  // {e,a,b,c} with a^2=b^2=c^2=e, ab=c
  std::vector<std::vector<int>> t = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  return from_group_table(t, {"e", "a", "b", "c"});
}

FiniteGroupoid discrete_groupoid(std::size_t k) {
  FiniteGroupoid g;
  for (std::size_t x = 0; x < k; ++x) {
    g.object_names.push_back("X" + std::to_string(x + 1));
    g.arrow_names.push_back("id" + std::to_string(x + 1));
    g.src.push_back((int)x);
    g.dst.push_back((int)x);
    g.inv.push_back((int)x);
    g.identity_arrow.push_back((int)x);
  }
  g.comp.assign(k, std::vector<int>(k, -1));
  for (std::size_t x = 0; x < k; ++x) g.comp[x][x] = (int)x;
  g.validate();
  return g;
}

FiniteGroupoid pair_groupoid(std::size_t k) {
  FiniteGroupoid g;
  for (std::size_t x = 0; x < k; ++x) g.object_names.push_back("X" + std::to_string(x + 1));
  auto idx = [k](std::size_t i, std::size_t j) { return i * k + j; };
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      g.arrow_names.push_back("a" + std::to_string(i + 1) + std::to_string(j + 1));
      g.src.push_back((int)j);
      g.dst.push_back((int)i);
      g.inv.push_back((int)idx(j, i));
    }
  g.comp.assign(k * k, std::vector<int>(k * k, -1));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t l = 0; l < k; ++l) g.comp[idx(i, j)][idx(j, l)] = (int)idx(i, l);
  for (std::size_t x = 0; x < k; ++x) g.identity_arrow.push_back((int)idx(x, x));
  g.validate();
  return g;
}

BirgetRhodesGroupoid birget_rhodes(const FiniteGroupoid& g) {
  g.validate();
  std::size_t n = g.size();
  if (n > 62) throw InputError("birget_rhodes: arrow count exceeds bitmask capacity");

  BirgetRhodesGroupoid br;
  // Enumerate (A, g) with id_{src(g)}, g^-1 in A, A subset of Y_g, in
  // (arrow, mask) lexicographic order for determinism.
  for (std::size_t a = 0; a < n; ++a) {
    std::uint64_t y = 0;
    for (std::size_t h = 0; h < n; ++h)
      if (g.dst[h] == g.src[a]) y |= (1ULL << h);
    std::uint64_t need = (1ULL << g.identity_arrow[g.src[a]]) | (1ULL << g.inv[a]);
    std::uint64_t free = y & ~need;
    // iterate subsets of `free`, ordered
    std::vector<std::uint64_t> masks;
    std::uint64_t sub = 0;
    while (true) {
      masks.push_back(need | sub);
      if (sub == free) break;
      sub = (sub - free) & free;
    }
    std::sort(masks.begin(), masks.end());
    for (auto m : masks) br.elements.emplace_back(m, (int)a);
  }
  std::sort(br.elements.begin(), br.elements.end(),
            [](const auto& x, const auto& y) { return x.second != y.second ? x.second < y.second : x.first < y.first; });

  std::map<std::pair<std::uint64_t, int>, int> index;
  for (std::size_t i = 0; i < br.elements.size(); ++i) index[br.elements[i]] = (int)i;

  auto set_str = [&](std::uint64_t m) {
    std::string s = "{";
    bool first = true;
    for (std::size_t h = 0; h < n; ++h)
      if (m & (1ULL << h)) {
        if (!first) s += ",";
        s += g.arrow_names[h];
        first = false;
      }
    return s + "}";
  };

  FiniteGroupoid& e = br.gpd;
  std::size_t m = br.elements.size();
  e.comp.assign(m, std::vector<int>(m, -1));
  // Objects of the expansion are the elements (A, id_X); source of (A,g) is
  // (A, id_src(g)), target is (gA, id_dst(g)), inverse is (gA, g^-1).
  auto apply_arrow = [&](int arr, std::uint64_t mask) {
    std::uint64_t out = 0;
    for (std::size_t h = 0; h < n; ++h)
      if (mask & (1ULL << h)) out |= (1ULL << g.compose(arr, (int)h));
    return out;
  };
  for (std::size_t i = 0; i < m; ++i) {
    auto [mask, arr] = br.elements[i];
    e.arrow_names.push_back("(" + set_str(mask) + "," + g.arrow_names[arr] + ")");
    e.src.push_back(0);  // filled in after objects are numbered
    e.dst.push_back(0);
    std::pair<std::uint64_t, int> invel{apply_arrow(arr, mask), g.inv[arr]};
    if (!index.count(invel)) throw InternalInconsistencyError("birget_rhodes: inverse element missing");
    e.inv.push_back(index[invel]);
  }
  std::map<std::pair<std::uint64_t, int>, int> obj_index;
  for (std::size_t i = 0; i < m; ++i) {
    auto [mask, arr] = br.elements[i];
    if (arr == g.identity_arrow[g.src[arr]] && g.src[arr] == g.dst[arr]) {
      // an identity-shaped element (A, id_X); these are the expansion's units
      obj_index[br.elements[i]] = (int)e.object_names.size();
      e.object_names.push_back(e.arrow_names[i]);
      e.identity_arrow.push_back((int)i);
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    auto [mask, arr] = br.elements[i];
    std::uint64_t gmask = apply_arrow(arr, mask);
    e.src[i] = obj_index.at({mask, g.identity_arrow[g.src[arr]]});
    e.dst[i] = obj_index.at({gmask, g.identity_arrow[g.dst[arr]]});
  }
  // partial multiplication: (A,g)(B,h) = (B, gh) iff composable and A = hB
  for (std::size_t i = 0; i < m; ++i) {
    auto [ma, ga] = br.elements[i];
    for (std::size_t j = 0; j < m; ++j) {
      auto [mb, gb] = br.elements[j];
      if (!g.composable(ga, gb)) continue;
      if (apply_arrow(gb, mb) != ma) continue;
      std::pair<std::uint64_t, int> prod{mb, g.compose(ga, gb)};
      if (!index.count(prod)) throw InternalInconsistencyError("birget_rhodes: product escapes the expansion");
      e.comp[i][j] = index[prod];
    }
  }
  e.validate();
  return br;
}

std::size_t birget_rhodes_count_group(const FiniteGroupoid& group) {
  if (group.object_names.size() != 1) throw InputError("counting formula applies to groups only");
  std::size_t n = group.size(), total = 0;
  for (std::size_t g = 0; g < n; ++g) {
    std::size_t forced = (group.inv[g] == group.identity_arrow[0]) ? 1 : 2;
    total += (std::size_t)1 << (n - forced);
  }
  return total;
}

}  // namespace whapar
