#include "whapar/report.hpp"

#include <random>
#include <sstream>

namespace whapar {

std::string CheckReport::summary() const {
  std::ostringstream os;
  os << passed.size() << " passed, " << failures.size() << " failed, " << skipped.size()
     << " skipped";
  if (!failures.empty()) {
    os << "; first failure: " << failures.front().axiom << " at (";
    for (std::size_t i = 0; i < failures.front().idx.size(); ++i) {
      if (i) os << ',';
      os << failures.front().idx[i];
    }
    os << ")";
  }
  return os.str();
}

bool SamplePlan::is_exhaustive_for(const std::vector<std::size_t>& dims) const {
  if (exhaustive) return true;
  std::size_t total = 1;
  bool overflow = false;
  for (auto d : dims) {
    if (d == 0) return true;
    if (total > budget / d + 1) overflow = true;
    total *= d;
  }
  std::size_t maxdim = 0;
  for (auto d : dims) maxdim = std::max(maxdim, d);
  return maxdim < exhaustive_below && !overflow && total <= budget * 4;
}

void SamplePlan::for_each_tuple(const std::vector<std::size_t>& dims,
                                const std::function<void(const std::vector<std::size_t>&)>& fn) const {
  for (auto d : dims)
    if (d == 0) return;
  if (is_exhaustive_for(dims)) {
    std::vector<std::size_t> t(dims.size(), 0);
    if (dims.empty()) {
      fn(t);
      return;
    }
    while (true) {
      fn(t);
      std::size_t l = dims.size() - 1;
      while (true) {
        if (++t[l] < dims[l]) break;
        t[l] = 0;
        if (l == 0) return;
        --l;
      }
    }
  }
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> t(dims.size());
  for (std::size_t s = 0; s < budget; ++s) {
    for (std::size_t i = 0; i < dims.size(); ++i) t[i] = rng() % dims[i];
    fn(t);
  }
}

}  // namespace whapar
