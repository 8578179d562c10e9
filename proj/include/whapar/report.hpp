#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "whapar/matrix.hpp"

namespace whapar {

// One failed identity: which axiom, at which basis indices, and both sides.
struct Witness {
  std::string axiom;
  std::vector<long> idx;
  std::string lhs, rhs;
};

struct CheckReport {
  std::vector<std::string> passed;
  std::vector<Witness> failures;
  std::vector<std::pair<std::string, std::string>> skipped;  // (check, reason)
  std::vector<std::string> notes;

  bool ok() const { return failures.empty(); }

  void pass(const std::string& name) { passed.push_back(name); }
  void skip(const std::string& name, const std::string& why) { skipped.emplace_back(name, why); }
  void note(const std::string& text) { notes.push_back(text); }

  void fail(const std::string& axiom, std::vector<long> idx, const Vec& lhs, const Vec& rhs) {
    failures.push_back({axiom, std::move(idx), vec_str(lhs), vec_str(rhs)});
  }
  void fail_msg(const std::string& axiom, std::vector<long> idx, const std::string& lhs,
                const std::string& rhs) {
    failures.push_back({axiom, std::move(idx), lhs, rhs});
  }

  // Record an equality check; on mismatch stores a witness.
  bool expect_eq(const std::string& axiom, std::vector<long> idx, const Vec& lhs, const Vec& rhs) {
    if (lhs == rhs) return true;
    fail(axiom, std::move(idx), lhs, rhs);
    return false;
  }

  void merge(const CheckReport& o, const std::string& prefix = "") {
    for (const auto& p : o.passed) passed.push_back(prefix.empty() ? p : prefix + "/" + p);
    for (const auto& f : o.failures) {
      Witness w = f;
      if (!prefix.empty()) w.axiom = prefix + "/" + w.axiom;
      failures.push_back(w);
    }
    for (const auto& s : o.skipped)
      skipped.emplace_back(prefix.empty() ? s.first : prefix + "/" + s.first, s.second);
    for (const auto& n : o.notes) notes.push_back(n);
  }

  std::string summary() const;
};

// Iteration plan over tuple spaces. Exhaustive below the threshold (or when
// forced); otherwise a seeded deterministic sample, with the seed recorded in
// the report.
struct SamplePlan {
  bool exhaustive = true;
  std::uint64_t seed = 0x5eed5eed5eedULL;
  std::size_t budget = 4096;
  std::size_t exhaustive_below = 12;

  // Visit tuples from the product of ranges `dims`.
  void for_each_tuple(const std::vector<std::size_t>& dims,
                      const std::function<void(const std::vector<std::size_t>&)>& fn) const;
  bool is_exhaustive_for(const std::vector<std::size_t>& dims) const;
};

}  // namespace whapar
