#pragma once

#include "relca/engine.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace relca {

inline constexpr std::size_t kDefaultBudget = std::size_t{1} << 20;

// kDefaultBudget unless RELCA_BUDGET holds a positive integer.
std::size_t default_budget();

// Stable textual identity of a family: its scaled attributes per context.
std::string family_key(const Family& o);

// All families between lo and hi (per-context attribute inclusion), in
// canonical order. Throws BudgetExceeded when the interval is larger than budget.
std::vector<Family> enumerate_interval(const Family& lo, const Family& hi, const RelationalContextFamily& rcf,
                                       std::size_t budget);

// Number of families in [lo, hi], saturating at SIZE_MAX; 0 unless lo <= hi.
std::size_t interval_size(const Family& lo, const Family& hi);

struct EnumerateOptions {
  std::size_t budget = kDefaultBudget;
  bool prune = true;
  Exec exec = Exec::Serial;
  // Candidates tested per round before pruning marks are applied. Fixed so that
  // reports do not depend on the thread count.
  std::size_t batch = 16;
};

struct SolutionSpaceReport {
  Family lfp;
  Family gfp;
  std::size_t interval_size = 0;
  std::size_t tested = 0;
  std::size_t pruned_count = 0;
  std::vector<Family> acceptable;  // canonical order
  bool is_lattice = false;
};

// The acceptable families, found by testing the interval between the two
// semantics. With pruning, a non-acceptable candidate below its upper closure
// image (resp. above its lower image) rules out the half-open interval
// between it and that image.
SolutionSpaceReport enumerate_acceptable(const RelationalContextFamily& rcf, const EnumerateOptions& options = {});

struct ClosureImageReport {
  Family lower;  // ef_closure(pq_closure(O))
  Family upper;  // pq_closure(ef_closure(O))
  bool lower_leq_upper = false;
  bool strict = false;
  bool acceptable = false;
  bool below_upper = false;  // O <= upper: [O, upper[ has no acceptable family
  bool above_lower = false;  // lower <= O: ]lower, O] has no acceptable family
};

ClosureImageReport closure_image_report(const Family& o, const RelationalContextFamily& rcf, Exec exec = Exec::Serial);

// Closed under pairwise meet and join (hence complete, being finite).
bool verify_complete_sublattice(const std::vector<Family>& families, const RelationalContextFamily& rcf);

}  // namespace relca
