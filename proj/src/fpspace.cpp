#include "relca/fpspace.hpp"

#include "relca/errors.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <unordered_set>

namespace relca {

std::size_t default_budget() {
  if (const char* env = std::getenv("RELCA_BUDGET")) {
    char* end = nullptr;
    auto v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultBudget;
}

std::string family_key(const Family& o) {
  std::string key;
  for (const auto& p : o.pairs) {
    key += p.k().id();
    key += '{';
    for (std::size_t m = p.k().base_count(); m < p.k().attribute_count(); ++m) {
      key += p.k().attributes()[m].text();
      key += ';';
    }
    key += '}';
  }
  return key;
}

namespace {

// The interval [lo, hi] as bitmasks over the attributes hi adds to lo.
class IntervalSpace {
 public:
  IntervalSpace(const Family& lo, const Family& hi) : lo_(lo), hi_(hi) {
    if (!family_leq(lo, hi)) throw InvalidArgument("interval: lower bound is not below upper bound");
    for (std::size_t x = 0; x < hi.size(); ++x) {
      const auto& kh = hi[x].k();
      for (std::size_t m = kh.base_count(); m < kh.attribute_count(); ++m)
        if (!lo[x].k().attribute_index(kh.attributes()[m])) delta_.push_back({x, m});
    }
  }

  std::size_t bits() const { return delta_.size(); }

  std::size_t size() const {
    if (bits() >= std::numeric_limits<std::size_t>::digits) return std::numeric_limits<std::size_t>::max();
    return std::size_t{1} << bits();
  }

  void check_budget(std::size_t budget) const {
    if (bits() >= 48 || size() > budget) throw BudgetExceeded(size(), budget);
  }

  Family build(std::uint64_t mask) const {
    Family out;
    out.pairs.reserve(hi_.size());
    std::size_t d = 0;
    for (std::size_t x = 0; x < hi_.size(); ++x) {
      const auto& kl = lo_[x].k();
      const auto& kh = hi_[x].k();
      std::vector<Attribute> attrs(kl.attributes().begin() + static_cast<std::ptrdiff_t>(kl.base_count()),
                                   kl.attributes().end());
      std::vector<Bits> cols;
      for (std::size_t m = kl.base_count(); m < kl.attribute_count(); ++m) cols.push_back(kl.column(m));
      bool any = false;
      for (; d < delta_.size() && delta_[d].first == x; ++d) {
        if (!(mask >> d & 1U)) continue;
        attrs.push_back(kh.attributes()[delta_[d].second]);
        cols.push_back(kh.column(delta_[d].second));
        any = true;
      }
      out.pairs.push_back(any ? make_pair(kl.with_scaled(std::move(attrs), std::move(cols))) : lo_[x]);
    }
    return out;
  }

  // Mask of a family inside the interval. Throws if it lies outside.
  std::uint64_t mask_of(const Family& o) const {
    if (!family_leq(lo_, o) || !family_leq(o, hi_)) throw InternalError("family outside the enumerated interval");
    std::uint64_t mask = 0;
    for (std::size_t d = 0; d < delta_.size(); ++d) {
      const auto& a = hi_[delta_[d].first].k().attributes()[delta_[d].second];
      if (o[delta_[d].first].k().attribute_index(a)) mask |= std::uint64_t{1} << d;
    }
    return mask;
  }

  // Candidate masks by increasing attribute count.
  std::vector<std::uint64_t> masks() const {
    std::vector<std::uint64_t> out(size());
    std::iota(out.begin(), out.end(), std::uint64_t{0});
    std::stable_sort(out.begin(), out.end(),
                     [](std::uint64_t a, std::uint64_t b) { return std::popcount(a) < std::popcount(b); });
    return out;
  }

 private:
  const Family& lo_;
  const Family& hi_;
  std::vector<std::pair<std::size_t, std::size_t>> delta_;  // (context, attribute index in hi)
};

void sort_canonical(std::vector<Family>& fs) { std::sort(fs.begin(), fs.end(), family_canonical_less); }

}  // namespace

std::size_t interval_size(const Family& lo, const Family& hi) {
  if (!family_leq(lo, hi)) return 0;
  return IntervalSpace(lo, hi).size();
}

std::vector<Family> enumerate_interval(const Family& lo, const Family& hi, const RelationalContextFamily& rcf,
                                       std::size_t budget) {
  (void)rcf;
  IntervalSpace space(lo, hi);
  space.check_budget(budget);
  std::vector<Family> out;
  out.reserve(space.size());
  for (auto mask : space.masks()) out.push_back(space.build(mask));
  sort_canonical(out);
  return out;
}

ClosureImageReport closure_image_report(const Family& o, const RelationalContextFamily& rcf, Exec exec) {
  ClosureImageReport r;
  r.upper = pq_closure(ef_closure(o, rcf, exec), rcf, exec);
  r.lower = ef_closure(pq_closure(o, rcf, exec), rcf, exec);
  r.lower_leq_upper = family_leq(r.lower, r.upper);
  r.strict = r.lower_leq_upper && r.lower != r.upper;
  r.acceptable = is_acceptable(o, rcf);
  r.below_upper = !r.acceptable && family_leq(o, r.upper);
  r.above_lower = !r.acceptable && family_leq(r.lower, o);
  return r;
}

SolutionSpaceReport enumerate_acceptable(const RelationalContextFamily& rcf, const EnumerateOptions& options) {
  SolutionSpaceReport report;
  report.lfp = rca_lfp(rcf, options.exec);
  report.gfp = rca_gfp(rcf, options.exec);
  IntervalSpace space(report.lfp, report.gfp);
  report.interval_size = space.size();
  space.check_budget(options.budget);

  // Alternate between the smallest and the largest untested candidates so
  // that both pruning rules get a chance to skip work ahead.
  const auto sorted = space.masks();
  std::vector<std::uint64_t> order;
  order.reserve(sorted.size());
  for (std::size_t i = 0, j = sorted.size(); i < j;) {
    order.push_back(sorted[i++]);
    if (i < j) order.push_back(sorted[--j]);
  }

  enum : std::uint8_t { Untested, Tested, Pruned };
  std::vector<std::uint8_t> state(space.size(), Untested);

  struct Outcome {
    std::uint64_t mask = 0;
    bool acceptable = false;
    bool below_upper = false, above_lower = false;
    std::uint64_t upper = 0, lower = 0;
  };

  std::vector<std::uint64_t> accepted;
  std::size_t next = 0;
  const std::size_t batch = std::max<std::size_t>(options.batch, 1);
  std::vector<std::uint64_t> round;
  std::vector<Outcome> outcomes;
  while (next < order.size()) {
    round.clear();
    while (next < order.size() && round.size() < batch) {
      auto m = order[next++];
      if (state[m] != Untested) continue;
      state[m] = Tested;
      round.push_back(m);
    }
    outcomes.assign(round.size(), Outcome{});
    parallel_for(round.size(), options.exec, [&](std::size_t i) {
      Outcome& out = outcomes[i];
      out.mask = round[i];
      Family o = space.build(round[i]);
      out.acceptable = is_saturated(o, rcf) && is_self_supported(o, rcf);
      if (out.acceptable || !options.prune) return;
      auto images = closure_image_report(o, rcf, Exec::Serial);
      out.below_upper = images.below_upper;
      out.above_lower = images.above_lower;
      if (out.below_upper) out.upper = space.mask_of(images.upper);
      if (out.above_lower) out.lower = space.mask_of(images.lower);
    });
    report.tested += round.size();
    for (const auto& out : outcomes) {
      if (out.acceptable) {
        accepted.push_back(out.mask);
        continue;
      }
      auto mark = [&](std::uint64_t must, std::uint64_t free, std::uint64_t excluded) {
        for (std::uint64_t s = free;; s = (s - 1) & free) {
          auto m = must | s;
          if (m != excluded && state[m] == Untested) {
            state[m] = Pruned;
            ++report.pruned_count;
          }
          if (s == 0) break;
        }
      };
      if (out.below_upper) mark(out.mask, out.upper & ~out.mask, out.upper);
      if (out.above_lower) mark(out.lower, out.mask & ~out.lower, out.lower);
    }
  }

  for (auto m : accepted) report.acceptable.push_back(space.build(m));
  sort_canonical(report.acceptable);
  report.is_lattice = verify_complete_sublattice(report.acceptable, rcf);
  return report;
}

bool verify_complete_sublattice(const std::vector<Family>& families, const RelationalContextFamily& rcf) {
  (void)rcf;
  if (families.empty()) return false;
  std::unordered_set<std::string> keys;
  for (const auto& f : families) keys.insert(family_key(f));
  for (std::size_t i = 0; i < families.size(); ++i)
    for (std::size_t j = i + 1; j < families.size(); ++j) {
      if (!keys.count(family_key(family_meet(families[i], families[j])))) return false;
      if (!keys.count(family_key(family_join(families[i], families[j])))) return false;
    }
  return true;
}

}  // namespace relca
