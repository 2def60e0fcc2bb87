#include "relca/oracle.hpp"

#include "relca/errors.hpp"

#include <algorithm>
#include <bit>

namespace relca {

namespace {

using Mask = std::uint64_t;

Mask to_mask(const Bits& b) {
  Mask m = 0;
  for (auto i = b.find_first(); i != Bits::npos; i = b.find_next(i)) m |= Mask{1} << i;
  return m;
}

// Table conditions again, on plain masks.
bool condition(Op op, Mask rg, Mask target, unsigned bound) {
  switch (op) {
    case Op::Existential: return rg != 0;
    case Op::UniversalWide: return (rg & ~target) == 0;
    case Op::StrictUniversal: return rg != 0 && (rg & ~target) == 0;
    case Op::ContainsWide: return (target & ~rg) == 0;
    case Op::StrictContains: return target != 0 && (target & ~rg) == 0;
    case Op::QualifiedExistential: return (rg & target) != 0;
    case Op::LeqCard: return static_cast<unsigned>(std::popcount(rg & target)) <= bound;
    case Op::GeqCard: return static_cast<unsigned>(std::popcount(rg & target)) >= bound;
  }
  return false;
}

struct UniverseItem {
  std::size_t context;
  std::size_t codomain;
  bool has_target;
  Mask target;
  Mask column;
};

// Closed object sets of a context given its columns, indexed by object mask.
std::vector<char> closed_sets(std::size_t n, const std::vector<Mask>& columns) {
  const Mask all = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
  std::vector<char> closed(std::size_t{1} << n, 0);
  for (Mask a = 0; a <= all; ++a) {
    Mask closure = all;
    for (Mask c : columns)
      if ((a & ~c) == 0) closure &= c;
    closed[a] = closure == a;
    if (a == all) break;
  }
  return closed;
}

}  // namespace

Family OracleResult::family(const OracleEntry& e, const RelationalContextFamily& rcf) const {
  std::vector<std::vector<Attribute>> scaled(rcf.contexts.size());
  for (std::size_t i = 0; i < universe.size(); ++i)
    if (e.mask >> i & 1U) scaled[universe[i].first].push_back(universe[i].second);
  return family_from_attributes(rcf, scaled);
}

std::vector<Family> OracleResult::acceptable(const RelationalContextFamily& rcf) const {
  std::vector<Family> out;
  for (const auto& e : entries)
    if (e.acceptable()) out.push_back(family(e, rcf));
  std::sort(out.begin(), out.end(), family_canonical_less);
  return out;
}

OracleResult oracle_enumerate(const RelationalContextFamily& rcf, std::size_t budget, Exec exec) {
  for (const auto& k : rcf.contexts)
    if (k.object_count() > 20) throw BudgetExceeded(std::size_t{1} << 20, budget);

  OracleResult result;
  std::vector<UniverseItem> items;
  for (std::size_t x = 0; x < rcf.contexts.size(); ++x) {
    std::vector<std::pair<Attribute, UniverseItem>> local;
    for (const auto& r : rcf.relations) {
      if (r.from != x) continue;
      const auto gz = rcf.contexts[r.to].object_count();
      std::vector<Mask> image(rcf.contexts[x].object_count(), 0);
      for (auto [g, h] : r.pairs) image[g] |= Mask{1} << h;
      for (Op op : rcf.operators.ops) {
        unsigned max_n = 0;
        if (op_has_bound(op)) {
          max_n = static_cast<unsigned>(gz);
          if (rcf.operators.max_bound != 0) max_n = std::min(max_n, rcf.operators.max_bound);
        }
        const Mask names = op_has_target(op) ? (Mask{1} << gz) : 1;
        for (Mask t = 0; t < names; ++t) {
          for (unsigned n = op_has_bound(op) ? 1 : 0; n <= max_n; ++n) {
            bool never = (t == 0 && (op == Op::QualifiedExistential || op == Op::StrictUniversal ||
                                     op == Op::StrictContains)) ||
                         (op == Op::GeqCard && static_cast<unsigned>(std::popcount(t)) < n);
            if (never) continue;
            Mask col = 0;
            for (std::size_t g = 0; g < image.size(); ++g)
              if (condition(op, image[g], t, n)) col |= Mask{1} << g;
            Bits target(op_has_target(op) ? gz : 0, op_has_target(op) ? t : 0);
            local.push_back({make_attribute(rcf, op, r, target, n), UniverseItem{x, r.to, op_has_target(op), t, col}});
          }
        }
      }
    }
    std::sort(local.begin(), local.end(), [](const auto& a, const auto& b) { return scaled_less(a.first, b.first); });
    for (auto& [a, item] : local) {
      result.universe.emplace_back(x, a);
      items.push_back(item);
    }
  }

  const auto n = items.size();
  if (n >= 48 || (std::size_t{1} << n) > budget) {
    throw BudgetExceeded(n >= 48 ? std::numeric_limits<std::size_t>::max() : std::size_t{1} << n, budget);
  }
  const std::size_t total = std::size_t{1} << n;

  std::vector<std::vector<Mask>> base(rcf.contexts.size());
  for (std::size_t x = 0; x < rcf.contexts.size(); ++x)
    for (std::size_t m = 0; m < rcf.contexts[x].base_count(); ++m) base[x].push_back(to_mask(rcf.contexts[x].column(m)));

  result.entries.resize(total);
  constexpr std::size_t kChunk = 256;
  const std::size_t chunks = (total + kChunk - 1) / kChunk;
  parallel_for(chunks, exec, [&](std::size_t c) {
    std::vector<std::vector<Mask>> cols(rcf.contexts.size());
    std::vector<std::vector<char>> closed(rcf.contexts.size());
    for (std::size_t mask = c * kChunk; mask < std::min(total, (c + 1) * kChunk); ++mask) {
      for (std::size_t x = 0; x < rcf.contexts.size(); ++x) cols[x] = base[x];
      for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1U) cols[items[i].context].push_back(items[i].column);
      for (std::size_t x = 0; x < rcf.contexts.size(); ++x)
        closed[x] = closed_sets(rcf.contexts[x].object_count(), cols[x]);
      OracleEntry e;
      e.mask = mask;
      e.saturated = true;
      e.self_supported = true;
      for (std::size_t i = 0; i < n; ++i) {
        const auto& it = items[i];
        bool named = !it.has_target || closed[it.codomain][it.target];
        bool selected = mask >> i & 1U;
        if (named && !selected) e.saturated = false;
        if (selected && !named) e.self_supported = false;
      }
      result.entries[mask] = e;
    }
  });
  result.acceptable_count = static_cast<std::size_t>(
      std::count_if(result.entries.begin(), result.entries.end(), [](const OracleEntry& e) { return e.acceptable(); }));
  return result;
}

}  // namespace relca
