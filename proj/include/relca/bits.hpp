#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <cstdint>
#include <vector>

namespace relca {

using Bits = boost::dynamic_bitset<std::uint64_t>;

inline Bits full_bits(std::size_t n) {
  Bits b(n);
  b.set();
  return b;
}

// Canonical order on equal-length sets: at the lowest index where they
// differ, the set holding that index comes first. On sets of equal size
// this is the lexicographic order of their names.
inline bool canonical_less(const Bits& a, const Bits& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  Bits diff = a ^ b;
  auto i = diff.find_first();
  if (i == Bits::npos) return false;
  return a.test(i);
}

// Extent order used for concept listings: larger sets first.
inline bool extent_order_less(const Bits& a, const Bits& b) {
  auto ca = a.count(), cb = b.count();
  if (ca != cb) return ca > cb;
  return canonical_less(a, b);
}

inline std::vector<std::size_t> indices(const Bits& b) {
  std::vector<std::size_t> out;
  out.reserve(b.count());
  for (auto i = b.find_first(); i != Bits::npos; i = b.find_next(i)) out.push_back(i);
  return out;
}

struct BitsHash {
  std::size_t operator()(const Bits& b) const {
    std::size_t h = b.size();
    std::vector<std::uint64_t> blocks;
    boost::to_block_range(b, std::back_inserter(blocks));
    for (auto w : blocks) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

}  // namespace relca
