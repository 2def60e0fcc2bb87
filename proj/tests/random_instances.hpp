#pragma once

#include "relca/engine.hpp"

#include <random>
#include <string>

namespace relca::testing {

// Small random relational families: at most 2 contexts of at most 4 objects,
// at most 2 relations, operators drawn from {E, AE}. Draws are repeated until
// the whole attribute language has at most max_language attributes, so the
// brute-force space stays within 2^max_language families.
inline RelationalContextFamily random_instance(std::uint64_t seed, std::size_t max_language = 14) {
  std::mt19937_64 rng(seed);
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  auto coin = [&](double p) { return std::bernoulli_distribution(p)(rng); };
  for (;;) {
    RelationalContextFamily rcf;
    const int nctx = pick(1, 2);
    for (int x = 0; x < nctx; ++x) {
      const int nobj = pick(1, 4);
      const int nattr = pick(0, 2);
      std::vector<std::string> objs;
      for (int g = 0; g < nobj; ++g) objs.push_back(std::string(1, static_cast<char>('a' + 4 * x + g)));
      std::vector<Attribute> attrs;
      std::vector<Bits> cols;
      for (int m = 0; m < nattr; ++m) {
        attrs.push_back(Attribute::plain("m" + std::to_string(x) + std::to_string(m)));
        Bits col(static_cast<std::size_t>(nobj));
        for (int g = 0; g < nobj; ++g)
          if (coin(0.5)) col.set(static_cast<std::size_t>(g));
        cols.push_back(col);
      }
      rcf.contexts.emplace_back("K" + std::to_string(x), objs, attrs, attrs.size(), cols);
    }
    const int nrel = pick(1, 2);
    for (int r = 0; r < nrel; ++r) {
      auto from = static_cast<std::size_t>(pick(0, nctx - 1));
      auto to = static_cast<std::size_t>(pick(0, nctx - 1));
      std::vector<std::pair<std::size_t, std::size_t>> pairs;
      for (std::size_t g = 0; g < rcf.contexts[from].object_count(); ++g)
        for (std::size_t h = 0; h < rcf.contexts[to].object_count(); ++h)
          if (coin(0.35)) pairs.emplace_back(g, h);
      rcf.relations.emplace_back("r" + std::to_string(r), from, to, rcf.contexts[from].object_count(),
                                 rcf.contexts[to].object_count(), pairs);
    }
    switch (pick(0, 3)) {
      case 0: rcf.operators.ops = {Op::StrictUniversal}; break;
      case 1: rcf.operators.ops = {Op::QualifiedExistential}; break;
      default: rcf.operators.ops = {Op::StrictUniversal, Op::QualifiedExistential}; break;
    }
    std::size_t total = 0;
    for (const auto& d : full_language(rcf)) total += d.size();
    if (total <= max_language) return rcf;
  }
}

}  // namespace relca::testing
