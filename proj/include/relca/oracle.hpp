#pragma once

#include "relca/engine.hpp"

#include <cstdint>
#include <vector>

namespace relca {

// Brute-force view of the whole space of well-formed families: every subset
// of the attribute language, checked with its own incidence, concept and
// support computations rather than the engine's closures.
struct OracleEntry {
  std::uint64_t mask = 0;  // bit i selects universe attribute i
  bool saturated = false;
  bool self_supported = false;
  bool acceptable() const { return saturated && self_supported; }
};

struct OracleResult {
  // Universe attributes, context by context, in canonical order.
  std::vector<std::pair<std::size_t, Attribute>> universe;
  std::vector<OracleEntry> entries;
  std::size_t acceptable_count = 0;

  Family family(const OracleEntry& e, const RelationalContextFamily& rcf) const;
  std::vector<Family> acceptable(const RelationalContextFamily& rcf) const;
};

OracleResult oracle_enumerate(const RelationalContextFamily& rcf, std::size_t budget, Exec exec = Exec::Serial);

}  // namespace relca
