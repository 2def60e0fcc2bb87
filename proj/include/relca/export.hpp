#pragma once

#include "relca/engine.hpp"

#include <string>
#include <vector>

namespace relca {

enum class Labeling { Full, Reduced };

// Hasse diagram in DOT: one node per concept, one edge per covering pair.
std::string export_dot(const ConceptLattice& l, Labeling labeling);

struct TBox {
  std::vector<std::string> axioms;      // subsumptions, then disjointness
  std::vector<std::string> assertions;  // concept assertions, then relation assertions
};

// Description-logic reading of a family. Each concept with a non-empty extent
// is subsumed by its parents and the attributes it introduces (the top by
// ⊤_<context id>); direct siblings with disjoint extents are declared
// disjoint; each object is asserted at its object concept.
TBox build_tbox(const Family& o, const RelationalContextFamily& rcf);
std::string export_tbox(const Family& o, const RelationalContextFamily& rcf);

}  // namespace relca
