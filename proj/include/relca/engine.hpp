#pragma once

#include "relca/parallel.hpp"
#include "relca/scaling.hpp"

#include <memory>
#include <vector>

namespace relca {

// A context with its concept lattice, lattice == fca(context).
struct ContextLatticePair {
  std::shared_ptr<const FormalContext> context;
  ConceptLattice lattice;

  const FormalContext& k() const { return *context; }
  const ConceptLattice& l() const { return lattice; }
};

ContextLatticePair make_pair(FormalContext k);

// One context-lattice pair per context of the relational family, same order.
struct Family {
  std::vector<ContextLatticePair> pairs;

  std::size_t size() const { return pairs.size(); }
  const ContextLatticePair& operator[](std::size_t i) const { return pairs[i]; }
  std::vector<const ConceptLattice*> lattices() const;
  std::size_t scaled_attribute_count() const;
};

// Equality is per-context attribute-set equality; incidence and lattices follow.
bool operator==(const Family& a, const Family& b);
inline bool operator!=(const Family& a, const Family& b) { return !(a == b); }

bool family_leq(const Family& a, const Family& b);
bool family_less(const Family& a, const Family& b);  // strict
Family family_meet(const Family& a, const Family& b);
Family family_join(const Family& a, const Family& b);

// Reproducible order: total scaled-attribute count, then attribute lists.
bool family_canonical_less(const Family& a, const Family& b);

// Builds a family from contexts holding exactly the given scaled attributes.
Family family_from_attributes(const RelationalContextFamily& rcf, const std::vector<std::vector<Attribute>>& scaled);

Family ef_star(const Family& o, const RelationalContextFamily& rcf, Exec exec = Exec::Serial);
Family pq_star(const Family& o, const RelationalContextFamily& rcf, Exec exec = Exec::Serial);

struct ClosureTrace {
  Family result;
  std::size_t changing_steps = 0;
  std::vector<Family> iterates;  // starting family first, result last
};

ClosureTrace ef_closure_trace(const Family& o, const RelationalContextFamily& rcf, Exec exec = Exec::Serial);
ClosureTrace pq_closure_trace(const Family& o, const RelationalContextFamily& rcf, Exec exec = Exec::Serial);
Family ef_closure(const Family& o, const RelationalContextFamily& rcf, Exec exec = Exec::Serial);
Family pq_closure(const Family& o, const RelationalContextFamily& rcf, Exec exec = Exec::Serial);

// Iteration guard: 1 + an upper bound on the size of the whole attribute language.
std::size_t iteration_cap(const RelationalContextFamily& rcf);

// The language D^x over all names of the initial contexts, per context.
std::vector<std::vector<Attribute>> full_language(const RelationalContextFamily& rcf,
                                                  bool include_unsatisfiable = false);

Family bottom_family(const RelationalContextFamily& rcf);
Family top_family(const RelationalContextFamily& rcf);
Family rca_lfp(const RelationalContextFamily& rcf, Exec exec = Exec::Serial);
Family rca_gfp(const RelationalContextFamily& rcf, Exec exec = Exec::Serial);

// Per context, the attributes an expansion step would add.
std::vector<std::vector<Attribute>> missing_attributes(const Family& o, const RelationalContextFamily& rcf);
// Per context, the attributes a contraction step would remove.
std::vector<std::vector<Attribute>> unsupported(const Family& o, const RelationalContextFamily& rcf);
// Reasons the family is not in the space of well-formed families; empty if it is.
std::vector<std::string> well_formedness_violations(const Family& o, const RelationalContextFamily& rcf);

bool is_well_formed(const Family& o, const RelationalContextFamily& rcf);
bool is_saturated(const Family& o, const RelationalContextFamily& rcf);
bool is_self_supported(const Family& o, const RelationalContextFamily& rcf);
bool is_acceptable(const Family& o, const RelationalContextFamily& rcf);

// A single acceptable family exists iff the two semantics coincide.
bool has_unique_solution(const RelationalContextFamily& rcf);

}  // namespace relca
