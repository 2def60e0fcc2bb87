#pragma once

#include "relca/context.hpp"

#include <memory>
#include <utility>
#include <vector>

namespace relca {

struct Concept {
  Bits extent;
  Bits intent;
};

bool operator==(const Concept& a, const Concept& b);

// Concepts of one context, sorted by extent (larger first, then by name).
// The first concept is the top, the last the bottom.
class ConceptLattice {
 public:
  ConceptLattice() = default;
  // Validates closure and ordering unless validate is false.
  ConceptLattice(std::shared_ptr<const FormalContext> context, std::vector<Concept> concepts, bool validate = true);

  const FormalContext& context() const { return *context_; }
  const std::shared_ptr<const FormalContext>& context_ptr() const { return context_; }
  const std::vector<Concept>& concepts() const { return concepts_; }
  std::size_t size() const { return concepts_.size(); }
  const Concept& top() const { return concepts_.front(); }
  const Concept& bottom() const { return concepts_.back(); }

  std::optional<std::size_t> find(const Bits& extent) const;
  bool has_name(const Bits& extent) const { return find(extent).has_value(); }
  // Extents present in the lattice, in concept order.
  std::vector<Bits> names() const;
  std::vector<std::string> name_strings() const;

  // Covering pairs (upper, lower) by concept index.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const;
  std::vector<std::size_t> parents(std::size_t i) const;
  std::vector<std::size_t> children(std::size_t i) const;
  // Attributes whose attribute concept is i, objects whose object concept is i.
  Bits introduced_attributes(std::size_t i) const;
  Bits introduced_objects(std::size_t i) const;

 private:
  std::shared_ptr<const FormalContext> context_;
  std::vector<Concept> concepts_;
};

// Closed-set enumeration over intersections of attribute extents.
ConceptLattice fca(const FormalContext& k);
ConceptLattice fca(std::shared_ptr<const FormalContext> k);

// Rebuilds the context from the lattice alone: each column is the union of
// the extents whose intent holds the attribute.
FormalContext kappa(const ConceptLattice& l);

// Powerset of the objects. Throws InvalidArgument above max_objects.
std::vector<Bits> all_names(const FormalContext& k, std::size_t max_objects = 20);
std::vector<Bits> concept_names(const ConceptLattice& l);

FormalContext context_meet(const FormalContext& a, const FormalContext& b);
FormalContext context_join(const FormalContext& a, const FormalContext& b);

// Attribute inclusion of the underlying contexts.
bool lattice_leq(const ConceptLattice& a, const ConceptLattice& b);

}  // namespace relca
