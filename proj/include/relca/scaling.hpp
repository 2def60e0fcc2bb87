#pragma once

#include "relca/lattice.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace relca {

// Binary relation between the objects of two contexts of a family.
struct Relation {
  std::string id;
  std::size_t from = 0;  // domain context index
  std::size_t to = 0;    // codomain context index
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<Bits> images;  // images[g] = r(g) over the codomain objects

  Relation() = default;
  Relation(std::string id, std::size_t from, std::size_t to, std::size_t from_size, std::size_t to_size,
           std::vector<std::pair<std::size_t, std::size_t>> pairs);
};

struct OperatorSet {
  std::vector<Op> ops;
  // Largest cardinality bound generated; 0 means |G_z|.
  unsigned max_bound = 0;

  bool contains(Op op) const;
};

// The input of relational concept analysis: initial contexts, relations, operators.
struct RelationalContextFamily {
  std::vector<FormalContext> contexts;
  std::vector<Relation> relations;
  OperatorSet operators;

  std::optional<std::size_t> context_index(std::string_view id) const;
  std::optional<std::size_t> relation_index(std::string_view id) const;
  // Throws InvalidArgument on dangling endpoints or duplicate identifiers.
  void validate() const;
};

Bits relation_image(const Relation& r, std::size_t g);

// Table condition of a scaled attribute for an object whose image is rg.
bool holds(const Bits& rg, const Attribute& a);

// False for attributes whose column is empty whatever the relation: a qualified
// or strict operator over the empty target, or a lower bound above |target|.
bool satisfiable(const Attribute& a);

Attribute make_attribute(const RelationalContextFamily& rcf, Op op, const Relation& r, const Bits& target,
                         unsigned bound = 0);

// Scaled attributes for context x over the given codomain name sets
// (names[z] lists candidate extents of context z), in canonical order.
// Never-satisfiable attributes are left out unless asked for.
std::vector<Attribute> attribute_language(std::size_t x, const RelationalContextFamily& rcf,
                                          const std::vector<std::vector<Bits>>& names,
                                          bool include_unsatisfiable = false);

// Column of a scaled attribute of context x, recomputed from the relation.
Bits scaled_column(const RelationalContextFamily& rcf, std::size_t x, const Attribute& a);

// Adds every attribute of the language over the lattice names not yet present.
FormalContext scale_context(const FormalContext& kx, std::size_t x, const RelationalContextFamily& rcf,
                            const std::vector<const ConceptLattice*>& lattices);

// kappa(lx) without the scaled attributes whose target is not a concept of
// the codomain lattice. Base attributes are kept.
FormalContext purge(const ConceptLattice& lx, const RelationalContextFamily& rcf,
                    const std::vector<const ConceptLattice*>& lattices);

// Scaled attributes of kx that purge would remove.
std::vector<std::size_t> unsupported_attributes(const FormalContext& kx, const RelationalContextFamily& rcf,
                                                const std::vector<const ConceptLattice*>& lattices);

// Many-valued input turned into plain attributes before analysis.
struct ManyValuedContext {
  std::string id;
  std::vector<std::string> objects;
  std::vector<std::string> attributes;
  std::vector<std::vector<std::optional<std::string>>> values;  // [object][attribute]
};

enum class ScaleKind { Dichotomic, Nominal, Ordinal, InterOrdinal, Contranominal };

std::optional<ScaleKind> scale_kind_from_name(std::string_view name);
std::string_view scale_kind_name(ScaleKind kind);

struct ScaleSpec {
  std::string attribute;
  ScaleKind kind = ScaleKind::Nominal;
  // Values for dichotomic/nominal/contranominal. For ordinal kinds, either
  // plain values (meaning "<=w", plus ">=w" for inter-ordinal) or
  // comparisons such as "<35", ">=12".
  std::vector<std::string> arguments;
};

FormalContext conceptual_scale(const ManyValuedContext& mv, const std::vector<ScaleSpec>& specs);

}  // namespace relca
