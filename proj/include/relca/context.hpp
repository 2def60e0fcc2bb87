#pragma once

#include "relca/bits.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace relca {

// Relational scaling operators. The declaration order is the tag order used
// when sorting scaled attributes.
enum class Op : std::uint8_t {
  Existential,           // EX r      r(g) != {}
  UniversalWide,         // A r.C     r(g) <= C
  StrictUniversal,       // AE r.C    r(g) != {} and r(g) <= C
  ContainsWide,          // CW C.r    C <= r(g)
  StrictContains,        // CS C.r    C != {} and C <= r(g)
  QualifiedExistential,  // E r.C     r(g) & C != {}
  LeqCard,               // LE n r.C  |r(g) & C| <= n
  GeqCard,               // GE n r.C  |r(g) & C| >= n
};

inline constexpr Op kAllOps[] = {Op::Existential,  Op::UniversalWide,        Op::StrictUniversal,
                                 Op::ContainsWide, Op::StrictContains,       Op::QualifiedExistential,
                                 Op::LeqCard,      Op::GeqCard};

bool op_has_target(Op op);
bool op_has_bound(Op op);
std::string_view op_keyword(Op op);
std::optional<Op> op_from_keyword(std::string_view kw);

// A column label: either a plain name or a scaled attribute "op relation.target".
// Identity of a scaled attribute is (op, relation, bound, target); target_name is
// the cached rendering of the target extent in the codomain context.
struct Attribute {
  bool scaled = false;
  std::string name;
  Op op = Op::QualifiedExistential;
  std::string relation;
  Bits target;
  std::string target_name;
  unsigned bound = 0;

  static Attribute plain(std::string name);
  static Attribute make_scaled(Op op, std::string relation, Bits target, std::string target_name, unsigned bound = 0);

  // ASCII form used in files, e.g. "E p.DE", "LE 2 p.AB", "CW AB.p".
  std::string text() const;
  // Description-logic form used in DOT and TBox output, e.g. "∃p.DE".
  std::string pretty() const;
};

bool operator==(const Attribute& a, const Attribute& b);
inline bool operator!=(const Attribute& a, const Attribute& b) { return !(a == b); }

// Order on scaled attributes: (op tag, relation id, bound, target pattern).
bool scaled_less(const Attribute& a, const Attribute& b);

// Renders and parses concept names for one object set. Names are the
// uppercase object names concatenated in object order, "BOT" for the empty set.
// When that would be ambiguous the uppercase names are joined with '+'.
class NameCodec {
 public:
  NameCodec() = default;
  explicit NameCodec(const std::vector<std::string>& objects);
  std::string render(const Bits& extent) const;
  std::optional<Bits> parse(std::string_view name) const;

 private:
  std::vector<std::string> upper_;
  bool compact_ = true;
};

class FormalContext {
 public:
  FormalContext() = default;
  // columns[m] is the extent of attribute m over the objects. The scaled part
  // is sorted into canonical order on construction.
  FormalContext(std::string id, std::vector<std::string> objects, std::vector<Attribute> attributes,
                std::size_t base_count, std::vector<Bits> columns);

  const std::string& id() const { return id_; }
  const std::vector<std::string>& objects() const { return objects_; }
  const std::vector<Attribute>& attributes() const { return attributes_; }
  std::size_t base_count() const { return base_count_; }
  std::size_t object_count() const { return objects_.size(); }
  std::size_t attribute_count() const { return attributes_.size(); }
  const Bits& column(std::size_t m) const { return columns_[m]; }
  const Bits& row(std::size_t g) const { return rows_[g]; }
  bool incident(std::size_t g, std::size_t m) const { return columns_[m].test(g); }
  const NameCodec& codec() const { return codec_; }

  Bits all_objects() const { return full_bits(objects_.size()); }
  Bits all_attributes() const { return full_bits(attributes_.size()); }

  // A^up: attributes shared by every object of A.
  Bits derive_intent(const Bits& objects) const;
  // B^down: objects having every attribute of B.
  Bits derive_extent(const Bits& attributes) const;

  std::optional<std::size_t> object_index(std::string_view name) const;
  std::optional<std::size_t> attribute_index(const Attribute& a) const;

  std::string name_of(const Bits& extent) const { return codec_.render(extent); }
  std::optional<Bits> parse_name(std::string_view name) const { return codec_.parse(name); }

  // Same objects and same base attribute prefix.
  bool compatible_with(const FormalContext& other) const;
  // Scaled-part comparisons; valid on compatible contexts.
  bool same_attributes(const FormalContext& other) const;
  bool attributes_subset_of(const FormalContext& other) const;

  // Same base part, scaled part replaced.
  FormalContext with_scaled(std::vector<Attribute> scaled, std::vector<Bits> columns) const;
  FormalContext base_only() const;

 private:
  std::string id_;
  std::vector<std::string> objects_;
  std::vector<Attribute> attributes_;
  std::size_t base_count_ = 0;
  std::vector<Bits> columns_;
  std::vector<Bits> rows_;
  NameCodec codec_;
};

bool operator==(const FormalContext& a, const FormalContext& b);

}  // namespace relca
