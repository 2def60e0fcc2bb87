#include "relca/lattice.hpp"

#include "relca/errors.hpp"

#include <algorithm>
#include <unordered_set>

namespace relca {

bool operator==(const Concept& a, const Concept& b) { return a.extent == b.extent && a.intent == b.intent; }

ConceptLattice::ConceptLattice(std::shared_ptr<const FormalContext> context, std::vector<Concept> concepts,
                               bool validate)
    : context_(std::move(context)), concepts_(std::move(concepts)) {
  if (!context_) throw InvalidArgument("lattice without context");
  if (!validate) return;
  const auto& k = *context_;
  if (concepts_.empty()) throw InvalidArgument("lattice has no concepts");
  for (std::size_t i = 0; i < concepts_.size(); ++i) {
    const auto& c = concepts_[i];
    if (c.extent.size() != k.object_count() || c.intent.size() != k.attribute_count())
      throw InvalidArgument("concept of wrong dimensions");
    if (k.derive_intent(c.extent) != c.intent || k.derive_extent(c.intent) != c.extent)
      throw InvalidArgument("concept " + k.name_of(c.extent) + " is not closed");
    if (i > 0 && !extent_order_less(concepts_[i - 1].extent, c.extent))
      throw InvalidArgument("concepts not in canonical order or not distinct");
  }
  if (top().extent != k.all_objects()) throw InvalidArgument("lattice lacks a top concept");
  if (bottom().intent != k.all_attributes()) throw InvalidArgument("lattice lacks a bottom concept");
}

std::optional<std::size_t> ConceptLattice::find(const Bits& extent) const {
  auto it = std::lower_bound(concepts_.begin(), concepts_.end(), extent,
                             [](const Concept& c, const Bits& e) { return extent_order_less(c.extent, e); });
  if (it != concepts_.end() && it->extent == extent) return static_cast<std::size_t>(it - concepts_.begin());
  return std::nullopt;
}

std::vector<Bits> ConceptLattice::names() const {
  std::vector<Bits> out;
  out.reserve(concepts_.size());
  for (const auto& c : concepts_) out.push_back(c.extent);
  return out;
}

std::vector<std::string> ConceptLattice::name_strings() const {
  std::vector<std::string> out;
  out.reserve(concepts_.size());
  for (const auto& c : concepts_) out.push_back(context_->name_of(c.extent));
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> ConceptLattice::covers() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const auto n = concepts_.size();
  for (std::size_t lo = 0; lo < n; ++lo) {
    const auto& e = concepts_[lo].extent;
    std::vector<std::size_t> above;
    for (std::size_t up = 0; up < n; ++up)
      if (up != lo && e.is_proper_subset_of(concepts_[up].extent)) above.push_back(up);
    for (auto up : above) {
      bool cover = std::none_of(above.begin(), above.end(), [&](std::size_t mid) {
        return concepts_[mid].extent.is_proper_subset_of(concepts_[up].extent);
      });
      if (cover) out.emplace_back(up, lo);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> ConceptLattice::parents(std::size_t i) const {
  std::vector<std::size_t> out;
  for (auto [up, lo] : covers())
    if (lo == i) out.push_back(up);
  return out;
}

std::vector<std::size_t> ConceptLattice::children(std::size_t i) const {
  std::vector<std::size_t> out;
  for (auto [up, lo] : covers())
    if (up == i) out.push_back(lo);
  return out;
}

Bits ConceptLattice::introduced_attributes(std::size_t i) const {
  const auto& k = *context_;
  Bits out(k.attribute_count());
  for (std::size_t m = 0; m < k.attribute_count(); ++m)
    if (k.column(m) == concepts_[i].extent) out.set(m);
  return out;
}

Bits ConceptLattice::introduced_objects(std::size_t i) const {
  const auto& k = *context_;
  Bits out(k.object_count());
  for (std::size_t g = 0; g < k.object_count(); ++g)
    if (k.row(g) == concepts_[i].intent) out.set(g);
  return out;
}

ConceptLattice fca(std::shared_ptr<const FormalContext> kp) {
  const auto& k = *kp;
  std::unordered_set<Bits, BitsHash> seen{k.all_objects()};
  std::vector<Bits> extents{k.all_objects()};
  for (std::size_t m = 0; m < k.attribute_count(); ++m) {
    const auto n = extents.size();
    for (std::size_t i = 0; i < n; ++i) {
      Bits e = extents[i] & k.column(m);
      if (seen.insert(e).second) extents.push_back(std::move(e));
    }
  }
  std::sort(extents.begin(), extents.end(), extent_order_less);
  std::vector<Concept> concepts;
  concepts.reserve(extents.size());
  for (auto& e : extents) {
    Bits intent = k.derive_intent(e);
    concepts.push_back({std::move(e), std::move(intent)});
  }
  return ConceptLattice(std::move(kp), std::move(concepts), false);
}

ConceptLattice fca(const FormalContext& k) { return fca(std::make_shared<const FormalContext>(k)); }

FormalContext kappa(const ConceptLattice& l) {
  const auto& k = l.context();
  std::vector<Bits> columns(k.attribute_count(), Bits(k.object_count()));
  for (const auto& c : l.concepts())
    for (auto m = c.intent.find_first(); m != Bits::npos; m = c.intent.find_next(m)) columns[m] |= c.extent;
  return FormalContext(k.id(), k.objects(), k.attributes(), k.base_count(), std::move(columns));
}

std::vector<Bits> all_names(const FormalContext& k, std::size_t max_objects) {
  const auto n = k.object_count();
  if (n > max_objects)
    throw InvalidArgument("all_names: " + std::to_string(n) + " objects exceeds limit " + std::to_string(max_objects));
  std::vector<Bits> out;
  out.reserve(std::size_t{1} << n);
  for (unsigned long mask = 0; mask < (1UL << n); ++mask) out.emplace_back(n, mask);
  std::sort(out.begin(), out.end(), extent_order_less);
  return out;
}

std::vector<Bits> concept_names(const ConceptLattice& l) { return l.names(); }

namespace {

void require_compatible(const FormalContext& a, const FormalContext& b, const char* op) {
  if (!a.compatible_with(b))
    throw IncompatibleContexts(std::string(op) + ": contexts " + a.id() + " and " + b.id() +
                               " differ in objects or base attributes");
}

FormalContext merge(const FormalContext& a, const FormalContext& b, bool keep_union) {
  std::vector<Attribute> attrs;
  std::vector<Bits> cols;
  const auto& aa = a.attributes();
  const auto& ba = b.attributes();
  std::size_t i = a.base_count(), j = b.base_count();
  while (i < aa.size() || j < ba.size()) {
    if (j == ba.size() || (i < aa.size() && scaled_less(aa[i], ba[j]))) {
      if (keep_union) attrs.push_back(aa[i]), cols.push_back(a.column(i));
      ++i;
    } else if (i == aa.size() || scaled_less(ba[j], aa[i])) {
      if (keep_union) attrs.push_back(ba[j]), cols.push_back(b.column(j));
      ++j;
    } else {
      attrs.push_back(aa[i]);
      cols.push_back(a.column(i));
      ++i, ++j;
    }
  }
  return a.with_scaled(std::move(attrs), std::move(cols));
}

}  // namespace

FormalContext context_meet(const FormalContext& a, const FormalContext& b) {
  require_compatible(a, b, "context_meet");
  return merge(a, b, false);
}

FormalContext context_join(const FormalContext& a, const FormalContext& b) {
  require_compatible(a, b, "context_join");
  return merge(a, b, true);
}

bool lattice_leq(const ConceptLattice& a, const ConceptLattice& b) {
  require_compatible(a.context(), b.context(), "lattice_leq");
  return a.context().attributes_subset_of(b.context());
}

}  // namespace relca
