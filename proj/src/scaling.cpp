#include "relca/scaling.hpp"

#include "relca/errors.hpp"

#include <algorithm>
#include <charconv>
#include <set>

namespace relca {

Relation::Relation(std::string id_, std::size_t from_, std::size_t to_, std::size_t from_size, std::size_t to_size,
                   std::vector<std::pair<std::size_t, std::size_t>> pairs_)
    : id(std::move(id_)), from(from_), to(to_), pairs(std::move(pairs_)), images(from_size, Bits(to_size)) {
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  for (auto [g, h] : pairs) {
    if (g >= from_size || h >= to_size) throw InvalidArgument("relation " + id + ": pair out of range");
    images[g].set(h);
  }
}

bool OperatorSet::contains(Op op) const { return std::find(ops.begin(), ops.end(), op) != ops.end(); }

std::optional<std::size_t> RelationalContextFamily::context_index(std::string_view id) const {
  for (std::size_t i = 0; i < contexts.size(); ++i)
    if (contexts[i].id() == id) return i;
  return std::nullopt;
}

std::optional<std::size_t> RelationalContextFamily::relation_index(std::string_view id) const {
  for (std::size_t i = 0; i < relations.size(); ++i)
    if (relations[i].id == id) return i;
  return std::nullopt;
}

void RelationalContextFamily::validate() const {
  std::set<std::string> ids;
  for (const auto& k : contexts) {
    if (!ids.insert(k.id()).second) throw InvalidArgument("duplicate context " + k.id());
    if (k.base_count() != k.attribute_count()) throw InvalidArgument("initial context " + k.id() + " has scaled attributes");
  }
  std::set<std::string> rids;
  for (const auto& r : relations) {
    if (!rids.insert(r.id).second) throw InvalidArgument("duplicate relation " + r.id);
    if (r.from >= contexts.size() || r.to >= contexts.size())
      throw InvalidArgument("relation " + r.id + " has a dangling endpoint");
    if (r.images.size() != contexts[r.from].object_count()) throw InvalidArgument("relation " + r.id + " domain size");
    for (const auto& img : r.images)
      if (img.size() != contexts[r.to].object_count()) throw InvalidArgument("relation " + r.id + " codomain size");
  }
}

Bits relation_image(const Relation& r, std::size_t g) {
  if (g >= r.images.size()) throw InvalidArgument("relation " + r.id + ": unknown object index");
  return r.images[g];
}

bool holds(const Bits& rg, const Attribute& a) {
  if (!a.scaled) throw InvalidArgument("holds: plain attribute " + a.name);
  switch (a.op) {
    case Op::Existential: return rg.any();
    case Op::UniversalWide: return rg.is_subset_of(a.target);
    case Op::StrictUniversal: return rg.any() && rg.is_subset_of(a.target);
    case Op::ContainsWide: return a.target.is_subset_of(rg);
    case Op::StrictContains: return a.target.any() && a.target.is_subset_of(rg);
    case Op::QualifiedExistential: return rg.intersects(a.target);
    case Op::LeqCard: return (rg & a.target).count() <= a.bound;
    case Op::GeqCard: return (rg & a.target).count() >= a.bound;
  }
  return false;
}

bool satisfiable(const Attribute& a) {
  if (!a.scaled) return true;
  switch (a.op) {
    case Op::StrictUniversal:
    case Op::StrictContains:
    case Op::QualifiedExistential: return a.target.any();
    case Op::GeqCard: return a.target.count() >= a.bound;
    default: return true;
  }
}

Attribute make_attribute(const RelationalContextFamily& rcf, Op op, const Relation& r, const Bits& target,
                         unsigned bound) {
  const auto& z = rcf.contexts[r.to];
  if (!op_has_target(op)) return Attribute::make_scaled(op, r.id, Bits(), std::string(), 0);
  return Attribute::make_scaled(op, r.id, target, z.name_of(target), bound);
}

std::vector<Attribute> attribute_language(std::size_t x, const RelationalContextFamily& rcf,
                                          const std::vector<std::vector<Bits>>& names, bool include_unsatisfiable) {
  std::vector<Attribute> out;
  for (const auto& r : rcf.relations) {
    if (r.from != x) continue;
    const auto gz = rcf.contexts[r.to].object_count();
    for (Op op : rcf.operators.ops) {
      if (!op_has_target(op)) {
        out.push_back(make_attribute(rcf, op, r, Bits()));
        continue;
      }
      unsigned max_n = static_cast<unsigned>(gz);
      if (rcf.operators.max_bound != 0) max_n = std::min(max_n, rcf.operators.max_bound);
      for (const auto& c : names.at(r.to)) {
        if (op_has_bound(op)) {
          for (unsigned n = 1; n <= max_n; ++n) {
            auto a = make_attribute(rcf, op, r, c, n);
            if (include_unsatisfiable || satisfiable(a)) out.push_back(std::move(a));
          }
        } else {
          auto a = make_attribute(rcf, op, r, c);
          if (include_unsatisfiable || satisfiable(a)) out.push_back(std::move(a));
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), scaled_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Bits scaled_column(const RelationalContextFamily& rcf, std::size_t x, const Attribute& a) {
  auto ri = rcf.relation_index(a.relation);
  if (!ri) throw InvalidArgument("unknown relation " + a.relation);
  const auto& r = rcf.relations[*ri];
  if (r.from != x) throw InvalidArgument("relation " + a.relation + " does not start at context " + rcf.contexts[x].id());
  Bits col(rcf.contexts[x].object_count());
  for (std::size_t g = 0; g < col.size(); ++g)
    if (holds(r.images[g], a)) col.set(g);
  return col;
}

namespace {

std::vector<std::vector<Bits>> names_of(const std::vector<const ConceptLattice*>& lattices) {
  std::vector<std::vector<Bits>> names;
  names.reserve(lattices.size());
  for (const auto* l : lattices) {
    if (!l) throw InvalidArgument("missing codomain lattice");
    names.push_back(l->names());
  }
  return names;
}

}  // namespace

FormalContext scale_context(const FormalContext& kx, std::size_t x, const RelationalContextFamily& rcf,
                            const std::vector<const ConceptLattice*>& lattices) {
  if (lattices.size() != rcf.contexts.size()) throw InvalidArgument("scale_context: lattice family size mismatch");
  auto language = attribute_language(x, rcf, names_of(lattices));
  std::vector<Attribute> scaled(kx.attributes().begin() + static_cast<std::ptrdiff_t>(kx.base_count()),
                                kx.attributes().end());
  std::vector<Bits> cols;
  for (std::size_t m = kx.base_count(); m < kx.attribute_count(); ++m) cols.push_back(kx.column(m));
  bool grew = false;
  for (auto& a : language) {
    if (kx.attribute_index(a)) continue;
    cols.push_back(scaled_column(rcf, x, a));
    scaled.push_back(std::move(a));
    grew = true;
  }
  if (!grew) return kx;
  return kx.with_scaled(std::move(scaled), std::move(cols));
}

std::vector<std::size_t> unsupported_attributes(const FormalContext& kx, const RelationalContextFamily& rcf,
                                                const std::vector<const ConceptLattice*>& lattices) {
  std::vector<std::size_t> out;
  for (std::size_t m = kx.base_count(); m < kx.attribute_count(); ++m) {
    const auto& a = kx.attributes()[m];
    if (!op_has_target(a.op)) continue;
    auto ri = rcf.relation_index(a.relation);
    if (!ri) throw InvalidArgument("unknown relation " + a.relation);
    const auto* lz = lattices.at(rcf.relations[*ri].to);
    if (!lz) throw InvalidArgument("missing codomain lattice");
    if (!lz->has_name(a.target)) out.push_back(m);
  }
  return out;
}

FormalContext purge(const ConceptLattice& lx, const RelationalContextFamily& rcf,
                    const std::vector<const ConceptLattice*>& lattices) {
  FormalContext k = kappa(lx);
  auto drop = unsupported_attributes(k, rcf, lattices);
  if (drop.empty()) return k;
  std::vector<Attribute> scaled;
  std::vector<Bits> cols;
  std::size_t d = 0;
  for (std::size_t m = k.base_count(); m < k.attribute_count(); ++m) {
    if (d < drop.size() && drop[d] == m) {
      ++d;
      continue;
    }
    scaled.push_back(k.attributes()[m]);
    cols.push_back(k.column(m));
  }
  return k.with_scaled(std::move(scaled), std::move(cols));
}

std::optional<ScaleKind> scale_kind_from_name(std::string_view name) {
  if (name == "dichotomic") return ScaleKind::Dichotomic;
  if (name == "nominal") return ScaleKind::Nominal;
  if (name == "ordinal") return ScaleKind::Ordinal;
  if (name == "interordinal" || name == "inter-ordinal") return ScaleKind::InterOrdinal;
  if (name == "contranominal") return ScaleKind::Contranominal;
  return std::nullopt;
}

std::string_view scale_kind_name(ScaleKind kind) {
  switch (kind) {
    case ScaleKind::Dichotomic: return "dichotomic";
    case ScaleKind::Nominal: return "nominal";
    case ScaleKind::Ordinal: return "ordinal";
    case ScaleKind::InterOrdinal: return "interordinal";
    case ScaleKind::Contranominal: return "contranominal";
  }
  return "?";
}

namespace {

std::optional<double> as_number(std::string_view s) {
  double v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

enum class Cmp { Eq, Ne, Lt, Le, Gt, Ge };

struct Predicate {
  std::string label;
  Cmp cmp;
  std::string value;
};

bool evaluate(const Predicate& p, const std::string& v, bool numeric) {
  if (!numeric) return p.cmp == Cmp::Eq ? v == p.value : v != p.value;
  double a = *as_number(v), b = *as_number(p.value);
  switch (p.cmp) {
    case Cmp::Eq: return a == b;
    case Cmp::Ne: return a != b;
    case Cmp::Lt: return a < b;
    case Cmp::Le: return a <= b;
    case Cmp::Gt: return a > b;
    case Cmp::Ge: return a >= b;
  }
  return false;
}

Predicate comparison(const std::string& attr, const std::string& arg) {
  static const std::pair<const char*, Cmp> prefixes[] = {{"<=", Cmp::Le}, {">=", Cmp::Ge}, {"!=", Cmp::Ne},
                                                         {"<", Cmp::Lt},  {">", Cmp::Gt},  {"=", Cmp::Eq}};
  for (auto [p, cmp] : prefixes) {
    std::string_view sv(arg);
    if (sv.substr(0, std::char_traits<char>::length(p)) == p)
      return {attr + arg, cmp, arg.substr(std::char_traits<char>::length(p))};
  }
  return {attr + "<=" + arg, Cmp::Le, arg};
}

}  // namespace

FormalContext conceptual_scale(const ManyValuedContext& mv, const std::vector<ScaleSpec>& specs) {
  std::vector<Attribute> attrs;
  std::vector<Bits> cols;
  for (const auto& spec : specs) {
    auto it = std::find(mv.attributes.begin(), mv.attributes.end(), spec.attribute);
    if (it == mv.attributes.end()) throw InvalidArgument("unknown many-valued attribute " + spec.attribute);
    const auto n = static_cast<std::size_t>(it - mv.attributes.begin());

    std::vector<std::string> observed;
    for (const auto& row : mv.values)
      if (row.at(n)) observed.push_back(*row[n]);
    bool numeric = std::all_of(observed.begin(), observed.end(), [](const auto& v) { return as_number(v).has_value(); });
    std::sort(observed.begin(), observed.end(), [&](const std::string& a, const std::string& b) {
      return numeric ? *as_number(a) < *as_number(b) : a < b;
    });
    observed.erase(std::unique(observed.begin(), observed.end()), observed.end());

    std::vector<Predicate> preds;
    const auto& args = spec.arguments;
    switch (spec.kind) {
      case ScaleKind::Dichotomic:
        if (args.size() != 1) throw InvalidArgument("dichotomic scaling of " + spec.attribute + " needs one value");
        preds.push_back({spec.attribute + "=" + args[0], Cmp::Eq, args[0]});
        break;
      case ScaleKind::Nominal:
      case ScaleKind::Contranominal: {
        bool eq = spec.kind == ScaleKind::Nominal;
        for (const auto& w : args.empty() ? observed : args)
          preds.push_back({spec.attribute + (eq ? "=" : "!=") + w, eq ? Cmp::Eq : Cmp::Ne, w});
        break;
      }
      case ScaleKind::Ordinal:
      case ScaleKind::InterOrdinal: {
        if (!numeric) throw InvalidArgument("ordinal scaling of " + spec.attribute + " over non-comparable values");
        if (args.empty()) {
          for (const auto& w : observed) preds.push_back({spec.attribute + "<=" + w, Cmp::Le, w});
          if (spec.kind == ScaleKind::InterOrdinal)
            for (const auto& w : observed) preds.push_back({spec.attribute + ">=" + w, Cmp::Ge, w});
        } else {
          for (const auto& a : args) {
            auto p = comparison(spec.attribute, a);
            if (!as_number(p.value)) throw InvalidArgument("non-numeric threshold " + a + " for " + spec.attribute);
            preds.push_back(p);
            bool plain_value = as_number(a).has_value();
            if (spec.kind == ScaleKind::InterOrdinal && plain_value)
              preds.push_back({spec.attribute + ">=" + a, Cmp::Ge, a});
          }
        }
        break;
      }
    }
    for (const auto& p : preds) {
      if (numeric && p.cmp != Cmp::Eq && p.cmp != Cmp::Ne && !as_number(p.value))
        throw InvalidArgument("non-comparable threshold " + p.value);
      Bits col(mv.objects.size());
      for (std::size_t g = 0; g < mv.objects.size(); ++g) {
        const auto& v = mv.values.at(g).at(n);
        if (v && evaluate(p, *v, numeric && as_number(p.value).has_value())) col.set(g);
      }
      attrs.push_back(Attribute::plain(p.label));
      cols.push_back(std::move(col));
    }
  }
  const auto count = attrs.size();
  return FormalContext(mv.id, mv.objects, std::move(attrs), count, std::move(cols));
}

}  // namespace relca
