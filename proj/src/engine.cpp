#include "relca/engine.hpp"

#include "relca/errors.hpp"

#include <algorithm>
#include <limits>

namespace relca {

ContextLatticePair make_pair(FormalContext k) {
  auto kp = std::make_shared<const FormalContext>(std::move(k));
  auto l = fca(kp);
  return {std::move(kp), std::move(l)};
}

std::vector<const ConceptLattice*> Family::lattices() const {
  std::vector<const ConceptLattice*> out;
  out.reserve(pairs.size());
  for (const auto& p : pairs) out.push_back(&p.lattice);
  return out;
}

std::size_t Family::scaled_attribute_count() const {
  std::size_t n = 0;
  for (const auto& p : pairs) n += p.k().attribute_count() - p.k().base_count();
  return n;
}

namespace {

void require_same_shape(const Family& a, const Family& b, const char* op) {
  if (a.size() != b.size()) throw IncompatibleContexts(std::string(op) + ": families of different sizes");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].k().compatible_with(b[i].k()))
      throw IncompatibleContexts(std::string(op) + ": context " + a[i].k().id() + " differs in objects or base");
}

}  // namespace

bool operator==(const Family& a, const Family& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].context != b[i].context && !a[i].k().same_attributes(b[i].k())) return false;
  return true;
}

bool family_leq(const Family& a, const Family& b) {
  require_same_shape(a, b, "family_leq");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].k().attributes_subset_of(b[i].k())) return false;
  return true;
}

bool family_less(const Family& a, const Family& b) { return family_leq(a, b) && a != b; }

Family family_meet(const Family& a, const Family& b) {
  require_same_shape(a, b, "family_meet");
  Family out;
  for (std::size_t i = 0; i < a.size(); ++i) out.pairs.push_back(make_pair(context_meet(a[i].k(), b[i].k())));
  return out;
}

Family family_join(const Family& a, const Family& b) {
  require_same_shape(a, b, "family_join");
  Family out;
  for (std::size_t i = 0; i < a.size(); ++i) out.pairs.push_back(make_pair(context_join(a[i].k(), b[i].k())));
  return out;
}

bool family_canonical_less(const Family& a, const Family& b) {
  auto ca = a.scaled_attribute_count(), cb = b.scaled_attribute_count();
  if (ca != cb) return ca < cb;
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
    const auto& ka = a[i].k();
    const auto& kb = b[i].k();
    auto fa = ka.attributes().begin() + static_cast<std::ptrdiff_t>(ka.base_count());
    auto fb = kb.attributes().begin() + static_cast<std::ptrdiff_t>(kb.base_count());
    if (std::lexicographical_compare(fa, ka.attributes().end(), fb, kb.attributes().end(), scaled_less)) return true;
    if (std::lexicographical_compare(fb, kb.attributes().end(), fa, ka.attributes().end(), scaled_less)) return false;
  }
  return a.size() < b.size();
}

Family family_from_attributes(const RelationalContextFamily& rcf, const std::vector<std::vector<Attribute>>& scaled) {
  if (scaled.size() != rcf.contexts.size()) throw InvalidArgument("family_from_attributes: wrong number of contexts");
  Family out;
  for (std::size_t x = 0; x < scaled.size(); ++x) {
    std::vector<Bits> cols;
    for (const auto& a : scaled[x]) cols.push_back(scaled_column(rcf, x, a));
    out.pairs.push_back(make_pair(rcf.contexts[x].with_scaled(scaled[x], std::move(cols))));
  }
  return out;
}

Family ef_star(const Family& o, const RelationalContextFamily& rcf, Exec exec) {
  const auto lattices = o.lattices();
  Family out;
  out.pairs.resize(o.size());
  parallel_for(o.size(), exec, [&](std::size_t x) {
    FormalContext k = scale_context(o[x].k(), x, rcf, lattices);
    out.pairs[x] = k.attribute_count() == o[x].k().attribute_count() ? o[x] : make_pair(std::move(k));
  });
  return out;
}

Family pq_star(const Family& o, const RelationalContextFamily& rcf, Exec exec) {
  const auto lattices = o.lattices();
  Family out;
  out.pairs.resize(o.size());
  parallel_for(o.size(), exec, [&](std::size_t x) {
    if (unsupported_attributes(o[x].k(), rcf, lattices).empty()) {
      out.pairs[x] = o[x];
      return;
    }
    out.pairs[x] = make_pair(purge(o[x].l(), rcf, lattices));
  });
  return out;
}

namespace {

template <typename Step>
ClosureTrace closure(const Family& o, const RelationalContextFamily& rcf, Step step, const char* name) {
  ClosureTrace trace;
  trace.iterates.push_back(o);
  const auto cap = iteration_cap(rcf);
  for (std::size_t i = 0; i < cap; ++i) {
    Family next = step(trace.iterates.back());
    if (next == trace.iterates.back()) {
      trace.result = trace.iterates.back();
      return trace;
    }
    ++trace.changing_steps;
    trace.iterates.push_back(std::move(next));
  }
  throw InternalError(std::string(name) + ": iteration cap exceeded");
}

}  // namespace

ClosureTrace ef_closure_trace(const Family& o, const RelationalContextFamily& rcf, Exec exec) {
  return closure(o, rcf, [&](const Family& f) { return ef_star(f, rcf, exec); }, "ef_closure");
}

ClosureTrace pq_closure_trace(const Family& o, const RelationalContextFamily& rcf, Exec exec) {
  return closure(o, rcf, [&](const Family& f) { return pq_star(f, rcf, exec); }, "pq_closure");
}

Family ef_closure(const Family& o, const RelationalContextFamily& rcf, Exec exec) {
  Family cur = o;
  const auto cap = iteration_cap(rcf);
  for (std::size_t i = 0; i < cap; ++i) {
    Family next = ef_star(cur, rcf, exec);
    if (next == cur) return cur;
    cur = std::move(next);
  }
  throw InternalError("ef_closure: iteration cap exceeded");
}

Family pq_closure(const Family& o, const RelationalContextFamily& rcf, Exec exec) {
  Family cur = o;
  const auto cap = iteration_cap(rcf);
  for (std::size_t i = 0; i < cap; ++i) {
    Family next = pq_star(cur, rcf, exec);
    if (next == cur) return cur;
    cur = std::move(next);
  }
  throw InternalError("pq_closure: iteration cap exceeded");
}

std::size_t iteration_cap(const RelationalContextFamily& rcf) {
  constexpr auto kMax = std::numeric_limits<std::size_t>::max() / 4;
  std::size_t total = 1;
  for (const auto& r : rcf.relations) {
    const auto gz = rcf.contexts[r.to].object_count();
    const std::size_t names = gz >= 60 ? kMax : (std::size_t{1} << gz);
    for (Op op : rcf.operators.ops) {
      std::size_t per = !op_has_target(op) ? 1 : op_has_bound(op) ? names * std::max<std::size_t>(gz, 1) : names;
      if (per > kMax || total > kMax - per) return kMax;
      total += per;
    }
  }
  return total + 1;
}

std::vector<std::vector<Attribute>> full_language(const RelationalContextFamily& rcf, bool include_unsatisfiable) {
  std::vector<std::vector<Bits>> names;
  for (const auto& k : rcf.contexts) names.push_back(all_names(k));
  std::vector<std::vector<Attribute>> out;
  for (std::size_t x = 0; x < rcf.contexts.size(); ++x)
    out.push_back(attribute_language(x, rcf, names, include_unsatisfiable));
  return out;
}

Family bottom_family(const RelationalContextFamily& rcf) {
  Family out;
  for (const auto& k : rcf.contexts) out.pairs.push_back(make_pair(k));
  return out;
}

Family top_family(const RelationalContextFamily& rcf) { return family_from_attributes(rcf, full_language(rcf)); }

Family rca_lfp(const RelationalContextFamily& rcf, Exec exec) { return ef_closure(bottom_family(rcf), rcf, exec); }

Family rca_gfp(const RelationalContextFamily& rcf, Exec exec) { return pq_closure(top_family(rcf), rcf, exec); }

std::vector<std::vector<Attribute>> missing_attributes(const Family& o, const RelationalContextFamily& rcf) {
  std::vector<std::vector<Bits>> names;
  for (const auto& p : o.pairs) names.push_back(p.l().names());
  std::vector<std::vector<Attribute>> out(o.size());
  for (std::size_t x = 0; x < o.size(); ++x)
    for (auto& a : attribute_language(x, rcf, names))
      if (!o[x].k().attribute_index(a)) out[x].push_back(std::move(a));
  return out;
}

std::vector<std::vector<Attribute>> unsupported(const Family& o, const RelationalContextFamily& rcf) {
  const auto lattices = o.lattices();
  std::vector<std::vector<Attribute>> out(o.size());
  for (std::size_t x = 0; x < o.size(); ++x)
    for (auto m : unsupported_attributes(o[x].k(), rcf, lattices)) out[x].push_back(o[x].k().attributes()[m]);
  return out;
}

std::vector<std::string> well_formedness_violations(const Family& o, const RelationalContextFamily& rcf) {
  std::vector<std::string> out;
  if (o.size() != rcf.contexts.size()) {
    out.push_back("family has " + std::to_string(o.size()) + " contexts, expected " +
                  std::to_string(rcf.contexts.size()));
    return out;
  }
  for (std::size_t x = 0; x < o.size(); ++x) {
    const auto& k = o[x].k();
    const auto& k0 = rcf.contexts[x];
    if (k.id() != k0.id() || !k.base_only().compatible_with(k0)) {
      out.push_back("context " + k.id() + " does not extend initial context " + k0.id());
      continue;
    }
    for (std::size_t m = k.base_count(); m < k.attribute_count(); ++m) {
      const auto& a = k.attributes()[m];
      auto ri = rcf.relation_index(a.relation);
      if (!ri || rcf.relations[*ri].from != x) {
        out.push_back("attribute " + a.text() + " of " + k.id() + " uses no relation from " + k.id());
        continue;
      }
      const auto& r = rcf.relations[*ri];
      if (!rcf.operators.contains(a.op)) out.push_back("attribute " + a.text() + " uses an operator outside the set");
      if (op_has_target(a.op) && a.target.size() != rcf.contexts[r.to].object_count())
        out.push_back("attribute " + a.text() + " has a target outside " + rcf.contexts[r.to].id());
      else if (!satisfiable(a))
        out.push_back("attribute " + a.text() + " can never hold");
      else if (op_has_bound(a.op) &&
               (a.bound < 1 || a.bound > rcf.contexts[r.to].object_count() ||
                (rcf.operators.max_bound != 0 && a.bound > rcf.operators.max_bound)))
        out.push_back("attribute " + a.text() + " has a bound out of range");
      else if (scaled_column(rcf, x, a) != k.column(m))
        out.push_back("attribute " + a.text() + " has an incidence column that disagrees with the relation");
    }
  }
  return out;
}

bool is_well_formed(const Family& o, const RelationalContextFamily& rcf) {
  return well_formedness_violations(o, rcf).empty();
}

bool is_saturated(const Family& o, const RelationalContextFamily& rcf) {
  auto miss = missing_attributes(o, rcf);
  return std::all_of(miss.begin(), miss.end(), [](const auto& v) { return v.empty(); });
}

bool is_self_supported(const Family& o, const RelationalContextFamily& rcf) {
  const auto lattices = o.lattices();
  for (std::size_t x = 0; x < o.size(); ++x)
    if (!unsupported_attributes(o[x].k(), rcf, lattices).empty()) return false;
  return true;
}

bool is_acceptable(const Family& o, const RelationalContextFamily& rcf) {
  return is_well_formed(o, rcf) && is_saturated(o, rcf) && is_self_supported(o, rcf);
}

bool has_unique_solution(const RelationalContextFamily& rcf) { return rca_lfp(rcf) == rca_gfp(rcf); }

}  // namespace relca
