#include "relca/export.hpp"

#include <set>
#include <sstream>

namespace relca {

namespace {

std::string escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out;
}

std::string list(const FormalContext& k, const Bits& set, bool attributes) {
  std::string out;
  for (auto i : indices(set)) {
    if (!out.empty()) out += ", ";
    out += attributes ? k.attributes()[i].pretty() : k.objects()[i];
  }
  return out;
}

}  // namespace

std::string export_dot(const ConceptLattice& l, Labeling labeling) {
  const auto& k = l.context();
  std::ostringstream out;
  out << "digraph \"" << escape(k.id()) << "\" {\n";
  out << "  rankdir=TB;\n  node [shape=box, fontname=\"Helvetica\"];\n  edge [dir=none];\n";
  for (std::size_t i = 0; i < l.size(); ++i) {
    const auto& c = l.concepts()[i];
    Bits attrs = labeling == Labeling::Full ? c.intent : l.introduced_attributes(i);
    Bits objs = labeling == Labeling::Full ? c.extent : l.introduced_objects(i);
    out << "  c" << i << " [label=\"" << escape(k.name_of(c.extent)) << "\\n" << escape(list(k, attrs, true))
        << "\\n" << escape(list(k, objs, false)) << "\"];\n";
  }
  for (auto [up, lo] : l.covers()) out << "  c" << up << " -> c" << lo << ";\n";
  out << "}\n";
  return out.str();
}

TBox build_tbox(const Family& o, const RelationalContextFamily& rcf) {
  TBox t;
  for (const auto& p : o.pairs) {
    const auto& k = p.k();
    const auto& l = p.l();
    const auto covers = l.covers();
    for (std::size_t i = 0; i < l.size(); ++i) {
      const auto& c = l.concepts()[i];
      if (c.extent.none()) continue;  // the empty concept is ⊥ itself
      std::vector<std::string> conj;
      if (i == 0) conj.push_back("⊤_" + k.id());
      for (auto [up, lo] : covers)
        if (lo == i) conj.push_back(k.name_of(l.concepts()[up].extent));
      for (auto m : indices(l.introduced_attributes(i))) conj.push_back(k.attributes()[m].pretty());
      std::string ax = k.name_of(c.extent) + " ⊑ ";
      for (std::size_t j = 0; j < conj.size(); ++j) ax += (j ? " ⊓ " : "") + conj[j];
      t.axioms.push_back(ax);
    }
    std::set<std::pair<std::size_t, std::size_t>> disjoint;
    for (std::size_t parent = 0; parent < l.size(); ++parent) {
      std::vector<std::size_t> kids;
      for (auto [up, lo] : covers)
        if (up == parent && l.concepts()[lo].extent.any()) kids.push_back(lo);
      for (std::size_t a = 0; a < kids.size(); ++a)
        for (std::size_t b = a + 1; b < kids.size(); ++b)
          if (!l.concepts()[kids[a]].extent.intersects(l.concepts()[kids[b]].extent))
            disjoint.insert({std::min(kids[a], kids[b]), std::max(kids[a], kids[b])});
    }
    for (auto [a, b] : disjoint)
      t.axioms.push_back(k.name_of(l.concepts()[a].extent) + " ⊓ " + k.name_of(l.concepts()[b].extent) + " ⊑ ⊥");
    for (std::size_t g = 0; g < k.object_count(); ++g) {
      Bits single(k.object_count());
      single.set(g);
      Bits ext = k.derive_extent(k.derive_intent(single));
      t.assertions.push_back(k.name_of(ext) + "(" + k.objects()[g] + ")");
    }
  }
  for (const auto& r : rcf.relations)
    for (auto [g, h] : r.pairs)
      t.assertions.push_back(r.id + "(" + rcf.contexts[r.from].objects()[g] + "," + rcf.contexts[r.to].objects()[h] + ")");
  return t;
}

std::string export_tbox(const Family& o, const RelationalContextFamily& rcf) {
  auto t = build_tbox(o, rcf);
  std::ostringstream out;
  out << "# TBox\n";
  for (const auto& a : t.axioms) out << a << '\n';
  out << "# ABox\n";
  for (const auto& a : t.assertions) out << a << '\n';
  return out.str();
}

}  // namespace relca
