#pragma once

#include "relca/engine.hpp"
#include "relca/io.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace relca::testing {

inline std::string data_path(const std::string& name) { return std::string(RELCA_DATA_DIR) + "/" + name; }

inline RelationalContextFamily load(const std::string& name) { return parse_rcf(read_file(data_path(name))); }

inline Family load_solution(const std::string& name, const RelationalContextFamily& rcf) {
  return parse_solution(read_file(data_path(name)), rcf);
}

inline Bits bits(std::size_t n, std::initializer_list<std::size_t> on) {
  Bits b(n);
  for (auto i : on) b.set(i);
  return b;
}

inline std::set<std::string> scaled_texts(const FormalContext& k) {
  std::set<std::string> out;
  for (std::size_t m = k.base_count(); m < k.attribute_count(); ++m) out.insert(k.attributes()[m].text());
  return out;
}

inline std::set<std::string> attribute_texts(const FormalContext& k, const Bits& set) {
  std::set<std::string> out;
  for (auto m : indices(set)) out.insert(k.attributes()[m].text());
  return out;
}

inline std::set<std::string> names(const ConceptLattice& l) {
  auto v = l.name_strings();
  return {v.begin(), v.end()};
}

// Concept name -> attributes introduced there.
inline std::map<std::string, std::set<std::string>> reduced_intents(const ConceptLattice& l) {
  std::map<std::string, std::set<std::string>> out;
  for (std::size_t i = 0; i < l.size(); ++i)
    out[l.context().name_of(l.concepts()[i].extent)] = attribute_texts(l.context(), l.introduced_attributes(i));
  return out;
}

// Concept name -> full intent.
inline std::map<std::string, std::set<std::string>> intents(const ConceptLattice& l) {
  std::map<std::string, std::set<std::string>> out;
  for (const auto& c : l.concepts()) out[l.context().name_of(c.extent)] = attribute_texts(l.context(), c.intent);
  return out;
}

// Attribute text -> names of the objects having it.
inline std::map<std::string, std::string> columns(const FormalContext& k) {
  std::map<std::string, std::string> out;
  for (std::size_t m = 0; m < k.attribute_count(); ++m) out[k.attributes()[m].text()] = k.name_of(k.column(m));
  return out;
}

// Family with the given scaled attributes written in file syntax.
inline Family family_of(const RelationalContextFamily& rcf, const std::vector<std::vector<std::string>>& texts) {
  std::vector<std::vector<Attribute>> scaled(texts.size());
  for (std::size_t x = 0; x < texts.size(); ++x)
    for (const auto& t : texts[x]) scaled[x].push_back(parse_scaled_attribute(t, rcf, x));
  return family_from_attributes(rcf, scaled);
}

inline std::vector<std::string> keys(const std::vector<Family>& fs) {
  std::vector<std::string> out;
  for (const auto& f : fs) out.push_back(family_key(f));
  return out;
}

}  // namespace relca::testing
