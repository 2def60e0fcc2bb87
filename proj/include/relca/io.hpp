#pragma once

#include "relca/engine.hpp"
#include "relca/fpspace.hpp"
#include "relca/oracle.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <string_view>

namespace relca {

// RCF text format, line oriented, '#' starts a comment:
//
//   context K1                    manyvalued P              relation p K1 K2
//   objects a b c                 objects x y               a->d b->e
//   attributes m1 m2              attributes age            c->f
//   scaled E p.DE                 x 12                      end
//   a x.                          y -
//   b .x                          scale age nominal         operators E AE
//   c ..                          end                       bound 2
//   end
//
// Incidence rows list one character per attribute ('x' or '.'); rows may stop
// after the plain attributes, scaled columns are then computed. "scaled" lines
// are only accepted in solution files.
RelationalContextFamily parse_rcf(std::string_view text);
std::string serialize_rcf(const RelationalContextFamily& rcf);

// A solution file holds one context block per context of rcf, possibly with
// scaled attributes. The result is a family over rcf (not checked for
// well-formedness beyond parsing).
Family parse_solution(std::string_view text, const RelationalContextFamily& rcf);
std::string serialize_family(const Family& o, bool with_lattices = false);

// "E p.DE", "CW AB.p", "LE 2 p.AB", "EX p" for a relation leaving context x.
Attribute parse_scaled_attribute(std::string_view text, const RelationalContextFamily& rcf, std::size_t x);

std::string read_file(const std::string& path);

using Json = nlohmann::ordered_json;

Json family_json(const Family& o);
Json report_json(const SolutionSpaceReport& r);
Json closure_report_json(const ClosureImageReport& r);

}  // namespace relca
