#include "relca/io.hpp"

#include "relca/errors.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace relca {

namespace {

struct Token {
  std::string text;
  std::size_t col = 0;
  std::size_t line = 0;
};

struct Line {
  std::size_t no = 0;
  std::vector<Token> toks;
};

std::vector<Line> lex(std::string_view text) {
  std::vector<Line> lines;
  std::size_t no = 0, pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    auto raw = text.substr(pos, end - pos);
    ++no;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{no, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r')) ++i;
      if (i >= raw.size()) break;
      std::size_t j = i;
      while (j < raw.size() && raw[j] != ' ' && raw[j] != '\t' && raw[j] != '\r') ++j;
      line.toks.push_back({std::string(raw.substr(i, j - i)), i + 1, no});
      i = j;
    }
    if (!line.toks.empty()) lines.push_back(std::move(line));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return lines;
}

[[noreturn]] void fail(const Line& l, std::size_t tok, const std::string& what) {
  std::size_t col = tok < l.toks.size() ? l.toks[tok].col : (l.toks.empty() ? 1 : l.toks.back().col);
  throw ParseError(l.no, col, what);
}

[[noreturn]] void fail_at(const Line& l, const Token& t, const std::string& what) {
  throw ParseError(t.line ? t.line : l.no, t.col, what);
}

std::string join(const std::vector<Token>& toks, std::size_t from) {
  std::string out;
  for (std::size_t i = from; i < toks.size(); ++i) {
    if (!out.empty()) out += ' ';
    out += toks[i].text;
  }
  return out;
}

bool valid_object_name(const std::string& s) {
  return !s.empty() && s.find_first_of(".+") == std::string::npos && s.find("->") == std::string::npos;
}

const std::set<std::string> kKeywords = {"context", "manyvalued", "relation", "operators", "bound", "objects",
                                         "attributes", "scaled",  "scale",    "end"};

struct RawContext {
  Line header;
  std::string id;
  bool many_valued = false;
  std::vector<Token> objects;
  std::vector<Token> attributes;
  std::vector<Line> scaled;
  std::vector<Line> rows;
  std::vector<Line> scales;
  bool has_objects = false;
};

struct RawRelation {
  Line header;
  std::vector<std::pair<Line, Token>> pairs;
};

struct RawDoc {
  std::vector<RawContext> contexts;
  std::vector<RawRelation> relations;
  std::optional<Line> operators;
  std::optional<Line> bound;
};

RawDoc read_blocks(const std::vector<Line>& lines) {
  RawDoc doc;
  std::size_t i = 0;
  auto expect_end = [&](const Line& header) {
    throw ParseError(header.no, header.toks[0].col, "block '" + join(header.toks, 0) + "' is missing 'end'");
  };
  while (i < lines.size()) {
    const Line& l = lines[i];
    const auto& kw = l.toks[0].text;
    if (kw == "context" || kw == "manyvalued") {
      if (l.toks.size() != 2) fail(l, 1, kw + " needs exactly one identifier");
      RawContext c;
      c.header = l;
      c.id = l.toks[1].text;
      c.many_valued = kw == "manyvalued";
      ++i;
      bool closed = false;
      for (; i < lines.size(); ++i) {
        const Line& b = lines[i];
        const auto& k = b.toks[0].text;
        if (k == "end") {
          if (b.toks.size() != 1) fail(b, 1, "unexpected token after 'end'");
          closed = true;
          ++i;
          break;
        }
        if (k == "objects") {
          if (c.has_objects) fail(b, 0, "objects declared twice");
          c.has_objects = true;
          c.objects.assign(b.toks.begin() + 1, b.toks.end());
        } else if (k == "attributes") {
          c.attributes.insert(c.attributes.end(), b.toks.begin() + 1, b.toks.end());
        } else if (k == "scaled") {
          if (c.many_valued) fail(b, 0, "scaled attributes are not allowed in a many-valued block");
          if (b.toks.size() < 2) fail(b, 1, "scaled needs an attribute");
          c.scaled.push_back(b);
        } else if (k == "scale") {
          if (!c.many_valued) fail(b, 0, "scale is only allowed in a many-valued block");
          c.scales.push_back(b);
        } else if (kKeywords.count(k)) {
          fail(b, 0, "keyword '" + k + "' not allowed inside a context block");
        } else {
          c.rows.push_back(b);
        }
      }
      if (!closed) expect_end(l);
      doc.contexts.push_back(std::move(c));
    } else if (kw == "relation") {
      if (l.toks.size() != 4) fail(l, std::min<std::size_t>(l.toks.size(), 4), "relation needs: relation <id> <from> <to>");
      RawRelation r;
      r.header = l;
      ++i;
      bool closed = false;
      for (; i < lines.size(); ++i) {
        const Line& b = lines[i];
        if (b.toks[0].text == "end") {
          if (b.toks.size() != 1) fail(b, 1, "unexpected token after 'end'");
          closed = true;
          ++i;
          break;
        }
        for (const auto& t : b.toks) r.pairs.push_back({b, t});
      }
      if (!closed) expect_end(l);
      doc.relations.push_back(std::move(r));
    } else if (kw == "operators") {
      if (doc.operators) fail(l, 0, "operators declared twice");
      doc.operators = l;
      ++i;
    } else if (kw == "bound") {
      if (doc.bound) fail(l, 0, "bound declared twice");
      if (l.toks.size() != 2) fail(l, 1, "bound needs one positive integer");
      doc.bound = l;
      ++i;
    } else {
      fail(l, 0, "unexpected '" + kw + "' at top level");
    }
  }
  return doc;
}

unsigned parse_positive(const Line& l, const Token& t) {
  unsigned v = 0;
  if (t.text.empty() || t.text.size() > 9 || !std::all_of(t.text.begin(), t.text.end(), ::isdigit))
    fail_at(l, t, "expected a positive integer, got '" + t.text + "'");
  v = static_cast<unsigned>(std::stoul(t.text));
  if (v == 0) fail_at(l, t, "expected a positive integer, got 0");
  return v;
}

std::vector<std::string> object_names(const RawContext& c) {
  std::vector<std::string> objs;
  std::set<std::string> seen;
  for (const auto& t : c.objects) {
    if (!valid_object_name(t.text)) fail_at(c.header, t, "invalid object name '" + t.text + "'");
    if (kKeywords.count(t.text)) fail_at(c.header, t, "object name '" + t.text + "' is a keyword");
    if (!seen.insert(t.text).second) fail_at(c.header, t, "duplicate object '" + t.text + "'");
    objs.push_back(t.text);
  }
  return objs;
}

// Incidence rows: a map object -> pattern (possibly empty), with checks.
std::map<std::size_t, std::pair<const Line*, std::string>> read_rows(const RawContext& c,
                                                                     const std::vector<std::string>& objs,
                                                                     std::size_t full, std::size_t base) {
  std::map<std::size_t, std::pair<const Line*, std::string>> rows;
  for (const auto& r : c.rows) {
    auto it = std::find(objs.begin(), objs.end(), r.toks[0].text);
    if (it == objs.end()) fail(r, 0, "unknown object '" + r.toks[0].text + "' in context " + c.id);
    auto g = static_cast<std::size_t>(it - objs.begin());
    if (rows.count(g)) fail(r, 0, "duplicate row for object '" + r.toks[0].text + "'");
    if (r.toks.size() > 2) fail(r, 2, "row has more than one pattern");
    std::string pattern = r.toks.size() == 2 ? r.toks[1].text : "";
    if (pattern.size() != full && pattern.size() != base)
      fail(r, 1, "ragged row: " + std::to_string(pattern.size()) + " cells, expected " + std::to_string(full));
    for (std::size_t i = 0; i < pattern.size(); ++i)
      if (pattern[i] != 'x' && pattern[i] != 'X' && pattern[i] != '.')
        throw ParseError(r.no, r.toks[1].col + i, std::string("bad incidence cell '") + pattern[i] + "'");
    rows[g] = {&r, pattern};
  }
  if (base > 0 && rows.size() != objs.size()) {
    for (std::size_t g = 0; g < objs.size(); ++g)
      if (!rows.count(g)) throw ParseError(c.header.no, c.header.toks[0].col, "context " + c.id + " lacks a row for '" + objs[g] + "'");
  }
  return rows;
}

FormalContext build_plain_context(const RawContext& c) {
  if (!c.scaled.empty()) fail(c.scaled.front(), 0, "scaled attributes are not allowed in an initial context");
  auto objs = object_names(c);
  std::vector<Attribute> attrs;
  std::set<std::string> seen;
  for (const auto& t : c.attributes) {
    if (!seen.insert(t.text).second) fail_at(c.header, t, "duplicate attribute '" + t.text + "'");
    attrs.push_back(Attribute::plain(t.text));
  }
  auto rows = read_rows(c, objs, attrs.size(), attrs.size());
  std::vector<Bits> cols(attrs.size(), Bits(objs.size()));
  for (const auto& [g, row] : rows)
    for (std::size_t m = 0; m < row.second.size(); ++m)
      if (row.second[m] != '.') cols[m].set(g);
  const auto n = attrs.size();
  return FormalContext(c.id, std::move(objs), std::move(attrs), n, std::move(cols));
}

FormalContext build_many_valued(const RawContext& c) {
  ManyValuedContext mv;
  mv.id = c.id;
  mv.objects = object_names(c);
  for (const auto& t : c.attributes) mv.attributes.push_back(t.text);
  mv.values.assign(mv.objects.size(), std::vector<std::optional<std::string>>(mv.attributes.size()));
  std::set<std::size_t> seen;
  for (const auto& r : c.rows) {
    auto it = std::find(mv.objects.begin(), mv.objects.end(), r.toks[0].text);
    if (it == mv.objects.end()) fail(r, 0, "unknown object '" + r.toks[0].text + "'");
    auto g = static_cast<std::size_t>(it - mv.objects.begin());
    if (!seen.insert(g).second) fail(r, 0, "duplicate row for '" + r.toks[0].text + "'");
    if (r.toks.size() != mv.attributes.size() + 1)
      fail(r, std::min(r.toks.size(), mv.attributes.size() + 1),
           "ragged row: expected " + std::to_string(mv.attributes.size()) + " values");
    for (std::size_t n = 0; n < mv.attributes.size(); ++n)
      if (r.toks[n + 1].text != "-") mv.values[g][n] = r.toks[n + 1].text;
  }
  std::vector<ScaleSpec> specs;
  for (const auto& s : c.scales) {
    if (s.toks.size() < 3) fail(s, s.toks.size(), "scale needs: scale <attribute> <kind> [arguments]");
    if (std::find(mv.attributes.begin(), mv.attributes.end(), s.toks[1].text) == mv.attributes.end())
      fail(s, 1, "unknown many-valued attribute '" + s.toks[1].text + "'");
    auto kind = scale_kind_from_name(s.toks[2].text);
    if (!kind) fail(s, 2, "unknown scale kind '" + s.toks[2].text + "'");
    ScaleSpec spec{s.toks[1].text, *kind, {}};
    for (std::size_t i = 3; i < s.toks.size(); ++i) spec.arguments.push_back(s.toks[i].text);
    specs.push_back(std::move(spec));
  }
  try {
    return conceptual_scale(mv, specs);
  } catch (const InvalidArgument& e) {
    throw ParseError(c.header.no, c.header.toks[0].col, e.what());
  }
}

Relation build_relation(const RawRelation& r, const std::vector<FormalContext>& contexts) {
  const auto& h = r.header;
  auto find = [&](const Token& t) {
    for (std::size_t i = 0; i < contexts.size(); ++i)
      if (contexts[i].id() == t.text) return i;
    fail_at(h, t, "dangling relation endpoint '" + t.text + "'");
  };
  auto from = find(h.toks[2]);
  auto to = find(h.toks[3]);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (const auto& [line, t] : r.pairs) {
    auto arrow = t.text.find("->");
    if (arrow == std::string::npos) fail_at(line, t, "expected a pair g->h, got '" + t.text + "'");
    auto g = contexts[from].object_index(t.text.substr(0, arrow));
    auto hh = contexts[to].object_index(t.text.substr(arrow + 2));
    if (!g) fail_at(line, t, "unknown object '" + t.text.substr(0, arrow) + "' in " + contexts[from].id());
    if (!hh) throw ParseError(line.no, t.col + arrow + 2, "unknown object '" + t.text.substr(arrow + 2) + "' in " + contexts[to].id());
    pairs.emplace_back(*g, *hh);
  }
  return Relation(h.toks[1].text, from, to, contexts[from].object_count(), contexts[to].object_count(), std::move(pairs));
}

}  // namespace

Attribute parse_scaled_attribute(std::string_view text, const RelationalContextFamily& rcf, std::size_t x) {
  std::vector<std::string> toks;
  {
    std::istringstream in{std::string(text)};
    for (std::string t; in >> t;) toks.push_back(t);
  }
  if (toks.empty()) throw InvalidArgument("empty scaled attribute");
  auto op = op_from_keyword(toks[0]);
  if (!op) throw InvalidArgument("unknown operator '" + toks[0] + "'");
  const std::size_t expected = op_has_bound(*op) ? 3 : 2;
  if (toks.size() != expected) throw InvalidArgument("malformed scaled attribute '" + std::string(text) + "'");
  unsigned bound = 0;
  if (op_has_bound(*op)) {
    const auto& b = toks[1];
    if (b.empty() || b.size() > 9 || !std::all_of(b.begin(), b.end(), ::isdigit) || std::stoul(b) == 0)
      throw InvalidArgument("bad bound '" + b + "'");
    bound = static_cast<unsigned>(std::stoul(b));
  }
  const auto& body = toks.back();
  std::string rel, target;
  if (!op_has_target(*op)) {
    rel = body;
  } else if (*op == Op::ContainsWide || *op == Op::StrictContains) {
    auto dot = body.rfind('.');
    if (dot == std::string::npos) throw InvalidArgument("expected NAME.relation in '" + body + "'");
    target = body.substr(0, dot);
    rel = body.substr(dot + 1);
  } else {
    auto dot = body.find('.');
    if (dot == std::string::npos) throw InvalidArgument("expected relation.NAME in '" + body + "'");
    rel = body.substr(0, dot);
    target = body.substr(dot + 1);
  }
  auto ri = rcf.relation_index(rel);
  if (!ri) throw InvalidArgument("unknown relation '" + rel + "'");
  const auto& r = rcf.relations[*ri];
  if (r.from != x)
    throw InvalidArgument("relation '" + rel + "' does not start at context " + rcf.contexts[x].id());
  Bits extent;
  if (op_has_target(*op)) {
    auto parsed = rcf.contexts[r.to].parse_name(target);
    if (!parsed) throw InvalidArgument("'" + target + "' is not a concept name of " + rcf.contexts[r.to].id());
    extent = *parsed;
  }
  return make_attribute(rcf, *op, r, extent, bound);
}

RelationalContextFamily parse_rcf(std::string_view text) {
  auto doc = read_blocks(lex(text));
  RelationalContextFamily rcf;
  std::set<std::string> ids;
  for (const auto& c : doc.contexts) {
    if (!ids.insert(c.id).second) fail(c.header, 1, "duplicate context '" + c.id + "'");
    rcf.contexts.push_back(c.many_valued ? build_many_valued(c) : build_plain_context(c));
  }
  std::set<std::string> rids;
  for (const auto& r : doc.relations) {
    if (!rids.insert(r.header.toks[1].text).second) fail(r.header, 1, "duplicate relation '" + r.header.toks[1].text + "'");
    if (ids.count(r.header.toks[1].text)) fail(r.header, 1, "relation id clashes with a context id");
    rcf.relations.push_back(build_relation(r, rcf.contexts));
  }
  if (doc.operators) {
    const auto& l = *doc.operators;
    for (std::size_t i = 1; i < l.toks.size(); ++i) {
      auto op = op_from_keyword(l.toks[i].text);
      if (!op) fail(l, i, "unknown operator '" + l.toks[i].text + "'");
      if (rcf.operators.contains(*op)) fail(l, i, "operator listed twice");
      rcf.operators.ops.push_back(*op);
    }
    std::sort(rcf.operators.ops.begin(), rcf.operators.ops.end());
  }
  if (doc.bound) rcf.operators.max_bound = parse_positive(*doc.bound, doc.bound->toks[1]);
  rcf.validate();
  return rcf;
}

namespace {

void write_context(std::ostringstream& out, const FormalContext& k) {
  out << "context " << k.id() << "\nobjects";
  for (const auto& o : k.objects()) out << ' ' << o;
  out << '\n';
  if (k.base_count() > 0) {
    out << "attributes";
    for (std::size_t m = 0; m < k.base_count(); ++m) out << ' ' << k.attributes()[m].name;
    out << '\n';
  }
  for (std::size_t m = k.base_count(); m < k.attribute_count(); ++m)
    out << "scaled " << k.attributes()[m].text() << '\n';
  if (k.attribute_count() > 0) {
    for (std::size_t g = 0; g < k.object_count(); ++g) {
      out << k.objects()[g] << ' ';
      for (std::size_t m = 0; m < k.attribute_count(); ++m) out << (k.incident(g, m) ? 'x' : '.');
      out << '\n';
    }
  }
  out << "end\n";
}

}  // namespace

std::string serialize_rcf(const RelationalContextFamily& rcf) {
  std::ostringstream out;
  for (const auto& k : rcf.contexts) {
    write_context(out, k);
    out << '\n';
  }
  for (const auto& r : rcf.relations) {
    const auto& from = rcf.contexts[r.from];
    const auto& to = rcf.contexts[r.to];
    out << "relation " << r.id << ' ' << from.id() << ' ' << to.id() << '\n';
    if (!r.pairs.empty()) {
      for (std::size_t i = 0; i < r.pairs.size(); ++i)
        out << (i ? " " : "") << from.objects()[r.pairs[i].first] << "->" << to.objects()[r.pairs[i].second];
      out << '\n';
    }
    out << "end\n\n";
  }
  out << "operators";
  for (Op op : rcf.operators.ops) out << ' ' << op_keyword(op);
  out << '\n';
  if (rcf.operators.max_bound) out << "bound " << rcf.operators.max_bound << '\n';
  return out.str();
}

Family parse_solution(std::string_view text, const RelationalContextFamily& rcf) {
  auto doc = read_blocks(lex(text));
  if (!doc.relations.empty()) fail(doc.relations.front().header, 0, "relations are not allowed in a solution file");
  if (doc.operators) fail(*doc.operators, 0, "operators are not allowed in a solution file");
  std::vector<std::optional<ContextLatticePair>> pairs(rcf.contexts.size());
  for (const auto& c : doc.contexts) {
    if (c.many_valued) fail(c.header, 0, "many-valued blocks are not allowed in a solution file");
    auto x = rcf.context_index(c.id);
    if (!x) fail(c.header, 1, "context '" + c.id + "' is not part of the relational family");
    if (pairs[*x]) fail(c.header, 1, "context '" + c.id + "' given twice");
    const auto& k0 = rcf.contexts[*x];
    auto objs = object_names(c);
    if (objs != k0.objects()) fail(c.header, 0, "objects of '" + c.id + "' differ from the relational family");
    if (c.attributes.size() != k0.base_count())
      fail(c.header, 0, "plain attributes of '" + c.id + "' differ from the relational family");
    for (std::size_t m = 0; m < c.attributes.size(); ++m)
      if (c.attributes[m].text != k0.attributes()[m].name)
        fail_at(c.header, c.attributes[m], "plain attribute '" + c.attributes[m].text + "' differs from the relational family");
    std::vector<Attribute> scaled;
    std::vector<Bits> cols;
    for (const auto& s : c.scaled) {
      try {
        scaled.push_back(parse_scaled_attribute(join(s.toks, 1), rcf, *x));
        cols.push_back(scaled_column(rcf, *x, scaled.back()));
      } catch (const InvalidArgument& e) {
        fail(s, 1, e.what());
      }
      for (std::size_t i = 0; i + 1 < scaled.size(); ++i)
        if (scaled[i] == scaled.back()) fail(s, 1, "duplicate scaled attribute");
    }
    const auto base = k0.base_count();
    auto rows = read_rows(c, objs, base + scaled.size(), base);
    for (const auto& [g, row] : rows) {
      for (std::size_t m = 0; m < row.second.size(); ++m) {
        bool cell = row.second[m] != '.';
        bool expected = m < base ? k0.incident(g, m) : cols[m - base].test(g);
        if (cell != expected)
          throw ParseError(row.first->no, row.first->toks[1].col + m,
                           m < base ? "incidence differs from the relational family"
                                    : "incidence of '" + scaled[m - base].text() + "' disagrees with the relation");
      }
    }
    pairs[*x] = make_pair(k0.with_scaled(std::move(scaled), std::move(cols)));
  }
  Family o;
  for (std::size_t x = 0; x < pairs.size(); ++x) {
    if (!pairs[x]) throw ParseError(1, 1, "solution lacks context '" + rcf.contexts[x].id() + "'");
    o.pairs.push_back(std::move(*pairs[x]));
  }
  return o;
}

std::string serialize_family(const Family& o, bool with_lattices) {
  std::ostringstream out;
  for (const auto& p : o.pairs) {
    write_context(out, p.k());
    if (with_lattices) {
      out << "# lattice " << p.k().id() << ": " << p.l().size() << " concepts\n";
      for (const auto& c : p.l().concepts()) {
        out << "#   " << p.k().name_of(c.extent) << " {";
        bool first = true;
        for (auto m = c.intent.find_first(); m != Bits::npos; m = c.intent.find_next(m)) {
          out << (first ? "" : ", ") << p.k().attributes()[m].text();
          first = false;
        }
        out << "}\n";
      }
    }
    out << '\n';
  }
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Json family_json(const Family& o) {
  Json contexts = Json::array();
  for (const auto& p : o.pairs) {
    const auto& k = p.k();
    Json attrs = Json::array();
    for (std::size_t m = k.base_count(); m < k.attribute_count(); ++m) attrs.push_back(k.attributes()[m].text());
    Json concepts = Json::array();
    for (const auto& c : p.l().concepts()) {
      Json extent = Json::array(), intent = Json::array();
      for (auto g : indices(c.extent)) extent.push_back(k.objects()[g]);
      for (auto m : indices(c.intent)) intent.push_back(k.attributes()[m].text());
      Json jc;
      jc["name"] = k.name_of(c.extent);
      jc["extent"] = extent;
      jc["intent"] = intent;
      concepts.push_back(jc);
    }
    Json jk;
    jk["id"] = k.id();
    jk["scaled_attributes"] = attrs;
    jk["concepts"] = concepts;
    contexts.push_back(jk);
  }
  Json out;
  out["contexts"] = contexts;
  return out;
}

Json report_json(const SolutionSpaceReport& r) {
  Json out;
  out["interval_size"] = r.interval_size;
  out["tested"] = r.tested;
  out["pruned_count"] = r.pruned_count;
  out["acceptable_count"] = r.acceptable.size();
  out["is_lattice"] = r.is_lattice;
  out["unique_solution"] = r.lfp == r.gfp;
  out["lfp"] = family_json(r.lfp);
  out["gfp"] = family_json(r.gfp);
  Json acc = Json::array();
  for (const auto& f : r.acceptable) acc.push_back(family_json(f));
  out["acceptable"] = acc;
  return out;
}

Json closure_report_json(const ClosureImageReport& r) {
  Json out;
  out["acceptable"] = r.acceptable;
  out["lower_leq_upper"] = r.lower_leq_upper;
  out["strict"] = r.strict;
  out["below_upper"] = r.below_upper;
  out["above_lower"] = r.above_lower;
  out["lower"] = family_json(r.lower);
  out["upper"] = family_json(r.upper);
  return out;
}

}  // namespace relca
