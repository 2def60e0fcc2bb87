#include "relca/context.hpp"

#include "relca/errors.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <tuple>

namespace relca {

bool op_has_target(Op op) { return op != Op::Existential; }

bool op_has_bound(Op op) { return op == Op::LeqCard || op == Op::GeqCard; }

std::string_view op_keyword(Op op) {
  switch (op) {
    case Op::Existential: return "EX";
    case Op::UniversalWide: return "A";
    case Op::StrictUniversal: return "AE";
    case Op::ContainsWide: return "CW";
    case Op::StrictContains: return "CS";
    case Op::QualifiedExistential: return "E";
    case Op::LeqCard: return "LE";
    case Op::GeqCard: return "GE";
  }
  return "?";
}

std::optional<Op> op_from_keyword(std::string_view kw) {
  for (Op op : kAllOps)
    if (op_keyword(op) == kw) return op;
  return std::nullopt;
}

Attribute Attribute::plain(std::string name) {
  Attribute a;
  a.name = std::move(name);
  return a;
}

Attribute Attribute::make_scaled(Op op, std::string relation, Bits target, std::string target_name, unsigned bound) {
  Attribute a;
  a.scaled = true;
  a.op = op;
  a.relation = std::move(relation);
  if (op_has_target(op)) {
    a.target = std::move(target);
    a.target_name = std::move(target_name);
  }
  a.bound = op_has_bound(op) ? bound : 0;
  return a;
}

std::string Attribute::text() const {
  if (!scaled) return name;
  std::string kw(op_keyword(op));
  switch (op) {
    case Op::Existential: return kw + " " + relation;
    case Op::ContainsWide:
    case Op::StrictContains: return kw + " " + target_name + "." + relation;
    case Op::LeqCard:
    case Op::GeqCard: return kw + " " + std::to_string(bound) + " " + relation + "." + target_name;
    default: return kw + " " + relation + "." + target_name;
  }
}

std::string Attribute::pretty() const {
  if (!scaled) return name;
  switch (op) {
    case Op::Existential: return "∃" + relation;
    case Op::UniversalWide: return "∀" + relation + "." + target_name;
    case Op::StrictUniversal: return "∀∃" + relation + "." + target_name;
    case Op::ContainsWide: return "∀" + target_name + "." + relation;
    case Op::StrictContains: return "∀∃" + target_name + "." + relation;
    case Op::QualifiedExistential: return "∃" + relation + "." + target_name;
    case Op::LeqCard: return "≤" + std::to_string(bound) + " " + relation + "." + target_name;
    case Op::GeqCard: return "≥" + std::to_string(bound) + " " + relation + "." + target_name;
  }
  return text();
}

bool operator==(const Attribute& a, const Attribute& b) {
  if (a.scaled != b.scaled) return false;
  if (!a.scaled) return a.name == b.name;
  return a.op == b.op && a.relation == b.relation && a.bound == b.bound && a.target == b.target;
}

bool scaled_less(const Attribute& a, const Attribute& b) {
  if (a.op != b.op) return a.op < b.op;
  if (a.relation != b.relation) return a.relation < b.relation;
  if (a.bound != b.bound) return a.bound < b.bound;
  return canonical_less(a.target, b.target);
}

namespace {

std::string to_upper(std::string s) {
  for (auto& ch : s) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  return s;
}

}  // namespace

NameCodec::NameCodec(const std::vector<std::string>& objects) {
  upper_.reserve(objects.size());
  for (const auto& o : objects) upper_.push_back(to_upper(o));
  std::set<std::string> distinct(upper_.begin(), upper_.end());
  if (distinct.size() != upper_.size()) {
    upper_ = objects;  // case collision: keep names verbatim
    compact_ = false;
    return;
  }
  compact_ = std::all_of(upper_.begin(), upper_.end(), [](const std::string& s) { return s.size() == 1; });
  // "BOT" must stay reserved for the empty extent.
  if (compact_ && distinct.count("B") && distinct.count("O") && distinct.count("T")) compact_ = false;
  if (!compact_ && distinct.count("BOT")) upper_ = objects;
}

std::string NameCodec::render(const Bits& extent) const {
  if (extent.none()) return "BOT";
  std::string out;
  for (auto i = extent.find_first(); i != Bits::npos; i = extent.find_next(i)) {
    if (!compact_ && !out.empty()) out += '+';
    out += upper_[i];
  }
  return out;
}

std::optional<Bits> NameCodec::parse(std::string_view name) const {
  Bits out(upper_.size());
  if (name == "BOT") return out;
  if (name.empty()) return std::nullopt;
  auto take = [&](std::string_view tok) {
    for (std::size_t i = 0; i < upper_.size(); ++i) {
      if (upper_[i] == tok && !out.test(i)) {
        out.set(i);
        return true;
      }
    }
    return false;
  };
  if (compact_) {
    for (char ch : name)
      if (!take(std::string_view(&ch, 1))) return std::nullopt;
    return out;
  }
  std::size_t start = 0;
  while (start <= name.size()) {
    auto end = name.find('+', start);
    if (end == std::string_view::npos) end = name.size();
    if (!take(name.substr(start, end - start))) return std::nullopt;
    start = end + 1;
  }
  return out;
}

FormalContext::FormalContext(std::string id, std::vector<std::string> objects, std::vector<Attribute> attributes,
                             std::size_t base_count, std::vector<Bits> columns)
    : id_(std::move(id)), objects_(std::move(objects)), base_count_(base_count) {
  if (columns.size() != attributes.size()) throw InvalidArgument("context " + id_ + ": column count mismatch");
  if (base_count_ > attributes.size()) throw InvalidArgument("context " + id_ + ": base count exceeds attributes");
  {
    std::set<std::string> seen;
    for (const auto& o : objects_) {
      if (o.empty()) throw InvalidArgument("context " + id_ + ": empty object name");
      if (!seen.insert(o).second) throw InvalidArgument("context " + id_ + ": duplicate object " + o);
    }
  }
  for (std::size_t m = 0; m < attributes.size(); ++m) {
    if (columns[m].size() != objects_.size())
      throw InvalidArgument("context " + id_ + ": column " + attributes[m].text() + " has wrong length");
    if ((m < base_count_) == attributes[m].scaled)
      throw InvalidArgument("context " + id_ + ": attribute " + attributes[m].text() +
                            (attributes[m].scaled ? " is scaled but in the base part" : " is plain but in the scaled part"));
  }
  {
    std::set<std::string> names;
    for (std::size_t m = 0; m < base_count_; ++m)
      if (!names.insert(attributes[m].name).second)
        throw InvalidArgument("context " + id_ + ": duplicate attribute " + attributes[m].name);
  }
  std::vector<std::size_t> order(attributes.size() - base_count_);
  std::iota(order.begin(), order.end(), base_count_);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return scaled_less(attributes[a], attributes[b]); });
  for (std::size_t k = 1; k < order.size(); ++k)
    if (attributes[order[k - 1]] == attributes[order[k]])
      throw InvalidArgument("context " + id_ + ": duplicate attribute " + attributes[order[k]].text());

  attributes_.reserve(attributes.size());
  columns_.reserve(attributes.size());
  for (std::size_t m = 0; m < base_count_; ++m) {
    attributes_.push_back(std::move(attributes[m]));
    columns_.push_back(std::move(columns[m]));
  }
  for (auto m : order) {
    attributes_.push_back(std::move(attributes[m]));
    columns_.push_back(std::move(columns[m]));
  }
  rows_.assign(objects_.size(), Bits(attributes_.size()));
  for (std::size_t m = 0; m < columns_.size(); ++m)
    for (auto g = columns_[m].find_first(); g != Bits::npos; g = columns_[m].find_next(g)) rows_[g].set(m);
  codec_ = NameCodec(objects_);
}

Bits FormalContext::derive_intent(const Bits& objects) const {
  if (objects.size() != objects_.size()) throw InvalidArgument("derive_intent: object set of wrong size");
  Bits out = all_attributes();
  for (auto g = objects.find_first(); g != Bits::npos; g = objects.find_next(g)) out &= rows_[g];
  return out;
}

Bits FormalContext::derive_extent(const Bits& attributes) const {
  if (attributes.size() != attributes_.size()) throw InvalidArgument("derive_extent: attribute set of wrong size");
  Bits out = all_objects();
  for (auto m = attributes.find_first(); m != Bits::npos; m = attributes.find_next(m)) out &= columns_[m];
  return out;
}

std::optional<std::size_t> FormalContext::object_index(std::string_view name) const {
  for (std::size_t i = 0; i < objects_.size(); ++i)
    if (objects_[i] == name) return i;
  return std::nullopt;
}

std::optional<std::size_t> FormalContext::attribute_index(const Attribute& a) const {
  if (!a.scaled) {
    for (std::size_t m = 0; m < base_count_; ++m)
      if (attributes_[m].name == a.name) return m;
    return std::nullopt;
  }
  auto first = attributes_.begin() + static_cast<std::ptrdiff_t>(base_count_);
  auto it = std::lower_bound(first, attributes_.end(), a, scaled_less);
  if (it != attributes_.end() && *it == a) return static_cast<std::size_t>(it - attributes_.begin());
  return std::nullopt;
}

bool FormalContext::compatible_with(const FormalContext& other) const {
  if (objects_ != other.objects_ || base_count_ != other.base_count_) return false;
  for (std::size_t m = 0; m < base_count_; ++m)
    if (attributes_[m] != other.attributes_[m] || columns_[m] != other.columns_[m]) return false;
  return true;
}

bool FormalContext::same_attributes(const FormalContext& other) const {
  return attributes_.size() == other.attributes_.size() &&
         std::equal(attributes_.begin() + static_cast<std::ptrdiff_t>(base_count_), attributes_.end(),
                    other.attributes_.begin() + static_cast<std::ptrdiff_t>(other.base_count_));
}

bool FormalContext::attributes_subset_of(const FormalContext& other) const {
  return std::includes(other.attributes_.begin() + static_cast<std::ptrdiff_t>(other.base_count_),
                       other.attributes_.end(), attributes_.begin() + static_cast<std::ptrdiff_t>(base_count_),
                       attributes_.end(), scaled_less);
}

FormalContext FormalContext::with_scaled(std::vector<Attribute> scaled, std::vector<Bits> columns) const {
  std::vector<Attribute> attrs(attributes_.begin(), attributes_.begin() + static_cast<std::ptrdiff_t>(base_count_));
  std::vector<Bits> cols(columns_.begin(), columns_.begin() + static_cast<std::ptrdiff_t>(base_count_));
  for (auto& a : scaled) attrs.push_back(std::move(a));
  for (auto& c : columns) cols.push_back(std::move(c));
  return FormalContext(id_, objects_, std::move(attrs), base_count_, std::move(cols));
}

FormalContext FormalContext::base_only() const { return with_scaled({}, {}); }

bool operator==(const FormalContext& a, const FormalContext& b) {
  if (a.id() != b.id() || a.objects() != b.objects() || a.base_count() != b.base_count() ||
      a.attributes() != b.attributes())
    return false;
  for (std::size_t m = 0; m < a.attribute_count(); ++m)
    if (a.column(m) != b.column(m)) return false;
  return true;
}

}  // namespace relca
