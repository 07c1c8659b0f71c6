#include "palw/json_io.hpp"

#include <cstdio>
#include <stdexcept>

namespace palw {

namespace {

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw std::invalid_argument(std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

int rank_from_json(const Json& j) {
  const Json& r = require(j, "r");
  if (!r.is_number_integer() || r.get<std::int64_t>() < 1) {
    throw std::invalid_argument("'r' must be a positive integer");
  }
  return r.get<int>();
}

int axis_from_json(const Json& j, int rank) {
  if (!j.is_number_integer()) throw std::invalid_argument("axis must be an integer");
  const auto a = j.get<std::int64_t>();
  if (a < 1 || a > rank) throw std::invalid_argument("axis out of range 1..r");
  return static_cast<int>(a - 1);
}

}  // namespace

Json integer_to_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(v);
  }
  return to_string(v);
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    const std::size_t start = !s.empty() && s[0] == '-' ? 1 : 0;
    if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos) {
      throw std::invalid_argument("malformed integer '" + s + "'");
    }
    return Integer(s);
  }
  throw std::invalid_argument("expected an integer value");
}

Json point_to_json(const Point& p) { return Json(p); }

Point point_from_json(const Json& j, int rank) {
  if (!j.is_array() || static_cast<int>(j.size()) != rank) {
    throw std::invalid_argument("point must be an array of " + std::to_string(rank) +
                                " integers");
  }
  Point p;
  for (const Json& c : j) {
    if (!c.is_number_integer()) throw std::invalid_argument("point coordinates must be integers");
    p.push_back(c.get<std::int64_t>());
  }
  return p;
}

Json int_fn_to_json(const IntFn& f) {
  Json entries = Json::array();
  for (const auto& [x, v] : f) entries.push_back({{"pos", point_to_json(x)}, {"val", integer_to_json(v)}});
  return {{"r", f.rank()}, {"entries", entries}};
}

IntFn int_fn_from_json(const Json& j) {
  IntFn f(rank_from_json(j));
  for (const Json& e : require(j, "entries")) {
    f.add(point_from_json(require(e, "pos"), f.rank()), integer_from_json(require(e, "val")));
  }
  return f;
}

Json word_fn_to_json(const LatticeFn<Word>& f, const BaseGroup& base) {
  Json entries = Json::array();
  for (const auto& [x, w] : f) {
    entries.push_back({{"pos", point_to_json(x)}, {"val", base.element_to_json(w)}});
  }
  return {{"r", f.rank()}, {"entries", entries}};
}

LatticeFn<Word> word_fn_from_json(const Json& j, const BaseGroup& base) {
  LatticeFn<Word> f(rank_from_json(j));
  for (const Json& e : require(j, "entries")) {
    const Point x = point_from_json(require(e, "pos"), f.rank());
    f.set(x, base.normalize(f.get(x) * base.element_from_json(require(e, "val"))));
  }
  return f;
}

Json wreath_element_to_json(const WreathGroup& group, const WreathElement& e) {
  return {{"base", group.base().name()},
          {"r", group.rank()},
          {"fn", word_fn_to_json(e.fn, group.base())},
          {"shift", point_to_json(e.shift)}};
}

std::pair<std::shared_ptr<WreathGroup>, WreathElement> wreath_element_from_json(const Json& j) {
  const Json& base_name = require(j, "base");
  if (!base_name.is_string()) throw std::invalid_argument("'base' must be a string");
  auto group = std::make_shared<WreathGroup>(make_base_group(base_name.get<std::string>()),
                                             rank_from_json(j));
  if (j.contains("word")) {
    return {group, group->evaluate(parse_word(j.at("word").get<std::string>(), group->alphabet()))};
  }
  LatticeFn<Word> fn = word_fn_from_json(require(j, "fn"), group->base());
  if (fn.rank() != group->rank()) throw std::invalid_argument("fn rank differs from r");
  return {group, group->make(fn, point_from_json(require(j, "shift"), group->rank()))};
}

Json flow_to_json(const FlowElement& e) {
  Json edges = Json::array();
  for (const auto& [edge, c] : e.edges) {
    edges.push_back(
        {{"pos", point_to_json(edge.pos)}, {"axis", edge.axis + 1}, {"val", integer_to_json(c)}});
  }
  return {{"r", e.rank}, {"shift", point_to_json(e.shift)}, {"edges", edges}};
}

FlowElement flow_from_json(const Json& j) {
  const int r = rank_from_json(j);
  if (j.contains("word")) {
    return flow_evaluate(parse_word(j.at("word").get<std::string>(), metabelian_alphabet(r)), r);
  }
  if (j.contains("squares")) return squares_to_element(squares_from_json(j));
  FlowElement out = flow_identity(r);
  out.shift = point_from_json(require(j, "shift"), r);
  for (const Json& e : require(j, "edges")) {
    const Integer c = integer_from_json(require(e, "val"));
    Edge edge{point_from_json(require(e, "pos"), r), axis_from_json(require(e, "axis"), r)};
    auto [it, inserted] = out.edges.try_emplace(edge, c);
    if (!inserted) it->second += c;
    if (it->second.is_zero()) out.edges.erase(it);
  }
  if (!divergence_law_holds(out)) {
    throw std::invalid_argument("flow violates the divergence law");
  }
  return out;
}

Json squares_to_json(const SquareCoeffs& c) {
  Json squares = Json::array();
  for (const auto& [pair, fn] : c.by_pair) {
    squares.push_back({{"pair", {pair.first + 1, pair.second + 1}}, {"fn", int_fn_to_json(fn)}});
  }
  return {{"r", c.rank}, {"squares", squares}};
}

SquareCoeffs squares_from_json(const Json& j) {
  SquareCoeffs out{rank_from_json(j), {}};
  for (const Json& s : require(j, "squares")) {
    const Json& pair = require(s, "pair");
    if (!pair.is_array() || pair.size() != 2) throw std::invalid_argument("pair must be [i, j]");
    const int i = axis_from_json(pair[0], out.rank);
    const int k = axis_from_json(pair[1], out.rank);
    if (i >= k) throw std::invalid_argument("pair must satisfy i < j");
    const IntFn fn = int_fn_from_json(require(s, "fn"));
    if (fn.rank() != out.rank) throw std::invalid_argument("square function rank differs from r");
    for (const auto& [u, v] : fn) out.add(i, k, u, v);
  }
  return out;
}

Json skew_pieces_to_json(const std::vector<SkewPiece>& pieces) {
  Json out = Json::array();
  for (const SkewPiece& p : pieces) {
    out.push_back({{"two_center", point_to_json(p.two_center)}, {"fn", int_fn_to_json(p.fn)}});
  }
  return out;
}

Json symmetric_split_to_json(const SymmetricSplit& split, const BaseGroup& base,
                             const Alphabet& alphabet) {
  Json fi = Json::array();
  for (const auto& piece : split.fi) fi.push_back(word_fn_to_json(piece, base));
  return {{"gamma", format_word(split.gamma, alphabet)},
          {"f0", word_fn_to_json(split.f0, base)},
          {"fi", fi}};
}

Json lamp_element_to_json(const LampElement& e) {
  Json entries = Json::array();
  for (const auto& [x, v] : e.lamps) entries.push_back({{"pos", {x}}, {"val", v}});
  return {{"base", "Z"}, {"r", 1}, {"fn", {{"r", 1}, {"entries", entries}}}, {"shift", {e.pos}}};
}

LampElement lamp_element_from_json(const Json& j) {
  auto [group, e] = wreath_element_from_json(j);
  return to_lamp_element(*group, e);
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string json_hash(const Json& j) { return fnv1a_hex(j.dump()); }

}  // namespace palw
