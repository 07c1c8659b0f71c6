#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>

#include <nlohmann/json.hpp>

#include "palw/flow.hpp"
#include "palw/lamplighter.hpp"
#include "palw/lattice_fn.hpp"
#include "palw/skew.hpp"
#include "palw/symmetric_split.hpp"
#include "palw/wreath.hpp"

namespace palw {

using Json = nlohmann::json;

/// Integers are written as JSON numbers when they fit in 64 bits and as
/// decimal strings otherwise; both forms are accepted on input.
Json integer_to_json(const Integer& v);
Integer integer_from_json(const Json& j);

Json point_to_json(const Point& p);
Point point_from_json(const Json& j, int rank);

/// {"r": N, "entries": [{"pos": [..], "val": ..}, ..]} sorted by pos.
Json int_fn_to_json(const IntFn& f);
IntFn int_fn_from_json(const Json& j);

/// Same layout with values written by the base group.
Json word_fn_to_json(const LatticeFn<Word>& f, const BaseGroup& base);
LatticeFn<Word> word_fn_from_json(const Json& j, const BaseGroup& base);

/// {"base": .., "r": N, "fn": .., "shift": [..]}; on input {"base", "r",
/// "word"} is accepted too.
Json wreath_element_to_json(const WreathGroup& group, const WreathElement& e);
std::pair<std::shared_ptr<WreathGroup>, WreathElement> wreath_element_from_json(const Json& j);

/// {"r": N, "shift": [..], "edges": [{"pos": [..], "axis": i, "val": ..}]}
/// with 1-based axes.
Json flow_to_json(const FlowElement& e);
/// Accepts the edge form, {"r", "word"} and {"r", "squares"}.
FlowElement flow_from_json(const Json& j);

/// {"r": N, "squares": [{"pair": [i, j], "fn": ..}]} with 1-based axes.
Json squares_to_json(const SquareCoeffs& c);
SquareCoeffs squares_from_json(const Json& j);

Json skew_pieces_to_json(const std::vector<SkewPiece>& pieces);
Json symmetric_split_to_json(const SymmetricSplit& split, const BaseGroup& base,
                             const Alphabet& alphabet);

Json lamp_element_to_json(const LampElement& e);
LampElement lamp_element_from_json(const Json& j);

/// 64-bit FNV-1a of the compact dump, as 16 hex digits.
std::string fnv1a_hex(const std::string& bytes);
std::string json_hash(const Json& j);

}  // namespace palw
