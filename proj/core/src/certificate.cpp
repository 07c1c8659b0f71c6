#include "palw/certificate.hpp"

#include <algorithm>
#include <stdexcept>

namespace palw {

namespace {

Json words_to_json(const std::vector<Word>& words, const Alphabet& alphabet) {
  Json out = Json::array();
  for (const Word& w : words) out.push_back(format_word(w, alphabet));
  return out;
}

std::vector<Word> words_from_json(const Json& j, const Alphabet& alphabet) {
  if (!j.is_array()) throw std::invalid_argument("'factors' must be an array of words");
  std::vector<Word> out;
  for (const Json& w : j) {
    if (!w.is_string()) throw std::invalid_argument("factor must be a word string");
    out.push_back(parse_word(w.get<std::string>(), alphabet));
  }
  return out;
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw std::invalid_argument(std::string("certificate lacks '") + key + "'");
  }
  return j.at(key);
}

std::size_t nonempty(const std::vector<Word>& words) {
  return static_cast<std::size_t>(
      std::count_if(words.begin(), words.end(), [](const Word& w) { return !w.empty(); }));
}

bool all_palindromes(const std::vector<Word>& words) {
  return std::all_of(words.begin(), words.end(), [](const Word& w) { return is_palindrome(w); });
}

Json transcript(const Json& element, const Json& product, bool palindromic, bool within_bound) {
  return {{"element_hash", json_hash(element)},
          {"product_hash", json_hash(product)},
          {"palindromic", palindromic},
          {"product_matches", element == product},
          {"within_bound", within_bound}};
}

Json with_common(Json cert, const Json& config) {
  cert["tool_version"] = kToolVersion;
  cert["config"] = config;
  return cert;
}

VerifyReport fail(std::string reason) { return VerifyReport{false, std::move(reason)}; }

VerifyReport check_transcript(const Json& cert, const Json& element, const Json& product,
                              const std::vector<Word>& factors, std::size_t bound) {
  if (!all_palindromes(factors)) return fail("a factor is not a palindrome");
  if (field(cert, "count").get<std::size_t>() != nonempty(factors)) {
    return fail("recorded count differs from the factor list");
  }
  if (nonempty(factors) > bound) return fail("factor count exceeds the bound");
  if (!(element == product)) return fail("product of the factors differs from the element");
  if (field(cert, "verification") != transcript(element, product, true, true)) {
    return fail("verification transcript does not reproduce");
  }
  return {};
}

VerifyReport verify_wreath(const Json& cert, bool refined) {
  auto [group, element] = wreath_element_from_json(field(cert, "element"));
  const std::vector<Word> factors = words_from_json(field(cert, "factors"), group->alphabet());
  const std::size_t expected_bound =
      (refined ? 2 : 3 * static_cast<std::size_t>(group->rank())) +
      group->base().declared_width();
  if (refined && group->rank() != 1) return fail("wreath-z certificate with rank != 1");
  if (field(cert, "bound").get<std::size_t>() != expected_bound) {
    return fail("recorded bound differs from the theorem's bound");
  }
  const Json element_json = wreath_element_to_json(*group, element);
  const Json product_json = wreath_element_to_json(*group, group->evaluate_product(factors));
  return check_transcript(cert, element_json, product_json, factors, expected_bound);
}

VerifyReport verify_metabelian_cert(const Json& cert) {
  const FlowElement element = flow_from_json(field(cert, "element"));
  const std::vector<Word> factors =
      words_from_json(field(cert, "factors"), metabelian_alphabet(element.rank));
  const std::size_t bound = metabelian_bound(element.rank);
  if (field(cert, "bound").get<std::size_t>() != bound) {
    return fail("recorded bound differs from the theorem's bound");
  }
  return check_transcript(cert, flow_to_json(element),
                          flow_to_json(flow_product(factors, element.rank)), factors, bound);
}

VerifyReport verify_width3(const Json& cert) {
  const LampElement target = lamp_element_from_json(field(cert, "element"));
  const Json& scan = field(cert, "scan");
  const auto lo = field(scan, "p_lo").get<std::int64_t>();
  const auto hi = field(scan, "p_hi").get<std::int64_t>();
  const Json& verdicts = field(cert, "verdicts");
  if (!verdicts.is_array() || static_cast<std::int64_t>(verdicts.size()) != hi - lo + 1) {
    return fail("verdict table does not cover the scanned range");
  }
  bool all_none = true;
  for (std::int64_t p = lo; p <= hi; ++p) {
    const TwoPalVerdict v = two_palindrome_decision(target, p);
    all_none = all_none && !v.decomposition;
    if (two_pal_verdict_to_json(v) != verdicts[static_cast<std::size_t>(p - lo)]) {
      return fail("verdict at p = " + std::to_string(p) + " does not reproduce");
    }
  }
  if (field(cert, "all_none").get<bool>() != all_none) return fail("all_none flag is wrong");
  const Json& upper = field(cert, "upper");
  const std::vector<Word> factors = words_from_json(field(upper, "factors"), lamplighter_alphabet());
  if (!all_palindromes(factors) || nonempty(factors) > 3) {
    return fail("upper certificate is not three palindromes");
  }
  Word all;
  for (const Word& w : factors) all *= w;
  if (!(lamp_evaluate(all) == target)) return fail("upper certificate does not evaluate to target");
  return {};
}

VerifyReport verify_rewrite(const Json& cert, bool conjugate) {
  std::vector<std::string> names = field(cert, "alphabet").get<std::vector<std::string>>();
  const Alphabet alphabet(std::move(names));
  PalindromicFactorList list;
  list.factors = words_from_json(field(cert, "factors"), alphabet);
  list.target = parse_word(field(cert, "target").get<std::string>(), alphabet);
  if (!factor_list_valid(list)) return fail("factors are not palindromes freely equal to target");
  if (field(cert, "count").get<std::size_t>() != list.count()) {
    return fail("recorded count differs from the factor list");
  }
  if (conjugate && list.count() > field(cert, "input_count").get<std::size_t>() + 1) {
    return fail("conjugation raised the count by more than one");
  }
  if (!conjugate && list.factors.size() != 3) return fail("commutator rewrite is not three factors");
  return {};
}

}  // namespace

Json wreath_certificate(const WreathGroup& group, const WreathFactorization& fz,
                        const std::string& kind, const Json& config) {
  const Json element = wreath_element_to_json(group, fz.target);
  const Json product = wreath_element_to_json(group, group.evaluate_product(fz.factors));
  return with_common({{"kind", kind},
                      {"element", element},
                      {"factors", words_to_json(fz.factors, group.alphabet())},
                      {"count", nonempty(fz.factors)},
                      {"bound", fz.bound},
                      {"verification", transcript(element, product, all_palindromes(fz.factors),
                                                  nonempty(fz.factors) <= fz.bound)}},
                     config);
}

Json metabelian_certificate(const MetabelianFactorization& fz, const Json& config) {
  const int r = fz.target.rank;
  const Json element = flow_to_json(fz.target);
  const Json product = flow_to_json(flow_product(fz.factors, r));
  return with_common(
      {{"kind", "metabelian"},
       {"element", element},
       {"factors", words_to_json(fz.factors, metabelian_alphabet(r))},
       {"count", nonempty(fz.factors)},
       {"bound", fz.bound},
       {"constants", {{"commutator_pairs", r * (r - 1) / 2}, {"m_as_printed", r * (r + 1) / 2}}},
       {"telemetry",
        {{"gridzero", fz.gridzero_count},
         {"battlement", fz.battlement_count},
         {"coset", fz.coset_count}}},
       {"verification", transcript(element, product, all_palindromes(fz.factors),
                                   nonempty(fz.factors) <= fz.bound)}},
      config);
}

Json two_pal_verdict_to_json(const TwoPalVerdict& v) {
  if (!v.decomposition) return {{"p", v.p}, {"result", "none"}, {"contradiction", v.contradiction}};
  return {{"p", v.p},
          {"result", "decomposition"},
          {"g", lamp_element_to_json(v.decomposition->g)},
          {"h", lamp_element_to_json(v.decomposition->h)}};
}

Json width3_certificate(const TwoPalWitness& w, const Json& config) {
  Json verdicts = Json::array();
  for (const TwoPalVerdict& v : w.verdicts) verdicts.push_back(two_pal_verdict_to_json(v));
  return with_common(
      {{"kind", "width3"},
       {"element", lamp_element_to_json(w.target)},
       {"scan", {{"p_lo", w.p_lo}, {"p_hi", w.p_hi}}},
       {"in_hypothesis", w.in_hypothesis},
       {"all_none", w.all_none()},
       {"verdicts", verdicts},
       {"upper",
        {{"factors", words_to_json(w.upper_factors, lamplighter_alphabet())},
         {"count", nonempty(w.upper_factors)}}},
       {"note",
        "two-palindrome decompositions are excluded only for p in the scanned range; "
        "values of p outside it are not machine-checked"}},
      config);
}

Json rewrite_certificate(const std::string& kind, const PalindromicFactorList& list,
                         const Alphabet& alphabet, std::size_t input_count, const Json& config) {
  Json cert{{"kind", kind},
            {"alphabet", alphabet.names()},
            {"target", format_word(list.target, alphabet)},
            {"factors", words_to_json(list.factors, alphabet)},
            {"count", list.count()},
            {"valid", factor_list_valid(list)}};
  if (kind == "rewrite-conjugate") cert["input_count"] = input_count;
  return with_common(std::move(cert), config);
}

VerifyReport verify_certificate(const Json& cert) {
  const std::string kind = field(cert, "kind").get<std::string>();
  try {
    if (kind == "wreath") return verify_wreath(cert, false);
    if (kind == "wreath-z") return verify_wreath(cert, true);
    if (kind == "metabelian") return verify_metabelian_cert(cert);
    if (kind == "width3") return verify_width3(cert);
    if (kind == "rewrite-commutator") return verify_rewrite(cert, false);
    if (kind == "rewrite-conjugate") return verify_rewrite(cert, true);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed certificate: ") + e.what());
  }
  throw std::invalid_argument("unknown certificate kind '" + kind + "'");
}

}  // namespace palw
