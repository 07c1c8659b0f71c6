#include "palw/base_group.hpp"

#include <charconv>
#include <stdexcept>

namespace palw {

nlohmann::json BaseGroup::element_to_json(const Word& w) const {
  return format_word(normalize(w), alphabet());
}

Word BaseGroup::element_from_json(const nlohmann::json& j) const {
  if (!j.is_string()) {
    throw std::invalid_argument("base element for " + name() + " must be a word string");
  }
  return normalize(parse_word(j.get<std::string>(), alphabet()));
}

IntegerGroup::IntegerGroup() : alphabet_({"a"}) {}

Word IntegerGroup::normalize(const Word& w) const { return element(value(w)); }

std::vector<Word> IntegerGroup::palindromic_factorization(const Word& w) const {
  Word n = normalize(w);
  if (n.empty()) return {};
  return {n};
}

nlohmann::json IntegerGroup::element_to_json(const Word& w) const { return value(w); }

Word IntegerGroup::element_from_json(const nlohmann::json& j) const {
  if (j.is_number_integer()) return element(j.get<std::int64_t>());
  return BaseGroup::element_from_json(j);
}

CyclicGroup::CyclicGroup(std::int64_t modulus) : modulus_(modulus), alphabet_({"a"}) {
  if (modulus < 2) throw std::invalid_argument("Zm needs m >= 2");
}

std::int64_t CyclicGroup::value(const Word& w) const {
  return ((exponent_sum(w, 0) % modulus_) + modulus_) % modulus_;
}

Word CyclicGroup::normalize(const Word& w) const { return Word::power(0, value(w)); }

std::vector<Word> CyclicGroup::palindromic_factorization(const Word& w) const {
  Word n = normalize(w);
  if (n.empty()) return {};
  return {n};
}

nlohmann::json CyclicGroup::element_to_json(const Word& w) const { return value(w); }

Word CyclicGroup::element_from_json(const nlohmann::json& j) const {
  if (j.is_number_integer()) return normalize(Word::power(0, j.get<std::int64_t>()));
  return BaseGroup::element_from_json(j);
}

WordGroup::WordGroup(std::string name, Alphabet alphabet, TrivialityOracle is_trivial,
                     Factorizer factorizer, std::size_t declared_width)
    : name_(std::move(name)),
      alphabet_(std::move(alphabet)),
      is_trivial_(std::move(is_trivial)),
      factorizer_(std::move(factorizer)),
      width_(declared_width) {}

Word WordGroup::normalize(const Word& w) const {
  Word r = free_reduce(w);
  if (r.empty() || is_trivial_(r)) return Word{};
  return r;
}

bool WordGroup::equal(const Word& a, const Word& b) const {
  return is_trivial_(free_reduce(a * invert(b)));
}

std::vector<Word> WordGroup::palindromic_factorization(const Word& w) const {
  if (normalize(w).empty()) return {};
  return factorizer_(w);
}

std::shared_ptr<const BaseGroup> make_base_group(std::string_view spec) {
  if (spec == "Z") return std::make_shared<IntegerGroup>();
  if (spec.starts_with("Zm:")) {
    std::string_view digits = spec.substr(3);
    std::int64_t m = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), m);
    if (ec == std::errc() && ptr == digits.data() + digits.size()) {
      return std::make_shared<CyclicGroup>(m);
    }
  }
  throw std::invalid_argument("unknown base group '" + std::string(spec) +
                              "' (expected Z or Zm:<m>)");
}

}  // namespace palw
