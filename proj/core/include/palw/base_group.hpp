#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "palw/word.hpp"

namespace palw {

/// The lamp group G of a wreath product G wr Z^r, presented by a finite
/// alphabet. Elements are carried as words; `normalize` maps a word to the
/// canonical representative of its element (the empty word for the
/// identity).
///
/// Implementations must be stateless or internally synchronised: a single
/// instance is shared by every element built over it.
class BaseGroup {
 public:
  virtual ~BaseGroup() = default;

  /// Identifier used in JSON ("Z", "Zm:5", ...).
  virtual std::string name() const = 0;
  virtual const Alphabet& alphabet() const = 0;

  virtual Word normalize(const Word& w) const = 0;
  virtual bool equal(const Word& a, const Word& b) const {
    return normalize(a) == normalize(b);
  }
  bool is_identity(const Word& w) const { return normalize(w).empty(); }

  /// At most declared_width() palindromic words over alphabet() whose
  /// product equals w. Empty for the identity.
  virtual std::vector<Word> palindromic_factorization(const Word& w) const = 0;

  /// The palindromic width this group promises for its factorizations.
  virtual std::size_t declared_width() const = 0;

  virtual nlohmann::json element_to_json(const Word& w) const;
  virtual Word element_from_json(const nlohmann::json& j) const;
};

/// Z = <a>, element n carried as a^n. Width 1.
class IntegerGroup final : public BaseGroup {
 public:
  IntegerGroup();
  std::string name() const override { return "Z"; }
  const Alphabet& alphabet() const override { return alphabet_; }
  Word normalize(const Word& w) const override;
  std::vector<Word> palindromic_factorization(const Word& w) const override;
  std::size_t declared_width() const override { return 1; }
  nlohmann::json element_to_json(const Word& w) const override;
  Word element_from_json(const nlohmann::json& j) const override;

  Word element(std::int64_t n) const { return Word::power(0, n); }
  std::int64_t value(const Word& w) const { return exponent_sum(w, 0); }

 private:
  Alphabet alphabet_;
};

/// Z_m = <a | a^m>, element k carried as a^k with 0 <= k < m. Width 1.
class CyclicGroup final : public BaseGroup {
 public:
  explicit CyclicGroup(std::int64_t modulus);
  std::string name() const override { return "Zm:" + std::to_string(modulus_); }
  const Alphabet& alphabet() const override { return alphabet_; }
  Word normalize(const Word& w) const override;
  std::vector<Word> palindromic_factorization(const Word& w) const override;
  std::size_t declared_width() const override { return 1; }
  nlohmann::json element_to_json(const Word& w) const override;
  Word element_from_json(const nlohmann::json& j) const override;

  std::int64_t modulus() const { return modulus_; }
  std::int64_t value(const Word& w) const;

 private:
  std::int64_t modulus_;
  Alphabet alphabet_;
};

/// A group given by an alphabet, a triviality oracle and a palindromic
/// factorizer supplied by the caller. Elements are kept freely reduced.
class WordGroup final : public BaseGroup {
 public:
  using TrivialityOracle = std::function<bool(const Word&)>;
  using Factorizer = std::function<std::vector<Word>(const Word&)>;

  WordGroup(std::string name, Alphabet alphabet, TrivialityOracle is_trivial,
            Factorizer factorizer, std::size_t declared_width);

  std::string name() const override { return name_; }
  const Alphabet& alphabet() const override { return alphabet_; }
  Word normalize(const Word& w) const override;
  bool equal(const Word& a, const Word& b) const override;
  std::vector<Word> palindromic_factorization(const Word& w) const override;
  std::size_t declared_width() const override { return width_; }

 private:
  std::string name_;
  Alphabet alphabet_;
  TrivialityOracle is_trivial_;
  Factorizer factorizer_;
  std::size_t width_;
};

/// Builds a built-in base group from its identifier: "Z" or "Zm:<m>".
/// Throws std::invalid_argument for anything else.
std::shared_ptr<const BaseGroup> make_base_group(std::string_view spec);

}  // namespace palw
