#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace palw {

/// One unit letter: a generator index and an exponent sign (+1 or -1).
struct Letter {
  std::uint32_t gen = 0;
  std::int8_t sign = 1;

  Letter inverse() const { return Letter{gen, static_cast<std::int8_t>(-sign)}; }

  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// Ordered list of distinct generator names. Names start with a lowercase
/// letter; the capitalised spelling denotes the inverse in text form.
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::uint32_t> index_of(std::string_view name) const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<std::string> names_;
};

/// A finite sequence of unit letters. Exponents are always expanded, so the
/// letter sequence is exactly the literal string the word denotes.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  /// gen^exp as |exp| unit letters.
  static Word power(std::uint32_t gen, std::int64_t exp);
  static Word letter(std::uint32_t gen, int sign = 1) {
    return Word({Letter{gen, static_cast<std::int8_t>(sign)}});
  }

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const std::vector<Letter>& letters() const { return letters_; }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  void push_back(Letter l) { letters_.push_back(l); }
  Word& operator*=(const Word& rhs);
  friend Word operator*(Word lhs, const Word& rhs) { return lhs *= rhs; }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

/// Same letters in reverse order, signs unchanged.
Word reverse(const Word& w);

/// Free-group inverse: reversed order, every sign flipped.
Word invert(const Word& w);

/// Literal palindromicity (sign included). The empty word is a palindrome.
bool is_palindrome(const Word& w);

/// Cancels adjacent inverse pairs until none remain.
Word free_reduce(const Word& w);

/// Sum of the exponents of generator `gen`.
std::int64_t exponent_sum(const Word& w, std::uint32_t gen);

/// Parses the text syntax: generator names (lowercase) or their
/// capitalised inverses, optionally followed by `^k`, `^-k` or `^{k}`.
/// Whitespace, `*` and `.` separate tokens and are otherwise ignored.
/// Throws std::invalid_argument on unknown tokens.
Word parse_word(std::string_view text, const Alphabet& alphabet);

/// Run-length text form, tokens separated by single spaces, e.g.
/// "t^-6 a^-2 t A". Round-trips through parse_word.
std::string format_word(const Word& w, const Alphabet& alphabet);

/// Typeset run-length form, e.g. "t^{-6}a^{-2}ta^{-2}tat^2".
std::string format_word_typeset(const Word& w, const Alphabet& alphabet);

}  // namespace palw
