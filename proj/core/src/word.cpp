#include "palw/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <stdexcept>

namespace palw {

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw std::invalid_argument("alphabet must be nonempty");
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty() || !std::islower(static_cast<unsigned char>(n[0]))) {
      throw std::invalid_argument("generator name must start lowercase: '" + n +
                                  "'");
    }
    for (char c : n) {
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') {
        throw std::invalid_argument("bad generator name: '" + n + "'");
      }
    }
    if (!seen.insert(n).second) {
      throw std::invalid_argument("duplicate generator name: '" + n + "'");
    }
  }
}

std::optional<std::uint32_t> Alphabet::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return static_cast<std::uint32_t>(i);
  }
  return std::nullopt;
}

Word Word::power(std::uint32_t gen, std::int64_t exp) {
  const std::int8_t sign = exp < 0 ? -1 : 1;
  const auto n = static_cast<std::size_t>(exp < 0 ? -exp : exp);
  return Word(std::vector<Letter>(n, Letter{gen, sign}));
}

Word& Word::operator*=(const Word& rhs) {
  letters_.insert(letters_.end(), rhs.letters_.begin(), rhs.letters_.end());
  return *this;
}

Word reverse(const Word& w) {
  std::vector<Letter> out(w.letters().rbegin(), w.letters().rend());
  return Word(std::move(out));
}

Word invert(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    out.push_back(it->inverse());
  }
  return Word(std::move(out));
}

bool is_palindrome(const Word& w) {
  const auto& l = w.letters();
  return std::equal(l.begin(), l.begin() + static_cast<std::ptrdiff_t>(l.size() / 2),
                    l.rbegin());
}

Word free_reduce(const Word& w) {
  std::vector<Letter> stack;
  stack.reserve(w.size());
  for (const Letter& l : w) {
    if (!stack.empty() && stack.back() == l.inverse()) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return Word(std::move(stack));
}

std::int64_t exponent_sum(const Word& w, std::uint32_t gen) {
  std::int64_t s = 0;
  for (const Letter& l : w) {
    if (l.gen == gen) s += l.sign;
  }
  return s;
}

namespace {

bool is_separator(char c) {
  return std::isspace(static_cast<unsigned char>(c)) || c == '*' || c == '.';
}

std::int64_t parse_exponent(std::string_view text, std::size_t& pos) {
  bool braced = false;
  if (pos < text.size() && text[pos] == '{') {
    braced = true;
    ++pos;
  }
  std::size_t start = pos;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    ++pos;
  }
  std::string_view digits = text.substr(start, pos - start);
  if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) {
    throw std::invalid_argument("malformed exponent in word '" + std::string(text) + "'");
  }
  if (braced) {
    if (pos >= text.size() || text[pos] != '}') {
      throw std::invalid_argument("unterminated exponent in word '" + std::string(text) + "'");
    }
    ++pos;
  }
  return value;
}

std::string run_token(const Alphabet& alphabet, const Letter& l, std::int64_t run) {
  const std::string& name = alphabet.name(l.gen);
  const std::int64_t exp = l.sign * run;
  if (exp == 1) return name;
  if (exp == -1) {
    std::string up = name;
    up[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(up[0])));
    return up;
  }
  return name + "^" + std::to_string(exp);
}

template <class Fn>
void for_each_run(const Word& w, Fn&& fn) {
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    fn(w[i], static_cast<std::int64_t>(j - i));
    i = j;
  }
}

}  // namespace

Word parse_word(std::string_view text, const Alphabet& alphabet) {
  std::vector<Letter> letters;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (is_separator(text[pos])) {
      ++pos;
      continue;
    }
    // Longest generator name matching case-insensitively at pos.
    std::optional<std::uint32_t> best;
    std::size_t best_len = 0;
    for (std::uint32_t g = 0; g < alphabet.size(); ++g) {
      const std::string& n = alphabet.name(g);
      if (n.size() <= best_len || pos + n.size() > text.size()) continue;
      bool match = std::tolower(static_cast<unsigned char>(text[pos])) == n[0] &&
                   text.substr(pos + 1, n.size() - 1) == std::string_view(n).substr(1);
      if (match) {
        best = g;
        best_len = n.size();
      }
    }
    if (!best) {
      throw std::invalid_argument("unknown letter at offset " + std::to_string(pos) +
                                  " in word '" + std::string(text) + "'");
    }
    const int sign = std::isupper(static_cast<unsigned char>(text[pos])) ? -1 : 1;
    pos += best_len;
    std::int64_t exp = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      exp = parse_exponent(text, pos);
    }
    const Word run = Word::power(*best, sign * exp);
    letters.insert(letters.end(), run.begin(), run.end());
  }
  return Word(std::move(letters));
}

std::string format_word(const Word& w, const Alphabet& alphabet) {
  std::string out;
  for_each_run(w, [&](const Letter& l, std::int64_t run) {
    if (!out.empty()) out += ' ';
    out += run_token(alphabet, l, run);
  });
  return out;
}

std::string format_word_typeset(const Word& w, const Alphabet& alphabet) {
  std::string out;
  for_each_run(w, [&](const Letter& l, std::int64_t run) {
    const std::int64_t exp = l.sign * run;
    out += alphabet.name(l.gen);
    if (exp == 1) return;
    if (exp >= 2 && exp <= 9) {
      out += "^" + std::to_string(exp);
    } else {
      out += "^{" + std::to_string(exp) + "}";
    }
  });
  return out;
}

}  // namespace palw
