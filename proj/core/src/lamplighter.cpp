#include "palw/lamplighter.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "palw/errors.hpp"

namespace palw {

namespace {

constexpr std::uint32_t kLamp = 0;
constexpr std::uint32_t kStep = 1;

std::int64_t abs64(std::int64_t v) { return v < 0 ? -v : v; }

}  // namespace

std::int64_t LampElement::at(std::int64_t x) const {
  auto it = std::lower_bound(lamps.begin(), lamps.end(), x,
                             [](const auto& l, std::int64_t key) { return l.first < key; });
  return it != lamps.end() && it->first == x ? it->second : 0;
}

void LampElement::add(std::int64_t x, std::int64_t v) {
  if (v == 0) return;
  auto it = std::lower_bound(lamps.begin(), lamps.end(), x,
                             [](const auto& l, std::int64_t key) { return l.first < key; });
  if (it != lamps.end() && it->first == x) {
    it->second += v;
    if (it->second == 0) lamps.erase(it);
  } else {
    lamps.insert(it, {x, v});
  }
}

std::size_t LampElementHash::operator()(const LampElement& e) const {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::int64_t v) {
    h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  };
  mix(e.pos);
  for (const auto& [x, v] : e.lamps) {
    mix(x);
    mix(v);
  }
  return static_cast<std::size_t>(h);
}

LampElement make_lamp_element(const std::vector<std::pair<std::int64_t, std::int64_t>>& lamps,
                              std::int64_t pos) {
  LampElement out;
  out.pos = pos;
  for (const auto& [x, v] : lamps) out.add(x, v);
  return out;
}

LampElement lamp_multiply(const LampElement& a, const LampElement& b) {
  LampElement out;
  out.pos = a.pos + b.pos;
  out.lamps.reserve(a.lamps.size() + b.lamps.size());
  auto ia = a.lamps.begin();
  auto ib = b.lamps.begin();
  while (ia != a.lamps.end() || ib != b.lamps.end()) {
    const bool take_a =
        ib == b.lamps.end() || (ia != a.lamps.end() && ia->first < ib->first + a.pos);
    const bool take_b =
        ia == a.lamps.end() || (ib != b.lamps.end() && ib->first + a.pos < ia->first);
    if (take_a) {
      out.lamps.push_back(*ia++);
    } else if (take_b) {
      out.lamps.emplace_back(ib->first + a.pos, ib->second);
      ++ib;
    } else {
      const std::int64_t v = ia->second + ib->second;
      if (v != 0) out.lamps.emplace_back(ia->first, v);
      ++ia;
      ++ib;
    }
  }
  return out;
}

LampElement lamp_invert(const LampElement& a) {
  LampElement out;
  out.pos = -a.pos;
  out.lamps.reserve(a.lamps.size());
  for (const auto& [x, v] : a.lamps) out.lamps.emplace_back(x - a.pos, -v);
  return out;
}

const Alphabet& lamplighter_alphabet() {
  static const Alphabet alphabet({"a", "t"});
  return alphabet;
}

LampElement lamp_evaluate(const Word& w) {
  std::map<std::int64_t, std::int64_t> lamps;
  std::int64_t pos = 0;
  for (const Letter& l : w) {
    if (l.gen == kLamp) {
      lamps[pos] += l.sign;
    } else if (l.gen == kStep) {
      pos += l.sign;
    } else {
      throw std::invalid_argument("letter outside {a, t}");
    }
  }
  LampElement out;
  out.pos = pos;
  for (const auto& [x, v] : lamps) {
    if (v != 0) out.lamps.emplace_back(x, v);
  }
  return out;
}

LampElement to_lamp_element(const WreathGroup& group, const WreathElement& e) {
  const auto* z = dynamic_cast<const IntegerGroup*>(&group.base());
  if (z == nullptr || group.rank() != 1) {
    throw std::invalid_argument("lamplighter tools need base Z and rank 1");
  }
  group.check(e);
  LampElement out;
  out.pos = e.shift[0];
  for (const auto& [x, w] : e.fn) out.add(x[0], z->value(w));
  return out;
}

WreathElement to_wreath_element(const WreathGroup& group, const LampElement& e) {
  if (dynamic_cast<const IntegerGroup*>(&group.base()) == nullptr || group.rank() != 1) {
    throw std::invalid_argument("lamplighter tools need base Z and rank 1");
  }
  LatticeFn<Word> fn(1);
  for (const auto& [x, v] : e.lamps) fn.set({x}, Word::power(kLamp, v));
  return WreathElement{fn, {e.pos}};
}

bool is_palindromic_element(const LampElement& e) {
  for (const auto& [x, v] : e.lamps) {
    if (e.at(e.pos - x) != v) return false;
  }
  return true;
}

Word palindrome_for(const LampElement& e) {
  if (!is_palindromic_element(e)) {
    throw HypothesisError("element is not palindromic: f(x) != f(shift - x)");
  }
  if (e.lamps.empty()) return Word::power(kStep, e.pos);
  const std::int64_t lo = e.lamps.front().first;
  const std::int64_t hi = e.lamps.back().first;
  Word out = Word::power(kStep, lo);
  for (std::int64_t x = lo; x <= hi; ++x) {
    out *= Word::power(kLamp, e.at(x));
    if (x < hi) out.push_back(Letter{kStep, 1});
  }
  out *= Word::power(kStep, e.pos - hi);
  return out;
}

std::pair<std::int64_t, std::int64_t> two_pal_window(const LampElement& target, std::int64_t p) {
  const std::int64_t k = target.pos;
  std::int64_t lo = std::min({std::int64_t{0}, p, k});
  std::int64_t hi = std::max({std::int64_t{0}, p, k});
  if (!target.lamps.empty()) {
    lo = std::min(lo, target.lamps.front().first);
    hi = std::max(hi, target.lamps.back().first);
  }
  return {lo - abs64(k) - 2, hi + abs64(k) + 2};
}

namespace {

// Union-find over unknowns with integer potentials: value(node) =
// value(parent) + offset(node).
class PotentialForest {
 public:
  explicit PotentialForest(std::size_t n) : parent_(n), offset_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::pair<std::size_t, std::int64_t> find(std::size_t a) {
    std::int64_t acc = 0;
    std::size_t root = a;
    while (parent_[root] != root) {
      acc += offset_[root];
      root = parent_[root];
    }
    // Path compression.
    std::int64_t rest = acc;
    while (parent_[a] != a) {
      const std::size_t next = parent_[a];
      const std::int64_t step = offset_[a];
      parent_[a] = root;
      offset_[a] = rest;
      rest -= step;
      a = next;
    }
    return {root, acc};
  }

  // Imposes value(a) - value(b) = d. Returns the conflicting value on failure.
  std::optional<std::int64_t> relate(std::size_t a, std::size_t b, std::int64_t d,
                                     std::size_t pinned_root) {
    auto [ra, oa] = find(a);
    auto [rb, ob] = find(b);
    if (ra == rb) {
      if (oa - ob != d) return oa - ob;
      return std::nullopt;
    }
    if (ra == pinned_root) {
      parent_[rb] = ra;
      offset_[rb] = oa - ob - d;
    } else {
      parent_[ra] = rb;
      offset_[ra] = d - oa + ob;
    }
    return std::nullopt;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::int64_t> offset_;
};

bool decomposition_valid(const LampElement& target, std::int64_t p,
                         const TwoPalDecomposition& d) {
  return d.g.pos == p && is_palindromic_element(d.g) && is_palindromic_element(d.h) &&
         lamp_multiply(d.g, d.h) == target;
}

}  // namespace

TwoPalVerdict two_palindrome_decision(const LampElement& target, std::int64_t p) {
  const std::int64_t k = target.pos;
  const auto [lo, hi] = two_pal_window(target, p);
  const auto size = static_cast<std::size_t>(hi - lo + 1);
  const std::size_t zero = size;
  PotentialForest forest(size + 1);
  auto node = [&](std::int64_t x) -> std::size_t {
    return x < lo || x > hi ? zero : static_cast<std::size_t>(x - lo);
  };

  TwoPalVerdict verdict;
  verdict.p = p;
  auto fail = [&](const std::string& what, std::int64_t want, std::int64_t have) {
    verdict.contradiction = what + " must equal " + std::to_string(want) +
                            " but earlier constraints force " + std::to_string(have);
  };

  for (std::int64_t x = lo; x <= hi; ++x) {
    // g symmetric about p/2.
    const std::int64_t mirror = p - x;
    if (auto bad = forest.relate(node(x), node(mirror), 0, zero)) {
      fail("g(" + std::to_string(x) + ") - g(" + std::to_string(mirror) + ")", 0, *bad);
      return verdict;
    }
    // f - g symmetric about (p + k)/2.
    const std::int64_t y = k + p - x;
    const std::int64_t want = target.at(x) - target.at(y);
    if (auto bad = forest.relate(node(x), node(y), want, zero)) {
      fail("g(" + std::to_string(x) + ") - g(" + std::to_string(y) + ")", want, *bad);
      return verdict;
    }
  }

  TwoPalDecomposition d;
  d.g.pos = p;
  d.h.pos = k - p;
  for (std::int64_t x = lo; x <= hi; ++x) {
    const auto [root, offset] = forest.find(node(x));
    const std::int64_t g = offset;  // free components are anchored at 0
    (void)root;
    d.g.add(x, g);
    d.h.add(x - p, target.at(x) - g);
  }
  if (!decomposition_valid(target, p, d)) {
    throw VerificationError("two-palindrome decomposition failed re-verification at p = " +
                            std::to_string(p));
  }
  verdict.decomposition = std::move(d);
  return verdict;
}

bool TwoPalWitness::all_none() const {
  return std::none_of(verdicts.begin(), verdicts.end(),
                      [](const TwoPalVerdict& v) { return v.decomposition.has_value(); });
}

std::int64_t default_scan_radius(const LampElement& target) {
  std::int64_t radius = 0;
  for (const auto& [x, v] : target.lamps) radius = std::max(radius, abs64(x));
  return abs64(target.pos) + radius + 22;
}

TwoPalWitness certify_width_three(const LampElement& target, std::int64_t scan_radius) {
  if (scan_radius < 0) throw std::invalid_argument("scan radius must be >= 0");
  TwoPalWitness out;
  out.target = target;
  const std::int64_t k = target.pos;
  out.p_lo = std::min<std::int64_t>(0, k) - scan_radius;
  out.p_hi = std::max<std::int64_t>(0, k) + scan_radius;
  out.in_hypothesis = k == 3 && target.at(0) != target.at(1) &&
                      std::all_of(target.lamps.begin(), target.lamps.end(),
                                  [](const auto& l) { return l.first == 0 || l.first == 1; });
  for (std::int64_t p = out.p_lo; p <= out.p_hi; ++p) {
    out.verdicts.push_back(two_palindrome_decision(target, p));
  }
  WreathGroup group(make_base_group("Z"), 1);
  out.upper_factors = factorize_wreath_z(group, to_wreath_element(group, target)).factors;
  return out;
}

namespace {

std::vector<LampElement> palindromic_elements(std::size_t max_len) {
  static const Letter kLetters[4] = {{kLamp, 1}, {kLamp, -1}, {kStep, 1}, {kStep, -1}};
  std::unordered_set<LampElement, LampElementHash> seen;
  std::vector<LampElement> out;
  for (std::size_t len = 0; len <= max_len; ++len) {
    const std::size_t half = len / 2;
    const bool has_center = len % 2 == 1;
    std::size_t combos = 1;
    for (std::size_t i = 0; i < half; ++i) combos *= 4;
    for (std::size_t code = 0; code < combos; ++code) {
      std::vector<Letter> h;
      std::size_t c = code;
      for (std::size_t i = 0; i < half; ++i, c /= 4) h.push_back(kLetters[c % 4]);
      for (int center = 0; center < (has_center ? 4 : 1); ++center) {
        std::vector<Letter> letters = h;
        if (has_center) letters.push_back(kLetters[center]);
        letters.insert(letters.end(), h.rbegin(), h.rend());
        LampElement e = lamp_evaluate(Word(std::move(letters)));
        if (seen.insert(e).second) out.push_back(std::move(e));
      }
    }
  }
  return out;
}

}  // namespace

OracleResult minimal_palindromic_length_bfs(const LampElement& target, std::size_t max_len,
                                            std::size_t max_factors, std::size_t budget) {
  OracleResult out;
  if (target == LampElement{}) {
    out.minimum = 0;
    return out;
  }
  const std::vector<LampElement> pals = palindromic_elements(max_len);
  out.palindromes = pals.size();
  const std::unordered_set<LampElement, LampElementHash> pal_set(pals.begin(), pals.end());

  // layer = products of (m - 1) palindromes; target is reached with m
  // factors iff layer^{-1} * target meets the palindrome set.
  std::unordered_set<LampElement, LampElementHash> layer{LampElement{}};
  for (std::size_t m = 1; m <= max_factors; ++m) {
    for (const LampElement& y : layer) {
      if (pal_set.count(lamp_multiply(lamp_invert(y), target)) != 0) {
        out.minimum = m;
        return out;
      }
    }
    if (m == max_factors) break;
    std::unordered_set<LampElement, LampElementHash> next;
    for (const LampElement& y : layer) {
      for (const LampElement& q : pals) {
        next.insert(lamp_multiply(y, q));
        if (next.size() > budget) {
          out.budget_exceeded = true;
          return out;
        }
      }
    }
    layer = std::move(next);
  }
  return out;
}

}  // namespace palw
