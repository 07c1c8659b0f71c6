#include "palw/wreath.hpp"

#include <map>
#include <stdexcept>

namespace palw {

namespace {

Alphabet combined_alphabet(const BaseGroup& base, int rank) {
  std::vector<std::string> names = base.alphabet().names();
  if (rank == 1) {
    names.push_back("t");
  } else {
    for (int i = 1; i <= rank; ++i) names.push_back("x" + std::to_string(i));
  }
  return Alphabet(std::move(names));
}

}  // namespace

WreathGroup::WreathGroup(std::shared_ptr<const BaseGroup> base, int rank)
    : base_(std::move(base)),
      rank_(rank),
      alphabet_(combined_alphabet(*base_, rank)) {
  if (rank < 1) throw std::invalid_argument("wreath rank must be >= 1");
}

std::uint32_t WreathGroup::lattice_gen(int axis) const {
  if (axis < 0 || axis >= rank_) throw std::out_of_range("lattice axis out of range");
  return static_cast<std::uint32_t>(base_->alphabet().size() + axis);
}

bool WreathGroup::is_lattice_letter(const Letter& l) const {
  return l.gen >= base_->alphabet().size() && l.gen < alphabet_.size();
}

int WreathGroup::axis_of(const Letter& l) const {
  return static_cast<int>(l.gen - base_->alphabet().size());
}

Word WreathGroup::lattice_power(int axis, std::int64_t exp) const {
  return Word::power(lattice_gen(axis), exp);
}

WreathElement WreathGroup::identity() const {
  return WreathElement{LatticeFn<Word>(rank_), zero_point(rank_)};
}

void WreathGroup::check(const WreathElement& e) const {
  if (e.fn.rank() != rank_ || static_cast<int>(e.shift.size()) != rank_) {
    throw std::invalid_argument("element rank does not match wreath product rank " +
                                std::to_string(rank_));
  }
}

WreathElement WreathGroup::make(const LatticeFn<Word>& fn, const Point& shift) const {
  WreathElement out{LatticeFn<Word>(rank_), shift};
  check(WreathElement{fn, shift});
  for (const auto& [x, w] : fn) out.fn.set(x, base_->normalize(w));
  return out;
}

WreathElement WreathGroup::evaluate(const Word& w) const {
  std::map<Point, Word> raw;
  Point pos = zero_point(rank_);
  const auto base_size = base_->alphabet().size();
  for (const Letter& l : w) {
    if (l.gen >= alphabet_.size()) {
      throw std::invalid_argument("letter index " + std::to_string(l.gen) +
                                  " outside the wreath alphabet");
    }
    if (l.gen < base_size) {
      raw[pos].push_back(l);
    } else {
      pos[l.gen - base_size] += l.sign;
    }
  }
  WreathElement out{LatticeFn<Word>(rank_), pos};
  for (const auto& [x, word] : raw) out.fn.set(x, base_->normalize(word));
  return out;
}

WreathElement WreathGroup::evaluate_product(std::span<const Word> factors) const {
  Word all;
  for (const Word& f : factors) all *= f;
  return evaluate(all);
}

WreathElement WreathGroup::multiply(const WreathElement& a, const WreathElement& b) const {
  check(a);
  check(b);
  std::map<Point, Word> raw;
  for (const auto& [x, w] : a.fn) raw[x] = w;
  for (const auto& [x, w] : b.fn) raw[x + a.shift] *= w;
  WreathElement out{LatticeFn<Word>(rank_), a.shift + b.shift};
  for (const auto& [x, w] : raw) out.fn.set(x, base_->normalize(w));
  return out;
}

WreathElement WreathGroup::invert(const WreathElement& a) const {
  check(a);
  // (f, u)^{-1} = (x -> f(x + u)^{-1}, -u)
  WreathElement out{LatticeFn<Word>(rank_), -a.shift};
  for (const auto& [x, w] : a.fn) out.fn.set(x - a.shift, base_->normalize(palw::invert(w)));
  return out;
}

bool WreathGroup::equal(const WreathElement& a, const WreathElement& b) const {
  check(a);
  check(b);
  if (a.shift != b.shift) return false;
  for (const auto& [x, w] : a.fn) {
    if (!base_->equal(w, b.fn.get(x))) return false;
  }
  for (const auto& [x, w] : b.fn) {
    if (!base_->equal(w, a.fn.get(x))) return false;
  }
  return true;
}

Word lattice_walk(const WreathGroup& group, const Point& from, const Point& to) {
  Word out;
  for (int i = 0; i < group.rank(); ++i) out *= group.lattice_power(i, to[i] - from[i]);
  return out;
}

Word WreathGroup::element_to_word(const WreathElement& e) const {
  check(e);
  Word out;
  Point pos = zero_point(rank_);
  for (const auto& [x, w] : e.fn) {
    out *= lattice_walk(*this, pos, x);
    out *= w;
    pos = x;
  }
  out *= lattice_walk(*this, pos, e.shift);
  return out;
}

}  // namespace palw
