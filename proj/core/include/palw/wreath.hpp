#pragma once

#include <memory>
#include <span>

#include "palw/base_group.hpp"
#include "palw/lattice_fn.hpp"
#include "palw/word.hpp"

namespace palw {

/// An element (f, v) of G wr Z^r: a lamp configuration f with values in G
/// (normalized base words, identity never stored) and a lamplighter
/// position v.
struct WreathElement {
  LatticeFn<Word> fn;
  Point shift;

  friend bool operator==(const WreathElement&, const WreathElement&) = default;
};

/// G wr Z^r over a runtime base group. The word alphabet is the base
/// alphabet followed by the lattice generators: `t` when r = 1, otherwise
/// `x1`..`xr`.
///
/// Multiplication follows the lamplighter reading of words left to right:
///   (f, u)(g, w) = (x -> f(x) g(x - u), u + w),
/// so that evaluate() is a monoid homomorphism.
class WreathGroup {
 public:
  WreathGroup(std::shared_ptr<const BaseGroup> base, int rank);

  const BaseGroup& base() const { return *base_; }
  std::shared_ptr<const BaseGroup> base_ptr() const { return base_; }
  int rank() const { return rank_; }
  const Alphabet& alphabet() const { return alphabet_; }

  std::uint32_t lattice_gen(int axis) const;
  bool is_lattice_letter(const Letter& l) const;
  int axis_of(const Letter& l) const;
  /// x_axis^exp as a run of unit letters.
  Word lattice_power(int axis, std::int64_t exp) const;

  WreathElement identity() const;
  /// Builds an element from base words, normalizing every value.
  WreathElement make(const LatticeFn<Word>& fn, const Point& shift) const;

  WreathElement evaluate(const Word& w) const;
  WreathElement evaluate_product(std::span<const Word> factors) const;
  WreathElement multiply(const WreathElement& a, const WreathElement& b) const;
  WreathElement invert(const WreathElement& a) const;
  bool equal(const WreathElement& a, const WreathElement& b) const;

  /// A word evaluating to `e`: visits the support in lexicographic order,
  /// writing each lamp, then walks to the final position.
  Word element_to_word(const WreathElement& e) const;

  void check(const WreathElement& e) const;

 private:
  std::shared_ptr<const BaseGroup> base_;
  int rank_;
  Alphabet alphabet_;
};

/// The walk moving the lamplighter from `from` to `to`, axis 1 first.
Word lattice_walk(const WreathGroup& group, const Point& from, const Point& to);

}  // namespace palw
