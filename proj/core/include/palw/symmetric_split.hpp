#pragma once

#include <vector>

#include "palw/base_group.hpp"
#include "palw/lattice_fn.hpp"

namespace palw {

/// f = Delta_gamma * f0 * f1 * ... * fr pointwise, where
///   f0(x) = reverse(f0(-x))          for all x,
///   fi(x) = reverse(fi(e_i - x))     for i = 1..r,
/// and Delta_gamma is gamma at the origin and empty elsewhere.
struct SymmetricSplit {
  Word gamma;
  LatticeFn<Word> f0;
  std::vector<LatticeFn<Word>> fi;
};

/// f0(x) == reverse(f0(-x)) for every x.
bool is_symmetric_about_origin(const LatticeFn<Word>& f);

/// f(x) == reverse(f(e_axis - x)) for every x.
bool is_symmetric_about_half_unit(const LatticeFn<Word>& f, int axis);

/// True when both symmetry predicates hold and the pointwise product
/// reproduces `f` in `base`.
bool split_is_valid(const SymmetricSplit& split, const LatticeFn<Word>& f,
                    const BaseGroup& base);

/// Splits a word-valued function by the slice-by-slice jump recursion:
/// the last axis is resolved along chains that alternate between the
/// reflection through the origin and the reflection through e_r / 2, and
/// the leftover on the hyperplane x_r = 0 is split recursively in one
/// dimension less. Piece values are kept freely reduced (free reduction
/// commutes with reversal, so the symmetries survive). The result is
/// verified before it is returned; a failure throws VerificationError.
SymmetricSplit symmetric_split(const LatticeFn<Word>& f, const BaseGroup& base);

/// Rank-1 variant: the value at the origin of f0 takes the last palindrome
/// of the base factorization of f(0) h(0)^{-1}, and gamma keeps the rest.
/// Over Z and Z_m gamma is always trivial.
SymmetricSplit symmetric_split_refined_r1(const LatticeFn<Word>& f, const BaseGroup& base);

}  // namespace palw
