#pragma once

#include <cstddef>
#include <vector>

#include "palw/word.hpp"

namespace palw {

/// A list of palindromic words together with the element they multiply to.
template <class Element>
struct Factorization {
  Element target;
  std::vector<Word> factors;
  std::size_t bound = 0;

  std::size_t count() const { return factors.size(); }
};

}  // namespace palw
