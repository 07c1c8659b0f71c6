#pragma once

#include <cstdint>
#include <random>

#include "palw/flow.hpp"
#include "palw/lamplighter.hpp"
#include "palw/wreath.hpp"
#include "support/oracles.hpp"

namespace gen {

using oracle::Rng;
using oracle::uniform;

inline palw::Word random_word(Rng& rng, std::uint32_t gens, std::size_t len) {
  palw::Word w;
  for (std::size_t i = 0; i < len; ++i) {
    w.push_back(palw::Letter{static_cast<std::uint32_t>(uniform(rng, 0, gens - 1)),
                             static_cast<std::int8_t>(uniform(rng, 0, 1) ? 1 : -1)});
  }
  return w;
}

inline palw::Point random_point(Rng& rng, int rank, std::int64_t radius) {
  palw::Point p(rank);
  for (auto& c : p) c = uniform(rng, -radius, radius);
  return p;
}

inline palw::IntFn random_int_fn(Rng& rng, int rank, std::int64_t radius, std::int64_t max_abs,
                                 std::size_t entries) {
  palw::IntFn f(rank);
  for (std::size_t i = 0; i < entries; ++i) {
    f.add(random_point(rng, rank, radius), palw::Integer(uniform(rng, -max_abs, max_abs)));
  }
  return f;
}

/// Random function with every grid sum zero: a sum of dipoles 2 apart.
inline palw::IntFn random_grid_zero_fn(Rng& rng, int rank, std::int64_t radius,
                                       std::int64_t max_abs, std::size_t dipoles) {
  palw::IntFn f(rank);
  for (std::size_t i = 0; i < dipoles; ++i) {
    const palw::Point a = random_point(rng, rank, radius);
    palw::Point b = random_point(rng, rank, radius);
    for (int k = 0; k < rank; ++k) b[k] = a[k] + 2 * ((b[k] - a[k]) / 2);
    const palw::Integer v(uniform(rng, -max_abs, max_abs));
    f.add(a, v);
    f.add(b, -v);
  }
  return f;
}

inline palw::IntFn random_zero_sum_fn(Rng& rng, int rank, std::int64_t radius,
                                      std::int64_t max_abs, std::size_t entries) {
  palw::IntFn f = random_int_fn(rng, rank, radius, max_abs, entries);
  const palw::Point anchor = random_point(rng, rank, radius);
  f.add(anchor, -palw::total_sum(f));
  return f;
}

/// Element of Z wr Z^r (or Zm wr Z^r) with values |v| <= max_abs.
inline palw::WreathElement random_wreath_element(Rng& rng, const palw::WreathGroup& group,
                                                 std::int64_t radius, std::int64_t max_abs,
                                                 std::int64_t shift_radius) {
  palw::LatticeFn<palw::Word> fn(group.rank());
  const auto entries = static_cast<std::size_t>(uniform(rng, 0, 6 * group.rank()));
  for (std::size_t i = 0; i < entries; ++i) {
    fn.set(random_point(rng, group.rank(), radius),
           group.base().normalize(palw::Word::power(0, uniform(rng, -max_abs, max_abs))));
  }
  return group.make(fn, random_point(rng, group.rank(), shift_radius));
}

inline palw::LampElement random_lamp_element(Rng& rng, std::int64_t radius, std::int64_t max_abs,
                                             std::int64_t shift_radius) {
  std::vector<std::pair<std::int64_t, std::int64_t>> lamps;
  for (std::int64_t x = -radius; x <= radius; ++x) {
    if (uniform(rng, 0, 2) == 0) lamps.emplace_back(x, uniform(rng, -max_abs, max_abs));
  }
  return palw::make_lamp_element(lamps, uniform(rng, -shift_radius, shift_radius));
}

/// Free metabelian element from random square coefficients and shift.
inline palw::FlowElement random_flow_element(Rng& rng, int rank, std::int64_t radius,
                                             std::int64_t max_abs, std::int64_t shift_radius) {
  palw::SquareCoeffs c{rank, {}};
  const auto entries = static_cast<std::size_t>(uniform(rng, 0, 4 * rank));
  for (std::size_t n = 0; n < entries; ++n) {
    const int i = static_cast<int>(uniform(rng, 0, rank - 2));
    const int j = static_cast<int>(uniform(rng, i + 1, rank - 1));
    c.add(i, j, random_point(rng, rank, radius), palw::Integer(uniform(rng, -max_abs, max_abs)));
  }
  const palw::Point shift = random_point(rng, rank, shift_radius);
  return palw::flow_multiply(palw::squares_to_element(c),
                             palw::flow_evaluate(palw::monomial_word(shift), rank));
}

}  // namespace gen
