#pragma once

// Reference implementations used only by the tests. Each one computes the
// same quantity as a library routine by a different route.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "palw/flow.hpp"
#include "palw/lamplighter.hpp"
#include "palw/wreath.hpp"

namespace oracle {

using Rng = std::mt19937_64;

inline std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

// Lamplighter walk for Z wr Z^r. Letter 0 is the lamp, letters 1..r move.
struct LampState {
  std::map<palw::Point, std::int64_t> lamps;
  palw::Point pos;
};

inline LampState walk_integer_lamps(const palw::Word& w, int rank) {
  LampState s{{}, palw::Point(rank, 0)};
  for (const palw::Letter& l : w) {
    if (l.gen == 0) {
      s.lamps[s.pos] += l.sign;
      if (s.lamps[s.pos] == 0) s.lamps.erase(s.pos);
    } else {
      s.pos[l.gen - 1] += l.sign;
    }
  }
  return s;
}

inline LampState lamp_state_of(const palw::IntegerGroup& base, const palw::WreathElement& e) {
  LampState s{{}, e.shift};
  for (const auto& [x, w] : e.fn) {
    const std::int64_t v = base.value(w);
    if (v != 0) s.lamps[x] = v;
  }
  return s;
}

inline bool operator==(const LampState& a, const LampState& b) {
  return a.lamps == b.lamps && a.pos == b.pos;
}

// Free-group equality through the faithful representation
// x_i -> A^i B A^-i in SL2(Z), A = [[1,2],[0,1]], B = [[1,0],[2,1]].
using Mat = std::array<boost::multiprecision::cpp_int, 4>;

inline Mat mat_mul(const Mat& p, const Mat& q) {
  return {p[0] * q[0] + p[1] * q[2], p[0] * q[1] + p[1] * q[3],
          p[2] * q[0] + p[3] * q[2], p[2] * q[1] + p[3] * q[3]};
}

inline Mat sanov_generator(std::uint32_t gen, int sign) {
  const std::int64_t k = gen + 1;
  // A^k B A^-k with A^k = [[1,2k],[0,1]].
  Mat ak{1, 2 * k, 0, 1}, ak_inv{1, -2 * k, 0, 1}, b{1, 0, 2, 1}, b_inv{1, 0, -2, 1};
  return mat_mul(mat_mul(ak, sign > 0 ? b : b_inv), ak_inv);
}

inline Mat sanov_image(const palw::Word& w) {
  Mat m{1, 0, 0, 1};
  for (const palw::Letter& l : w) m = mat_mul(m, sanov_generator(l.gen, l.sign));
  return m;
}

inline bool freely_equal(const palw::Word& a, const palw::Word& b) {
  return sanov_image(a) == sanov_image(b);
}

// Magnus representation of F/F'': x_i -> [[t_i, e_i], [0, 1]] over the
// group ring Z[Z^r]. The top-right entry is a vector of Laurent polynomials.
struct Magnus {
  palw::Point shift;
  std::vector<std::map<palw::Point, boost::multiprecision::cpp_int>> module;
  friend bool operator==(const Magnus&, const Magnus&) = default;
};

inline void laurent_add(std::map<palw::Point, boost::multiprecision::cpp_int>& p,
                        const palw::Point& at, const boost::multiprecision::cpp_int& c) {
  auto& slot = p[at];
  slot += c;
  if (slot == 0) p.erase(at);
}

inline Magnus magnus_image(const palw::Word& w, int rank) {
  Magnus m{palw::Point(rank, 0), std::vector<std::map<palw::Point, boost::multiprecision::cpp_int>>(rank)};
  for (const palw::Letter& l : w) {
    const int i = static_cast<int>(l.gen);
    // [[T, B], [0, 1]] * [[t_i^s, c e_i], [0, 1]] = [[T t_i^s, T c e_i + B], ..].
    if (l.sign > 0) {
      laurent_add(m.module[i], m.shift, 1);
      m.shift[i] += 1;
    } else {
      m.shift[i] -= 1;
      laurent_add(m.module[i], m.shift, -1);
    }
  }
  return m;
}

inline Magnus magnus_of_flow(const palw::FlowElement& e) {
  Magnus m{e.shift, std::vector<std::map<palw::Point, boost::multiprecision::cpp_int>>(e.rank)};
  for (const auto& [edge, c] : e.edges) laurent_add(m.module[edge.axis], edge.pos, c);
  return m;
}

// Two-palindrome feasibility in Z wr Z by dense Gaussian elimination over
// Q. Unknowns are g(x) on a window; everything outside it is zero. The
// window is wider than the one the library uses.
inline bool two_pal_feasible_dense(const palw::LampElement& f, std::int64_t p) {
  using Q = boost::multiprecision::cpp_rational;
  const std::int64_t k = f.pos;
  const std::int64_t q = k - p;
  std::int64_t lo = std::min<std::int64_t>({0, p, k}), hi = std::max<std::int64_t>({0, p, k});
  for (const auto& [x, v] : f.lamps) {
    lo = std::min(lo, x);
    hi = std::max(hi, x);
  }
  const std::int64_t slack = 2 * (std::abs(k) + std::abs(p)) + 8;
  lo -= slack;
  hi += slack;
  const std::size_t n = static_cast<std::size_t>(hi - lo + 1);
  auto in = [&](std::int64_t x) { return x >= lo && x <= hi; };

  // Row layout: coefficients for g over the window, then the constant.
  std::vector<std::vector<Q>> rows;
  auto add_row = [&](std::int64_t a, std::int64_t b, std::int64_t rhs) {
    // g(a) - g(b) = rhs, with g zero outside the window.
    std::vector<Q> row(n + 1, Q(0));
    if (in(a)) row[a - lo] += 1;
    if (in(b)) row[b - lo] -= 1;
    row[n] = rhs;
    rows.push_back(std::move(row));
  };
  // g symmetric about p/2.
  for (std::int64_t x = lo - 1; x <= hi + 1; ++x) add_row(x, p - x, 0);
  // h(y) = f(y + p) - g(y + p) symmetric about q/2, y ranging widely.
  for (std::int64_t y = lo - p - 2; y <= hi - p + 2; ++y) {
    const std::int64_t a = y + p, b = q - y + p;
    // f(a) - g(a) = f(b) - g(b)  =>  g(a) - g(b) = f(a) - f(b).
    add_row(a, b, f.at(a) - f.at(b));
  }

  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const Q factor = rows[r][col] / rows[rank][col];
      for (std::size_t c = col; c <= n; ++c) rows[r][c] -= factor * rows[rank][c];
    }
    ++rank;
  }
  for (std::size_t r = rank; r < rows.size(); ++r) {
    if (rows[r][n] != 0) return false;
  }
  return true;
}

}  // namespace oracle
