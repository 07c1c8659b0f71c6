#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "palw/integer.hpp"
#include "palw/word.hpp"

namespace palw {

/// A point of Z^r. Ordered lexicographically.
using Point = std::vector<std::int64_t>;

Point zero_point(int rank);
Point unit_point(int rank, int axis, std::int64_t scale = 1);
Point operator+(const Point& a, const Point& b);
Point operator-(const Point& a, const Point& b);
Point operator-(const Point& a);
Point operator*(std::int64_t s, const Point& a);
std::int64_t max_norm(const Point& a);
std::string format_point(const Point& a);

/// A vector of {0,1}^r naming the grid 2Z^r + v.
class GridVector {
 public:
  explicit GridVector(Point v);
  const Point& coords() const { return v_; }
  int rank() const { return static_cast<int>(v_.size()); }

  friend bool operator==(const GridVector&, const GridVector&) = default;
  friend auto operator<=>(const GridVector&, const GridVector&) = default;

 private:
  Point v_;
};

/// All 2^r grid vectors, in lexicographic order.
std::vector<GridVector> all_grid_vectors(int rank);

/// The grid vector of the coset containing x.
GridVector grid_of(const Point& x);

template <class V>
struct ValueTraits;

template <>
struct ValueTraits<Integer> {
  static bool is_zero(const Integer& v) { return v.is_zero(); }
  static Integer negate(const Integer& v) { return -v; }
};

template <>
struct ValueTraits<Word> {
  static bool is_zero(const Word& v) { return v.empty(); }
  static Word negate(const Word& v) { return invert(v); }
};

/// A finitely supported function Z^r -> V. Only nonzero values are stored;
/// every mutator maintains that.
template <class V>
class LatticeFn {
 public:
  using Traits = ValueTraits<V>;
  using Map = std::map<Point, V>;

  explicit LatticeFn(int rank = 1) : rank_(rank) {
    if (rank < 1) throw std::invalid_argument("lattice rank must be >= 1");
  }

  int rank() const { return rank_; }
  bool is_zero() const { return entries_.empty(); }
  std::size_t support_size() const { return entries_.size(); }
  const Map& entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  V get(const Point& x) const {
    check_rank(x);
    auto it = entries_.find(x);
    return it == entries_.end() ? V{} : it->second;
  }

  void set(const Point& x, V v) {
    check_rank(x);
    if (Traits::is_zero(v)) {
      entries_.erase(x);
    } else {
      entries_[x] = std::move(v);
    }
  }

  /// Adds `v` to the value at x (additive value types only).
  void add(const Point& x, const V& v) {
    check_rank(x);
    if (Traits::is_zero(v)) return;
    auto [it, inserted] = entries_.try_emplace(x, v);
    if (!inserted) {
      it->second += v;
      if (Traits::is_zero(it->second)) entries_.erase(it);
    }
  }

  /// Max-norm radius of the support; 0 for the zero function.
  std::int64_t radius() const {
    std::int64_t r = 0;
    for (const auto& [x, v] : entries_) r = std::max(r, max_norm(x));
    return r;
  }

  /// Smallest and largest coordinate along `axis` over the support.
  std::pair<std::int64_t, std::int64_t> axis_range(int axis) const {
    if (entries_.empty()) return {0, 0};
    std::int64_t lo = entries_.begin()->first[axis], hi = lo;
    for (const auto& [x, v] : entries_) {
      lo = std::min(lo, x[axis]);
      hi = std::max(hi, x[axis]);
    }
    return {lo, hi};
  }

  void check_rank(const Point& x) const {
    if (static_cast<int>(x.size()) != rank_) {
      throw std::invalid_argument("point of dimension " + std::to_string(x.size()) +
                                  " used with rank-" + std::to_string(rank_) +
                                  " lattice function");
    }
  }

  friend bool operator==(const LatticeFn&, const LatticeFn&) = default;

 private:
  int rank_;
  Map entries_;
};

/// result(x) = f(x - v).
template <class V>
LatticeFn<V> shift(const LatticeFn<V>& f, const Point& v) {
  f.check_rank(v);
  LatticeFn<V> out(f.rank());
  for (const auto& [x, val] : f) out.set(x + v, val);
  return out;
}

/// result(x) = -f(two_p - x): reflection through the point two_p / 2,
/// combined with negation.
template <class V>
LatticeFn<V> reflect(const LatticeFn<V>& f, const Point& two_p) {
  f.check_rank(two_p);
  LatticeFn<V> out(f.rank());
  for (const auto& [x, val] : f) out.set(two_p - x, ValueTraits<V>::negate(val));
  return out;
}

/// Applies `fn` to every value; zero results are dropped.
template <class V, class Fn>
LatticeFn<V> map_values(const LatticeFn<V>& f, Fn&& fn) {
  LatticeFn<V> out(f.rank());
  for (const auto& [x, val] : f) out.set(x, fn(val));
  return out;
}

using IntFn = LatticeFn<Integer>;

IntFn operator+(const IntFn& a, const IntFn& b);
IntFn operator-(const IntFn& a, const IntFn& b);
IntFn operator-(const IntFn& a);

/// Exact sum of f over the coset 2Z^r + v.
Integer grid_sum(const IntFn& f, const GridVector& v);

/// Sum of all values.
Integer total_sum(const IntFn& f);

/// f(x) == -f(two_center - x) for every x.
bool is_skew_symmetric(const IntFn& f, const Point& two_center);

}  // namespace palw
