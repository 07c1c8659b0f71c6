#include "palw/lattice_fn.hpp"

#include <cstdlib>

namespace palw {

namespace {

void require_same_rank(const Point& a, const Point& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("dimension mismatch: " + format_point(a) + " vs " +
                                format_point(b));
  }
}

// Non-negative remainder mod 2.
std::int64_t parity(std::int64_t x) { return ((x % 2) + 2) % 2; }

}  // namespace

Point zero_point(int rank) { return Point(static_cast<std::size_t>(rank), 0); }

Point unit_point(int rank, int axis, std::int64_t scale) {
  Point p = zero_point(rank);
  p.at(static_cast<std::size_t>(axis)) = scale;
  return p;
}

Point operator+(const Point& a, const Point& b) {
  require_same_rank(a, b);
  Point out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Point operator-(const Point& a, const Point& b) {
  require_same_rank(a, b);
  Point out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Point operator-(const Point& a) {
  Point out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
  return out;
}

Point operator*(std::int64_t s, const Point& a) {
  Point out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = s * a[i];
  return out;
}

std::int64_t max_norm(const Point& a) {
  std::int64_t m = 0;
  for (auto c : a) m = std::max(m, std::abs(c));
  return m;
}

std::string format_point(const Point& a) {
  std::string out = "(";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(a[i]);
  }
  return out + ")";
}

GridVector::GridVector(Point v) : v_(std::move(v)) {
  for (auto c : v_) {
    if (c != 0 && c != 1) {
      throw std::invalid_argument("grid vector coordinates must be 0 or 1: " +
                                  format_point(v_));
    }
  }
}

std::vector<GridVector> all_grid_vectors(int rank) {
  std::vector<GridVector> out;
  const std::size_t count = std::size_t{1} << rank;
  for (std::size_t mask = 0; mask < count; ++mask) {
    Point v(static_cast<std::size_t>(rank));
    // Axis 0 is the most significant bit so that masks enumerate lex order.
    for (int i = 0; i < rank; ++i) v[i] = (mask >> (rank - 1 - i)) & 1U;
    out.emplace_back(std::move(v));
  }
  return out;
}

GridVector grid_of(const Point& x) {
  Point v(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) v[i] = parity(x[i]);
  return GridVector(std::move(v));
}

IntFn operator+(const IntFn& a, const IntFn& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("rank mismatch in sum");
  IntFn out = a;
  for (const auto& [x, v] : b) out.add(x, v);
  return out;
}

IntFn operator-(const IntFn& a) {
  return map_values(a, [](const Integer& v) { return Integer(-v); });
}

IntFn operator-(const IntFn& a, const IntFn& b) { return a + (-b); }

Integer grid_sum(const IntFn& f, const GridVector& v) {
  if (v.rank() != f.rank()) throw std::invalid_argument("grid vector rank mismatch");
  Integer s = 0;
  for (const auto& [x, val] : f) {
    if (grid_of(x) == v) s += val;
  }
  return s;
}

Integer total_sum(const IntFn& f) {
  Integer s = 0;
  for (const auto& [x, val] : f) s += val;
  return s;
}

bool is_skew_symmetric(const IntFn& f, const Point& two_center) {
  for (const auto& [x, val] : f) {
    if (f.get(two_center - x) != -val) return false;
  }
  return true;
}

}  // namespace palw
