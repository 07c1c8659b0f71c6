#include "palw/skew.hpp"

#include <map>
#include <set>

#include "palw/errors.hpp"

namespace palw {

namespace {

std::int64_t mod2(std::int64_t v) { return ((v % 2) + 2) % 2; }

Point with_last(const Point& head, std::int64_t last) {
  Point p = head;
  p.push_back(last);
  return p;
}

IntFn embed_at(const IntFn& f, int rank, std::int64_t last) {
  IntFn out(rank);
  for (const auto& [x, v] : f) out.set(with_last(x, last), v);
  return out;
}

std::vector<IntFn> zero_pieces(int rank) {
  return std::vector<IntFn>(static_cast<std::size_t>(rank) + 1, IntFn(rank));
}

// Moves integer mass around by pairs of reflections. Each reflection of a
// point mass m at u through center alpha deposits the dipole
// m (delta_u - delta_{sigma_alpha u}) into piece alpha, which is skew about
// that center; the mass left behind in the input sits at sigma_alpha u.
class Transport {
 public:
  explicit Transport(std::vector<Point> two_c)
      : two_c_(std::move(two_c)), pieces_(zero_pieces(static_cast<int>(two_c_[0].size()))) {}

  Point reflect(std::size_t alpha, const Point& u, const Integer& m) {
    const Point image = two_c_[alpha] - u;
    pieces_[alpha].add(u, m);
    pieces_[alpha].add(image, -m);
    return image;
  }

  // Carries mass m from u to target, one translation by
  // two_c[alpha] - two_c[0] (= step * e_alpha) at a time, axes in
  // increasing order.
  void carry(Point u, const Integer& m, const Point& target, std::int64_t step) {
    for (std::size_t axis = 0; axis < u.size(); ++axis) {
      const std::int64_t diff = u[axis] - target[axis];
      if (diff % step != 0) throw VerificationError("transport target in another grid");
      for (std::int64_t k = diff / step; k > 0; --k) {
        u = reflect(0, reflect(axis + 1, u, m), m);
      }
      for (std::int64_t k = diff / step; k < 0; ++k) {
        u = reflect(axis + 1, reflect(0, u, m), m);
      }
    }
  }

  std::vector<IntFn>& pieces() { return pieces_; }

 private:
  std::vector<Point> two_c_;
  std::vector<IntFn> pieces_;
};

std::vector<Point> centers_half(const Point& two_p) {
  std::vector<Point> out{two_p};
  const int r = static_cast<int>(two_p.size());
  for (int a = 0; a < r; ++a) out.push_back(two_p + unit_point(r, a));
  return out;
}

// b in {0,1}^r; piece alpha is skew about (b + e_alpha) / 2.
std::vector<IntFn> split_half_unit(const IntFn& f, const Point& b) {
  const int r = f.rank();
  if (f.is_zero()) return zero_pieces(r);
  const Point b_bar(b.begin(), b.end() - 1);
  const auto [j_lo, j_hi] = f.axis_range(r - 1);

  std::set<Point> heads;
  for (const auto& [x, v] : f) {
    Point head(x.begin(), x.end() - 1);
    heads.insert(b_bar - head);
    heads.insert(std::move(head));
  }

  IntFn g(r), h(r);
  if (b.back() == 0) {
    const std::int64_t n = std::max(-j_lo, j_hi);
    for (const Point& head : heads) {
      const Point m = b_bar - head;
      for (std::int64_t i = n; i >= 1; --i) {
        const Integer gv = f.get(with_last(m, -i)) - h.get(with_last(m, -i));
        g.set(with_last(m, -i), gv);
        g.set(with_last(head, i), -gv);
        const Integer hv = f.get(with_last(head, i)) - g.get(with_last(head, i));
        h.set(with_last(head, i), hv);
        h.set(with_last(m, 1 - i), -hv);
      }
    }
    if (r == 1) {
      g.set({0}, f.get({0}) - h.get({0}));
      return {g, h};
    }
    IntFn residual(r - 1);
    for (const Point& head : heads) {
      residual.set(head, f.get(with_last(head, 0)) - h.get(with_last(head, 0)));
    }
    std::vector<IntFn> sub = split_half_unit(residual, b_bar);
    std::vector<IntFn> out;
    out.push_back(g + embed_at(sub[0], r, 0));
    for (int a = 1; a < r; ++a) out.push_back(embed_at(sub[a], r, 0));
    out.push_back(std::move(h));
    return out;
  }

  // Last center coordinate 1/2: h is skew about p, g about p + e_r / 2, and
  // the chains leave a zero-sum residual on the hyperplane x_r = 1.
  const std::int64_t n = std::max({-j_lo, j_hi - 1, std::int64_t{0}});
  IntFn residual(r);
  for (const Point& head : heads) {
    const Point m = b_bar - head;
    for (std::int64_t i = n; i >= 1; --i) {
      const Integer hv = f.get(with_last(m, -i)) - g.get(with_last(m, -i));
      h.set(with_last(m, -i), hv);
      h.set(with_last(head, i + 1), -hv);
      const Integer gv = f.get(with_last(head, i + 1)) - h.get(with_last(head, i + 1));
      g.set(with_last(head, i + 1), gv);
      g.set(with_last(m, 1 - i), -gv);
    }
    const Integer hv = f.get(with_last(m, 0)) - g.get(with_last(m, 0));
    h.set(with_last(m, 0), hv);
    h.set(with_last(head, 1), -hv);
    residual.set(with_last(head, 1), f.get(with_last(head, 1)) - h.get(with_last(head, 1)));
  }
  if (r == 1) return {h, g + residual};

  Transport transport(centers_half(b));
  const Point anchor = with_last(zero_point(r - 1), 1);
  for (const auto& [x, v] : residual) transport.carry(x, v, anchor, 1);
  std::vector<IntFn> out = std::move(transport.pieces());
  out[0] = out[0] + h;
  out[r] = out[r] + g;
  return out;
}

std::vector<SkewPiece> with_centers(std::vector<IntFn> fns, const std::vector<Point>& centers) {
  std::vector<SkewPiece> out;
  for (std::size_t a = 0; a < fns.size(); ++a) out.push_back({std::move(fns[a]), centers[a]});
  return out;
}

void verify_or_throw(const std::vector<SkewPiece>& pieces, const IntFn& f) {
  if (!skew_split_valid(pieces, f)) {
    throw VerificationError("skew decomposition failed its own verification");
  }
}

Point grid_partner(const Point& v, const Point& two_c) {
  Point out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = mod2(two_c[i] - v[i]);
  return out;
}

}  // namespace

bool skew_split_valid(const std::vector<SkewPiece>& pieces, const IntFn& f) {
  const int r = f.rank();
  if (static_cast<int>(pieces.size()) != r + 1) return false;
  IntFn sum(r);
  for (const SkewPiece& piece : pieces) {
    if (piece.fn.rank() != r || !is_skew_symmetric(piece.fn, piece.two_center)) return false;
    sum = sum + piece.fn;
  }
  return sum == f;
}

std::vector<SkewPiece> skew_split_half(const IntFn& f, const Point& two_p) {
  f.check_rank(two_p);
  if (!total_sum(f).is_zero()) {
    throw HypothesisError("total sum of f is " + to_string(total_sum(f)) + ", expected 0");
  }
  Point base(two_p.size()), unit(two_p.size());
  for (std::size_t i = 0; i < two_p.size(); ++i) {
    unit[i] = mod2(two_p[i]);
    base[i] = (two_p[i] - unit[i]) / 2;
  }
  std::vector<IntFn> fns = split_half_unit(shift(f, -base), unit);
  for (IntFn& fn : fns) fn = shift(fn, base);
  std::vector<SkewPiece> out = with_centers(std::move(fns), centers_half(two_p));
  verify_or_throw(out, f);
  return out;
}

std::vector<SkewPiece> skew_split_grid(const IntFn& f, const Point& p) {
  f.check_rank(p);
  const int r = f.rank();
  for (const GridVector& v : all_grid_vectors(r)) {
    const Integer s = grid_sum(f, v);
    if (!s.is_zero()) {
      throw HypothesisError("grid sum over 2Z^r + " + format_point(v.coords()) + " is " +
                            to_string(s) + ", expected 0");
    }
  }
  std::vector<IntFn> fns = zero_pieces(r);
  for (const GridVector& gv : all_grid_vectors(r)) {
    const Point& v = gv.coords();
    IntFn pulled(r);
    for (const auto& [y, val] : f) {
      if (grid_of(y) != gv) continue;
      Point x(y.size());
      for (std::size_t i = 0; i < y.size(); ++i) x[i] = (y[i] - v[i]) / 2;
      pulled.set(x, val);
    }
    if (pulled.is_zero()) continue;
    const std::vector<SkewPiece> sub = skew_split_half(pulled, p - v);
    for (int a = 0; a <= r; ++a) {
      for (const auto& [x, val] : sub[a].fn) fns[a].add(2 * x + v, val);
    }
  }
  std::vector<Point> centers{2 * p};
  for (int a = 0; a < r; ++a) centers.push_back(2 * p + unit_point(r, a, 2));
  std::vector<SkewPiece> out = with_centers(std::move(fns), centers);
  verify_or_throw(out, f);
  return out;
}

bool paired_grid_sums_vanish(const IntFn& f, const Point& two_c) {
  f.check_rank(two_c);
  std::map<Point, Integer> sums;
  for (const auto& [x, v] : f) sums[grid_of(x).coords()] += v;
  for (const auto& [v, s] : sums) {
    const Point partner = grid_partner(v, two_c);
    const Integer total = partner == v ? s : s + (sums.count(partner) ? sums[partner] : 0);
    if (!total.is_zero()) return false;
  }
  return true;
}

std::vector<SkewPiece> skew_split_fixed_centers(const IntFn& f, const Point& two_c) {
  f.check_rank(two_c);
  const int r = f.rank();
  if (!paired_grid_sums_vanish(f, two_c)) {
    throw HypothesisError("a pair of grids {v, 2c - v} has nonzero total");
  }
  std::vector<Point> centers{two_c};
  for (int a = 0; a < r; ++a) centers.push_back(two_c + unit_point(r, a, 2));
  Transport transport(centers);
  // Visiting order does not change the result: transport is linear in f.
  for (auto it = f.entries().rbegin(); it != f.entries().rend(); ++it) {
    Point u = it->first;
    const Point v = grid_of(u).coords();
    const Point partner = grid_partner(v, two_c);
    if (partner < v) u = transport.reflect(0, u, it->second);
    transport.carry(u, it->second, std::min(v, partner), 2);
  }
  std::vector<SkewPiece> out = with_centers(std::move(transport.pieces()), centers);
  verify_or_throw(out, f);
  return out;
}

}  // namespace palw
