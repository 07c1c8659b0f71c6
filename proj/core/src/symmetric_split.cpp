#include "palw/symmetric_split.hpp"

#include <set>

#include "palw/errors.hpp"

namespace palw {

namespace {

Word mul(const Word& a, const Word& b) { return free_reduce(a * b); }

Point with_last(const Point& head, std::int64_t last) {
  Point p = head;
  p.push_back(last);
  return p;
}

LatticeFn<Word> embed_on_hyperplane(const LatticeFn<Word>& f, int rank) {
  LatticeFn<Word> out(rank);
  for (const auto& [x, w] : f) out.set(with_last(x, 0), w);
  return out;
}

SymmetricSplit zero_split(int rank) {
  return SymmetricSplit{Word{}, LatticeFn<Word>(rank),
                        std::vector<LatticeFn<Word>>(static_cast<std::size_t>(rank),
                                                     LatticeFn<Word>(rank))};
}

SymmetricSplit split_recursive(const LatticeFn<Word>& f, const BaseGroup& base) {
  const int r = f.rank();
  if (f.is_zero()) return zero_split(r);
  const std::int64_t n = f.radius();

  // Chains are indexed by the first r-1 coordinates; x and -x are both
  // needed because each chain writes half of its mirror line.
  std::set<Point> heads;
  for (const auto& [x, w] : f) {
    Point head(x.begin(), x.end() - 1);
    heads.insert(-head);
    heads.insert(std::move(head));
  }

  LatticeFn<Word> g(r), h(r);
  for (const Point& head : heads) {
    const Point mirror = -head;
    for (std::int64_t i = n; i >= 1; --i) {
      const Word g_neg = mul(f.get(with_last(mirror, -i)), invert(h.get(with_last(mirror, -i))));
      const Word g_pos = reverse(g_neg);
      g.set(with_last(mirror, -i), g_neg);
      g.set(with_last(head, i), g_pos);
      const Word h_pos = mul(invert(g_pos), f.get(with_last(head, i)));
      h.set(with_last(head, i), h_pos);
      h.set(with_last(mirror, 1 - i), reverse(h_pos));
    }
  }

  if (r == 1) {
    const Point origin{0};
    SymmetricSplit out{base.normalize(f.get(origin) * invert(h.get(origin))), g, {h}};
    return out;
  }

  // g on the hyperplane x_r = 0 is not yet symmetric; split it one
  // dimension down and fold the pieces back in.
  LatticeFn<Word> slice(r - 1);
  for (const Point& head : heads) {
    const Point x = with_last(head, 0);
    slice.set(head, mul(f.get(x), invert(h.get(x))));
  }
  SymmetricSplit sub = split_recursive(slice, base);

  SymmetricSplit out{sub.gamma, LatticeFn<Word>(r), {}};
  for (const auto& [x, w] : g) {
    if (x.back() != 0) out.f0.set(x, w);
  }
  for (const auto& [x, w] : sub.f0) out.f0.set(with_last(x, 0), w);
  for (const auto& piece : sub.fi) out.fi.push_back(embed_on_hyperplane(piece, r));
  out.fi.push_back(std::move(h));
  return out;
}

void verify_or_throw(const SymmetricSplit& split, const LatticeFn<Word>& f,
                     const BaseGroup& base) {
  if (!split_is_valid(split, f, base)) {
    throw VerificationError("symmetric split failed its own verification");
  }
}

}  // namespace

bool is_symmetric_about_origin(const LatticeFn<Word>& f) {
  for (const auto& [x, w] : f) {
    if (f.get(-x) != reverse(w)) return false;
  }
  return true;
}

bool is_symmetric_about_half_unit(const LatticeFn<Word>& f, int axis) {
  const Point e = unit_point(f.rank(), axis);
  for (const auto& [x, w] : f) {
    if (f.get(e - x) != reverse(w)) return false;
  }
  return true;
}

bool split_is_valid(const SymmetricSplit& split, const LatticeFn<Word>& f,
                    const BaseGroup& base) {
  const int r = f.rank();
  if (split.f0.rank() != r || static_cast<int>(split.fi.size()) != r) return false;
  if (!is_symmetric_about_origin(split.f0)) return false;
  for (int i = 0; i < r; ++i) {
    if (split.fi[i].rank() != r || !is_symmetric_about_half_unit(split.fi[i], i)) {
      return false;
    }
  }
  std::set<Point> points;
  points.insert(zero_point(r));
  for (const auto& [x, w] : f) points.insert(x);
  for (const auto& [x, w] : split.f0) points.insert(x);
  for (const auto& piece : split.fi) {
    for (const auto& [x, w] : piece) points.insert(x);
  }
  const Point origin = zero_point(r);
  for (const Point& x : points) {
    Word product = x == origin ? split.gamma : Word{};
    product *= split.f0.get(x);
    for (const auto& piece : split.fi) product *= piece.get(x);
    if (!base.equal(product, f.get(x))) return false;
  }
  return true;
}

SymmetricSplit symmetric_split(const LatticeFn<Word>& f, const BaseGroup& base) {
  SymmetricSplit out = split_recursive(f, base);
  verify_or_throw(out, f, base);
  return out;
}

SymmetricSplit symmetric_split_refined_r1(const LatticeFn<Word>& f, const BaseGroup& base) {
  if (f.rank() != 1) throw std::invalid_argument("refined split needs rank 1");
  SymmetricSplit out = split_recursive(f, base);
  std::vector<Word> factors = base.palindromic_factorization(out.gamma);
  if (!factors.empty()) {
    out.f0.set(Point{0}, free_reduce(factors.back()));
    factors.pop_back();
    Word rest;
    for (const Word& w : factors) rest *= w;
    out.gamma = base.normalize(rest);
  }
  verify_or_throw(out, f, base);
  return out;
}

}  // namespace palw
