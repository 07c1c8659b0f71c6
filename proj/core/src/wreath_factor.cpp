#include "palw/wreath_factor.hpp"

#include <algorithm>
#include <stdexcept>

#include "palw/errors.hpp"

namespace palw {

namespace {

std::vector<int> role_order(int rank, int axis) {
  std::vector<int> order{axis};
  for (int i = 0; i < rank; ++i) {
    if (i != axis) order.push_back(i);
  }
  return order;
}

Word repeat(const Word& w, std::int64_t times) {
  Word out;
  for (std::int64_t i = 0; i < times; ++i) out *= w;
  return out;
}

}  // namespace

SnakePlan build_snake(const WreathGroup& group, std::int64_t n, SnakeVariant variant,
                      int axis) {
  if (n < 0) throw std::invalid_argument("snake radius must be >= 0");
  const int r = group.rank();
  if (axis < 0 || axis >= r) throw std::invalid_argument("snake axis out of range");
  const std::vector<int> order = role_order(r, axis);
  const bool half = variant == SnakeVariant::kHalfShifted;

  Word core = group.lattice_power(order[0], half ? 2 * n + 1 : 2 * n);
  for (int k = 1; k < r; ++k) {
    const Word step = group.lattice_power(order[k], 1);
    core = repeat(core * step * invert(core) * step, n) * core;
  }

  Word prefix, suffix;
  for (int k = 0; k < r; ++k) prefix *= group.lattice_power(order[k], -n);
  for (int k = r - 1; k >= 0; --k) suffix *= group.lattice_power(order[k], -n);

  SnakePlan plan;
  plan.rank = r;
  plan.radius = n;
  plan.variant = variant;
  plan.axis = axis;
  plan.word = prefix * core * suffix;
  plan.palindrome_length = plan.word.size();
  if (half) plan.word *= group.lattice_power(axis, -1);

  Point pos(static_cast<std::size_t>(r), -n);
  std::size_t offset = prefix.size();
  plan.prefix_index.emplace(pos, offset);
  for (const Letter& l : core) {
    pos[group.axis_of(l)] += l.sign;
    ++offset;
    if (!plan.prefix_index.emplace(pos, offset).second) {
      throw VerificationError("snake revisits " + format_point(pos));
    }
  }
  return plan;
}

std::int64_t snake_radius_for(const LatticeFn<Word>& f, SnakeVariant variant, int axis) {
  if (variant == SnakeVariant::kSymmetric) return f.radius();
  std::int64_t n = 0;
  for (const auto& [x, w] : f) {
    for (int k = 0; k < f.rank(); ++k) {
      n = std::max(n, k == axis ? std::max(-x[k], x[k] - 1) : std::abs(x[k]));
    }
  }
  return n;
}

Word inject(const SnakePlan& plan, const LatticeFn<Word>& f) {
  if (f.rank() != plan.rank) throw std::invalid_argument("rank mismatch in inject");
  std::map<std::size_t, const Word*> slots;
  for (const auto& [x, w] : f) {
    auto it = plan.prefix_index.find(x);
    if (it == plan.prefix_index.end()) {
      throw std::invalid_argument("support point " + format_point(x) +
                                  " escapes the snake box of radius " +
                                  std::to_string(plan.radius));
    }
    slots.emplace(it->second, &w);
  }
  Word out;
  auto slot = slots.begin();
  for (std::size_t off = 0; off <= plan.word.size(); ++off) {
    if (slot != slots.end() && slot->first == off) {
      out *= *slot->second;
      ++slot;
    }
    if (off < plan.word.size()) out.push_back(plan.word[off]);
  }
  return out;
}

bool verify_factorization(const WreathGroup& group, const WreathFactorization& fz) {
  if (fz.count() > fz.bound) return false;
  for (const Word& w : fz.factors) {
    if (!is_palindrome(w)) return false;
  }
  return group.equal(group.evaluate_product(fz.factors), fz.target);
}

namespace {

// Pushes the runs moving the lamplighter by `shift`. When `pending_axis` is
// set, the previous factor's trailing x_axis^{-1} is merged into the first
// run.
void append_shift_block(const WreathGroup& group, Point shift, int pending_axis,
                        std::vector<Word>& factors) {
  std::vector<int> axes;
  if (pending_axis >= 0) {
    shift[pending_axis] -= 1;
    axes.push_back(pending_axis);
  }
  for (int i = group.rank() - 1; i >= 0; --i) {
    if (i != pending_axis) axes.push_back(i);
  }
  for (int axis : axes) {
    if (shift[axis] != 0) factors.push_back(group.lattice_power(axis, shift[axis]));
  }
}

WreathFactorization assemble(const WreathGroup& group, const WreathElement& e,
                             const SymmetricSplit& split, std::size_t bound) {
  WreathFactorization out{e, {}, bound};
  for (Word& w : group.base().palindromic_factorization(split.gamma)) {
    if (!w.empty()) out.factors.push_back(std::move(w));
  }
  if (!split.f0.is_zero()) {
    const auto n = snake_radius_for(split.f0, SnakeVariant::kSymmetric, 0);
    out.factors.push_back(inject(build_snake(group, n, SnakeVariant::kSymmetric), split.f0));
  }
  int pending_axis = -1;
  for (int i = 0; i < group.rank(); ++i) {
    const auto& piece = split.fi[i];
    if (piece.is_zero()) continue;
    const auto n = snake_radius_for(piece, SnakeVariant::kHalfShifted, i);
    Word w = inject(build_snake(group, n, SnakeVariant::kHalfShifted, i), piece);
    std::vector<Letter> letters = w.letters();
    letters.pop_back();  // x_i^{-1}
    if (pending_axis >= 0) out.factors.push_back(group.lattice_power(pending_axis, -1));
    out.factors.emplace_back(std::move(letters));
    pending_axis = i;
  }
  append_shift_block(group, e.shift, pending_axis, out.factors);
  if (!verify_factorization(group, out)) {
    throw VerificationError("wreath factorization failed re-evaluation");
  }
  return out;
}

}  // namespace

WreathFactorization factorize_wreath(const WreathGroup& group, const WreathElement& e) {
  group.check(e);
  const SymmetricSplit split = symmetric_split(e.fn, group.base());
  const std::size_t bound =
      3 * static_cast<std::size_t>(group.rank()) + group.base().declared_width();
  return assemble(group, e, split, bound);
}

WreathFactorization factorize_wreath_z(const WreathGroup& group, const WreathElement& e) {
  group.check(e);
  if (group.rank() != 1) throw HypothesisError("factorize_wreath_z needs rank 1");
  const SymmetricSplit split = symmetric_split_refined_r1(e.fn, group.base());
  return assemble(group, e, split, 2 + group.base().declared_width());
}

}  // namespace palw
