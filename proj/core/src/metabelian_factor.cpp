#include "palw/metabelian_factor.hpp"

#include <algorithm>
#include <set>

#include "palw/errors.hpp"
#include "palw/skew.hpp"

namespace palw {

namespace {

Word axis_power(int axis, std::int64_t exp) {
  return Word::power(static_cast<std::uint32_t>(axis), exp);
}

Word commutator_power(int i, int j, const Integer& c) {
  const std::int64_t n = to_int64(c);
  const Word rho = n < 0 ? invert(commutator_word(i, j)) : commutator_word(i, j);
  Word out;
  for (std::int64_t k = 0; k < (n < 0 ? -n : n); ++k) out *= rho;
  return out;
}

Point pair_two_center(int rank, int i, int j) {
  return -(unit_point(rank, i) + unit_point(rank, j));
}

// Monomial runs x_a^{u_a}, one palindrome each.
std::vector<Word> monomial_runs(const Point& u) {
  std::vector<Word> out;
  for (std::size_t a = 0; a < u.size(); ++a) {
    if (u[a] != 0) out.push_back(axis_power(static_cast<int>(a), u[a]));
  }
  return out;
}

std::vector<Word> inverse_runs(const Point& u) {
  std::vector<Word> out;
  for (std::size_t a = u.size(); a-- > 0;) {
    if (u[a] != 0) out.push_back(axis_power(static_cast<int>(a), -u[a]));
  }
  return out;
}

SquareCoeffs shift_coeffs(const SquareCoeffs& c, const Point& v) {
  SquareCoeffs out{c.rank, {}};
  for (const auto& [pair, fn] : c.by_pair) out.by_pair.emplace(pair, shift(fn, v));
  return out;
}

void append(std::vector<Word>& out, std::vector<Word> more) {
  for (Word& w : more) {
    if (!w.empty()) out.push_back(std::move(w));
  }
}

}  // namespace

Word palindromize_skew(const SquareCoeffs& c) {
  Word g_all;
  for (const auto& [pair, fn] : c.by_pair) {
    const auto [i, j] = pair;
    const Point two_center = pair_two_center(c.rank, i, j);
    if (!is_skew_symmetric(fn, two_center)) {
      throw HypothesisError("coefficients of [x" + std::to_string(i + 1) + ",x" +
                            std::to_string(j + 1) + "] are not skew about " +
                            format_point(two_center) + "/2");
    }
    std::set<Point> reps;
    for (const auto& [u, v] : fn) reps.insert(std::max(u, two_center - u));
    // g_k = product over representatives; G = g_m ... g_1.
    Word g;
    for (const Point& u : reps) {
      const Word mono = monomial_word(u);
      g *= mono * commutator_power(i, j, fn.get(u)) * invert(mono);
    }
    g_all = g * g_all;
  }
  Word out = g_all * reverse(g_all);
  if (!(flow_evaluate(out, c.rank) == squares_to_element(c))) {
    throw VerificationError("skew palindrome does not evaluate to its square data");
  }
  return out;
}

std::vector<Word> palindromize_conjugated(const SquareCoeffs& c, const Point& p) {
  std::vector<Word> out = monomial_runs(p);
  append(out, {palindromize_skew(shift_coeffs(c, -p))});
  append(out, inverse_runs(p));
  if (!(flow_product(out, c.rank) == squares_to_element(c))) {
    throw VerificationError("conjugated palindrome does not evaluate to its square data");
  }
  return out;
}

bool pair_grid_sums_vanish(const SquareCoeffs& c) {
  return std::all_of(c.by_pair.begin(), c.by_pair.end(), [&](const auto& entry) {
    const auto [i, j] = entry.first;
    return paired_grid_sums_vanish(entry.second, pair_two_center(c.rank, i, j));
  });
}

std::vector<Word> palindromize_gridzero(const SquareCoeffs& c) {
  const int r = c.rank;
  if (!pair_grid_sums_vanish(c)) {
    throw HypothesisError("square data has a nonzero grid sum");
  }
  std::vector<SquareCoeffs> bundles(static_cast<std::size_t>(r) + 1, SquareCoeffs{r, {}});
  for (const auto& [pair, fn] : c.by_pair) {
    const auto [i, j] = pair;
    const auto pieces = skew_split_fixed_centers(fn, pair_two_center(r, i, j));
    for (int a = 0; a <= r; ++a) {
      if (!pieces[a].fn.is_zero()) bundles[a].by_pair.emplace(pair, pieces[a].fn);
    }
  }
  std::vector<Word> out;
  append(out, {palindromize_skew(bundles[0])});
  for (int a = 0; a < r; ++a) {
    const SquareCoeffs& bundle = bundles[a + 1];
    if (bundle.by_pair.empty()) continue;
    out.push_back(axis_power(a, 1));
    out.push_back(palindromize_skew(shift_coeffs(bundle, -unit_point(r, a))));
    out.push_back(axis_power(a, -1));
  }
  if (!(flow_product(out, r) == squares_to_element(c))) {
    throw VerificationError("grid-zero factorization does not evaluate to its square data");
  }
  return out;
}

std::size_t BattlementPlan::palindrome_count() const {
  std::size_t n = 0;
  for (const auto& e : entries) n += e.palindromes.size();
  return n;
}

BattlementPlan battlement_plan(const SquareCoeffs& c) {
  const int r = c.rank;
  BattlementPlan plan{{}, Word{}, SquareCoeffs{r, {}}, c};
  for (const auto& [pair, fn] : c.by_pair) {
    const auto [i, j] = pair;
    for (const GridVector& v : all_grid_vectors(r)) {
      const Integer d = grid_sum(fn, v);
      if (d.is_zero()) continue;
      const std::int64_t n = to_int64(d);
      const std::int64_t m = n < 0 ? -n : n;
      const Word xi = axis_power(i, 1);
      const Word xj = axis_power(j, 1);
      // P = (x_i x_j^{-1} x_i x_j)^{m-1} x_i x_j^{-1} x_i, a palindrome.
      Word p;
      for (std::int64_t k = 1; k < m; ++k) p *= xi * invert(xj) * xi * xj;
      p *= xi * invert(xj) * xi;

      BattlementEntry entry{i, j, v, d, Word{}, monomial_runs(v.coords())};
      if (n > 0) {
        append(entry.palindromes, {xj, p, axis_power(i, -2 * m)});
      } else {
        append(entry.palindromes, {axis_power(i, 2 * m), invert(p), invert(xj)});
      }
      append(entry.palindromes, inverse_runs(v.coords()));
      for (const Word& w : entry.palindromes) entry.q *= w;

      for (std::int64_t s = 0; s < m; ++s) {
        plan.q_coeffs.add(i, j, v.coords() + unit_point(r, i, 2 * s), n > 0 ? -1 : 1);
      }
      plan.q *= entry.q;
      plan.entries.push_back(std::move(entry));
    }
  }
  if (!(flow_evaluate(plan.q, r) == squares_to_element(plan.q_coeffs))) {
    throw VerificationError("battlement word does not match its square data");
  }
  plan.corrected = square_coeffs_sum(c, plan.q_coeffs);
  for (const auto& [pair, fn] : plan.corrected.by_pair) {
    for (const GridVector& v : all_grid_vectors(r)) {
      if (!grid_sum(fn, v).is_zero()) {
        throw VerificationError("battlement correction left a nonzero grid sum");
      }
    }
  }
  return plan;
}

BattlementPlan battlement_correct(const FlowElement& h) {
  return battlement_plan(circulation_to_squares(h));
}

std::size_t metabelian_bound(int rank) {
  const auto r = static_cast<std::size_t>(rank);
  return (std::size_t{1} << (r - 1)) * r * (r + 1) * (2 * r + 3) + 4 * r + 1;
}

bool verify_metabelian(const Factorization<FlowElement>& fz) {
  if (fz.count() > fz.bound) return false;
  for (const Word& w : fz.factors) {
    if (!is_palindrome(w)) return false;
  }
  return flow_product(fz.factors, fz.target.rank) == fz.target;
}

MetabelianFactorization factorize_metabelian(const FlowElement& g) {
  const int r = g.rank;
  if (!divergence_law_holds(g)) throw std::invalid_argument("flow violates divergence law");
  const Word coset = monomial_word(g.shift);
  const FlowElement h = flow_multiply(g, flow_invert(flow_evaluate(coset, r)));
  const BattlementPlan plan = battlement_correct(h);

  MetabelianFactorization out;
  out.target = g;
  out.bound = metabelian_bound(r);
  append(out.factors, palindromize_gridzero(plan.corrected));
  out.gridzero_count = out.factors.size();
  for (auto e = plan.entries.rbegin(); e != plan.entries.rend(); ++e) {
    for (auto w = e->palindromes.rbegin(); w != e->palindromes.rend(); ++w) {
      out.factors.push_back(invert(*w));
      ++out.battlement_count;
    }
  }
  const std::vector<Word> runs = monomial_runs(g.shift);
  out.coset_count = runs.size();
  append(out.factors, runs);
  if (!verify_metabelian(out)) {
    throw VerificationError("metabelian factorization failed re-evaluation");
  }
  return out;
}

}  // namespace palw
