#include "palw/flow.hpp"

#include <stdexcept>

#include "palw/errors.hpp"

namespace palw {

namespace {

void add_edge(std::map<Edge, Integer>& edges, Edge e, const Integer& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = edges.try_emplace(std::move(e), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) edges.erase(it);
  }
}

void check_rank(const FlowElement& a, const FlowElement& b) {
  if (a.rank != b.rank) throw std::invalid_argument("flow elements of different rank");
}

Word word_power(const Word& w, const Integer& c) {
  const std::int64_t n = to_int64(c);
  const Word base = n < 0 ? invert(w) : w;
  Word out;
  for (std::int64_t k = 0; k < (n < 0 ? -n : n); ++k) out *= base;
  return out;
}

}  // namespace

Alphabet metabelian_alphabet(int rank) {
  if (rank < 1) throw std::invalid_argument("rank must be >= 1");
  std::vector<std::string> names;
  for (int i = 1; i <= rank; ++i) names.push_back("x" + std::to_string(i));
  return Alphabet(std::move(names));
}

FlowElement flow_identity(int rank) { return FlowElement{rank, zero_point(rank), {}}; }

FlowElement flow_evaluate(const Word& w, int rank) {
  FlowElement out = flow_identity(rank);
  Point& pos = out.shift;
  for (const Letter& l : w) {
    if (l.gen >= static_cast<std::uint32_t>(rank)) {
      throw std::invalid_argument("letter index " + std::to_string(l.gen) +
                                  " outside x1..x" + std::to_string(rank));
    }
    const auto axis = static_cast<int>(l.gen);
    if (l.sign > 0) {
      add_edge(out.edges, Edge{pos, axis}, 1);
      ++pos[axis];
    } else {
      --pos[axis];
      add_edge(out.edges, Edge{pos, axis}, -1);
    }
  }
  return out;
}

FlowElement flow_multiply(const FlowElement& a, const FlowElement& b) {
  check_rank(a, b);
  FlowElement out{a.rank, a.shift + b.shift, a.edges};
  for (const auto& [e, c] : b.edges) add_edge(out.edges, Edge{e.pos + a.shift, e.axis}, c);
  return out;
}

FlowElement flow_invert(const FlowElement& a) {
  FlowElement out{a.rank, -a.shift, {}};
  for (const auto& [e, c] : a.edges) out.edges.emplace(Edge{e.pos - a.shift, e.axis}, -c);
  return out;
}

FlowElement flow_product(const std::vector<Word>& factors, int rank) {
  Word all;
  for (const Word& w : factors) all *= w;
  return flow_evaluate(all, rank);
}

bool divergence_law_holds(const FlowElement& e) {
  std::map<Point, Integer> div;
  for (const auto& [edge, c] : e.edges) {
    div[edge.pos] += c;
    div[edge.pos + unit_point(e.rank, edge.axis)] -= c;
  }
  div[zero_point(e.rank)] -= 1;
  div[e.shift] += 1;
  for (const auto& [w, d] : div) {
    if (!d.is_zero()) return false;
  }
  return true;
}

Word monomial_word(const Point& u) {
  Word out;
  for (std::size_t i = 0; i < u.size(); ++i) {
    out *= Word::power(static_cast<std::uint32_t>(i), u[i]);
  }
  return out;
}

Word commutator_word(int i, int j) {
  const auto a = static_cast<std::uint32_t>(i);
  const auto b = static_cast<std::uint32_t>(j);
  return Word({{a, 1}, {b, 1}, {a, -1}, {b, -1}});
}

IntFn SquareCoeffs::get(int i, int j) const {
  auto it = by_pair.find({i, j});
  return it == by_pair.end() ? IntFn(rank) : it->second;
}

void SquareCoeffs::add(int i, int j, const Point& u, const Integer& c) {
  if (!(0 <= i && i < j && j < rank)) throw std::invalid_argument("square pair out of range");
  auto [it, inserted] = by_pair.try_emplace({i, j}, IntFn(rank));
  it->second.add(u, c);
  if (it->second.is_zero()) by_pair.erase(it);
}

SquareCoeffs square_coeffs_sum(const SquareCoeffs& a, const SquareCoeffs& b) {
  if (a.rank != b.rank) throw std::invalid_argument("square data of different rank");
  SquareCoeffs out = a;
  for (const auto& [pair, fn] : b.by_pair) {
    for (const auto& [u, c] : fn) out.add(pair.first, pair.second, u, c);
  }
  return out;
}

FlowElement square_flow(int rank, int i, int j, const Point& at) {
  SquareCoeffs c{rank, {}};
  c.add(i, j, at, 1);
  return squares_to_element(c);
}

FlowElement squares_to_element(const SquareCoeffs& c) {
  FlowElement out = flow_identity(c.rank);
  for (const auto& [pair, fn] : c.by_pair) {
    const auto [i, j] = pair;
    const Point ei = unit_point(c.rank, i);
    const Point ej = unit_point(c.rank, j);
    for (const auto& [u, v] : fn) {
      add_edge(out.edges, Edge{u, i}, v);
      add_edge(out.edges, Edge{u + ei, j}, v);
      add_edge(out.edges, Edge{u + ej, i}, -v);
      add_edge(out.edges, Edge{u, j}, -v);
    }
  }
  return out;
}

SquareCoeffs circulation_to_squares(const FlowElement& h) {
  if (h.shift != zero_point(h.rank)) {
    throw HypothesisError("element has abelianization " + format_point(h.shift) +
                          ", expected 0");
  }
  SquareCoeffs out{h.rank, {}};
  for (const auto& [edge, c] : h.edges) {
    const int i = edge.axis;
    // Walk from the point where the monomial paths to pos and pos + e_i
    // split, sweeping the strip between them.
    Point w = edge.pos;
    for (int k = i + 1; k < h.rank; ++k) w[k] = 0;
    for (int k = i + 1; k < h.rank; ++k) {
      for (; w[k] < edge.pos[k]; ++w[k]) out.add(i, k, w, -c);
      while (w[k] > edge.pos[k]) {
        --w[k];
        out.add(i, k, w, c);
      }
    }
  }
  if (!(squares_to_element(out) == h)) {
    throw VerificationError("square coefficients do not rebuild the circulation");
  }
  return out;
}

Word flow_to_word(const FlowElement& h) {
  Word out;
  for (const auto& [edge, c] : h.edges) {
    const Point next = edge.pos + unit_point(h.rank, edge.axis);
    const Word loop = monomial_word(edge.pos) *
                      Word::letter(static_cast<std::uint32_t>(edge.axis)) *
                      invert(monomial_word(next));
    out *= word_power(loop, c);
  }
  return out * monomial_word(h.shift);
}

Word squares_to_word(const SquareCoeffs& c) {
  Word out;
  for (const auto& [pair, fn] : c.by_pair) {
    const Word rho = commutator_word(pair.first, pair.second);
    for (const auto& [u, v] : fn) {
      const Word mono = monomial_word(u);
      out *= mono * word_power(rho, v) * invert(mono);
    }
  }
  return out;
}

}  // namespace palw
