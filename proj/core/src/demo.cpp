#include "palw/demo.hpp"

#include <iomanip>
#include <sstream>

#include "palw/certificate.hpp"

namespace palw {

namespace {

constexpr std::int64_t kTable[15] = {0, 0, 0, 3, -1, 4, 0, 0, 1, 5, 0, 0, 0, 0, 2};

std::vector<std::int64_t> row(const IntegerGroup& z, const LatticeFn<Word>& fn,
                              const std::vector<std::int64_t>& xs) {
  std::vector<std::int64_t> out;
  for (std::int64_t x : xs) out.push_back(z.value(fn.get({x})));
  return out;
}

}  // namespace

bool WorkedExample::all_checks_pass() const {
  return w_g_evaluates && w_h_evaluates && product_evaluates &&
         width3.value("all_none", false) && width3.value("in_hypothesis", false);
}

WorkedExample run_worked_example(std::int64_t scan_radius) {
  auto base = std::make_shared<IntegerGroup>();
  WreathGroup group(base, 1);
  WorkedExample ex;
  LatticeFn<Word> f(1);
  for (std::int64_t x = -7; x <= 7; ++x) {
    ex.xs.push_back(x);
    f.set({x}, base->element(kTable[x + 7]));
  }
  const WreathElement target = group.make(f, {7});
  const SymmetricSplit split = symmetric_split_refined_r1(f, *base);
  ex.f = row(*base, f, ex.xs);
  ex.g = row(*base, split.f0, ex.xs);
  ex.h = row(*base, split.fi[0], ex.xs);

  const WreathFactorization fz = factorize_wreath_z(group, target);
  for (const Word& w : fz.factors) ex.factors.push_back(format_word_typeset(w, group.alphabet()));
  if (fz.factors.size() == 3) {
    ex.w_g = ex.factors[0];
    ex.w_h = ex.factors[1];
    ex.w_g_evaluates = group.equal(group.evaluate(fz.factors[0]), WreathElement{split.f0, {0}});
    ex.w_h_evaluates = group.equal(group.evaluate(fz.factors[1]), WreathElement{split.fi[0], {1}});
    ex.product_evaluates =
        fz.factors[2] == group.lattice_power(0, 6) &&
        group.equal(group.evaluate_product(fz.factors), target);
  }
  const LampElement witness = make_lamp_element({{0, 1}, {1, 2}}, 3);
  ex.width3 = width3_certificate(certify_width_three(witness, scan_radius),
                                 Json{{"scan_radius", scan_radius}});
  return ex;
}

std::string format_worked_example(const WorkedExample& ex) {
  std::ostringstream out;
  auto print_row = [&](const std::string& label, const std::vector<std::int64_t>& values) {
    out << std::left << std::setw(5) << label << std::right;
    for (std::int64_t v : values) out << std::setw(4) << v;
    out << '\n';
  };
  print_row("x", ex.xs);
  print_row("f(x)", ex.f);
  print_row("g(x)", ex.g);
  print_row("h(x)", ex.h);
  out << '\n';
  out << "w_g = " << ex.w_g << '\n';
  out << "w_h = " << ex.w_h << '\n';
  out << '\n';
  auto check = [&](const std::string& what, bool ok) {
    out << (ok ? "ok   " : "FAIL ") << what << '\n';
  };
  check("w_g evaluates to (g, 0)", ex.w_g_evaluates);
  check("w_h evaluates to (h, 1)", ex.w_h_evaluates);
  check("w_g w_h t^6 evaluates to (f, 7)", ex.product_evaluates);
  const Json& scan = ex.width3.at("scan");
  check("({0:1, 1:2}, 3) is not a product of two palindromes for p in [" +
            std::to_string(scan.at("p_lo").get<std::int64_t>()) + ", " +
            std::to_string(scan.at("p_hi").get<std::int64_t>()) + "]",
        ex.width3.at("all_none").get<bool>());
  std::string upper;
  for (const Json& w : ex.width3.at("upper").at("factors")) {
    upper += (upper.empty() ? "" : " | ") + w.get<std::string>();
  }
  out << "     upper bound: " << ex.width3.at("upper").at("count").get<std::size_t>()
      << " palindromes: " << upper << '\n';
  return out.str();
}

}  // namespace palw
