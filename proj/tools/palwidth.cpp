// Command-line front end: factorizations, decompositions, lower-bound scans
// and certificate checking. JSON goes to --out or stdout, logs to stderr.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "palw/certificate.hpp"
#include "palw/demo.hpp"
#include "palw/errors.hpp"

namespace {

using palw::Json;

enum ExitCode { kOk = 0, kMalformed = 1, kVerification = 2, kHypothesis = 3 };

struct Options {
  std::string in;
  std::string out;
  std::string word;
  std::string base = "Z";
  int rank = 1;
  int rewrite_rank = 3;
  std::uint64_t seed = 0;
  std::int64_t scan_radius = -1;
  std::size_t max_len = 9;
  std::size_t max_factors = 2;
  std::size_t count = 100;
  std::int64_t p = 0;
  std::string mode = "half";
  std::string center;
  std::string to = "flow";
  std::string g_word, b_word, h_word, alphabet;
  std::vector<std::string> factors;
};

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  return Json::parse(in);
}

void emit(const Options& o, const Json& j) {
  const std::string text = j.dump(2) + "\n";
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(o.out);
  if (!out) throw std::invalid_argument("cannot write '" + o.out + "'");
  out << text;
}

Json config_echo(const Options& o) {
  Json c{{"seed", o.seed}};
  if (!o.in.empty()) c["in"] = o.in;
  if (!o.word.empty()) c["word"] = o.word;
  return c;
}

Json element_input(const Options& o, bool metabelian) {
  if (!o.in.empty()) return read_json_file(o.in);
  if (o.word.empty()) throw std::invalid_argument("give --in FILE or --word WORD");
  if (metabelian) return Json{{"r", o.rank}, {"word", o.word}};
  return Json{{"base", o.base}, {"r", o.rank}, {"word", o.word}};
}

palw::Point parse_point(const std::string& text, int rank) {
  palw::Point p;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) p.push_back(std::stoll(item));
  if (p.empty()) p = palw::zero_point(rank);
  if (static_cast<int>(p.size()) != rank) {
    throw std::invalid_argument("center needs " + std::to_string(rank) + " coordinates");
  }
  return p;
}

palw::Alphabet rewrite_alphabet(const Options& o) {
  if (o.alphabet.empty()) return palw::metabelian_alphabet(o.rewrite_rank);
  std::vector<std::string> names;
  std::stringstream ss(o.alphabet);
  std::string item;
  while (std::getline(ss, item, ',')) names.push_back(item);
  return palw::Alphabet(std::move(names));
}

int run_factor_wreath(const Options& o, bool refined) {
  auto [group, element] = palw::wreath_element_from_json(element_input(o, false));
  const auto fz = refined ? palw::factorize_wreath_z(*group, element)
                          : palw::factorize_wreath(*group, element);
  std::cerr << "factored into " << fz.count() << " palindromes (bound " << fz.bound << ")\n";
  emit(o, palw::wreath_certificate(*group, fz, refined ? "wreath-z" : "wreath", config_echo(o)));
  return kOk;
}

int run_factor_metabelian(const Options& o) {
  const palw::FlowElement g = palw::flow_from_json(element_input(o, true));
  const auto fz = palw::factorize_metabelian(g);
  std::cerr << "factored into " << fz.count() << " palindromes (bound " << fz.bound << ")\n";
  emit(o, palw::metabelian_certificate(fz, config_echo(o)));
  return kOk;
}

int run_decompose_symmetric(const Options& o) {
  auto [group, element] = palw::wreath_element_from_json(element_input(o, false));
  const auto split = group->rank() == 1
                         ? palw::symmetric_split_refined_r1(element.fn, group->base())
                         : palw::symmetric_split(element.fn, group->base());
  emit(o, palw::symmetric_split_to_json(split, group->base(), group->base().alphabet()));
  return kOk;
}

int run_decompose_skew(const Options& o) {
  if (o.in.empty()) throw std::invalid_argument("decompose skew needs --in FILE");
  const palw::IntFn f = palw::int_fn_from_json(read_json_file(o.in));
  const palw::Point c = parse_point(o.center, f.rank());
  std::vector<palw::SkewPiece> pieces;
  if (o.mode == "half") {
    pieces = palw::skew_split_half(f, c);
  } else if (o.mode == "grid") {
    pieces = palw::skew_split_grid(f, c);
  } else if (o.mode == "fixed") {
    pieces = palw::skew_split_fixed_centers(f, c);
  } else {
    throw std::invalid_argument("--mode must be half, grid or fixed");
  }
  emit(o, Json{{"mode", o.mode}, {"input", palw::int_fn_to_json(f)},
               {"pieces", palw::skew_pieces_to_json(pieces)}});
  return kOk;
}

palw::LampElement lamp_input(const Options& o) {
  Options z = o;
  z.base = "Z";
  z.rank = 1;
  return palw::lamp_element_from_json(element_input(z, false));
}

int run_decide(const Options& o) {
  const palw::LampElement target = lamp_input(o);
  const auto v = palw::two_palindrome_decision(target, o.p);
  Json out = palw::two_pal_verdict_to_json(v);
  out["element"] = palw::lamp_element_to_json(target);
  emit(o, out);
  return kOk;
}

int run_certify_width3(const Options& o) {
  const palw::LampElement target = lamp_input(o);
  const std::int64_t radius =
      o.scan_radius >= 0 ? o.scan_radius : palw::default_scan_radius(target);
  Json config = config_echo(o);
  config["scan_radius"] = radius;
  const auto w = palw::certify_width_three(target, radius);
  if (!w.in_hypothesis) {
    std::cerr << "note: target is outside the witness hypothesis "
                 "(support {0,1}, f(0) != f(1), shift 3); running the scan anyway\n";
  }
  emit(o, palw::width3_certificate(w, config));
  return kOk;
}

int run_oracle(const Options& o) {
  const palw::LampElement target = lamp_input(o);
  const auto r = palw::minimal_palindromic_length_bfs(target, o.max_len, o.max_factors);
  Json out{{"element", palw::lamp_element_to_json(target)},
           {"max_len", o.max_len},
           {"max_factors", o.max_factors},
           {"palindromic_elements", r.palindromes},
           {"budget_exceeded", r.budget_exceeded}};
  out["minimum"] = r.minimum ? Json(*r.minimum) : Json("unknown");
  emit(o, out);
  return kOk;
}

int run_rewrite_commutator(const Options& o) {
  const palw::Alphabet a = rewrite_alphabet(o);
  const auto list = palw::commutator_three_palindromes(palw::parse_word(o.g_word, a),
                                                       palw::parse_word(o.b_word, a));
  emit(o, palw::rewrite_certificate("rewrite-commutator", list, a, 0, config_echo(o)));
  return kOk;
}

int run_rewrite_conjugate(const Options& o) {
  const palw::Alphabet a = rewrite_alphabet(o);
  palw::PalindromicFactorList input;
  for (const std::string& item : o.factors) {
    input.factors.push_back(palw::parse_word(item, a));
    input.target *= input.factors.back();
  }
  if (!palw::factor_list_valid(input)) throw palw::HypothesisError("input factors must be palindromes");
  const auto list = palw::conjugate_factorization(palw::parse_word(o.h_word, a), input);
  emit(o, palw::rewrite_certificate("rewrite-conjugate", list, a, input.count(), config_echo(o)));
  return kOk;
}

int run_convert(const Options& o) {
  const palw::FlowElement e = palw::flow_from_json(element_input(o, true));
  const palw::Alphabet a = palw::metabelian_alphabet(e.rank);
  if (o.to == "flow") {
    emit(o, palw::flow_to_json(e));
  } else if (o.to == "word") {
    emit(o, Json{{"r", e.rank}, {"word", palw::format_word(palw::flow_to_word(e), a)}});
  } else if (o.to == "squares") {
    emit(o, palw::squares_to_json(palw::circulation_to_squares(e)));
  } else {
    throw std::invalid_argument("--to must be flow, word or squares");
  }
  return kOk;
}

int run_verify(const Options& o) {
  if (o.in.empty()) throw std::invalid_argument("verify needs a certificate file");
  const auto report = palw::verify_certificate(read_json_file(o.in));
  if (!report.ok) {
    std::cerr << "verification failed: " << report.reason << '\n';
    return kVerification;
  }
  std::cerr << "certificate verified\n";
  return kOk;
}

// Random factor-then-verify rounds for every certificate kind.
int run_selftest(const Options& o) {
  std::mt19937_64 rng(o.seed);
  auto pick = [&rng](std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
  };
  auto random_word = [&](const palw::Alphabet& a, std::size_t len) {
    palw::Word w;
    for (std::size_t i = 0; i < len; ++i) {
      w.push_back(palw::Letter{static_cast<std::uint32_t>(pick(0, a.size() - 1)),
                               static_cast<std::int8_t>(pick(0, 1) ? 1 : -1)});
    }
    return w;
  };
  Json rounds = Json::object();
  std::size_t failures = 0;
  auto record = [&](const std::string& kind, const Json& cert) {
    const auto report = palw::verify_certificate(cert);
    Json& r = rounds[kind];
    if (r.is_null()) r = Json{{"runs", 0}, {"max_count", 0}, {"failures", 0}};
    r["runs"] = r["runs"].get<std::size_t>() + 1;
    r["max_count"] = std::max(r["max_count"].get<std::size_t>(), cert["count"].get<std::size_t>());
    if (!report.ok) {
      r["failures"] = r["failures"].get<std::size_t>() + 1;
      ++failures;
      std::cerr << kind << ": " << report.reason << '\n';
    }
  };
  const Json config = config_echo(o);
  for (std::size_t n = 0; n < o.count; ++n) {
    for (int r : {1, 2}) {
      const palw::WreathGroup g(palw::make_base_group(pick(0, 1) ? "Z" : "Zm:3"), r);
      const auto e = g.evaluate(random_word(g.alphabet(), static_cast<std::size_t>(pick(0, 30))));
      record("wreath", palw::wreath_certificate(g, palw::factorize_wreath(g, e), "wreath", config));
      if (r == 1) {
        record("wreath-z",
               palw::wreath_certificate(g, palw::factorize_wreath_z(g, e), "wreath-z", config));
      }
    }
    const int r = static_cast<int>(pick(2, 3));
    const palw::FlowElement h =
        palw::flow_evaluate(random_word(palw::metabelian_alphabet(r), static_cast<std::size_t>(pick(0, 20))), r);
    record("metabelian", palw::metabelian_certificate(palw::factorize_metabelian(h), config));
  }
  emit(o, Json{{"seed", o.seed}, {"count", o.count}, {"rounds", rounds}, {"failures", failures}});
  return failures == 0 ? kOk : kVerification;
}

int run_demo(const Options& o) {
  const palw::WorkedExample ex = palw::run_worked_example(o.scan_radius >= 0 ? o.scan_radius : 25);
  std::cout << palw::format_worked_example(ex);
  if (!o.out.empty()) {
    Options w = o;
    emit(w, ex.width3);
  }
  return ex.all_checks_pass() ? kOk : kVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Palindromic factorizations in wreath products and free metabelian groups"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--seed", o.seed, "Seed echoed into certificates")->capture_default_str();

  auto add_io = [&o](CLI::App* sub) {
    sub->add_option("--in", o.in, "Input JSON file");
    sub->add_option("--out", o.out, "Output JSON file (default stdout)");
  };
  auto add_word = [&o](CLI::App* sub, bool with_base) {
    sub->add_option("--word", o.word, "Element given as a word");
    sub->add_option("--rank", o.rank, "Lattice rank for --word")->capture_default_str();
    if (with_base) sub->add_option("--base", o.base, "Base group: Z or Zm:<m>")->capture_default_str();
  };

  int code = kOk;
  auto* factor = app.add_subcommand("factor", "Factor an element into palindromes");
  factor->require_subcommand(1);
  auto* f_wreath = factor->add_subcommand("wreath", "G wr Z^r, at most 3r + PW(G) factors");
  auto* f_wreath_z = factor->add_subcommand("wreath-z", "G wr Z, at most 2 + PW(G) factors");
  auto* f_meta = factor->add_subcommand("metabelian", "Free metabelian group of rank r");
  for (auto* s : {f_wreath, f_wreath_z}) {
    add_io(s);
    add_word(s, true);
  }
  add_io(f_meta);
  add_word(f_meta, false);
  f_wreath->final_callback([&] { code = run_factor_wreath(o, false); });
  f_wreath_z->final_callback([&] { code = run_factor_wreath(o, true); });
  f_meta->final_callback([&] { code = run_factor_metabelian(o); });

  auto* decompose = app.add_subcommand("decompose", "Split lattice functions");
  decompose->require_subcommand(1);
  auto* d_sym = decompose->add_subcommand("symmetric", "Symmetric split of a wreath element");
  add_io(d_sym);
  add_word(d_sym, true);
  d_sym->final_callback([&] { code = run_decompose_symmetric(o); });
  auto* d_skew = decompose->add_subcommand("skew", "Skew-symmetric split of an integer function");
  add_io(d_skew);
  d_skew->add_option("--mode", o.mode, "half, grid or fixed")->capture_default_str();
  d_skew->add_option("--center", o.center,
                     "Comma-separated center: 2p for half, p for grid, 2c for fixed");
  d_skew->final_callback([&] { code = run_decompose_skew(o); });

  auto* decide = app.add_subcommand("decide-two-pal", "Two-palindrome decision in Z wr Z at one p");
  add_io(decide);
  decide->add_option("--word", o.word, "Element as a word in a, t");
  decide->add_option("--p", o.p, "Shift of the first palindrome")->required();
  decide->final_callback([&] { code = run_decide(o); });

  auto* certify = app.add_subcommand("certify-width3", "Scan p and attach a 3-palindrome factorization");
  add_io(certify);
  certify->add_option("--word", o.word, "Element as a word in a, t");
  certify->add_option("--scan-radius", o.scan_radius, "Default |k| + support radius + 22");
  certify->final_callback([&] { code = run_certify_width3(o); });

  auto* oracle = app.add_subcommand("oracle-min-length", "Exhaustive palindromic length in Z wr Z");
  add_io(oracle);
  oracle->add_option("--word", o.word, "Element as a word in a, t");
  oracle->add_option("--max-len", o.max_len, "Longest palindrome enumerated")->capture_default_str();
  oracle->add_option("--max-factors", o.max_factors, "Largest factor count tried")->capture_default_str();
  oracle->final_callback([&] { code = run_oracle(o); });

  auto* rewrite = app.add_subcommand("rewrite", "Free-group palindrome identities");
  rewrite->require_subcommand(1);
  auto* r_comm = rewrite->add_subcommand("commutator", "[g, b] as three palindromes");
  r_comm->add_option("--g", o.g_word, "Word g")->required();
  r_comm->add_option("--b", o.b_word, "Single letter b")->required();
  auto* r_conj = rewrite->add_subcommand("conjugate", "Conjugate a palindromic factor list");
  r_conj->add_option("--conjugator", o.h_word, "Conjugating word h")->required();
  r_conj->add_option("--factors", o.factors, "Palindromic factors, one word per value")->required();
  for (auto* s : {r_comm, r_conj}) {
    s->add_option("--out", o.out, "Output JSON file (default stdout)");
    s->add_option("--rank", o.rewrite_rank, "Alphabet x1..xr")->capture_default_str();
    s->add_option("--alphabet", o.alphabet, "Comma-separated generator names");
  }
  r_comm->final_callback([&] { code = run_rewrite_commutator(o); });
  r_conj->final_callback([&] { code = run_rewrite_conjugate(o); });

  auto* convert = app.add_subcommand("convert", "Convert a free metabelian element");
  add_io(convert);
  add_word(convert, false);
  convert->add_option("--to", o.to, "flow, word or squares")->capture_default_str();
  convert->final_callback([&] { code = run_convert(o); });

  auto* verify = app.add_subcommand("verify", "Re-evaluate a certificate");
  verify->add_option("certificate", o.in, "Certificate JSON file");
  verify->add_option("--in", o.in, "Certificate JSON file");
  verify->final_callback([&] { code = run_verify(o); });

  auto* demo = app.add_subcommand("demo-paper", "Worked lamplighter example and width-3 scan");
  demo->add_option("--out", o.out, "Write the width-3 certificate here");
  demo->add_option("--scan-radius", o.scan_radius, "Scan radius for the width-3 check");
  demo->final_callback([&] { code = run_demo(o); });

  auto* selftest = app.add_subcommand("selftest", "Seeded random factor-then-verify rounds");
  selftest->add_option("--count", o.count, "Rounds per kind")->capture_default_str();
  selftest->add_option("--out", o.out, "Output JSON file (default stdout)");
  selftest->final_callback([&] { code = run_selftest(o); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kMalformed;
  } catch (const palw::HypothesisError& e) {
    std::cerr << "hypothesis violated: " << e.what() << '\n';
    return kHypothesis;
  } catch (const palw::VerificationError& e) {
    std::cerr << "verification failed: " << e.what() << '\n';
    return kVerification;
  } catch (const Json::exception& e) {
    std::cerr << "malformed input: " << e.what() << '\n';
    return kMalformed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kMalformed;
  }
  return code;
}
