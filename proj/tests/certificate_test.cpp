#include <gtest/gtest.h>

#include "palw/certificate.hpp"
#include "support/generators.hpp"

namespace {

using palw::Json;

TEST(JsonIo, IntegersBeyondSixtyFourBitsUseStrings) {
  const palw::Integer big = palw::Integer(1) << 80;
  const Json j = palw::integer_to_json(big);
  EXPECT_TRUE(j.is_string());
  EXPECT_EQ(palw::integer_from_json(j), big);
  EXPECT_EQ(palw::integer_from_json(Json(-5)), -5);
  EXPECT_THROW(palw::integer_from_json(Json("12x")), std::invalid_argument);
}

TEST(JsonIoProperty, WreathRoundTrip) {
  gen::Rng rng(91);
  for (const char* base : {"Z", "Zm:5"}) {
    for (int r = 1; r <= 3; ++r) {
      const palw::WreathGroup g(palw::make_base_group(base), r);
      for (int trial = 0; trial < 20; ++trial) {
        const auto e = gen::random_wreath_element(rng, g, 3, 9, 3);
        const Json j = palw::wreath_element_to_json(g, e);
        auto [g2, e2] = palw::wreath_element_from_json(Json::parse(j.dump()));
        EXPECT_EQ(g2->base().name(), g.base().name());
        EXPECT_EQ(e2, e);
        const Json word_form{{"base", base}, {"r", r},
                             {"word", palw::format_word(g.element_to_word(e), g.alphabet())}};
        EXPECT_EQ(palw::wreath_element_from_json(word_form).second, e);
      }
    }
  }
}

TEST(JsonIoProperty, FlowRoundTrip) {
  gen::Rng rng(92);
  for (int trial = 0; trial < 50; ++trial) {
    const int r = static_cast<int>(gen::uniform(rng, 1, 3));
    const palw::FlowElement g = gen::random_flow_element(rng, std::max(r, 2), 3, 3, 3);
    EXPECT_EQ(palw::flow_from_json(palw::flow_to_json(g)), g);
    const palw::FlowElement h = gen::random_flow_element(rng, std::max(r, 2), 3, 3, 0);
    const Json squares = palw::squares_to_json(palw::circulation_to_squares(h));
    EXPECT_EQ(palw::squares_to_element(palw::squares_from_json(squares)), h);
    EXPECT_EQ(palw::flow_from_json(Json{{"r", h.rank}, {"squares", squares["squares"]}}), h);
  }
}

TEST(JsonIo, FlowInputIsChecked) {
  EXPECT_THROW(palw::flow_from_json(Json::parse(
                   R"({"r":2,"shift":[0,0],"edges":[{"pos":[0,0],"axis":1,"val":1}]})")),
               std::invalid_argument);
  EXPECT_THROW(palw::flow_from_json(Json::parse(
                   R"({"r":2,"shift":[0,0],"edges":[{"pos":[0,0],"axis":3,"val":1}]})")),
               std::invalid_argument);
  EXPECT_THROW(palw::flow_from_json(Json::parse(R"({"r":0,"word":""})")), std::invalid_argument);
}

TEST(Hash, FnvReferenceValues) {
  EXPECT_EQ(palw::fnv1a_hex(""), "cbf29ce484222325");
  EXPECT_EQ(palw::fnv1a_hex("a"), "af63dc4c8601ec8c");
}

Json wreath_cert(const char* word, int r, const char* kind) {
  const palw::WreathGroup g(palw::make_base_group("Z"), r);
  const auto e = g.evaluate(palw::parse_word(word, g.alphabet()));
  const auto fz = std::string(kind) == "wreath" ? palw::factorize_wreath(g, e)
                                                : palw::factorize_wreath_z(g, e);
  return palw::wreath_certificate(g, fz, kind, Json{{"seed", 0}});
}

TEST(Certificate, WreathVerifiesAndDetectsTampering) {
  Json cert = wreath_cert("a x1 a a x2 A x1", 2, "wreath");
  EXPECT_TRUE(palw::verify_certificate(cert).ok);
  EXPECT_EQ(cert["tool_version"], palw::kToolVersion);

  Json bad_factor = cert;
  bad_factor["factors"][0] = "a x1";
  EXPECT_FALSE(palw::verify_certificate(bad_factor).ok);

  Json bad_element = cert;
  bad_element["element"]["shift"][0] = 7;
  EXPECT_FALSE(palw::verify_certificate(bad_element).ok);

  Json bad_bound = cert;
  bad_bound["bound"] = 100;
  EXPECT_FALSE(palw::verify_certificate(bad_bound).ok);

  Json bad_hash = cert;
  bad_hash["verification"]["product_hash"] = "0000000000000000";
  EXPECT_FALSE(palw::verify_certificate(bad_hash).ok);

  Json missing = cert;
  missing.erase("factors");
  EXPECT_THROW(palw::verify_certificate(missing), std::invalid_argument);
}

TEST(Certificate, RefinedWreath) {
  EXPECT_TRUE(palw::verify_certificate(wreath_cert("a t a a t t A", 1, "wreath-z")).ok);
}

TEST(Certificate, Metabelian) {
  const palw::FlowElement g =
      palw::flow_evaluate(palw::parse_word("x1 x2 X1 X2 x3 x3 x1", palw::metabelian_alphabet(3)), 3);
  Json cert = palw::metabelian_certificate(palw::factorize_metabelian(g), Json::object());
  EXPECT_TRUE(palw::verify_certificate(cert).ok);
  EXPECT_EQ(cert["constants"]["commutator_pairs"], 3);
  EXPECT_EQ(cert["constants"]["m_as_printed"], 6);
  cert["count"] = cert["count"].get<int>() + 1;
  EXPECT_FALSE(palw::verify_certificate(cert).ok);
}

TEST(Certificate, WidthThree) {
  const auto w = palw::certify_width_three(palw::make_lamp_element({{0, 1}, {1, 2}}, 3), 6);
  Json cert = palw::width3_certificate(w, Json::object());
  EXPECT_TRUE(palw::verify_certificate(cert).ok);
  EXPECT_EQ(cert["scan"]["p_lo"], -6);
  cert["verdicts"][0]["result"] = "decomposition";
  EXPECT_FALSE(palw::verify_certificate(cert).ok);
}

TEST(Certificate, Rewrites) {
  const palw::Alphabet a = palw::metabelian_alphabet(2);
  const auto comm = palw::commutator_three_palindromes(palw::parse_word("x1 x2", a),
                                                       palw::parse_word("X2", a));
  EXPECT_TRUE(palw::verify_certificate(
                  palw::rewrite_certificate("rewrite-commutator", comm, a, 0, Json::object()))
                  .ok);
  const auto conj = palw::conjugate_factorization(palw::parse_word("x2", a), comm);
  Json cert = palw::rewrite_certificate("rewrite-conjugate", conj, a, comm.count(), Json::object());
  EXPECT_TRUE(palw::verify_certificate(cert).ok);
  cert["target"] = "x1";
  EXPECT_FALSE(palw::verify_certificate(cert).ok);
}

TEST(Certificate, UnknownKindIsMalformed) {
  EXPECT_THROW(palw::verify_certificate(Json{{"kind", "other"}}), std::invalid_argument);
}

}  // namespace
