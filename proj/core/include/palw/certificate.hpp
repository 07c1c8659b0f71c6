#pragma once

#include <string>

#include "palw/identities.hpp"
#include "palw/json_io.hpp"
#include "palw/lamplighter.hpp"
#include "palw/metabelian_factor.hpp"
#include "palw/wreath_factor.hpp"

namespace palw {

inline constexpr const char* kToolVersion = "0.1.0";

/// kind is "wreath" or "wreath-z".
Json wreath_certificate(const WreathGroup& group, const WreathFactorization& fz,
                        const std::string& kind, const Json& config);
Json metabelian_certificate(const MetabelianFactorization& fz, const Json& config);
Json width3_certificate(const TwoPalWitness& w, const Json& config);
Json two_pal_verdict_to_json(const TwoPalVerdict& v);
/// kind is "rewrite-commutator" or "rewrite-conjugate"; `input_count` is
/// the nonempty count of the list being conjugated (ignored otherwise).
Json rewrite_certificate(const std::string& kind, const PalindromicFactorList& list,
                         const Alphabet& alphabet, std::size_t input_count, const Json& config);

struct VerifyReport {
  bool ok = true;
  std::string reason;
};

/// Re-evaluates the certificate from its embedded input. Malformed
/// certificates throw std::invalid_argument.
VerifyReport verify_certificate(const Json& cert);

}  // namespace palw
