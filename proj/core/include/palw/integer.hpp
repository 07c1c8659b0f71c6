#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace palw {

/// Unbounded exact integer used for lamp states, flow values and
/// coefficient functions.
using Integer = boost::multiprecision::cpp_int;

/// Narrowing conversion; throws std::overflow_error when `v` does not fit.
std::int64_t to_int64(const Integer& v);

std::string to_string(const Integer& v);

}  // namespace palw
