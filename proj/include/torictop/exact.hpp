#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace torictop {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using IntVec = std::vector<std::int64_t>;

/// Binomial coefficient C(n, k); zero outside 0 <= k <= n.
Integer binomial(long n, long k);

/// Same, narrowed to int64; throws std::overflow_error when it does not fit.
std::int64_t binomial64(long n, long k);

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t to_int64(const Integer& v);

std::int64_t gcd_of(std::span<const std::int64_t> v);
bool is_primitive(std::span<const std::int64_t> v);
/// Divides by the gcd of the entries; the zero vector is returned unchanged.
IntVec primitive_part(std::span<const std::int64_t> v);

bool is_integral(const Rational& r);
Integer floor_of(const Rational& r);
Integer ceil_of(const Rational& r);

/// "3", "-1/2".
std::string to_string(const Rational& r);
/// Accepts "3", "-7", "1/2", "-4/6".
Rational parse_rational(std::string_view text);

}  // namespace torictop
