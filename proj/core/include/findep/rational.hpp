#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace findep {

/// Arbitrary-precision integer (GMP).
using BigInt = mpz_class;

/// Exact rational in lowest terms with a positive denominator.
///
/// gmpxx keeps arithmetic results canonical; values built from a raw
/// numerator/denominator pair must go through make_rational().
using BigRational = mpq_class;

BigRational make_rational(const BigInt& num, const BigInt& den);
BigRational make_rational(std::int64_t num, std::int64_t den = 1);

/// Parses "a/b", "a" or "-a/b". Throws std::invalid_argument on malformed
/// input or a zero denominator.
BigRational parse_rational(std::string_view text);

/// Always "numerator/denominator", e.g. "0/1", "-21/3125".
std::string to_string(const BigRational& r);
std::string to_string(const BigInt& n);

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);
BigInt pow_int(const BigInt& base, unsigned exp);
BigRational pow_rational(const BigRational& base, unsigned exp);

}  // namespace findep
