#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dkc {

using Integer = mpz_class;
/// Exact rational scalar. mpq_class keeps values canonical (lowest terms, positive denominator).
using Scalar = mpq_class;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
public:
    using Error::Error;
};

Scalar make_scalar(long num, long den = 1);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Scalar& s);
std::string to_string(const Integer& z);

/// Accepts "p", "-p", "p/q"; throws Error on malformed input or zero denominator.
Scalar parse_scalar(std::string_view text);

/// Bit size of numerator plus denominator; used as the pivot cost in elimination.
std::size_t bit_size(const Scalar& s);
std::size_t bit_size(const Integer& z);

}  // namespace dkc
