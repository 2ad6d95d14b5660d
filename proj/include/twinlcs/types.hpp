#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace twinlcs {

/// Letters are 1-based: a word over alphabet size k uses letters 1..k.
using Letter = std::uint32_t;

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Thrown when an exact computation would exceed its configured budget
/// (alignment cells, enumeration size, search nodes).
class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// "p/q" (or "p" when q == 1).
std::string to_string(const Rational& value);

} // namespace twinlcs
