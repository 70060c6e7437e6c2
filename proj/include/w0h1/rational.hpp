#ifndef W0H1_RATIONAL_HPP
#define W0H1_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace w0h1 {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number; always stored reduced with positive denominator.
using Rational = boost::multiprecision::cpp_rational;

struct validation_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct computation_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Renders "p/q", or just "p" when the denominator is 1.
inline std::string to_string(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

/// Parses "p" or "p/q" with optional sign. Rejects q = 0 and trailing junk.
inline Rational parse_rational(std::string_view s) {
  std::string str(s);
  const auto slash = str.find('/');
  BigInt num, den = 1;
  try {
    if (slash == std::string::npos) {
      num = BigInt(str);
    } else {
      num = BigInt(str.substr(0, slash));
      den = BigInt(str.substr(slash + 1));
    }
  } catch (const std::runtime_error&) {
    throw validation_error("malformed rational literal: " + str);
  }
  if (den == 0) throw validation_error("rational with zero denominator: " + str);
  return Rational(num, den);
}

}  // namespace w0h1

#endif  // W0H1_RATIONAL_HPP
