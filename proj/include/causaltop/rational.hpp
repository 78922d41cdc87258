#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "causaltop/errors.hpp"

namespace causaltop {

// Arbitrary-precision rational. cpp_rational keeps the denominator positive
// and the fraction in lowest terms, which is exactly the canonical form the
// wire format requires.
using Rat = boost::multiprecision::cpp_rational;

// Canonical "num/den" in lowest terms; zero is "0/1".
inline std::string rat_to_string(const Rat& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

// Accepts "num/den" or a bare integer "num".
inline Rat rat_from_string(std::string_view s) {
  const auto slash = s.find('/');
  try {
    if (slash == std::string_view::npos) {
      return Rat(boost::multiprecision::cpp_int(std::string(s)));
    }
    boost::multiprecision::cpp_int num{std::string(s.substr(0, slash))};
    boost::multiprecision::cpp_int den{std::string(s.substr(slash + 1))};
    if (den == 0) throw ValidationError("rational with zero denominator: " + std::string(s));
    return Rat(num, den);
  } catch (const std::runtime_error& e) {
    throw ValidationError("cannot parse rational '" + std::string(s) + "': " + e.what());
  }
}

}  // namespace causaltop
