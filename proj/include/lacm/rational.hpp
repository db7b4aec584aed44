#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace lacm {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Int& v) { return v.str(); }
inline std::string to_string(const Rational& v) {
  return boost::multiprecision::numerator(v).str() +
         (boost::multiprecision::denominator(v) == 1
              ? std::string()
              : "/" + boost::multiprecision::denominator(v).str());
}

}  // namespace lacm
