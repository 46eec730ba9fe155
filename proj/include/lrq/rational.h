#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace lrq {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational &r) {
  return r.str();
}

inline double to_double(const Rational &r) {
  return static_cast<double>(r);
}

} // namespace lrq
