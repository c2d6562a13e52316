#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace cubhom {

// Exact arbitrary-precision integer used for all matrix entries.
using Int = boost::multiprecision::cpp_int;

inline Int abs_int(const Int& v) { return v < 0 ? Int(-v) : v; }

inline Int gcd_int(Int a, Int b) {
  a = abs_int(a);
  b = abs_int(b);
  while (b != 0) {
    Int r = a % b;
    a = b;
    b = r;
  }
  return a;
}

}  // namespace cubhom
