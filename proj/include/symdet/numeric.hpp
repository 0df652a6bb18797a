#ifndef SYMDET_NUMERIC_HPP
#define SYMDET_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace symdet {

// Exact arithmetic everywhere; no floating point anywhere in the library.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

inline Int pow2(int e) {
    Int r = 1;
    return r << e;
}

} // namespace symdet

#endif
