#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace urm {

/// Exact bound arithmetic. Comparisons never go through floating point.
using Rational = boost::rational<std::int64_t>;

inline std::int64_t ceil(const Rational& r) {
    std::int64_t q = r.numerator() / r.denominator();
    if (r.numerator() % r.denominator() != 0 && r.numerator() > 0) ++q;
    return q;
}

inline std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

inline double to_double(const Rational& r) { return boost::rational_cast<double>(r); }

}  // namespace urm
