#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace zsum {

// Exact integer used by the lattice / normal-form code, where coefficient
// growth is unbounded.  Group coordinates stay in long long.
using Int = boost::multiprecision::cpp_int;

inline long long to_ll(const Int& x) {
    if (x > std::numeric_limits<long long>::max() ||
        x < std::numeric_limits<long long>::min())
        throw std::overflow_error("integer does not fit in 64 bits: " + x.str());
    return static_cast<long long>(x);
}

// floor division, needed for reduction into [0, pivot)
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if (a % b != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class BudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace zsum
