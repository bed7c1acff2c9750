#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>

namespace dsq {

using BigInt = boost::multiprecision::cpp_int;

// Exact count bound on n*n-board configurations: each square ranges over
// 8 pieces x 2 colors + empty = 17 occupancies times 3 special terrains + 1
// = 68 states, so the bound is 68^(n^2).
inline BigInt state_upper_bound(long n) {
    if (n <= 0) throw std::domain_error("state_upper_bound requires n >= 1");
    BigInt base = 68;
    return boost::multiprecision::pow(base, static_cast<unsigned>(n * n));
}

}  // namespace dsq
