#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace latemb {

// All lattice arithmetic is exact. Gram entries grow under scaling and
// composition, so fixed-width integers are never used for form values.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using IntVec = std::vector<Int>;

inline int sign_of(const Int& v) { return v.sign(); }

/// Floor of an exact rational.
Int rat_floor(const Rat& r);

/// d >= 0 is a perfect square (0, 1, 4, 9, ...).
bool is_perfect_square(const Int& d);

} // namespace latemb
