#include "latemb/int_types.hpp"

namespace latemb {

Int rat_floor(const Rat& r) {
    Int num = boost::multiprecision::numerator(r);
    Int den = boost::multiprecision::denominator(r); // always > 0
    Int q = num / den;
    if (num % den != 0 && num < 0) --q;
    return q;
}

bool is_perfect_square(const Int& d) {
    if (d < 0) return false;
    Int r = boost::multiprecision::sqrt(d);
    return r * r == d;
}

} // namespace latemb
