#ifndef CTEL_RAT_HPP
#define CTEL_RAT_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace ctel {

// Arbitrary-precision rational. mpq_class keeps gcd(num,den)=1 and den>0
// after canonicalize(); every constructor below returns canonical values.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long n) { return Rat(n); }
inline Rat rat(long n, long d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    Rat q(n, d);
    q.canonicalize();
    return q;
}

inline Rat rat_from_string(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline std::string rat_to_string(const Rat& q) { return q.get_str(); }

// Thrown by parameter evaluation when a denominator vanishes at the chosen
// point; callers resample the point.
struct BadPointError : std::runtime_error {
    BadPointError() : std::runtime_error("evaluation point hits a zero denominator") {}
};

} // namespace ctel

#endif
