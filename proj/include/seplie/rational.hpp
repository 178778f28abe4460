#ifndef SEPLIE_RATIONAL_HPP
#define SEPLIE_RATIONAL_HPP

#include <gmpxx.h>
#include <string>
#include <vector>

#include "seplie/errors.hpp"

namespace seplie {

using Int = mpz_class;
using Rat = mpq_class;

// Canonical "p/q" with gcd(p,q)=1, q>0; plain "p" when q=1.
inline std::string rat_str(const Rat& r)
{
    return r.get_str();
}

inline Rat parse_rat(const std::string& s)
{
    mpq_class r;
    if (r.set_str(s, 10) != 0)
        throw ParseError("invalid rational: '" + s + "'");
    if (sgn(r.get_den()) == 0)
        throw ParseError("zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
}

using QVec = std::vector<Rat>;

inline bool is_zero(const QVec& v)
{
    for (const auto& x : v)
        if (sgn(x) != 0)
            return false;
    return true;
}

// v += c*w, skipping zero entries of w
inline void axpy(QVec& v, const Rat& c, const QVec& w)
{
    for (size_t j = 0; j < w.size(); ++j)
        if (sgn(w[j]) != 0)
            v[j] += c * w[j];
}

}  // namespace seplie

#endif
