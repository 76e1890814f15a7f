#ifndef MIXRES_RATIONAL_HPP
#define MIXRES_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mixres {

/* Exact rational scalar. mpq_class keeps values in lowest terms after
   arithmetic as long as the inputs are canonical, so every constructor
   here canonicalizes. */
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat rat_parse(const std::string& text) {
    Rat r;
    if (r.set_str(text, 10) != 0)
        throw std::invalid_argument("unparsable rational: " + text);
    r.canonicalize();
    return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline Rat rat_factorial(unsigned n) {
    Int f = 1;
    for (unsigned k = 2; k <= n; ++k) f *= k;
    return Rat(f);
}

inline Int binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    Int b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

}  // namespace mixres

#endif
