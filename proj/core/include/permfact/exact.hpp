#pragma once

// Exact arithmetic for the whole library: arbitrary-precision integers and
// reduced rationals. No floating point is used anywhere; any division that
// must be exact is checked and throws on a remainder.

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace permfact {

using Int = mpz_class;
using Rat = mpq_class;

struct domain_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when an internal identity fails (e.g. a character sum that must be
// an integer is not). These indicate bugs, never bad user input.
struct consistency_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Rat make_rat(Int num, Int den) {
    if (den == 0) throw domain_error("zero denominator");
    Rat r(std::move(num), std::move(den));
    r.canonicalize();
    return r;
}

inline Int factorial(long n) {
    if (n < 0) throw domain_error("factorial of negative integer");
    Int r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

// binomial(n, k) for n >= 0, zero outside 0 <= k <= n.
inline Int binomial(long n, long k) {
    if (n < 0) throw domain_error("binomial with negative upper index");
    if (k < 0 || k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return r;
}

// Falling power (x)_m = x(x-1)...(x-m+1), extended by (x)_{-1} = 1/(x+1).
// Satisfies (x)_m (x-m) = (x)_{m+1} for all m >= -1.
inline Rat falling(long x, long m) {
    if (m < -1) throw domain_error("falling power needs m >= -1");
    if (m == -1) {
        if (x == -1) throw domain_error("(x)_{-1} undefined at x = -1");
        return make_rat(1, Int(x) + 1);
    }
    Int r = 1;
    for (long s = 0; s < m; ++s) r *= Int(x - s);
    return Rat(r);
}

// Integer falling power for m >= 0.
inline Int falling_int(long x, long m) {
    if (m < 0) throw domain_error("falling_int needs m >= 0");
    Int r = 1;
    for (long s = 0; s < m; ++s) r *= Int(x - s);
    return r;
}

// Signless Stirling number of the first kind: permutations of [n] with
// exactly m cycles. Row-wise recurrence c(n,m) = c(n-1,m-1) + (n-1)c(n-1,m).
Int stirling_unsigned(long n, long m);

// q = a / b with an exactness check.
inline Int exact_div(const Int& a, const Int& b, const char* what) {
    if (b == 0) throw consistency_error(std::string("exact_div by zero: ") + what);
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (r != 0)
        throw consistency_error(std::string("inexact division: ") + what);
    return q;
}

// A rational known to be integral.
inline Int rat_to_int(const Rat& q, const char* what) {
    if (q.get_den() != 1)
        throw consistency_error(std::string("non-integer rational: ") + what);
    return q.get_num();
}

}  // namespace permfact
