#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace torrigid {

using Integer = mpz_class;
using Rational = mpq_class;

using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input (dimension mismatch, bad file, ...).
class InputError : public Error {
public:
    using Error::Error;
};

/// Input is well formed but outside what the algorithms cover.
class UnsupportedError : public Error {
public:
    using Error::Error;
};

inline Integer gcd(const Integer& a, const Integer& b)
{
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Integer lcm(const Integer& a, const Integer& b)
{
    Integer l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

/// Floor division of rationals to an integer.
inline Integer floor(const Rational& q)
{
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline Integer ceil(const Rational& q)
{
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

/// Floor division a / b for b != 0.
inline Integer floor_div(const Integer& a, const Integer& b)
{
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline long to_long(const Integer& x)
{
    if (!x.fits_slong_p())
        throw UnsupportedError("integer " + x.get_str() + " does not fit in a machine word");
    return x.get_si();
}

/// gcd of all entries; 0 for the zero vector.
Integer content(const IntVector& v);

/// Divide by the content; the zero vector is returned unchanged.
IntVector primitive(const IntVector& v);

Integer dot(const IntVector& a, const IntVector& b);
Rational dot(const RatVector& a, const IntVector& b);

IntVector to_integer_vector(const std::vector<long>& v);
std::vector<long> to_long_vector(const IntVector& v);
RatVector to_rational(const IntVector& v);

/// Smallest positive multiple of a rational vector that is integral and primitive.
IntVector clear_denominators(const RatVector& v);

std::string to_string(const IntVector& v);

} // namespace torrigid
