// Exact field scalars: arbitrary-precision rationals, or elements of a
// prime field F_q (q an odd prime, fixed per ring).
#ifndef FINDET_SCALAR_HPP
#define FINDET_SCALAR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace findet {

// prime() == 0 means rational mode. In prime mode the value is kept
// reduced to [0, q).
class Scalar {
public:
    Scalar() : prime_(0), fp_(0) {}

    static Scalar rational(long num, long den = 1);
    static Scalar from_mpq(mpq_class v);
    static Scalar fp(long v, std::uint32_t q);
    static Scalar from_int(long v, std::uint32_t prime) {
        return prime == 0 ? rational(v) : fp(v, prime);
    }
    static Scalar zero(std::uint32_t prime) { return from_int(0, prime); }
    static Scalar one(std::uint32_t prime) { return from_int(1, prime); }

    std::uint32_t prime() const { return prime_; }
    bool is_zero() const;
    bool is_one() const;
    // Sign of the printed representative (always +1 in prime mode for
    // nonzero values).
    int sgn() const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    Scalar inverse() const;
    Scalar abs() const;
    Scalar pow(unsigned long e) const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // "3", "-1/2"; prime mode prints the representative in [0, q).
    std::string str() const;

    const mpq_class& rat() const { return rat_; }
    long fp_value() const { return fp_; }

    // Rational -> prime field reduction; throws if the denominator
    // vanishes mod q.
    Scalar to_fp(std::uint32_t q) const;

private:
    std::uint32_t prime_;
    std::int64_t fp_;
    mpq_class rat_;

    void check_same(const Scalar& o) const {
        if (prime_ != o.prime_)
            throw std::invalid_argument("scalar field mismatch");
    }
};

// q must be an odd prime; used when validating ring descriptors.
bool is_odd_prime(std::uint32_t q);

}  // namespace findet

#endif
