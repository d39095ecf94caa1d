#include "findet/scalar.hpp"

namespace findet {

namespace {

std::int64_t mod_reduce(std::int64_t v, std::uint32_t q) {
    std::int64_t r = v % static_cast<std::int64_t>(q);
    if (r < 0) r += q;
    return r;
}

std::int64_t mod_inverse(std::int64_t a, std::uint32_t q) {
    // Extended Euclid; a in [1, q).
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = q, new_r = a;
    while (new_r != 0) {
        std::int64_t quot = r / new_r;
        std::int64_t tmp = t - quot * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - quot * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) throw std::domain_error("not invertible mod q");
    return mod_reduce(t, q);
}

}  // namespace

Scalar Scalar::rational(long num, long den) {
    if (den == 0) throw std::domain_error("zero denominator");
    Scalar s;
    s.prime_ = 0;
    s.rat_ = mpq_class(num, den);
    s.rat_.canonicalize();
    return s;
}

Scalar Scalar::from_mpq(mpq_class v) {
    Scalar s;
    s.prime_ = 0;
    v.canonicalize();
    s.rat_ = std::move(v);
    return s;
}

Scalar Scalar::fp(long v, std::uint32_t q) {
    Scalar s;
    s.prime_ = q;
    s.fp_ = mod_reduce(v, q);
    return s;
}

bool Scalar::is_zero() const {
    return prime_ ? fp_ == 0 : rat_ == 0;
}

bool Scalar::is_one() const {
    return prime_ ? fp_ == 1 : rat_ == 1;
}

int Scalar::sgn() const {
    if (prime_) return fp_ == 0 ? 0 : 1;
    return ::sgn(rat_);
}

Scalar Scalar::operator-() const {
    Scalar s(*this);
    if (prime_)
        s.fp_ = fp_ == 0 ? 0 : static_cast<std::int64_t>(prime_) - fp_;
    else
        s.rat_ = -rat_;
    return s;
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same(o);
    Scalar s(*this);
    if (prime_)
        s.fp_ = mod_reduce(fp_ + o.fp_, prime_);
    else
        s.rat_ = rat_ + o.rat_;
    return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_same(o);
    Scalar s(*this);
    if (prime_)
        s.fp_ = mod_reduce(fp_ - o.fp_, prime_);
    else
        s.rat_ = rat_ - o.rat_;
    return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same(o);
    Scalar s(*this);
    if (prime_)
        s.fp_ = mod_reduce(fp_ * o.fp_, prime_);
    else
        s.rat_ = rat_ * o.rat_;
    return s;
}

Scalar Scalar::operator/(const Scalar& o) const {
    return *this * o.inverse();
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    Scalar s(*this);
    if (prime_)
        s.fp_ = mod_inverse(fp_, prime_);
    else
        s.rat_ = 1 / rat_;
    return s;
}

Scalar Scalar::abs() const {
    if (prime_) return *this;
    Scalar s(*this);
    s.rat_ = ::abs(rat_);
    return s;
}

Scalar Scalar::pow(unsigned long e) const {
    Scalar acc = one(prime_);
    Scalar base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool Scalar::operator==(const Scalar& o) const {
    if (prime_ != o.prime_) return false;
    return prime_ ? fp_ == o.fp_ : rat_ == o.rat_;
}

std::string Scalar::str() const {
    if (prime_) return std::to_string(fp_);
    return rat_.get_str();
}

Scalar Scalar::to_fp(std::uint32_t q) const {
    if (prime_) {
        if (prime_ != q) throw std::invalid_argument("scalar field mismatch");
        return *this;
    }
    mpz_class num = rat_.get_num(), den = rat_.get_den();
    mpz_class qz(static_cast<unsigned long>(q));
    mpz_class nr = num % qz, dr = den % qz;
    std::int64_t n = mod_reduce(nr.get_si(), q);
    std::int64_t d = mod_reduce(dr.get_si(), q);
    if (d == 0) throw std::domain_error("denominator vanishes mod q");
    return fp(static_cast<long>(mod_reduce(n * mod_inverse(d, q), q)), q);
}

bool is_odd_prime(std::uint32_t q) {
    if (q < 3 || q % 2 == 0) return false;
    for (std::uint32_t d = 3; static_cast<std::uint64_t>(d) * d <= q; d += 2)
        if (q % d == 0) return false;
    return true;
}

}  // namespace findet
