// Dense exponent vectors. The variable count is small (p <= ~10), so a
// plain vector beats any sparse encoding here.
#ifndef FINDET_MONOMIAL_HPP
#define FINDET_MONOMIAL_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace findet {

class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : e_(nvars, 0), deg_(0) {}
    explicit Monomial(std::vector<std::uint32_t> e)
        : e_(std::move(e)),
          deg_(std::accumulate(e_.begin(), e_.end(), std::uint32_t{0})) {}

    std::size_t nvars() const { return e_.size(); }
    std::uint32_t deg() const { return deg_; }
    std::uint32_t operator[](std::size_t i) const { return e_[i]; }
    const std::vector<std::uint32_t>& exponents() const { return e_; }
    bool is_one() const { return deg_ == 0; }

    bool divides(const Monomial& o) const {
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > o.e_[i]) return false;
        return true;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
        r.deg_ += o.deg_;
        return r;
    }

    // Requires o | *this.
    Monomial operator/(const Monomial& o) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < e_.size(); ++i) {
            if (o.e_[i] > r.e_[i]) throw std::domain_error("monomial division");
            r.e_[i] -= o.e_[i];
        }
        r.deg_ -= o.deg_;
        return r;
    }

    Monomial lcm(const Monomial& o) const {
        Monomial r(*this);
        r.deg_ = 0;
        for (std::size_t i = 0; i < e_.size(); ++i) {
            r.e_[i] = std::max(e_[i], o.e_[i]);
            r.deg_ += r.e_[i];
        }
        return r;
    }

    bool coprime(const Monomial& o) const {
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] && o.e_[i]) return false;
        return true;
    }

    Monomial mul_var(std::size_t i, std::uint32_t k = 1) const {
        Monomial r(*this);
        r.e_[i] += k;
        r.deg_ += k;
        return r;
    }

    bool operator==(const Monomial& o) const { return e_ == o.e_; }
    bool operator!=(const Monomial& o) const { return e_ != o.e_; }

    struct Hash {
        std::size_t operator()(const Monomial& m) const {
            std::size_t h = 1469598103934665603ull;
            for (auto x : m.e_) {
                h ^= x;
                h *= 1099511628211ull;
            }
            return h;
        }
    };

private:
    std::vector<std::uint32_t> e_;
    std::uint32_t deg_ = 0;
};

}  // namespace findet

#endif
