// Exact multivariate polynomials in canonical form: terms strictly
// descending under the polynomial's monomial order, no zero coefficients.
#ifndef FINDET_POLY_HPP
#define FINDET_POLY_HPP

#include <string>
#include <vector>

#include "findet/monomial.hpp"
#include "findet/order.hpp"
#include "findet/scalar.hpp"

namespace findet {

class RingSpec;

// Polynomials hold a non-owning pointer to their ring; rings are created
// through shared_ptr factories and must outlive the polynomials built
// over them.
class Poly {
public:
    struct Term {
        Scalar c;
        Monomial m;
    };

    Poly() : ring_(nullptr) {}

    static Poly zero(const RingSpec* R);
    static Poly zero(const RingSpec* R, MonomialOrder o);
    static Poly constant(const RingSpec* R, const Scalar& c);
    static Poly constant(const RingSpec* R, long v);
    static Poly variable(const RingSpec* R, std::size_t i,
                         std::uint32_t e = 1);
    static Poly term(const RingSpec* R, const Scalar& c, Monomial m);
    // Normalizes: sorts under o, merges duplicates, drops zeros.
    static Poly from_terms(const RingSpec* R, MonomialOrder o,
                           std::vector<Term> ts);

    const RingSpec* ring() const { return ring_; }
    const MonomialOrder& order() const { return ord_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t nterms() const { return terms_.size(); }

    const Term& lt() const { return terms_.front(); }
    const Monomial& lm() const { return terms_.front().m; }
    const Scalar& lc() const { return terms_.front().c; }

    // Max / min total degree over terms; -1 for the zero polynomial.
    int total_degree() const;
    int ord_degree() const;
    Scalar constant_term() const;
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one());
    }

    Poly with_order(MonomialOrder o) const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    Poly scaled(const Scalar& c) const;
    Poly monic() const;
    Poly mul_term(const Scalar& c, const Monomial& m) const;
    Poly pow(unsigned e) const;

    Poly derivative(std::size_t var) const;
    Poly jet(int k) const;
    Scalar eval(const std::vector<Scalar>& pt) const;
    // Substitute images[i] for variable i; images live over `target`.
    Poly subst(const RingSpec* target,
               const std::vector<Poly>& images) const;
    // Re-index variables into `target`: old variable i becomes target
    // variable var_map[i]; SIZE_MAX (or missing) entries drop the
    // variable, whose exponent must then vanish (throws otherwise).
    Poly remap_vars(const RingSpec* target,
                    const std::vector<std::size_t>& var_map) const;

    bool equals(const Poly& o) const;  // order-insensitive
    std::string str() const;

private:
    const RingSpec* ring_;
    MonomialOrder ord_;
    std::vector<Term> terms_;

    void normalize();
    friend class PolyBuilder;
};

bool same_ring(const RingSpec* a, const RingSpec* b);
void check_same_ring(const RingSpec* a, const RingSpec* b);

}  // namespace findet

#endif
