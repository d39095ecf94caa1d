// Basis engine: Buchberger for global orders (reduced Groebner bases) and
// Mora's tangent-cone algorithm for the local order (standard bases).
#ifndef FINDET_GROBNER_HPP
#define FINDET_GROBNER_HPP

#include <vector>

#include "findet/poly.hpp"

namespace findet {

struct BasisCertificate {
    std::vector<Poly> basis;
    MonomialOrder order;
    long s_pairs_reduced = 0;  // diagnostic: pairs actually reduced
};

// Reduced Groebner basis under a global order. Deterministic: fixed
// selection strategy and tie-breaking by input position.
BasisCertificate buchberger(const std::vector<Poly>& gens,
                            MonomialOrder order);

// Standard basis under local_ds via Mora normal form with ecart-minimal
// reducer selection; minimalized and lead-coefficient normalized.
BasisCertificate standard_basis(const std::vector<Poly>& gens);

// Unique remainder under a global order (full tail reduction).
Poly normal_form(const Poly& f, const std::vector<Poly>& basis,
                 MonomialOrder order);

// Mora weak normal form: u*f = sum q_i b_i + result for a unit u; zero
// result decides membership in the localized ideal.
Poly mora_normal_form(const Poly& f, const std::vector<Poly>& basis);

// Buchberger self-certification: every S-polynomial of the basis reduces
// to zero (Mora reduction for local orders).
bool basis_self_check(const BasisCertificate& cert);

// Exact division f / g, asserting zero remainder.
Poly exact_divide(const Poly& f, const Poly& g);

}  // namespace findet

#endif
