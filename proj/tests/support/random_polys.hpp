// Deterministic random generators shared across the test suites.
#ifndef FINDET_TESTS_RANDOM_POLYS_HPP
#define FINDET_TESTS_RANDOM_POLYS_HPP

#include <random>
#include <vector>

#include "findet/parser.hpp"
#include "findet/ring.hpp"

namespace findet::testsupport {

using Rng = std::mt19937_64;

// Random polynomial with integer coefficients in [-bound, bound], total
// degree <= maxdeg, about `terms` draws (duplicates merge).
inline Poly random_poly(const RingPtr& ring, Rng& rng, int maxdeg, int terms,
                        int bound = 3, bool zero_constant = false) {
    std::uniform_int_distribution<int> coeff(-bound, bound);
    std::uniform_int_distribution<int> deg(zero_constant ? 1 : 0, maxdeg);
    const std::size_t p = ring->nvars();
    std::vector<Poly::Term> ts;
    for (int t = 0; t < terms; ++t) {
        int d = deg(rng);
        std::vector<std::uint32_t> e(p, 0);
        std::uniform_int_distribution<std::size_t> pick(0, p - 1);
        for (int k = 0; k < d; ++k) e[pick(rng)] += 1;
        int c = coeff(rng);
        if (c == 0) continue;
        ts.push_back({Scalar::from_int(c, ring->prime()), Monomial(e)});
    }
    return Poly::from_terms(ring.get(), MonomialOrder::degrevlex(),
                            std::move(ts));
}

inline Poly random_nonzero_poly(const RingPtr& ring, Rng& rng, int maxdeg,
                                int terms, int bound = 3,
                                bool zero_constant = false) {
    for (;;) {
        Poly f = random_poly(ring, rng, maxdeg, terms, bound, zero_constant);
        if (!f.is_zero()) return f;
    }
}

}  // namespace findet::testsupport

#endif
