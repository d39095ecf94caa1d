// Monomial orders. degrevlex / lex are global well-orders (1 smallest),
// local_ds is the negative-degree reverse-lex local order (1 largest),
// block(k) eliminates the first k variables.
#ifndef FINDET_ORDER_HPP
#define FINDET_ORDER_HPP

#include <string>

#include "findet/monomial.hpp"

namespace findet {

struct MonomialOrder {
    enum class Kind { degrevlex, lex, local_ds, block };

    Kind kind = Kind::degrevlex;
    int elim = 0;  // block only: number of leading variables eliminated

    static MonomialOrder degrevlex() { return {Kind::degrevlex, 0}; }
    static MonomialOrder lex() { return {Kind::lex, 0}; }
    static MonomialOrder local_ds() { return {Kind::local_ds, 0}; }
    static MonomialOrder block(int elim_count) {
        return {Kind::block, elim_count};
    }

    bool global() const { return kind != Kind::local_ds; }

    // +1 if a > b, -1 if a < b, 0 if equal.
    int cmp(const Monomial& a, const Monomial& b) const;

    bool greater(const Monomial& a, const Monomial& b) const {
        return cmp(a, b) > 0;
    }

    bool operator==(const MonomialOrder& o) const {
        return kind == o.kind && elim == o.elim;
    }
    bool operator!=(const MonomialOrder& o) const { return !(*this == o); }

    std::string name() const;
};

}  // namespace findet

#endif
