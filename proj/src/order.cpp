#include "findet/order.hpp"

namespace findet {

namespace {

// degrevlex on the index range [lo, hi): higher degree wins, ties broken
// reverse-lexicographically (last difference, smaller exponent wins).
int cmp_drl_range(const Monomial& a, const Monomial& b, std::size_t lo,
                  std::size_t hi) {
    long da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) {
        da += a[i];
        db += b[i];
    }
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t i = hi; i-- > lo;) {
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
}

}  // namespace

int MonomialOrder::cmp(const Monomial& a, const Monomial& b) const {
    const std::size_t n = a.nvars();
    switch (kind) {
        case Kind::degrevlex:
            return cmp_drl_range(a, b, 0, n);
        case Kind::lex:
            for (std::size_t i = 0; i < n; ++i)
                if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
            return 0;
        case Kind::local_ds: {
            if (a.deg() != b.deg()) return a.deg() < b.deg() ? 1 : -1;
            for (std::size_t i = n; i-- > 0;)
                if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
            return 0;
        }
        case Kind::block: {
            std::size_t k = static_cast<std::size_t>(elim);
            if (int c = cmp_drl_range(a, b, 0, k)) return c;
            return cmp_drl_range(a, b, k, n);
        }
    }
    return 0;
}

std::string MonomialOrder::name() const {
    switch (kind) {
        case Kind::degrevlex: return "degrevlex";
        case Kind::lex: return "lex";
        case Kind::local_ds: return "local_ds";
        case Kind::block: return "block(" + std::to_string(elim) + ")";
    }
    return "?";
}

}  // namespace findet
