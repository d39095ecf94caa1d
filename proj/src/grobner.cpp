#include "findet/grobner.hpp"

#include <algorithm>
#include <list>

#include "findet/budget.hpp"
#include "findet/ring.hpp"

namespace findet {

namespace {

Poly spoly(const Poly& f, const Poly& g) {
    const Monomial l = f.lm().lcm(g.lm());
    Poly a = f.mul_term(f.lc().inverse(), l / f.lm());
    Poly b = g.mul_term(g.lc().inverse(), l / g.lm());
    return a - b;
}

int ecart(const Poly& f) {
    return f.total_degree() - static_cast<int>(f.lm().deg());
}

struct Pair {
    std::size_t i, j;
    Monomial lcm;
};

// Gebauer-Moeller update: prunes the pending pair set and creates the
// pairs of the new element t. use_product drops coprime pairs entirely
// (valid for global and local orderings alike).
void gm_update(std::vector<Pair>& pending, const std::vector<Poly>& basis,
               std::size_t t) {
    const Monomial& lmt = basis[t].lm();
    struct Cand {
        std::size_t i;
        Monomial lcm;
        bool coprime;
        bool keep = false;
    };
    std::vector<Cand> cands;
    cands.reserve(t);
    for (std::size_t i = 0; i < t; ++i)
        cands.push_back(
            {i, basis[i].lm().lcm(lmt), basis[i].lm().coprime(lmt)});

    // M/F filtering: process in order; keep a candidate if it is coprime
    // or no other live candidate's lcm divides it.
    std::vector<bool> dropped(cands.size(), false);
    for (std::size_t a = 0; a < cands.size(); ++a) {
        if (cands[a].coprime) {
            cands[a].keep = true;
            continue;
        }
        bool divided = false;
        for (std::size_t b = 0; b < cands.size(); ++b) {
            if (b == a || dropped[b]) continue;
            if (b < a && !cands[b].keep) continue;
            if (cands[b].lcm.divides(cands[a].lcm) &&
                (cands[b].lcm != cands[a].lcm || b < a)) {
                divided = true;
                break;
            }
        }
        if (divided)
            dropped[a] = true;
        else
            cands[a].keep = true;
    }

    // B criterion on old pairs.
    std::vector<Pair> kept;
    kept.reserve(pending.size());
    for (auto& p : pending) {
        if (!lmt.divides(p.lcm) || basis[p.i].lm().lcm(lmt) == p.lcm ||
            basis[p.j].lm().lcm(lmt) == p.lcm)
            kept.push_back(std::move(p));
    }
    pending = std::move(kept);

    for (auto& c : cands)
        if (c.keep && !c.coprime)
            pending.push_back({c.i, t, std::move(c.lcm)});
}

// Selection: under a global order take the order-smallest lcm (normal
// strategy); under the local order the lowest total degree first.
std::size_t select_pair(const std::vector<Pair>& pending,
                        MonomialOrder order) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pending.size(); ++k) {
        const Monomial& a = pending[k].lcm;
        const Monomial& b = pending[best].lcm;
        int c;
        if (order.global())
            c = order.cmp(a, b);
        else
            c = a.deg() != b.deg() ? (a.deg() < b.deg() ? -1 : 1)
                                   : -order.cmp(a, b);
        if (c < 0) best = k;
    }
    return best;
}

Poly reduce_full(const Poly& f, const std::vector<Poly>& basis,
                 MonomialOrder order) {
    Poly h = f.with_order(order);
    std::vector<Poly::Term> rem;
    while (!h.is_zero()) {
        budget::checkpoint();
        bool reduced = false;
        for (const auto& g : basis) {
            if (g.is_zero()) continue;
            if (g.lm().divides(h.lm())) {
                h = h - g.mul_term(h.lc() / g.lc(), h.lm() / g.lm());
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            rem.push_back(h.lt());
            h = Poly::from_terms(
                h.ring(), order,
                std::vector<Poly::Term>(h.terms().begin() + 1,
                                        h.terms().end()));
        }
    }
    return Poly::from_terms(f.ring(), order, std::move(rem));
}

std::vector<Poly> seed_polys(const std::vector<Poly>& gens,
                             MonomialOrder order) {
    std::vector<Poly> seeds;
    for (const auto& g : gens)
        if (!g.is_zero()) seeds.push_back(g.with_order(order));
    std::stable_sort(seeds.begin(), seeds.end(),
                     [&order](const Poly& a, const Poly& b) {
                         int c = order.cmp(a.lm(), b.lm());
                         if (c != 0) return c < 0;
                         return a.nterms() < b.nterms();
                     });
    return seeds;
}

// Core loop shared by both algorithms; `nf` is the full reduction for
// global orders or the Mora weak normal form for local ones.
template <class NF>
BasisCertificate basis_loop(const std::vector<Poly>& gens,
                            MonomialOrder order, NF&& nf) {
    BasisCertificate cert;
    cert.order = order;
    std::vector<Poly>& G = cert.basis;
    std::vector<Pair> pending;

    for (const auto& f : seed_polys(gens, order)) {
        budget::checkpoint();
        Poly h = nf(f, G);
        if (h.is_zero()) continue;
        G.push_back(h.monic());
        gm_update(pending, G, G.size() - 1);
    }
    while (!pending.empty()) {
        budget::checkpoint();
        std::size_t k = select_pair(pending, order);
        Pair p = std::move(pending[k]);
        pending.erase(pending.begin() + static_cast<long>(k));
        Poly h = nf(spoly(G[p.i], G[p.j]), G);
        ++cert.s_pairs_reduced;
        if (h.is_zero()) continue;
        G.push_back(h.monic());
        gm_update(pending, G, G.size() - 1);
    }
    return cert;
}

void minimalize(std::vector<Poly>& G, MonomialOrder order) {
    std::stable_sort(G.begin(), G.end(),
                     [&order](const Poly& a, const Poly& b) {
                         return order.cmp(a.lm(), b.lm()) < 0;
                     });
    std::vector<Poly> out;
    for (auto& g : G) {
        bool redundant = false;
        for (const auto& kept : out)
            if (kept.lm().divides(g.lm())) {
                redundant = true;
                break;
            }
        if (!redundant) out.push_back(std::move(g));
    }
    G = std::move(out);
}

}  // namespace

BasisCertificate buchberger(const std::vector<Poly>& gens,
                            MonomialOrder order) {
    if (!order.global())
        throw std::invalid_argument("buchberger requires a global order");
    auto cert = basis_loop(gens, order, [order](const Poly& f,
                                                const std::vector<Poly>& G) {
        return reduce_full(f, G, order);
    });
    auto& G = cert.basis;
    minimalize(G, order);
    // tail-reduce for the unique reduced basis
    for (std::size_t i = 0; i < G.size(); ++i) {
        std::vector<Poly> others;
        for (std::size_t j = 0; j < G.size(); ++j)
            if (j != i) others.push_back(G[j]);
        G[i] = reduce_full(G[i], others, order).monic();
    }
    std::sort(G.begin(), G.end(), [&](const Poly& a, const Poly& b) {
        return cert.order.cmp(a.lm(), b.lm()) > 0;
    });
    return cert;
}

BasisCertificate standard_basis(const std::vector<Poly>& gens) {
    MonomialOrder order = MonomialOrder::local_ds();
    auto cert =
        basis_loop(gens, order, [](const Poly& f, const std::vector<Poly>& G) {
            return mora_normal_form(f, G);
        });
    minimalize(cert.basis, order);
    for (auto& g : cert.basis) g = g.monic();
    std::sort(cert.basis.begin(), cert.basis.end(),
              [&](const Poly& a, const Poly& b) {
                  return order.cmp(a.lm(), b.lm()) > 0;
              });
    return cert;
}

Poly normal_form(const Poly& f, const std::vector<Poly>& basis,
                 MonomialOrder order) {
    return reduce_full(f, basis, order);
}

Poly mora_normal_form(const Poly& f, const std::vector<Poly>& basis) {
    const MonomialOrder order = MonomialOrder::local_ds();
    Poly h = f.with_order(order);
    std::vector<Poly> T;
    T.reserve(basis.size());
    for (const auto& g : basis)
        if (!g.is_zero()) T.push_back(g.with_order(order));
    while (!h.is_zero()) {
        budget::checkpoint();
        int best = -1, best_ecart = 0;
        for (std::size_t i = 0; i < T.size(); ++i) {
            if (!T[i].lm().divides(h.lm())) continue;
            int e = ecart(T[i]);
            if (best < 0 || e < best_ecart) {
                best = static_cast<int>(i);
                best_ecart = e;
            }
        }
        if (best < 0) break;
        if (best_ecart > ecart(h)) T.push_back(h);
        const Poly& g = T[static_cast<std::size_t>(best)];
        h = h - g.mul_term(h.lc() / g.lc(), h.lm() / g.lm());
    }
    return h;
}

bool basis_self_check(const BasisCertificate& cert) {
    const auto& G = cert.basis;
    for (std::size_t i = 0; i < G.size(); ++i) {
        for (std::size_t j = i + 1; j < G.size(); ++j) {
            Poly s = spoly(G[i], G[j]);
            Poly r = cert.order.global()
                         ? normal_form(s, G, cert.order)
                         : mora_normal_form(s, G);
            if (!r.is_zero()) return false;
        }
    }
    return true;
}

Poly exact_divide(const Poly& f, const Poly& g) {
    if (g.is_zero()) throw std::domain_error("division by zero polynomial");
    MonomialOrder order = MonomialOrder::degrevlex();
    Poly h = f.with_order(order);
    Poly gg = g.with_order(order);
    Poly q = Poly::zero(f.ring(), order);
    while (!h.is_zero()) {
        budget::checkpoint();
        if (!gg.lm().divides(h.lm()))
            throw std::domain_error("inexact polynomial division");
        Scalar c = h.lc() / gg.lc();
        Monomial m = h.lm() / gg.lm();
        q = q + Poly::term(f.ring(), c, m).with_order(order);
        h = h - gg.mul_term(c, m);
    }
    return q;
}

}  // namespace findet
