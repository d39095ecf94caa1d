#include "findet/ideal.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "findet/budget.hpp"

namespace findet {

namespace {

// Deduplicate generators up to sign after monic normalization; drops
// zeros. Keeps the result deterministic.
std::vector<Poly> dedup(std::vector<Poly> gens) {
    std::set<std::string> seen;
    std::vector<Poly> out;
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        Poly m = g.with_order(MonomialOrder::degrevlex()).monic();
        std::string key = m.str();
        if (seen.insert(std::move(key)).second) out.push_back(std::move(g));
    }
    return out;
}

std::vector<Monomial> monomials_of_degree(std::size_t nvars, int d) {
    std::vector<Monomial> out;
    std::vector<std::uint32_t> e(nvars, 0);
    // compositions of d into nvars parts
    auto rec = [&](auto&& self, std::size_t i, int rest) -> void {
        if (i + 1 == nvars) {
            e[i] = static_cast<std::uint32_t>(rest);
            out.emplace_back(e);
            return;
        }
        for (int k = 0; k <= rest; ++k) {
            e[i] = static_cast<std::uint32_t>(k);
            self(self, i + 1, rest - k);
        }
    };
    if (nvars == 0) return out;
    rec(rec, 0, d);
    return out;
}

// Max independent variable subset modulo a set of (leading) monomials:
// S independent iff no monomial's support lies inside S. The empty set is
// always independent for a proper ideal; callers handle the unit case.
std::vector<std::size_t> max_independent_set(
    const std::vector<Monomial>& lead, std::size_t nvars) {
    std::vector<std::size_t> best;
    for (const auto& m : lead)
        if (m.is_one()) return best;  // unit ideal: nothing independent
    const std::size_t limit = std::size_t{1} << nvars;
    for (std::size_t mask = 1; mask < limit; ++mask) {
        std::size_t size = static_cast<std::size_t>(__builtin_popcountll(mask));
        if (size <= best.size()) continue;
        bool ok = true;
        for (const auto& m : lead) {
            bool inside = true;
            for (std::size_t i = 0; i < nvars && inside; ++i)
                if (m[i] > 0 && !(mask & (std::size_t{1} << i))) inside = false;
            if (inside) {
                ok = false;
                break;
            }
        }
        if (ok) {
            best.clear();
            for (std::size_t i = 0; i < nvars; ++i)
                if (mask & (std::size_t{1} << i)) best.push_back(i);
        }
    }
    return best;
}

}  // namespace

IdealHandle::IdealHandle(RingPtr ring, std::vector<Poly> gens) {
    st_ = std::make_shared<State>();
    st_->ring = std::move(ring);
    for (auto& g : gens) check_same_ring(g.ring(), st_->ring.get());
    st_->gens = dedup(std::move(gens));
}

IdealHandle IdealHandle::zero(RingPtr ring) { return {std::move(ring), {}}; }

IdealHandle IdealHandle::unit(RingPtr ring) {
    Poly one = Poly::constant(ring.get(), 1);
    return {std::move(ring), {one}};
}

IdealHandle IdealHandle::maximal(RingPtr ring) {
    std::vector<Poly> gens;
    for (std::size_t i = 0; i < ring->nvars(); ++i)
        gens.push_back(Poly::variable(ring.get(), i));
    return {std::move(ring), std::move(gens)};
}

std::vector<Poly> IdealHandle::gens_with_quotient() const {
    std::vector<Poly> gens = st_->gens;
    for (const auto& q : st_->ring->quotient()) gens.push_back(q);
    return gens;
}

const BasisCertificate& IdealHandle::groebner(MonomialOrder order) const {
    std::optional<BasisCertificate>* slot = nullptr;
    if (order == MonomialOrder::degrevlex())
        slot = &st_->gb_degrevlex;
    else if (order == MonomialOrder::lex())
        slot = &st_->gb_lex;
    else
        throw std::invalid_argument("only degrevlex/lex bases are cached");
    std::lock_guard<std::mutex> lk(st_->mtx);
    if (!*slot) *slot = buchberger(gens_with_quotient(), order);
    return **slot;
}

const BasisCertificate& IdealHandle::standard_local() const {
    std::lock_guard<std::mutex> lk(st_->mtx);
    if (!st_->sb_local) st_->sb_local = standard_basis(gens_with_quotient());
    return *st_->sb_local;
}

bool IdealHandle::contains(const Poly& f) const {
    if (f.is_zero()) return true;
    const auto& gb = groebner();
    return normal_form(f, gb.basis, gb.order).is_zero();
}

bool IdealHandle::contains_local(const Poly& f) const {
    if (f.is_zero()) return true;
    const auto& sb = standard_local();
    return mora_normal_form(f, sb.basis).is_zero();
}

bool IdealHandle::is_unit_ideal() const {
    const auto& gb = groebner();
    for (const auto& g : gb.basis)
        if (!g.is_zero() && g.lm().is_one()) return true;
    return false;
}

LocalDim IdealHandle::local_dim_at_origin() const {
    {
        std::lock_guard<std::mutex> lk(st_->mtx);
        if (st_->ldim) return *st_->ldim;
    }
    const auto& sb = standard_local();
    LocalDim result;
    bool unit_locally = false;
    for (const auto& g : sb.basis)
        if (!g.constant_term().is_zero()) unit_locally = true;
    if (unit_locally) {
        result.dim = -1;
        result.misses_origin = true;
    } else {
        std::vector<Monomial> lead;
        for (const auto& g : sb.basis) lead.push_back(g.lm());
        result.dim = static_cast<int>(
            max_independent_set(lead, st_->ring->nvars()).size());
    }
    std::lock_guard<std::mutex> lk(st_->mtx);
    if (!st_->ldim) st_->ldim = result;
    return result;
}

const MPrimaryCertificate& IdealHandle::m_primary_at_origin(
    MPrimaryAlgo algo) const {
    const int slot = algo == MPrimaryAlgo::local_basis ? 0 : 1;
    {
        std::lock_guard<std::mutex> lk(st_->mtx);
        if (st_->mprimary[slot]) return *st_->mprimary[slot];
    }
    MPrimaryCertificate cert = compute_m_primary(algo);
    std::lock_guard<std::mutex> lk(st_->mtx);
    if (!st_->mprimary[slot]) st_->mprimary[slot] = std::move(cert);
    return *st_->mprimary[slot];
}

MPrimaryCertificate IdealHandle::compute_m_primary(MPrimaryAlgo algo) const {
    MPrimaryCertificate cert;
    const std::size_t p = st_->ring->nvars();

    if (algo == MPrimaryAlgo::saturation) {
        SaturationResult sat = saturate(*this, maximal(st_->ring));
        cert.saturation_exponent = sat.exponent;
        bool off_origin = false;
        for (const auto& g : sat.ideal.groebner().basis)
            if (!g.constant_term().is_zero()) off_origin = true;
        cert.primary = off_origin;
    } else {
        const auto& sb = standard_local();
        bool unit_locally = false;
        for (const auto& g : sb.basis)
            if (!g.constant_term().is_zero()) unit_locally = true;
        if (unit_locally) {
            cert.primary = true;
        } else {
            std::vector<bool> pure(p, false);
            for (const auto& g : sb.basis) {
                const Monomial& m = g.lm();
                int support = -1;
                bool single = true;
                for (std::size_t i = 0; i < p; ++i) {
                    if (m[i] == 0) continue;
                    if (support >= 0) {
                        single = false;
                        break;
                    }
                    support = static_cast<int>(i);
                }
                if (single && support >= 0) pure[support] = true;
            }
            cert.primary =
                std::all_of(pure.begin(), pure.end(), [](bool b) { return b; });
        }
    }

    if (cert.primary) {
        cert.vdim = quotient_vector_dim();
        // minimal N with m^N inside the localized ideal, found degree by
        // degree; bounded by vdim.
        const auto& sb = standard_local();
        long bound = cert.vdim.value_or(0) + 1;
        for (long d = 0; d <= bound; ++d) {
            bool all_in = true;
            for (const auto& mono : monomials_of_degree(p, static_cast<int>(d))) {
                Poly f = Poly::term(st_->ring.get(),
                                    Scalar::one(st_->ring->prime()), mono);
                if (!mora_normal_form(f, sb.basis).is_zero()) {
                    all_in = false;
                    break;
                }
            }
            if (all_in) {
                cert.N = d;
                break;
            }
        }
    } else {
        const auto& sb = standard_local();
        std::vector<Monomial> lead;
        for (const auto& g : sb.basis) lead.push_back(g.lm());
        cert.witness_vars = max_independent_set(lead, p);
    }
    return cert;
}

std::optional<long> IdealHandle::quotient_vector_dim() const {
    const auto& sb = standard_local();
    for (const auto& g : sb.basis)
        if (!g.constant_term().is_zero()) return 0;  // unit ideal locally
    std::vector<Monomial> lead;
    for (const auto& g : sb.basis) lead.push_back(g.lm());
    const std::size_t p = st_->ring->nvars();
    if (!max_independent_set(lead, p).empty()) return std::nullopt;
    // count standard monomials by breadth-first expansion from 1
    std::unordered_set<Monomial, Monomial::Hash> seen;
    std::vector<Monomial> queue{Monomial(p)};
    seen.insert(queue[0]);
    long count = 0;
    while (!queue.empty()) {
        budget::checkpoint();
        Monomial m = std::move(queue.back());
        queue.pop_back();
        bool divisible = false;
        for (const auto& l : lead)
            if (l.divides(m)) {
                divisible = true;
                break;
            }
        if (divisible) continue;
        ++count;
        for (std::size_t i = 0; i < p; ++i) {
            Monomial next = m.mul_var(i);
            if (seen.insert(next).second) queue.push_back(std::move(next));
        }
    }
    return count;
}

bool IdealHandle::radical_contains(const Poly& f) const {
    if (f.is_zero()) {
        // 0 in sqrt(I) iff the ring modulo I has nilpotent zero, i.e. always
        return true;
    }
    RingPtr ext = RingSpec::extend_front(st_->ring, {"@t"});
    std::vector<std::size_t> shift(st_->ring->nvars());
    for (std::size_t i = 0; i < shift.size(); ++i) shift[i] = i + 1;
    std::vector<Poly> gens;
    for (const auto& g : gens_with_quotient())
        gens.push_back(g.remap_vars(ext.get(), shift));
    Poly tf = f.remap_vars(ext.get(), shift) * Poly::variable(ext.get(), 0);
    gens.push_back(Poly::constant(ext.get(), 1) - tf);
    BasisCertificate gb = buchberger(gens, MonomialOrder::degrevlex());
    for (const auto& g : gb.basis)
        if (!g.is_zero() && g.lm().is_one()) return true;
    return false;
}

std::string IdealHandle::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < st_->gens.size(); ++i) {
        if (i) s += ", ";
        s += st_->gens[i].str();
    }
    if (st_->gens.empty()) s += "0";
    return s + ")";
}

IdealHandle ideal_sum(const IdealHandle& a, const IdealHandle& b) {
    check_same_ring(a.ring().get(), b.ring().get());
    std::vector<Poly> gens = a.generators();
    for (const auto& g : b.generators()) gens.push_back(g);
    return {a.ring(), std::move(gens)};
}

IdealHandle ideal_product(const IdealHandle& a, const IdealHandle& b) {
    check_same_ring(a.ring().get(), b.ring().get());
    std::vector<Poly> gens;
    for (const auto& f : a.generators())
        for (const auto& g : b.generators()) gens.push_back(f * g);
    return {a.ring(), std::move(gens)};
}

IdealHandle ideal_power(const IdealHandle& a, unsigned k) {
    if (k == 0) return IdealHandle::unit(a.ring());
    // multisets of size k over the generators
    const auto& gs = a.generators();
    std::vector<Poly> gens;
    std::vector<std::size_t> idx(k, 0);
    auto rec = [&](auto&& self, std::size_t pos, std::size_t from) -> void {
        if (pos == k) {
            Poly prod = Poly::constant(a.ring().get(), 1);
            for (auto i : idx) prod = prod * gs[i];
            gens.push_back(std::move(prod));
            return;
        }
        for (std::size_t i = from; i < gs.size(); ++i) {
            idx[pos] = i;
            self(self, pos + 1, i);
        }
    };
    if (!gs.empty()) rec(rec, 0, 0);
    return {a.ring(), std::move(gens)};
}

namespace {

// Intersection of the ideals generated by exactly the given polynomial
// lists (no silent quotient adjunction) via the one-tag-variable
// construction: (t*A + (1-t)*B) intersected with k[x].
std::vector<Poly> tag_intersection(const RingPtr& R,
                                   const std::vector<Poly>& A,
                                   const std::vector<Poly>& B) {
    RingPtr ext = RingSpec::extend_front(R, {"@t"});
    std::vector<std::size_t> shift(R->nvars());
    for (std::size_t i = 0; i < shift.size(); ++i) shift[i] = i + 1;
    Poly t = Poly::variable(ext.get(), 0);
    Poly one_minus_t = Poly::constant(ext.get(), 1) - t;
    std::vector<Poly> gens;
    for (const auto& g : A)
        gens.push_back(g.remap_vars(ext.get(), shift) * t);
    for (const auto& g : B)
        gens.push_back(g.remap_vars(ext.get(), shift) * one_minus_t);
    BasisCertificate gb = buchberger(gens, MonomialOrder::block(1));
    std::vector<std::size_t> down(ext->nvars(), SIZE_MAX);
    for (std::size_t i = 1; i < ext->nvars(); ++i) down[i] = i - 1;
    std::vector<Poly> result;
    for (const auto& g : gb.basis) {
        bool uses_t = false;
        for (const auto& term : g.terms())
            if (term.m[0] != 0) uses_t = true;
        if (!uses_t) result.push_back(g.remap_vars(R.get(), down));
    }
    return result;
}

std::vector<Poly> with_quotient(const IdealHandle& h) {
    std::vector<Poly> gens = h.generators();
    for (const auto& q : h.ring()->quotient()) gens.push_back(q);
    return gens;
}

}  // namespace

IdealHandle ideal_intersection(const IdealHandle& a, const IdealHandle& b) {
    check_same_ring(a.ring().get(), b.ring().get());
    return {a.ring(),
            tag_intersection(a.ring(), with_quotient(a), with_quotient(b))};
}

IdealHandle ideal_eliminate(const IdealHandle& a,
                            const std::vector<std::size_t>& vars) {
    if (vars.empty()) return a;
    const RingPtr& R = a.ring();
    const std::size_t p = R->nvars();
    std::vector<bool> is_elim(p, false);
    for (auto v : vars) is_elim.at(v) = true;
    // permuted ring with the eliminated variables first
    std::vector<std::string> names;
    std::vector<std::size_t> fwd(p);  // old -> permuted
    for (std::size_t i = 0; i < p; ++i)
        if (is_elim[i]) {
            fwd[i] = names.size();
            names.push_back(R->var_names()[i]);
        }
    const std::size_t nelim = names.size();
    for (std::size_t i = 0; i < p; ++i)
        if (!is_elim[i]) {
            fwd[i] = names.size();
            names.push_back(R->var_names()[i]);
        }
    RingPtr perm = RingSpec::make(names, R->prime());
    std::vector<Poly> gens;
    std::vector<Poly> all = a.generators();
    for (const auto& q : R->quotient()) all.push_back(q);
    for (const auto& g : all) gens.push_back(g.remap_vars(perm.get(), fwd));
    BasisCertificate gb =
        buchberger(gens, MonomialOrder::block(static_cast<int>(nelim)));
    std::vector<std::size_t> back(p, SIZE_MAX);
    for (std::size_t i = 0; i < p; ++i)
        if (!is_elim[i]) back[fwd[i]] = i;
    std::vector<Poly> result;
    for (const auto& g : gb.basis) {
        bool uses = false;
        for (const auto& term : g.terms())
            for (std::size_t i = 0; i < nelim && !uses; ++i)
                if (term.m[i] != 0) uses = true;
        if (!uses) result.push_back(g.remap_vars(R.get(), back));
    }
    return {R, std::move(result)};
}

IdealHandle ideal_quotient(const IdealHandle& a, const IdealHandle& b) {
    check_same_ring(a.ring().get(), b.ring().get());
    std::vector<Poly> divisors;
    for (const auto& f : b.generators())
        if (!f.is_zero()) divisors.push_back(f);
    if (divisors.empty()) return IdealHandle::unit(a.ring());
    IdealHandle acc;
    bool first = true;
    for (const auto& f : divisors) {
        budget::checkpoint();
        IdealHandle part;
        if (f.is_constant()) {
            part = a;
        } else {
            // ((I+Q) : f) in the polynomial ring equals the colon ideal
            // in R; the principal side must stay Q-free so every
            // intersection generator is an exact multiple of f.
            std::vector<Poly> inter =
                tag_intersection(a.ring(), with_quotient(a), {f});
            std::vector<Poly> gens;
            for (const auto& g : inter) gens.push_back(exact_divide(g, f));
            part = IdealHandle(a.ring(), std::move(gens));
        }
        if (first) {
            acc = part;
            first = false;
        } else {
            acc = ideal_intersection(acc, part);
        }
    }
    return acc;
}

SaturationResult saturate(const IdealHandle& a, const IdealHandle& b) {
    IdealHandle cur = a;
    for (int k = 0;; ++k) {
        budget::checkpoint();
        IdealHandle next = ideal_quotient(cur, b);
        if (ideal_equal(next, cur)) return {cur, k};
        cur = next;
    }
}

bool ideal_equal(const IdealHandle& a, const IdealHandle& b) {
    const auto& ga = a.groebner().basis;
    const auto& gb = b.groebner().basis;
    if (ga.size() != gb.size()) return false;
    for (std::size_t i = 0; i < ga.size(); ++i)
        if (!ga[i].equals(gb[i])) return false;
    return true;
}

int ring_dim(const RingPtr& ring) {
    int cached = ring->cached_dim();
    if (cached != -2) return cached;
    LocalDim d = IdealHandle::zero(ring).local_dim_at_origin();
    ring->set_cached_dim(d.dim);
    return d.dim;
}

bool derivations_preserve_quotient(const RingPtr& ring) {
    if (!ring->has_quotient() || ring->auto_derivations()) return true;
    IdealHandle Q = IdealHandle::zero(ring);
    for (const auto& D : ring->derivation_generators())
        for (const auto& q : ring->quotient())
            if (!Q.contains_local(apply_derivation(D, q))) return false;
    return true;
}

}  // namespace findet
