#include "findet/poly.hpp"

#include <algorithm>
#include <unordered_map>

#include "findet/ring.hpp"

namespace findet {

bool same_ring(const RingSpec* a, const RingSpec* b) {
    if (a == b) return true;
    if (!a || !b) return false;
    if (a->prime() != b->prime()) return false;
    if (a->var_names() != b->var_names()) return false;
    if (a->quotient().size() != b->quotient().size()) return false;
    for (std::size_t i = 0; i < a->quotient().size(); ++i)
        if (a->quotient()[i].terms().size() !=
            b->quotient()[i].terms().size())
            return false;
    return true;
}

void check_same_ring(const RingSpec* a, const RingSpec* b) {
    if (!same_ring(a, b))
        throw std::invalid_argument("polynomials over mismatched rings");
}

Poly Poly::zero(const RingSpec* R) { return zero(R, MonomialOrder::degrevlex()); }

Poly Poly::zero(const RingSpec* R, MonomialOrder o) {
    Poly p;
    p.ring_ = R;
    p.ord_ = o;
    return p;
}

Poly Poly::constant(const RingSpec* R, const Scalar& c) {
    Poly p = zero(R);
    if (!c.is_zero()) p.terms_.push_back({c, Monomial(R->nvars())});
    return p;
}

Poly Poly::constant(const RingSpec* R, long v) {
    return constant(R, Scalar::from_int(v, R->prime()));
}

Poly Poly::variable(const RingSpec* R, std::size_t i, std::uint32_t e) {
    Poly p = zero(R);
    if (e == 0) return constant(R, 1);
    Monomial m(R->nvars());
    p.terms_.push_back({Scalar::one(R->prime()), m.mul_var(i, e)});
    return p;
}

Poly Poly::term(const RingSpec* R, const Scalar& c, Monomial m) {
    Poly p = zero(R);
    if (!c.is_zero()) p.terms_.push_back({c, std::move(m)});
    return p;
}

Poly Poly::from_terms(const RingSpec* R, MonomialOrder o,
                      std::vector<Term> ts) {
    Poly p = zero(R, o);
    p.terms_ = std::move(ts);
    p.normalize();
    return p;
}

void Poly::normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [this](const Term& a, const Term& b) {
                  return ord_.cmp(a.m, b.m) > 0;
              });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().m == t.m)
            out.back().c += t.c;
        else
            out.push_back(std::move(t));
        if (!out.empty() && out.back().c.is_zero()) out.pop_back();
    }
    terms_ = std::move(out);
}

int Poly::total_degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max<int>(d, t.m.deg());
    return d;
}

int Poly::ord_degree() const {
    if (terms_.empty()) return -1;
    int d = terms_[0].m.deg();
    for (const auto& t : terms_) d = std::min<int>(d, t.m.deg());
    return d;
}

Scalar Poly::constant_term() const {
    for (const auto& t : terms_)
        if (t.m.is_one()) return t.c;
    return Scalar::zero(ring_->prime());
}

Poly Poly::with_order(MonomialOrder o) const {
    if (o == ord_) return *this;
    Poly p = *this;
    p.ord_ = o;
    std::sort(p.terms_.begin(), p.terms_.end(),
              [&o](const Term& a, const Term& b) { return o.cmp(a.m, b.m) > 0; });
    return p;
}

Poly Poly::operator+(const Poly& o) const {
    check_same_ring(ring_, o.ring_);
    const Poly& rhs = (o.ord_ == ord_) ? o : o.with_order(ord_);
    Poly r = zero(ring_, ord_);
    r.terms_.reserve(terms_.size() + rhs.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < rhs.terms_.size()) {
        int c = ord_.cmp(terms_[i].m, rhs.terms_[j].m);
        if (c > 0) {
            r.terms_.push_back(terms_[i++]);
        } else if (c < 0) {
            r.terms_.push_back(rhs.terms_[j++]);
        } else {
            Scalar s = terms_[i].c + rhs.terms_[j].c;
            if (!s.is_zero()) r.terms_.push_back({s, terms_[i].m});
            ++i;
            ++j;
        }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < rhs.terms_.size(); ++j) r.terms_.push_back(rhs.terms_[j]);
    return r;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& t : r.terms_) t.c = -t.c;
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    check_same_ring(ring_, o.ring_);
    if (is_zero() || o.is_zero()) return zero(ring_, ord_);
    std::unordered_map<Monomial, Scalar, Monomial::Hash> acc;
    acc.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_) {
        for (const auto& b : o.terms_) {
            Monomial m = a.m * b.m;
            auto it = acc.find(m);
            if (it == acc.end())
                acc.emplace(std::move(m), a.c * b.c);
            else
                it->second += a.c * b.c;
        }
    }
    std::vector<Term> ts;
    ts.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (!c.is_zero()) ts.push_back({std::move(c), m});
    return from_terms(ring_, ord_, std::move(ts));
}

Poly Poly::scaled(const Scalar& c) const {
    if (c.is_zero()) return zero(ring_, ord_);
    Poly r = *this;
    for (auto& t : r.terms_) t.c = t.c * c;
    return r;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return scaled(lc().inverse());
}

Poly Poly::mul_term(const Scalar& c, const Monomial& m) const {
    if (c.is_zero()) return zero(ring_, ord_);
    Poly r = *this;
    for (auto& t : r.terms_) {
        t.c = t.c * c;
        t.m = t.m * m;
    }
    return r;
}

Poly Poly::pow(unsigned e) const {
    Poly acc = constant(ring_, 1).with_order(ord_);
    Poly base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

Poly Poly::derivative(std::size_t var) const {
    std::vector<Term> ts;
    for (const auto& t : terms_) {
        std::uint32_t e = t.m[var];
        if (e == 0) continue;
        auto exps = t.m.exponents();
        exps[var] -= 1;
        ts.push_back({t.c * Scalar::from_int(e, ring_->prime()),
                      Monomial(std::move(exps))});
    }
    return from_terms(ring_, ord_, std::move(ts));
}

Poly Poly::jet(int k) const {
    std::vector<Term> ts;
    for (const auto& t : terms_)
        if (static_cast<int>(t.m.deg()) <= k) ts.push_back(t);
    return from_terms(ring_, ord_, std::move(ts));
}

Scalar Poly::eval(const std::vector<Scalar>& pt) const {
    if (pt.size() != ring_->nvars())
        throw std::invalid_argument("evaluation point arity mismatch");
    Scalar acc = Scalar::zero(ring_->prime());
    for (const auto& t : terms_) {
        Scalar v = t.c;
        for (std::size_t i = 0; i < pt.size(); ++i)
            if (t.m[i]) v = v * pt[i].pow(t.m[i]);
        acc += v;
    }
    return acc;
}

Poly Poly::subst(const RingSpec* target,
                 const std::vector<Poly>& images) const {
    if (images.size() != ring_->nvars())
        throw std::invalid_argument("substitution arity mismatch");
    // powers[i][k] = images[i]^k, built on demand
    std::vector<std::vector<Poly>> powers(images.size());
    auto power = [&](std::size_t i, std::uint32_t k) -> const Poly& {
        auto& ps = powers[i];
        if (ps.empty()) ps.push_back(Poly::constant(target, 1));
        while (ps.size() <= k) ps.push_back(ps.back() * images[i]);
        return ps[k];
    };
    Poly acc = Poly::zero(target);
    for (const auto& t : terms_) {
        Poly term = Poly::constant(target, t.c);
        for (std::size_t i = 0; i < images.size(); ++i)
            if (t.m[i]) term = term * power(i, t.m[i]);
        acc = acc + term;
    }
    return acc;
}

Poly Poly::remap_vars(const RingSpec* target,
                      const std::vector<std::size_t>& var_map) const {
    std::vector<Term> ts;
    ts.reserve(terms_.size());
    for (const auto& t : terms_) {
        std::vector<std::uint32_t> e(target->nvars(), 0);
        for (std::size_t i = 0; i < ring_->nvars(); ++i) {
            std::size_t tgt = i < var_map.size() ? var_map[i] : SIZE_MAX;
            if (tgt == SIZE_MAX) {
                if (t.m[i] != 0)
                    throw std::domain_error("remap drops a used variable");
            } else {
                e[tgt] = t.m[i];
            }
        }
        ts.push_back({t.c, Monomial(std::move(e))});
    }
    return from_terms(target, ord_, std::move(ts));
}

bool Poly::equals(const Poly& o) const {
    if (!same_ring(ring_, o.ring_)) return false;
    if (terms_.size() != o.terms_.size()) return false;
    const Poly& rhs = (o.ord_ == ord_) ? o : o.with_order(ord_);
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].m != rhs.terms_[i].m || terms_[i].c != rhs.terms_[i].c)
            return false;
    return true;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
        Scalar c = t.c;
        bool neg = c.sgn() < 0;
        if (first) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        first = false;
        Scalar a = neg ? -c : c;
        std::string mon;
        for (std::size_t i = 0; i < ring_->nvars(); ++i) {
            if (t.m[i] == 0) continue;
            if (!mon.empty()) mon += "*";
            mon += ring_->var_names()[i];
            if (t.m[i] > 1) mon += "^" + std::to_string(t.m[i]);
        }
        if (mon.empty()) {
            out += a.str();
        } else {
            if (!a.is_one()) out += a.str() + "*";
            out += mon;
        }
    }
    return out;
}

}  // namespace findet
