#include "findet/ring.hpp"

#include <set>

#include "findet/parser.hpp"

namespace findet {

RingPtr RingSpec::make(std::vector<std::string> var_names,
                       std::uint32_t prime) {
    return make(std::move(var_names), prime, {}, std::nullopt);
}

RingPtr RingSpec::make(std::vector<std::string> var_names, std::uint32_t prime,
                       const std::vector<std::string>& quotient_texts,
                       std::optional<std::vector<std::vector<std::string>>>
                           derivation_texts) {
    if (var_names.empty()) throw std::invalid_argument("ring needs variables");
    std::set<std::string> seen;
    for (const auto& v : var_names)
        if (!seen.insert(v).second)
            throw std::invalid_argument("duplicate variable '" + v + "'");
    if (prime != 0 && !is_odd_prime(prime))
        throw std::invalid_argument("coefficient prime must be an odd prime");

    auto ring = std::shared_ptr<RingSpec>(new RingSpec());
    ring->vars_ = std::move(var_names);
    ring->prime_ = prime;
    for (const auto& text : quotient_texts) {
        Poly q = parse_poly(text, ring.get());
        if (q.is_zero()) continue;
        if (!q.constant_term().is_zero())
            throw std::invalid_argument(
                "quotient generator '" + text + "' has nonzero constant term");
        ring->quotient_.push_back(std::move(q));
    }
    if (derivation_texts) {
        std::vector<Derivation> ders;
        for (const auto& row : *derivation_texts) {
            if (row.size() != ring->vars_.size())
                throw std::invalid_argument(
                    "derivation needs one coefficient per variable");
            Derivation d;
            for (const auto& text : row)
                d.coeff.push_back(parse_poly(text, ring.get()));
            ders.push_back(std::move(d));
        }
        ring->derivations_ = std::move(ders);
    } else if (!ring->quotient_.empty()) {
        // keep Auto, callers that need Der(R) must refuse; see tangent
    }
    return ring;
}

RingPtr RingSpec::extend_front(const Ptr& base,
                               const std::vector<std::string>& extra_names) {
    auto ring = std::shared_ptr<RingSpec>(new RingSpec());
    ring->vars_ = extra_names;
    for (const auto& v : base->vars_) ring->vars_.push_back(v);
    ring->prime_ = base->prime_;
    std::vector<std::size_t> shift(base->nvars());
    for (std::size_t i = 0; i < shift.size(); ++i)
        shift[i] = i + extra_names.size();
    for (const auto& q : base->quotient_)
        ring->quotient_.push_back(q.remap_vars(ring.get(), shift));
    return ring;
}

std::vector<Derivation> RingSpec::derivation_generators() const {
    if (derivations_) return *derivations_;
    std::vector<Derivation> ders;
    for (std::size_t i = 0; i < nvars(); ++i) {
        Derivation d;
        for (std::size_t j = 0; j < nvars(); ++j)
            d.coeff.push_back(Poly::constant(this, i == j ? 1 : 0));
        ders.push_back(std::move(d));
    }
    return ders;
}

int RingSpec::var_index(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return static_cast<int>(i);
    return -1;
}

Poly apply_derivation(const Derivation& D, const Poly& f) {
    Poly acc = Poly::zero(f.ring());
    for (std::size_t i = 0; i < D.coeff.size(); ++i)
        acc = acc + D.coeff[i] * f.derivative(i);
    return acc;
}

std::string RingSpec::describe() const {
    std::string s = prime_ ? "F" + std::to_string(prime_) : "QQ";
    s += "[";
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (i) s += ",";
        s += vars_[i];
    }
    s += "]";
    if (!quotient_.empty()) {
        s += "/(";
        for (std::size_t i = 0; i < quotient_.size(); ++i) {
            if (i) s += ", ";
            s += quotient_[i].str();
        }
        s += ")";
    }
    return s;
}

}  // namespace findet
