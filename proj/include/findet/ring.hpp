// Ring descriptors: variables, coefficient field, optional quotient ideal
// presenting R = k[x]_(m)/Q, and the generators of Der(R).
#ifndef FINDET_RING_HPP
#define FINDET_RING_HPP

#include <atomic>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "findet/poly.hpp"

namespace findet {

// D = sum_i h_i d/dx_i, stored by its coefficient row (h_1,...,h_p).
struct Derivation {
    std::vector<Poly> coeff;
};

class RingSpec {
public:
    using Ptr = std::shared_ptr<const RingSpec>;

    // prime == 0 selects exact rationals. Quotient generators and explicit
    // derivations are installed through the factory below so the published
    // object is immutable.
    static Ptr make(std::vector<std::string> var_names,
                    std::uint32_t prime = 0);

    // Returns a new ring that shares nothing with *this. Quotient
    // generators must have zero constant term. Derivations: nullopt means
    // Auto (full partials; only legal with an empty quotient).
    static Ptr make(std::vector<std::string> var_names, std::uint32_t prime,
                    const std::vector<std::string>& quotient_texts,
                    std::optional<std::vector<std::vector<std::string>>>
                        derivation_texts);

    // Extension by fresh variables placed first (positions 0..extra-1);
    // existing variables shift up. Quotient generators are lifted along.
    static Ptr extend_front(const Ptr& base,
                            const std::vector<std::string>& extra_names);

    std::size_t nvars() const { return vars_.size(); }
    const std::vector<std::string>& var_names() const { return vars_; }
    std::uint32_t prime() const { return prime_; }
    bool rational_mode() const { return prime_ == 0; }
    const std::vector<Poly>& quotient() const { return quotient_; }
    bool has_quotient() const { return !quotient_.empty(); }
    bool auto_derivations() const { return !derivations_.has_value(); }
    // Auto mode materializes the full partials on demand.
    std::vector<Derivation> derivation_generators() const;
    std::size_t derivation_count() const {
        return derivations_ ? derivations_->size() : nvars();
    }

    int var_index(const std::string& name) const;  // -1 if unknown

    // Krull dimension of R at the origin; computed lazily by the basis
    // engine (grobner::ring_dim) and cached here. -2 = not yet computed.
    int cached_dim() const { return cached_dim_.load(); }
    void set_cached_dim(int d) const { cached_dim_.store(d); }

    std::string describe() const;

private:
    RingSpec() = default;
    std::vector<std::string> vars_;
    std::uint32_t prime_ = 0;
    std::vector<Poly> quotient_;
    std::optional<std::vector<Derivation>> derivations_;
    mutable std::atomic<int> cached_dim_{-2};
};

using RingPtr = RingSpec::Ptr;

// D(f) = sum_i h_i * df/dx_i
Poly apply_derivation(const Derivation& D, const Poly& f);

}  // namespace findet

#endif
