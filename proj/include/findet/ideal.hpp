// Ideal handles with cached bases, and the ideal-theoretic predicates the
// determinacy criteria reduce to. Over a quotient ring R = k[x]/Q every
// computation silently adjoins the generators of Q.
#ifndef FINDET_IDEAL_HPP
#define FINDET_IDEAL_HPP

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "findet/grobner.hpp"
#include "findet/ring.hpp"

namespace findet {

struct MPrimaryCertificate {
    bool primary = false;
    // On true: minimal N with m^N contained in the ideal locally, and the
    // local vector-space dimension of the quotient.
    std::optional<long> N;
    std::optional<long> vdim;
    // On false: independent variable subset modulo the leading ideal.
    std::vector<std::size_t> witness_vars;
    // Saturation route diagnostics (set when that algorithm ran).
    std::optional<int> saturation_exponent;
};

struct LocalDim {
    int dim = -1;             // Krull dimension at the origin; -1 = empty
    bool misses_origin = false;
};

class IdealHandle {
public:
    IdealHandle() = default;
    IdealHandle(RingPtr ring, std::vector<Poly> gens);
    static IdealHandle zero(RingPtr ring);
    static IdealHandle unit(RingPtr ring);
    static IdealHandle maximal(RingPtr ring);  // (x_1,...,x_p)

    const RingPtr& ring() const { return st_->ring; }
    const std::vector<Poly>& generators() const { return st_->gens; }
    bool valid() const { return st_ != nullptr; }

    // Reduced Groebner basis of (gens + Q) under a global order; cached
    // write-once per order.
    const BasisCertificate& groebner(MonomialOrder order =
                                         MonomialOrder::degrevlex()) const;
    // Local standard basis of (gens + Q); cached.
    const BasisCertificate& standard_local() const;

    bool contains(const Poly& f) const;       // global membership in gens+Q
    bool contains_local(const Poly& f) const; // membership in the localization
    bool is_unit_ideal() const;               // 1 in gens+Q globally

    LocalDim local_dim_at_origin() const;
    // Algorithm choice for the m-primary decision; certificates are
    // produced the same way for both.
    enum class MPrimaryAlgo { local_basis, saturation };
    const MPrimaryCertificate& m_primary_at_origin(
        MPrimaryAlgo algo = MPrimaryAlgo::local_basis) const;
    std::optional<long> quotient_vector_dim() const;  // nullopt = infinite
    bool radical_contains(const Poly& f) const;       // f in sqrt(gens+Q)

    std::string str() const;

private:
    struct State {
        RingPtr ring;
        std::vector<Poly> gens;
        mutable std::mutex mtx;
        mutable std::optional<BasisCertificate> gb_degrevlex;
        mutable std::optional<BasisCertificate> gb_lex;
        mutable std::optional<BasisCertificate> sb_local;
        mutable std::optional<MPrimaryCertificate> mprimary[2];
        mutable std::optional<LocalDim> ldim;
    };
    std::shared_ptr<State> st_;

    std::vector<Poly> gens_with_quotient() const;
    MPrimaryCertificate compute_m_primary(MPrimaryAlgo algo) const;
};

enum class IdealOp { sum, product, intersection };

IdealHandle ideal_sum(const IdealHandle& a, const IdealHandle& b);
IdealHandle ideal_product(const IdealHandle& a, const IdealHandle& b);
IdealHandle ideal_power(const IdealHandle& a, unsigned k);
IdealHandle ideal_intersection(const IdealHandle& a, const IdealHandle& b);
// Generators of (gens+Q) not involving the given variables.
IdealHandle ideal_eliminate(const IdealHandle& a,
                            const std::vector<std::size_t>& vars);
// Exact colon ideal (a : b).
IdealHandle ideal_quotient(const IdealHandle& a, const IdealHandle& b);

struct SaturationResult {
    IdealHandle ideal;
    int exponent = 0;  // first k with (I : J^k) = (I : J^(k+1))
};
SaturationResult saturate(const IdealHandle& a, const IdealHandle& b);

// Canonical equality via reduced degrevlex bases.
bool ideal_equal(const IdealHandle& a, const IdealHandle& b);

// Krull dimension of R itself at the origin (cached on the ring).
int ring_dim(const RingPtr& ring);

// Local membership check used to validate explicit derivations: every
// D(q) must lie in Q.
bool derivations_preserve_quotient(const RingPtr& ring);

}  // namespace findet

#endif
