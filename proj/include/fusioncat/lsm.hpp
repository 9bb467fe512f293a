#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "fusioncat/catalog.hpp"
#include "fusioncat/center.hpp"
#include "fusioncat/fusion_ring.hpp"

namespace fusioncat {

struct FiberFunctorVerdict {
    FiberFunctor status = FiberFunctor::Unknown;
    std::string witness;   // a non-integral label when status == No via dimensions
    double witness_dim = 0;
    std::string reason;
};

/// Three-valued fiber-functor status: "no" with a dimension witness whenever
/// integrality fails, "yes" only on catalog provenance, "unknown" otherwise.
/// Integrality alone is never upgraded to "yes".
inline FiberFunctorVerdict fiber_functor_verdict(const CatalogEntry& entry) {
    FiberFunctorVerdict v;
    const IntegralityVerdict integ = is_integral(entry.ring);
    if (!integ.integral) {
        v.status = FiberFunctor::No;
        v.witness = entry.ring.label(integ.nonintegral_labels.front());
        v.witness_dim = integ.nonintegral_values.front();
        std::ostringstream r;
        r << "no fiber functor: d_" << v.witness << " = " << v.witness_dim
          << " is not an integer";
        v.reason = r.str();
        return v;
    }
    if (entry.fiber_functor_flag == FiberFunctor::Yes) {
        v.status = FiberFunctor::Yes;
        v.reason = "catalog provenance: " + entry.notes;
        return v;
    }
    v.status = FiberFunctor::Unknown;
    v.reason = "integral, but integrality does not imply a fiber functor";
    return v;
}

/// Number of irreducible summands of the induced state: the intersection size
/// of the realized Lagrangian with the extension Lagrangian (pointed centers,
/// where every simple has multiplicity one in each Lagrangian).
inline std::size_t vacua_count(const MetricGroup& m, const Lagrangian& l_state,
                               const Lagrangian& l_ext) {
    if (l_state.parent_factors != m.group().factors ||
        l_ext.parent_factors != m.group().factors)
        throw MetricGroupMismatch("Lagrangians do not live in this metric group");
    std::size_t count = 0;
    for (const auto& x : l_state.subgroup.elements)
        if (std::binary_search(l_ext.subgroup.elements.begin(), l_ext.subgroup.elements.end(), x))
            ++count;
    return count;
}

enum class StateKind { Topological, Gapless, Indeterminate };

struct StateVerdict {
    StateKind kind = StateKind::Indeterminate;
    std::size_t vacua = 0; // meaningful for Topological
    std::string reason;
};

/// Verdict for a hypothetical pure symmetric state with this symmetry ring:
/// no fiber functor forces gaplessness; a fiber functor leaves a topological
/// pure state unobstructed; otherwise indeterminate.
inline StateVerdict lsm_verdict(const CatalogEntry& entry) {
    const FiberFunctorVerdict ff = fiber_functor_verdict(entry);
    StateVerdict v;
    switch (ff.status) {
        case FiberFunctor::No:
            v.kind = StateKind::Gapless;
            v.reason = ff.reason;
            break;
        case FiberFunctor::Yes:
            v.kind = StateKind::Topological;
            v.vacua = 1;
            v.reason = "a topological pure symmetric state is unobstructed (" + ff.reason + ")";
            break;
        case FiberFunctor::Unknown:
            v.kind = StateKind::Indeterminate;
            v.reason =
                "indeterminate: " + ff.reason +
                "; Morita classes of non-pointed extensions are not decided by this tool";
            break;
    }
    return v;
}

struct DualityVerdict {
    StateKind kind = StateKind::Indeterminate;
    AnomalyVerdict anomaly;
    std::string reason;
};

/// Covariant states under an anomalous duality are gapless; otherwise the
/// fixed Lagrangians are the candidate topological sectors.
inline DualityVerdict duality_gapless_verdict(const MetricGroup& m,
                                              const CenterAutomorphism& phi) {
    DualityVerdict v;
    v.anomaly = anomaly_verdict(m, phi);
    if (v.anomaly.anomalous) {
        v.kind = StateKind::Gapless;
        std::ostringstream r;
        r << "the duality fixes no Lagrangian (orbit sizes:";
        for (const auto& orbit : v.anomaly.orbits) r << " " << orbit.size();
        r << ")";
        v.reason = r.str();
    } else {
        v.kind = StateKind::Indeterminate;
        std::ostringstream r;
        r << v.anomaly.fixed.size()
          << " fixed Lagrangian(s) are candidate topological sectors for covariant states";
        v.reason = r.str();
    }
    return v;
}

struct RealizabilityReport {
    std::string ring_name;
    bool anyon_chain = true;       // every fusion ring acts on its anyon chain
    bool tensor_product = false;   // iff integral
    FiberFunctor onsite = FiberFunctor::Unknown;
    std::string reason;
};

/// Realizability matrix: anyon chains always, tensor products iff integral,
/// on-site tensor products iff a fiber functor exists.
inline RealizabilityReport realizability_report(const CatalogEntry& entry) {
    RealizabilityReport rep;
    rep.ring_name = entry.ring.name();
    rep.tensor_product = is_integral(entry.ring).integral;
    const FiberFunctorVerdict ff = fiber_functor_verdict(entry);
    rep.onsite = ff.status;
    rep.reason = ff.reason;
    return rep;
}

} // namespace fusioncat
