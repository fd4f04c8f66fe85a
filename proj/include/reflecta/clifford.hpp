#pragma once

// Restriction from G(r,1,n) to G(r,q,n).
//
// The linear characters of G(r,1,n) that are trivial on G(r,q,n) form a
// cyclic group H of order q. Twisting by its generator shifts the components
// of lambda by m = r/q places, so H-orbits on Y(r,n) are exactly the
// rotation classes of (m,q)-necklaces. Res chi^lambda is multiplicity free
// with |H_lambda| constituents, labelled (necklace, delta).

#include <cstdint>
#include <set>
#include <vector>

#include "reflecta/combinatorics.hpp"
#include "reflecta/cyclotomic.hpp"
#include "reflecta/wreath.hpp"

namespace reflecta {

struct NecklaceLabel {
    Necklace neck;  // canonical
    int delta = 0;  // 0 .. stab-1
    int stab = 1;   // |H_lambda|

    /// The multipartition read back off the canonical necklace.
    MultiPartition representative() const { return neck.to_multipartition(); }

    friend bool operator==(const NecklaceLabel&, const NecklaceLabel&) = default;
};

/// result_j = lambda_{(j - t*m) mod r}.
MultiPartition h_shift(const MultiPartition& lambda, int t, int q);

struct OrbitInfo {
    std::set<MultiPartition> orbit;
    int stab_order = 1;
};

OrbitInfo orbit_and_stabilizer(const MultiPartition& lambda, int q);

inline int stab_order(const MultiPartition& lambda, int q) { return orbit_and_stabilizer(lambda, q).stab_order; }

/// One entry per (orbit, delta); orbits in order of first appearance in
/// enumerate_multipartitions(r, n).
std::vector<NecklaceLabel> irreducible_labels(const GroupKey& key);

/// The label set of lambda's constituents (delta = 0..stab-1).
std::vector<NecklaceLabel> labels_of(const MultiPartition& lambda, int q);

/// Degree of each constituent of Res chi^lambda.
std::int64_t component_degree(const MultiPartition& lambda, int q);

/// Value of any constituent of Res chi^lambda on a class that does not split:
/// chi^lambda(t) / |H_lambda|. Throws InvalidInput on a split class or a type
/// outside G(r,q,n), InternalError if the division is not exact.
CycloInt restricted_value_nonsplit(const MultiPartition& lambda, const ClassType& t, int q);

/// Same, with chi^lambda(t) already known.
CycloInt restricted_value_nonsplit(const CycloInt& full_value, const MultiPartition& lambda, const ClassType& t,
                                   int q);

}  // namespace reflecta
