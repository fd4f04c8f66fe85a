#include "reflecta/clifford.hpp"

#include "reflecta/errors.hpp"
#include "reflecta/murnaghan_nakayama.hpp"

namespace reflecta {

MultiPartition h_shift(const MultiPartition& lambda, int t, int q) {
    const int r = lambda.r();
    if (q < 1 || r % q != 0) throw InvalidInput("q must divide r");
    const long long offset = static_cast<long long>(t) * (r / q);
    std::vector<Partition> comps(static_cast<std::size_t>(r));
    for (int j = 0; j < r; ++j) {
        const auto src = static_cast<std::size_t>((((j - offset) % r) + r) % r);
        comps[static_cast<std::size_t>(j)] = lambda[src];
    }
    return MultiPartition(std::move(comps));
}

OrbitInfo orbit_and_stabilizer(const MultiPartition& lambda, int q) {
    OrbitInfo info;
    for (int t = 0; t < q; ++t) info.orbit.insert(h_shift(lambda, t, q));
    info.stab_order = q / static_cast<int>(info.orbit.size());
    return info;
}

std::vector<NecklaceLabel> labels_of(const MultiPartition& lambda, int q) {
    const int s = stab_order(lambda, q);
    const Necklace canon = necklace_canonical(necklace_of(lambda, q));
    std::vector<NecklaceLabel> out;
    for (int delta = 0; delta < s; ++delta) out.push_back({canon, delta, s});
    return out;
}

std::vector<NecklaceLabel> irreducible_labels(const GroupKey& key) {
    std::set<Necklace> seen;
    std::vector<NecklaceLabel> out;
    for (const auto& lambda : enumerate_multipartitions(key.r, key.n)) {
        const Necklace canon = necklace_canonical(necklace_of(lambda, key.q));
        if (!seen.insert(canon).second) continue;
        for (auto& label : labels_of(lambda, key.q)) out.push_back(std::move(label));
    }
    return out;
}

std::int64_t component_degree(const MultiPartition& lambda, int q) { return degree(lambda) / stab_order(lambda, q); }

CycloInt restricted_value_nonsplit(const CycloInt& full_value, const MultiPartition& lambda, const ClassType& t,
                                   int q) {
    if (splitting_number(t, q) != 1)
        throw InvalidInput("class " + t.to_string() + " splits in the subgroup; component values are not determined");
    const int s = stab_order(lambda, q);
    CycloInt out;
    if (!full_value.divide_exact(s, &out))
        throw InternalError("value of " + lambda.to_string() + " on " + t.to_string() + " is not divisible by " +
                            std::to_string(s));
    return out;
}

CycloInt restricted_value_nonsplit(const MultiPartition& lambda, const ClassType& t, int q) {
    return restricted_value_nonsplit(character_value(lambda, t), lambda, t, q);
}

}  // namespace reflecta
