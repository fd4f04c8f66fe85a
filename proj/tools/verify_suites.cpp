#include "verify_suites.hpp"

#include <algorithm>
#include <complex>
#include <map>
#include <set>

#include "reflecta/errors.hpp"

namespace reflecta::cli {

namespace {

constexpr std::size_t kMaxExamples = 20;

using Positive = std::pair<MultiPartition, int>;

std::set<Positive> table_instance(int r, int n, bool single_only) {
    std::set<Positive> out;
    for (const auto& row : classification_table()) {
        if (row.n != n) continue;
        if (row.kind == ShapeKind::PlusBox && single_only) continue;
        for (const auto& mu : row.shapes)
            for (int j = 0; j < r; ++j) {
                const MultiPartition base = MultiPartition::empty(r).with_component(j, mu);
                if (row.kind == ShapeKind::Single) {
                    out.insert({base, row.p});
                    continue;
                }
                for (int k = 0; k < r; ++k)
                    if (k != j) out.insert({base.with_component(k, Partition{1}), row.p});
            }
    }
    return out;
}

void compare_with_table(SuiteResult& res, ClassifierContext& ctx, const std::vector<int>& ranks, bool single_only) {
    for (int r : ranks)
        for (int n = 2; n <= 8; ++n) {
            const GroupKey key(r, 1, n);
            std::set<Positive> found;
            for (const auto& v : classify_r1(key, ctx)) {
                ++res.checked;
                if (v.quasi) found.insert({v.lambda, v.prime});
                if (closed_form_r1(r, n, v.lambda, v.prime) != v.quasi)
                    res.fail({{"kind", "closed form disagrees"}, {"verdict", reflecta::to_json(v)}});
            }
            const auto expected = table_instance(r, n, single_only);
            for (const auto& [lambda, p] : found)
                if (!expected.count({lambda, p}))
                    res.fail({{"kind", "unexpected positive"}, {"group", reflecta::to_json(key)},
                              {"lambda", reflecta::to_json(lambda)}, {"prime", p}});
            for (const auto& [lambda, p] : expected)
                if (!found.count({lambda, p}))
                    res.fail({{"kind", "missing positive"}, {"group", reflecta::to_json(key)},
                              {"lambda", reflecta::to_json(lambda)}, {"prime", p}});
        }
}

SuiteResult orthogonality(ClassifierContext& ctx) {
    SuiteResult res("orthogonality");
    for (int r = 1; r <= 3; ++r)
        for (int n = 1; n <= 5; ++n) {
            const CharTable& t = ctx.table(r, n);
            const std::size_t k = t.classes.size();
            for (std::size_t a = 0; a < k; ++a)
                for (std::size_t b = 0; b < k; ++b) {
                    ++res.checked;
                    CycloInt s(r);
                    for (std::size_t c = 0; c < k; ++c)
                        s += CycloInt::integer(r, t.class_sizes[c]) * t.values[a][c] * t.values[b][c].conjugate();
                    if (s != CycloInt::integer(r, a == b ? t.group_order() : 0))
                        res.fail({{"kind", "exact row relation"}, {"r", r}, {"n", n},
                                  {"rows", {reflecta::to_json(t.irreducibles[a]), reflecta::to_json(t.irreducibles[b])}}});
                }
        }
    const double tol = ctx.config().oracle.validation_tolerance;
    for (const auto& key : oracle_covered_groups(ctx.config().oracle.max_order)) {
        const BruteTable& t = ctx.oracle(key);
        ++res.checked;
        const auto& rep = t.report;
        if (rep.row_orthogonality_error > tol || rep.column_orthogonality_error > tol)
            res.fail({{"kind", "float orthogonality"}, {"table", reflecta::to_json(key)},
                      {"row_error", rep.row_orthogonality_error}, {"column_error", rep.column_orthogonality_error}});
        if (key.q != 1) continue;
        const CharTable& exact = ctx.table(key.r, key.n);
        for (const auto& lambda : exact.irreducibles) {
            ++res.checked;
            double best = 1e300;
            for (std::size_t row = 0; row < t.num_rows(); ++row) {
                double err = 0;
                for (std::size_t c = 0; c < t.num_classes(); ++c)
                    err = std::max(err, std::abs(exact.at(lambda, t.class_types[c]).to_complex() - t.values[row][c]));
                best = std::min(best, err);
            }
            if (best > tol)
                res.fail({{"kind", "MN value not found in oracle"}, {"group", reflecta::to_json(key)},
                          {"lambda", reflecta::to_json(lambda)}, {"error", best}});
        }
    }
    return res;
}

SuiteResult splitting(ClassifierContext& ctx) {
    SuiteResult res("splitting");
    for (const auto& key : oracle_covered_groups(ctx.config().oracle.max_order)) {
        std::map<ClassType, std::vector<std::size_t>> sizes;
        const auto classes = conjugacy_classes_brute(key, ctx.config().oracle.max_order);
        for (const auto& c : classes) sizes[type_of(c.representative, key.r)].push_back(c.elements.size());
        for (const auto& t : enumerate_multipartitions(key.r, key.n)) {
            if (!type_in_subgroup(t, key.q)) continue;
            ++res.checked;
            const auto& s = sizes[t];
            const bool equal = std::all_of(s.begin(), s.end(), [&](std::size_t v) { return v == s.front(); });
            if (static_cast<int>(s.size()) != splitting_number(t, key.q) || !equal)
                res.fail({{"kind", "splitting"}, {"group", reflecta::to_json(key)}, {"type", reflecta::to_json(t)},
                          {"brute_classes", s.size()}, {"d", splitting_number(t, key.q)}});
        }
        ++res.checked;
        if (irreducible_labels(key).size() != classes.size())
            res.fail({{"kind", "label count"}, {"group", reflecta::to_json(key)}, {"classes", classes.size()},
                      {"labels", irreducible_labels(key).size()}});
    }
    return res;
}

SuiteResult restriction(ClassifierContext& ctx) {
    SuiteResult res("restriction");
    for (const auto& key : oracle_covered_groups(ctx.config().oracle.max_order)) {
        if (key.q == 1) continue;
        const BruteTable& t = ctx.oracle(key);
        std::set<Necklace> seen;
        for (const auto& lambda : enumerate_multipartitions(key.r, key.n)) {
            if (!seen.insert(necklace_canonical(necklace_of(lambda, key.q))).second) continue;
            ++res.checked;
            try {
                const auto rows = match_restriction(key, lambda, t);
                split_class_values(key, lambda, t);
                if (static_cast<int>(rows.size()) != stab_order(lambda, key.q))
                    res.fail({{"kind", "constituent count"}, {"group", reflecta::to_json(key)},
                              {"lambda", reflecta::to_json(lambda)}});
            } catch (const ValidationFailure& e) {
                res.fail({{"kind", "restriction"}, {"group", reflecta::to_json(key)},
                          {"lambda", reflecta::to_json(lambda)}, {"error", e.what()}});
            }
        }
    }
    return res;
}

SuiteResult wreath_table(ClassifierContext& ctx) {
    SuiteResult res("wreath-table");
    compare_with_table(res, ctx, {2, 3}, false);
    return res;
}

SuiteResult symmetric_table(ClassifierContext& ctx) {
    SuiteResult res("symmetric-table");
    compare_with_table(res, ctx, {1}, true);
    return res;
}

SuiteResult large_n(ClassifierContext& ctx) {
    SuiteResult res("large-n");
    for (int q : {1, 2})
        for (int n : {9, 10}) {
            const GroupKey key(2, q, n);
            for (const auto& v : q == 1 ? classify_r1(key, ctx) : classify_rqn(key, ctx)) {
                ++res.checked;
                if (v.quasi) res.fail(reflecta::to_json(v));
            }
        }
    return res;
}

SuiteResult small_degree(ClassifierContext& ctx) {
    SuiteResult res("small-degree");
    for (const auto& key : oracle_covered_groups(ctx.config().oracle.max_order)) {
        const BruteTable& t = ctx.oracle(key);
        for (std::size_t row = 0; row < t.num_rows(); ++row) {
            const auto d = t.degrees[row];
            if (d < 2 || d > 4) continue;
            for (int p : primes_dividing(d)) {
                if (key.order() % p) continue;
                ++res.checked;
                for (std::size_t c = 0; c < t.num_classes(); ++c)
                    if (is_p_regular(t.class_types[c], p) && std::abs(t.values[row][c]) < t.tolerance) {
                        res.fail({{"kind", "vanishes"}, {"group", reflecta::to_json(key)}, {"row", row},
                                  {"degree", d}, {"prime", p}, {"class", reflecta::to_json(t.representatives[c])}});
                        break;
                    }
            }
        }
    }
    return res;
}

}  // namespace

void SuiteResult::fail(Json example) {
    pass = false;
    ++failures;
    if (counterexamples.size() < kMaxExamples) counterexamples.push_back(std::move(example));
}

Json SuiteResult::to_json() const {
    return with_schema(Json{{"suite", suite},
                            {"pass", pass},
                            {"checked", checked},
                            {"failures", failures},
                            {"counterexamples", counterexamples}});
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"orthogonality",   "splitting", "restriction", "wreath-table",
                                                "symmetric-table", "large-n",   "small-degree"};
    return names;
}

SuiteResult run_suite(const std::string& name, ClassifierContext& ctx) {
    if (name == "orthogonality") return orthogonality(ctx);
    if (name == "splitting") return splitting(ctx);
    if (name == "restriction") return restriction(ctx);
    if (name == "wreath-table") return wreath_table(ctx);
    if (name == "symmetric-table") return symmetric_table(ctx);
    if (name == "large-n") return large_n(ctx);
    if (name == "small-degree") return small_degree(ctx);
    throw InvalidInput("unknown suite " + name);
}

}  // namespace reflecta::cli
