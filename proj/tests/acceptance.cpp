// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "reflecta/classifier.hpp"
#include "reflecta/clifford.hpp"
#include "reflecta/combinatorics.hpp"
#include "reflecta/murnaghan_nakayama.hpp"
#include "reflecta/oracle.hpp"
#include "reflecta/wreath.hpp"

using namespace reflecta;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

using P = Partition;

// (n, lambda_j, p) rows of the S_n table
const std::vector<std::tuple<int, Partition, int>>& sym_rows() {
    static const std::vector<std::tuple<int, Partition, int>> rows{
        {3, P{2, 1}, 2},       {4, P{2, 2}, 2},          {4, P{3, 1}, 3},          {4, P{2, 1, 1}, 3},
        {5, P{4, 1}, 2},       {5, P{2, 1, 1, 1}, 2},    {5, P{3, 2}, 5},          {5, P{2, 2, 1}, 5},
        {6, P{3, 2, 1}, 2},    {6, P{4, 2}, 3},          {6, P{2, 2, 1, 1}, 3},    {8, P{5, 2, 1}, 2},
        {8, P{3, 2, 1, 1, 1}, 2}};
    return rows;
}

// (n, lambda_j, p) rows of the G(r,1,n) table with a second component (1)
const std::vector<std::tuple<int, Partition, int>>& plus_box_rows() {
    static const std::vector<std::tuple<int, Partition, int>> rows{
        {2, P{1}, 2}, {3, P{2}, 3}, {3, P{1, 1}, 3}, {4, P{3}, 2}, {4, P{2, 1}, 2}, {4, P{1, 1, 1}, 2}};
    return rows;
}

using Positive = std::tuple<MultiPartition, int>;

std::set<Positive> expected_positives(int r, int n) {
    std::set<Positive> out;
    for (const auto& [rn, mu, p] : sym_rows()) {
        if (rn != n) continue;
        for (int j = 0; j < r; ++j) out.insert({MultiPartition::empty(r).with_component(j, mu), p});
    }
    for (const auto& [rn, mu, p] : plus_box_rows()) {
        if (rn != n) continue;
        for (int j = 0; j < r; ++j)
            for (int k = 0; k < r; ++k)
                if (j != k)
                    out.insert({MultiPartition::empty(r).with_component(j, mu).with_component(k, Partition{1}), p});
    }
    return out;
}

std::set<Positive> brute_positives(const GroupKey& key, ClassifierContext& ctx) {
    std::set<Positive> out;
    for (const auto& v : classify_r1(key, ctx))
        if (v.quasi) out.insert({v.lambda, v.prime});
    return out;
}

std::string describe(const std::set<Positive>& s) {
    std::string out;
    for (const auto& [lambda, p] : s) out += lambda.to_string() + "@" + std::to_string(p) + " ";
    return out;
}

std::string table_diff(const GroupKey& key, const std::set<Positive>& got, const std::set<Positive>& want) {
    std::set<Positive> extra, missing;
    for (const auto& x : got)
        if (!want.count(x)) extra.insert(x);
    for (const auto& x : want)
        if (!got.count(x)) missing.insert(x);
    return key.to_string() + " extra: " + describe(extra) + " missing: " + describe(missing);
}

const std::vector<GroupKey>& rqn_groups() {
    static const std::vector<GroupKey> groups{GroupKey(2, 2, 2), GroupKey(2, 2, 3), GroupKey(2, 2, 4), GroupKey(3, 3, 2),
                                              GroupKey(3, 3, 3), GroupKey(4, 2, 2), GroupKey(4, 4, 2), GroupKey(6, 3, 2),
                                              GroupKey(2, 1, 3), GroupKey(2, 1, 4)};
    return groups;
}

GroupElement element(std::vector<int> colors, std::vector<int> images) {
    GroupElement x;
    x.colors = std::move(colors);
    for (int v : images) x.perm.push_back(v - 1);
    return x;
}

Outcome symmetric_table(ClassifierContext& ctx) {
    int verdicts = 0;
    for (int n = 2; n <= 8; ++n) {
        const GroupKey key(1, 1, n);
        verdicts += static_cast<int>(classify_r1(key, ctx).size());
        const auto got = brute_positives(key, ctx), want = expected_positives(1, n);
        if (got != want) return {false, table_diff(key, got, want)};
    }
    return {true, std::to_string(verdicts) + " verdicts, n = 2..8"};
}

Outcome wreath_table(ClassifierContext& ctx) {
    int verdicts = 0;
    for (int r : {2, 3})
        for (int n = 2; n <= 8; ++n) {
            const GroupKey key(r, 1, n);
            verdicts += static_cast<int>(classify_r1(key, ctx).size());
            const auto got = brute_positives(key, ctx), want = expected_positives(r, n);
            if (got != want) return {false, table_diff(key, got, want)};
        }
    return {true, std::to_string(verdicts) + " verdicts, r in {2,3}, n = 2..8"};
}

Outcome closed_vs_brute(ClassifierContext& ctx) {
    int compared = 0, disagreements = 0;
    std::string first;
    for (int r : {2, 3})
        for (int n = 2; n <= 8; ++n) {
            const GroupKey key(r, 1, n);
            for (const auto& v : classify_r1(key, ctx)) {
                ++compared;
                if (closed_form_r1(r, n, v.lambda, v.prime) != v.quasi) {
                    if (disagreements++ == 0) first = key.to_string() + " " + v.lambda.to_string() + " p=" + std::to_string(v.prime);
                }
            }
        }
    return {disagreements == 0,
            std::to_string(compared) + " pairs, " + std::to_string(disagreements) + " disagreements " + first};
}

Outcome worked_examples(ClassifierContext&) {
    const MultiPartition lambda({P{2, 1}, P{}, P{1, 1, 1}});
    const ClassType first = type_of(element({1, 1, 0, 0, 1, 0}, {2, 3, 1, 5, 4, 6}), 3);
    const ClassType second = type_of(element({1, 1, 0, 0, 1, 0}, {2, 1, 5, 6, 3, 4}), 3);
    const CycloInt a = character_value(lambda, first), b = character_value(lambda, second);
    const bool ok = a == root_of_unity(3, 2) && b.is_zero();
    return {ok, "first = " + a.pretty() + ", second = " + b.pretty()};
}

Outcome rqn_classification(ClassifierContext& ctx) {
    int compared = 0, disagreements = 0, nu3 = 0, nu2 = 0;
    std::string first;
    for (const auto& key : rqn_groups())
        for (const auto& v : classify_rqn(key, ctx)) {
            ++compared;
            if (closed_form_rqn(key, v.lambda, v.prime) != v.quasi && disagreements++ == 0)
                first = key.to_string() + " " + v.lambda.to_string() + " p=" + std::to_string(v.prime);
            if (key == GroupKey(3, 3, 3) && is_equally_spaced_boxes(v.lambda) && v.quasi && v.degree == 2) ++nu3;
            if (key == GroupKey(2, 2, 4) && is_antipodal_pair(v.lambda) && v.quasi && v.degree == 3 &&
                v.lambda[0] == Partition{2})
                ++nu2;
        }
    const bool ok = disagreements == 0 && nu3 == 3 && nu2 == 2;
    return {ok, std::to_string(compared) + " component/prime pairs, " + std::to_string(disagreements) +
                    " disagreements " + first + "; G(3,3,3) 2-dim positives: " + std::to_string(nu3) +
                    "; G(2,2,4) 3-dim positives from ((2),(2)): " + std::to_string(nu2)};
}

Outcome large_n(ClassifierContext& ctx) {
    int verdicts = 0;
    for (int q : {1, 2})
        for (int n : {9, 10}) {
            const GroupKey key(2, q, n);
            const auto vs = q == 1 ? classify_r1(key, ctx) : classify_rqn(key, ctx);
            for (const auto& v : vs) {
                ++verdicts;
                if (v.prime > n) continue;
                if (v.quasi)
                    return {false, key.to_string() + " " + v.lambda.to_string() + " quasi at p=" + std::to_string(v.prime)};
                if (v.degree < 5) return {false, key.to_string() + " " + v.lambda.to_string() + " has degree < 5"};
            }
        }
    return {true, std::to_string(verdicts) + " verdicts, all negative, all degrees >= 5"};
}

Outcome class_counts(ClassifierContext&) {
    std::ostringstream os;
    for (const auto& key : rqn_groups()) {
        const auto brute = conjugacy_classes_brute(key).size();
        std::size_t by_d = 0;
        for (const auto& t : enumerate_multipartitions(key.r, key.n))
            if (type_in_subgroup(t, key.q)) by_d += static_cast<std::size_t>(splitting_number(t, key.q));
        const auto by_labels = irreducible_labels(key).size();
        if (brute != by_d || by_d != by_labels)
            return {false, key.to_string() + ": " + std::to_string(brute) + " / " + std::to_string(by_d) + " / " +
                               std::to_string(by_labels)};
        if (key == GroupKey(2, 2, 4) && brute != 13) return {false, "G(2,2,4) has " + std::to_string(brute)};
        os << key.to_string() << "=" << brute << " ";
    }
    return {true, os.str()};
}

Outcome orthogonality(ClassifierContext& ctx) {
    for (int r = 1; r <= 3; ++r)
        for (int n = 1; n <= 5; ++n) {
            const CharTable& t = ctx.table(r, n);
            const std::size_t k = t.classes.size();
            for (std::size_t a = 0; a < k; ++a)
                for (std::size_t b = 0; b < k; ++b) {
                    CycloInt s(r);
                    for (std::size_t c = 0; c < k; ++c)
                        s += CycloInt::integer(r, t.class_sizes[c]) * t.values[a][c] * t.values[b][c].conjugate();
                    if (s != CycloInt::integer(r, a == b ? t.group_order() : 0))
                        return {false, "row orthogonality in G(" + std::to_string(r) + ",1," + std::to_string(n) + ")"};
                }
            for (std::size_t c1 = 0; c1 < k; ++c1)
                for (std::size_t c2 = 0; c2 < k; ++c2) {
                    CycloInt s(r);
                    for (std::size_t a = 0; a < k; ++a) s += t.values[a][c1] * t.values[a][c2].conjugate();
                    if (s != CycloInt::integer(r, c1 == c2 ? centralizer_order(t.classes[c1]) : 0))
                        return {false, "column orthogonality in G(" + std::to_string(r) + ",1," + std::to_string(n) + ")"};
                }
        }
    double worst_row = 0, worst_col = 0, worst_mn = 0;
    const auto groups = oracle_covered_groups(default_oracle_bound());
    for (const auto& key : groups) {
        const BruteTable& t = ctx.oracle(key);
        const std::size_t k = t.num_classes();
        const double order = static_cast<double>(key.order());
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t b = 0; b < k; ++b) {
                std::complex<double> s = 0;
                for (std::size_t c = 0; c < k; ++c)
                    s += static_cast<double>(t.class_sizes[c]) * t.values[a][c] * std::conj(t.values[b][c]);
                worst_row = std::max(worst_row, std::abs(s / order - (a == b ? 1.0 : 0.0)));
            }
        for (std::size_t c1 = 0; c1 < k; ++c1)
            for (std::size_t c2 = 0; c2 < k; ++c2) {
                std::complex<double> s = 0;
                for (std::size_t a = 0; a < k; ++a) s += t.values[a][c1] * std::conj(t.values[a][c2]);
                const double cent = order / static_cast<double>(t.class_sizes[c1]);
                worst_col = std::max(worst_col, std::abs(s / cent - (c1 == c2 ? 1.0 : 0.0)));
            }
        if (key.q != 1) continue;
        const CharTable& exact = ctx.table(key.r, key.n);
        for (const auto& lambda : exact.irreducibles) {
            double best = 1e300;
            for (std::size_t row = 0; row < t.num_rows(); ++row) {
                double err = 0;
                for (std::size_t c = 0; c < k; ++c)
                    err = std::max(err, std::abs(exact.at(lambda, t.class_types[c]).to_complex() - t.values[row][c]));
                best = std::min(best, err);
            }
            worst_mn = std::max(worst_mn, best);
        }
    }
    std::ostringstream os;
    os << "exact r<=3,n<=5 ok; " << groups.size() << " oracle tables: row " << worst_row << ", column " << worst_col
       << ", MN-vs-oracle " << worst_mn;
    return {worst_row <= 1e-6 && worst_col <= 1e-6 && worst_mn <= 1e-6, os.str()};
}

Outcome degrees(ClassifierContext&) {
    long checked = 0;
    for (int r = 1; r <= 4; ++r)
        for (int n = 1; n <= 8; ++n) {
            const ClassType id = MultiPartition::empty(r).with_component(0, Partition(std::vector<int>(static_cast<std::size_t>(n), 1)));
            CharacterEvaluator at_identity(r, canonical_cycle_spec(id));
            for (const auto& lambda : enumerate_multipartitions(r, n)) {
                ++checked;
                std::int64_t value = 0;
                if (!at_identity.value(lambda).is_integer(&value) || value != degree_formula(lambda))
                    return {false, lambda.to_string()};
            }
        }
    return {true, std::to_string(checked) + " multipartitions"};
}

Outcome small_degree(ClassifierContext& ctx) {
    int checked = 0, violations = 0;
    std::string first;
    const auto groups = oracle_covered_groups(default_oracle_bound());
    for (const auto& key : groups) {
        const BruteTable& t = ctx.oracle(key);
        for (std::size_t row = 0; row < t.num_rows(); ++row) {
            const auto d = t.degrees[row];
            if (d < 2 || d > 4) continue;
            for (int p : primes_dividing(d)) {
                if (key.order() % p) continue;
                ++checked;
                for (std::size_t c = 0; c < t.num_classes(); ++c)
                    if (is_p_regular(t.class_types[c], p) && std::abs(t.values[row][c]) < t.tolerance) {
                        if (violations++ == 0) first = key.to_string() + " row " + std::to_string(row);
                        break;
                    }
            }
        }
    }
    return {violations == 0, std::to_string(checked) + " (character, prime) pairs in " + std::to_string(groups.size()) +
                                 " tables, " + std::to_string(violations) + " violations " + first};
}

}  // namespace

int main() {
    ClassifierContext ctx;
    const std::vector<std::pair<std::string, std::function<Outcome(ClassifierContext&)>>> criteria{
        {"1 symmetric group classification (r = 1)", symmetric_table},
        {"2 wreath product classification (r in {2,3})", wreath_table},
        {"3 closed form agrees with brute force", closed_vs_brute},
        {"4 worked Murnaghan-Nakayama examples", worked_examples},
        {"5 G(r,q,n) classification", rqn_classification},
        {"6 no quasi p-Steinberg characters at n = 9, 10", large_n},
        {"7 class counts by three routes", class_counts},
        {"8 orthogonality and MN-vs-oracle agreement", orthogonality},
        {"9 degree consistency", degrees},
        {"10 small-degree characters never vanish on p-regular classes", small_degree},
    };
    int failures = 0;
    for (const auto& [name, run] : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = run(ctx);
        } catch (const std::exception& e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("[%s] %s: %s (%.2fs)\n", out.pass ? "PASS" : "FAIL", name.c_str(), out.detail.c_str(), secs);
        std::fflush(stdout);
        if (!out.pass) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
