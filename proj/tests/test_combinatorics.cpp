#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "reflecta/combinatorics.hpp"
#include "reflecta/errors.hpp"

using namespace reflecta;

namespace {

// coin-change count of partitions, independent of the enumerator
std::vector<long long> partition_numbers(int n) {
    std::vector<long long> p(static_cast<std::size_t>(n + 1), 0);
    p[0] = 1;
    for (int part = 1; part <= n; ++part)
        for (int s = part; s <= n; ++s) p[static_cast<std::size_t>(s)] += p[static_cast<std::size_t>(s - part)];
    return p;
}

long long multipartition_count(int r, int n) {
    const auto p = partition_numbers(n);
    std::vector<long long> acc(static_cast<std::size_t>(n + 1), 0);
    acc[0] = 1;
    for (int j = 0; j < r; ++j) {
        std::vector<long long> next(acc.size(), 0);
        for (int a = 0; a <= n; ++a)
            for (int b = 0; a + b <= n; ++b)
                next[static_cast<std::size_t>(a + b)] += acc[static_cast<std::size_t>(a)] * p[static_cast<std::size_t>(b)];
        acc = next;
    }
    return acc[static_cast<std::size_t>(n)];
}

using Cells = std::set<std::pair<int, int>>;

Cells cells_of(const Partition& p) {
    Cells c;
    for (int i = 0; i < p.length(); ++i)
        for (int j = 0; j < p[static_cast<std::size_t>(i)]; ++j) c.insert({i, j});
    return c;
}

bool is_ribbon(const Cells& skew) {
    if (skew.empty()) return false;
    for (const auto& [i, j] : skew)
        if (skew.count({i + 1, j}) && skew.count({i, j + 1}) && skew.count({i + 1, j + 1})) return false;
    Cells seen{*skew.begin()};
    std::vector<std::pair<int, int>> stack{*skew.begin()};
    while (!stack.empty()) {
        auto [i, j] = stack.back();
        stack.pop_back();
        for (auto nb : {std::pair{i + 1, j}, std::pair{i - 1, j}, std::pair{i, j + 1}, std::pair{i, j - 1}})
            if (skew.count(nb) && seen.insert(nb).second) stack.push_back(nb);
    }
    return seen.size() == skew.size();
}

// every mu inside shape with |shape/mu| = length and a ribbon difference
std::map<Partition, int> brute_strips(const Partition& shape, int length) {
    std::map<Partition, int> out;
    if (length > shape.size()) return out;
    const Cells outer = cells_of(shape);
    for (const auto& mu : enumerate_partitions(shape.size() - length)) {
        if (mu.length() > shape.length()) continue;
        bool inside = true;
        for (int i = 0; i < mu.length(); ++i)
            if (mu[static_cast<std::size_t>(i)] > shape[static_cast<std::size_t>(i)]) inside = false;
        if (!inside) continue;
        Cells skew = outer;
        for (const auto& c : cells_of(mu)) skew.erase(c);
        if (!is_ribbon(skew)) continue;
        std::set<int> rows;
        for (const auto& c : skew) rows.insert(c.first);
        out[mu] = static_cast<int>(rows.size()) - 1;
    }
    return out;
}

long long syt_count(const Partition& shape) {
    if (shape.size() == 0) return 1;
    long long total = 0;
    auto parts = shape.parts();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i + 1 < parts.size() && parts[i + 1] == parts[i]) continue;
        auto smaller = parts;
        if (--smaller[i] == 0) smaller.pop_back();
        total += syt_count(Partition(smaller));
    }
    return total;
}

const MultiPartition& exn() {
    using P = Partition;
    static const MultiPartition lambda({P{2, 1}, P{2, 2}, P{1, 1}, P{1}, P{1, 1}, P{}, P{2, 1}, P{2, 2}, P{1, 1}, P{1},
                                        P{1, 1}, P{}});
    return lambda;
}

}  // namespace

TEST(Partition, ValidatesParts) {
    EXPECT_THROW(Partition({1, 2}), InvalidInput);
    EXPECT_THROW(Partition({2, 0}), InvalidInput);
    EXPECT_THROW(Partition({-1}), InvalidInput);
    const Partition p{3, 1, 1};
    EXPECT_EQ(p.size(), 5);
    EXPECT_EQ(p.length(), 3);
    EXPECT_EQ(p.multiplicity(1), 2);
    EXPECT_EQ(Partition{}.size(), 0);
    EXPECT_EQ(Partition{}.to_string(), "[]");
    EXPECT_EQ(p.to_string(), "[3,1,1]");
}

TEST(Partition, ConjugateIsAnInvolution) {
    for (int n = 0; n <= 9; ++n)
        for (const auto& p : enumerate_partitions(n)) {
            EXPECT_EQ(p.conjugate().conjugate(), p);
            EXPECT_EQ(p.conjugate().size(), n);
        }
    EXPECT_EQ((Partition{3, 1}.conjugate()), (Partition{2, 1, 1}));
}

TEST(Partition, Hooks) {
    EXPECT_TRUE((Partition{4, 1, 1}.is_hook()));
    EXPECT_FALSE((Partition{2, 2}.is_hook()));
    for (int n = 1; n <= 8; ++n) {
        EXPECT_TRUE(Partition({n}).is_hook());
        EXPECT_TRUE(Partition(std::vector<int>(static_cast<std::size_t>(n), 1)).is_hook());
    }
}

TEST(EnumeratePartitions, SmallCases) {
    ASSERT_EQ(enumerate_partitions(0).size(), 1u);
    EXPECT_TRUE(enumerate_partitions(0)[0].empty());
    const std::vector<Partition> four{Partition{4}, Partition{3, 1}, Partition{2, 2}, Partition{2, 1, 1},
                                      Partition{1, 1, 1, 1}};
    EXPECT_EQ(enumerate_partitions(4), four);
    EXPECT_EQ(enumerate_partitions(8).size(), 22u);
}

TEST(EnumeratePartitions, CountsDistinctAndDescending) {
    const auto p = partition_numbers(20);
    for (int n = 0; n <= 20; ++n) {
        const auto all = enumerate_partitions(n);
        EXPECT_EQ(static_cast<long long>(all.size()), p[static_cast<std::size_t>(n)]) << n;
        EXPECT_EQ(partition_count(n), p[static_cast<std::size_t>(n)]);
        for (std::size_t i = 1; i < all.size(); ++i) EXPECT_GT(all[i - 1], all[i]);
        for (const auto& q : all) EXPECT_EQ(q.size(), n);
    }
}

TEST(EnumerateMultipartitions, SmallCases) {
    using P = Partition;
    const std::vector<MultiPartition> y22{MultiPartition({P{2}, P{}}), MultiPartition({P{1, 1}, P{}}),
                                          MultiPartition({P{1}, P{1}}), MultiPartition({P{}, P{2}}),
                                          MultiPartition({P{}, P{1, 1}})};
    EXPECT_EQ(enumerate_multipartitions(2, 2), y22);
    EXPECT_EQ(enumerate_multipartitions(2, 4).size(), 20u);
    EXPECT_EQ(enumerate_multipartitions(1, 3).size(), 3u);
    EXPECT_EQ(enumerate_multipartitions(3, 2).size(), 9u);
}

TEST(EnumerateMultipartitions, MatchesConvolution) {
    for (int r = 1; r <= 4; ++r)
        for (int n = 0; n <= 8; ++n) {
            const auto all = enumerate_multipartitions(r, n);
            EXPECT_EQ(static_cast<long long>(all.size()), multipartition_count(r, n)) << r << "," << n;
            std::set<MultiPartition> distinct(all.begin(), all.end());
            EXPECT_EQ(distinct.size(), all.size());
            for (const auto& lambda : all) {
                EXPECT_EQ(lambda.r(), r);
                EXPECT_EQ(lambda.n(), n);
            }
        }
}

TEST(BorderStrips, SpecificShapes) {
    const auto one = remove_border_strips(Partition{1}, 1);
    ASSERT_EQ(one.size(), 1u);
    EXPECT_TRUE(one[0].remaining.empty());
    EXPECT_EQ(one[0].height, 0);

    // (2,1) has a single 3-ribbon: the whole diagram
    const auto hook = remove_border_strips(Partition{2, 1}, 3);
    ASSERT_EQ(hook.size(), 1u);
    EXPECT_TRUE(hook[0].remaining.empty());
    EXPECT_EQ(hook[0].height, 1);

    const auto square = remove_border_strips(Partition{2, 2}, 3);
    ASSERT_EQ(square.size(), 1u);
    EXPECT_EQ(square[0].remaining, Partition{1});
    EXPECT_EQ(square[0].height, 1);

    EXPECT_TRUE(remove_border_strips(Partition{2, 2}, 4).empty());
    EXPECT_TRUE(remove_border_strips(Partition{1}, 2).empty());
}

TEST(BorderStrips, AgreeWithExhaustiveSkewSearch) {
    for (int n = 1; n <= 9; ++n)
        for (const auto& shape : enumerate_partitions(n))
            for (int len = 1; len <= n; ++len) {
                const auto expected = brute_strips(shape, len);
                const auto got = remove_border_strips(shape, len);
                std::map<Partition, int> actual;
                for (const auto& s : got) {
                    EXPECT_TRUE(actual.emplace(s.remaining, s.height).second);
                    EXPECT_GE(s.height, 0);
                    EXPECT_LT(s.height, shape.length());
                    EXPECT_EQ(s.remaining.size() + len, shape.size());
                }
                EXPECT_EQ(actual, expected) << shape.to_string() << " length " << len;
            }
}

TEST(HookLength, MatchesTableauRecursion) {
    for (int n = 0; n <= 10; ++n)
        for (const auto& p : enumerate_partitions(n)) EXPECT_EQ(hook_length_count(p), syt_count(p)) << p.to_string();
    EXPECT_EQ(hook_length_count(Partition{5, 2, 1}), 64);
}

TEST(Necklace, LayoutOfTheTwelveComponentExample) {
    const Necklace neck = necklace_of(exn(), 4);
    EXPECT_EQ(neck.m, 3);
    EXPECT_EQ(neck.q, 4);
    EXPECT_EQ(neck.total_boxes(), 24);
    using P = Partition;
    const std::vector<Partition> first{P{2, 1}, P{1}, P{2, 1}, P{1}};
    EXPECT_EQ(neck.nodes[0], first);
    EXPECT_EQ(necklace_canonical(neck.rotated(2)), necklace_canonical(neck));
    EXPECT_EQ(neck.rotated(2), neck);
    EXPECT_NE(neck.rotated(1), neck);
}

TEST(Necklace, DegenerateShapes) {
    const MultiPartition lambda({Partition{2}, Partition{1}, Partition{}, Partition{1, 1}});
    const Necklace q1 = necklace_of(lambda, 1);
    EXPECT_EQ(q1.m, 4);
    for (int i = 0; i < 4; ++i) ASSERT_EQ(q1.nodes[static_cast<std::size_t>(i)].size(), 1u);
    const Necklace q4 = necklace_of(lambda, 4);
    EXPECT_EQ(q4.m, 1);
    EXPECT_EQ(q4.nodes[0], lambda.components());
    EXPECT_THROW(necklace_of(lambda, 3), InvalidInput);
}

TEST(Necklace, RoundTripAndCanonicalForm) {
    for (int r : {2, 3, 4, 6})
        for (int q = 1; q <= r; ++q) {
            if (r % q) continue;
            for (int n = 0; n <= 3; ++n)
                for (const auto& lambda : enumerate_multipartitions(r, n)) {
                    const Necklace neck = necklace_of(lambda, q);
                    EXPECT_EQ(neck.to_multipartition(), lambda);
                    EXPECT_EQ(neck.total_boxes(), n);
                    const Necklace canon = necklace_canonical(neck);
                    EXPECT_EQ(necklace_canonical(canon), canon);
                    std::set<Necklace> orbit;
                    for (int t = 0; t < q; ++t) {
                        EXPECT_EQ(necklace_canonical(neck.rotated(t)), canon);
                        EXPECT_LE(canon, neck.rotated(t));
                        orbit.insert(neck.rotated(t));
                    }
                    EXPECT_EQ(q % static_cast<int>(orbit.size()), 0);
                }
        }
}

TEST(Necklace, RandomRotationsHaveOneCanonicalForm) {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const int q = 1 + static_cast<int>(rng() % 4);
        const int m = 1 + static_cast<int>(rng() % 3);
        const auto all = enumerate_multipartitions(q * m, 4);
        const auto& lambda = all[rng() % all.size()];
        const Necklace neck = necklace_of(lambda, q);
        const int t = static_cast<int>(rng() % 8);
        EXPECT_EQ(necklace_canonical(neck.rotated(t)), necklace_canonical(neck));
    }
}
