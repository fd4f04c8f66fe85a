#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "reflecta/errors.hpp"
#include "reflecta/io.hpp"

using namespace reflecta;

TEST(Json, Partitions) {
    EXPECT_EQ(to_json(Partition{}).dump(), "[]");
    EXPECT_EQ(to_json(Partition{2, 1}).dump(), "[2,1]");
    const MultiPartition lambda({Partition{2, 1}, Partition{}, Partition{1, 1, 1}});
    EXPECT_EQ(to_json(lambda).dump(), "[[2,1],[],[1,1,1]]");
    EXPECT_EQ(multipartition_from_json(to_json(lambda)), lambda);
}

TEST(Json, CommandLineMultipartitions) {
    EXPECT_EQ(parse_multipartition("[[2,1],[],[1,1,1]]", 3),
              MultiPartition({Partition{2, 1}, Partition{}, Partition{1, 1, 1}}));
    EXPECT_THROW(parse_multipartition("[[2,1],[]", 0), InvalidInput);
    EXPECT_THROW(parse_multipartition("[[1,2]]", 0), InvalidInput);
    EXPECT_THROW(parse_multipartition("[[2,1],[]]", 3), InvalidInput);
    EXPECT_THROW(parse_multipartition("[]", 0), InvalidInput);
    EXPECT_THROW(parse_multipartition("[[1.5]]", 0), InvalidInput);
    EXPECT_THROW(parse_multipartition("{\"a\":1}", 0), InvalidInput);
}

TEST(Json, CyclotomicRoundTrip) {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        const int r = 1 + static_cast<int>(rng() % 12);
        std::vector<std::int64_t> c(static_cast<std::size_t>(r));
        for (auto& x : c) x = static_cast<std::int64_t>(rng() % 9) - 4;
        const CycloInt v = CycloInt::from_powers(r, c);
        const Json j = to_json(v);
        EXPECT_EQ(j["order"], r);
        EXPECT_EQ(j["coeffs"].size(), static_cast<std::size_t>(euler_phi(r)));
        EXPECT_EQ(cyclo_from_json(j), v);
    }
}

TEST(Json, Elements) {
    GroupElement x;
    x.colors = {1, 0, 2};
    x.perm = {1, 2, 0};
    const Json j = to_json(x);
    EXPECT_EQ(j.dump(), R"({"colors":[1,0,2],"perm":[2,3,1]})");
    EXPECT_EQ(element_from_json(j), x);
}

TEST(Json, Labels) {
    const auto labels = labels_of(MultiPartition({Partition{2}, Partition{2}}), 2);
    ASSERT_EQ(labels.size(), 2u);
    EXPECT_EQ(to_json(labels[1]).dump(), R"({"necklace":[[[2],[2]]],"delta":1,"stab":2})");
}

TEST(Json, SchemaTag) {
    const Json j = with_schema(Json{{"x", 1}});
    EXPECT_EQ(j.dump(), R"({"schema":"reflecta/1","x":1})");
    EXPECT_THROW(with_schema(Json::array()), InvalidInput);
}

TEST(Json, CharTable) {
    const CharTable t = character_table_r1(2, 2);
    const Json j = to_json(t);
    ASSERT_EQ(j["classes"].size(), 5u);
    EXPECT_EQ(j["classes"][0][0].dump(), "[[2],[]]");
    EXPECT_EQ(j["classes"][0][1], 2);
    EXPECT_EQ(j["irreducibles"].size(), 5u);
    EXPECT_EQ(j["values"].size(), 5u);
    EXPECT_EQ(cyclo_from_json(j["values"][2][4]), t.values[2][4]);
}

TEST(Json, Verdicts) {
    QSVerdict v;
    v.group = GroupKey(2, 1, 3);
    v.lambda = MultiPartition({Partition{2, 1}, Partition{}});
    v.prime = 3;
    v.quasi = false;
    v.witness = MultiPartition({Partition{3}, Partition{}});
    v.degree = 2;
    const Json j = to_json(v);
    EXPECT_EQ(j["witness"].dump(), "[[3],[]]");
    EXPECT_FALSE(j["quasi"].get<bool>());
    EXPECT_FALSE(j.contains("label"));
}

TEST(Json, BruteTable) {
    const BruteTable t = brute_table(GroupKey(2, 2, 2));
    const Json j = to_json(t);
    EXPECT_EQ(j["seed"], t.seed);
    EXPECT_EQ(j["report"]["sum_of_squared_degrees"], 4);
    EXPECT_EQ(j["classes"].size(), 4u);
    EXPECT_EQ(j["values"][0][0].size(), 2u);
}

TEST(Csv, Quoting) {
    EXPECT_EQ(csv_field("plain"), "plain");
    EXPECT_EQ(csv_field("a,b"), "\"a,b\"");
    EXPECT_EQ(csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
    EXPECT_EQ(csv_field("two\nlines"), "\"two\nlines\"");
}

TEST(Csv, CharTableShape) {
    const std::string csv = chartable_csv(character_table_r1(2, 2));
    std::istringstream in(csv);
    std::string line;
    int lines = 0;
    while (std::getline(in, line)) ++lines;
    EXPECT_EQ(lines, 7);
    EXPECT_EQ(csv.rfind("lambda,\"[[2],[]]\"", 0), 0u) << csv;
    EXPECT_NE(csv.find("class size,2,1,2,2,1"), std::string::npos) << csv;
}

TEST(Pretty, HasOneLinePerRow) {
    const std::string s = chartable_pretty(character_table_r1(3, 2));
    EXPECT_EQ(std::count(s.begin(), s.end(), '\n'), 11);
}
