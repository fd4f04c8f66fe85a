#pragma once

// JSON and CSV encodings. Every top-level JSON document carries
// "schema": "reflecta/1".

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "reflecta/classifier.hpp"
#include "reflecta/clifford.hpp"
#include "reflecta/combinatorics.hpp"
#include "reflecta/cyclotomic.hpp"
#include "reflecta/murnaghan_nakayama.hpp"
#include "reflecta/oracle.hpp"
#include "reflecta/wreath.hpp"

namespace reflecta {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kSchema = "reflecta/1";

Json to_json(const Partition& p);
Json to_json(const MultiPartition& lambda);
Json to_json(const CycloInt& x);
Json to_json(const GroupKey& key);
Json to_json(const GroupElement& x);  // perm is 1-based
Json to_json(const NecklaceLabel& label);
Json to_json(const CharTable& table);
Json to_json(const QSVerdict& v);
Json to_json(const BruteTable& table);

/// Prepends the schema field to an object.
Json with_schema(Json object);

/// Throws InvalidInput on anything that is not an array of weakly decreasing
/// positive integer arrays.
Partition partition_from_json(const Json& j);
MultiPartition multipartition_from_json(const Json& j);
CycloInt cyclo_from_json(const Json& j);
GroupElement element_from_json(const Json& j);

/// Parses command-line text such as "[[2,1],[],[1,1,1]]"; if r > 0 the number
/// of components must equal r.
MultiPartition parse_multipartition(std::string_view text, int r = 0);

/// RFC 4180 field quoting.
std::string csv_field(std::string_view s);

/// A header of class types, a row of class sizes, then one row per
/// irreducible with pretty-printed values.
std::string chartable_csv(const CharTable& table);

/// Fixed-width human rendering.
std::string chartable_pretty(const CharTable& table);

}  // namespace reflecta
