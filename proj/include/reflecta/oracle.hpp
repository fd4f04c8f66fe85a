#pragma once

// Floating-point character tables of small G(r,q,n), computed from scratch
// by diagonalizing the class algebra (Burnside's method). Nothing here
// depends on the Murnaghan-Nakayama engine except the explicit comparison
// helpers, so the tables serve as an independent check on it.

#include <complex>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "reflecta/combinatorics.hpp"
#include "reflecta/wreath.hpp"

namespace reflecta {

struct OracleOptions {
    double cluster_tolerance = 1e-8;     // eigenvalues closer than this count as a collision
    double validation_tolerance = 1e-6;  // orthogonality, degree rounding, matching
    std::uint64_t seed = 0x5eed'2024ULL;
    int max_attempts = 8;
    std::int64_t max_order = 2000;
};

/// Default bound on |G| for the oracle: 2000, or REFLECTA_MAX_ORDER if set.
std::int64_t default_oracle_bound();

OracleOptions default_oracle_options();

struct ValidationReport {
    double row_orthogonality_error = 0.0;     // max |<chi_a, chi_b> - delta_ab|
    double column_orthogonality_error = 0.0;  // same for the normalized column relation
    double degree_rounding_error = 0.0;
    std::int64_t sum_of_squared_degrees = 0;
    int attempts = 0;
};

struct BruteTable {
    GroupKey key;
    std::vector<GroupElement> representatives;
    std::vector<ClassType> class_types;  // G(r,1,n) type of each class
    std::vector<std::int64_t> class_sizes;
    std::vector<std::int64_t> degrees;
    std::vector<std::vector<std::complex<double>>> values;  // [row][class]
    double tolerance = 1e-6;
    std::uint64_t seed = 0;
    ValidationReport report;

    std::size_t num_classes() const { return class_sizes.size(); }
    std::size_t num_rows() const { return values.size(); }
    std::size_t identity_class() const;
};

/// Throws ResourceLimit above options.max_order, DegeneracyUnresolved if
/// every random combination had a repeated eigenvalue, ValidationFailure if
/// the finished table fails orthogonality or the degree checks.
BruteTable brute_table(const GroupKey& key, const OracleOptions& options = default_oracle_options());

/// Rows of `table` whose sum is Res chi^lambda: each appears once and there
/// are exactly |H_lambda| of them. Throws ValidationFailure otherwise.
std::vector<std::size_t> match_restriction(const GroupKey& key, const MultiPartition& lambda, const BruteTable& table);

/// Values of the matched constituent rows on every class, keyed by
/// (row, class). Checks agreement with chi^lambda / |H_lambda| on classes
/// that do not split and throws ValidationFailure on disagreement.
std::map<std::pair<std::size_t, std::size_t>, std::complex<double>> split_class_values(const GroupKey& key,
                                                                                      const MultiPartition& lambda,
                                                                                      const BruteTable& table);

/// Every G(r,q,n) with 2 <= n <= 6, r <= 6 and |G| <= max_order.
std::vector<GroupKey> oracle_covered_groups(std::int64_t max_order);

/// Lazily built tables keyed by group. Not synchronized.
class OracleCache {
public:
    explicit OracleCache(OracleOptions options = default_oracle_options()) : options_(options) {}

    const BruteTable& get(const GroupKey& key);
    const OracleOptions& options() const noexcept { return options_; }

private:
    OracleOptions options_;
    std::map<GroupKey, BruteTable> tables_;
};

}  // namespace reflecta
