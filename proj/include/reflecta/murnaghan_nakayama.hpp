#pragma once

// Irreducible characters of G(r,1,n) by the Murnaghan-Nakayama rule:
//
//   chi^lambda(pi) = sum over r-partite ribbon tableaux T of shape lambda
//                    whose i-th ribbon has the length of the i-th cycle of pi
//                    of  prod_i (-1)^{ht_T(i)} w^{f_T(i) * z(c_i)}
//
// where f_T(i) is the component holding ribbon i and z(c_i) the cycle color.

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "reflecta/combinatorics.hpp"
#include "reflecta/cyclotomic.hpp"
#include "reflecta/wreath.hpp"

namespace reflecta {

struct CycleEntry {
    int length = 1;
    int color = 0;  // residue mod r

    friend bool operator==(const CycleEntry&, const CycleEntry&) = default;
};

/// Cycle lengths and colors in a fixed order.
using CycleSpec = std::vector<CycleEntry>;

/// Decreasing length, ties by increasing color.
CycleSpec canonical_cycle_spec(const ClassType& t);

/// Evaluates characters on one fixed cycle specification. The memo table
/// lives as long as the evaluator and is shared by every lambda evaluated
/// through it, which is what makes whole table columns cheap.
class CharacterEvaluator {
public:
    CharacterEvaluator(int r, CycleSpec spec);

    int r() const noexcept { return r_; }
    const CycleSpec& spec() const noexcept { return spec_; }

    CycloInt value(const MultiPartition& lambda);

private:
    using Powers = std::vector<std::int64_t>;  // coefficients of 1, w, ..., w^(r-1)

    const Powers& eval(const MultiPartition& shape, std::size_t index);

    int r_;
    CycleSpec spec_;
    std::unordered_map<std::string, Powers> memo_;
};

/// chi^lambda on the class of type t. Throws InvalidInput if r or n differ.
CycloInt character_value(const MultiPartition& lambda, const ClassType& t);

/// chi^lambda with the cycles processed in the given order.
CycloInt character_value(const MultiPartition& lambda, const CycleSpec& spec);

/// chi^lambda(1), computed through the rule and checked against
/// degree_formula; a mismatch throws InternalError.
std::int64_t degree(const MultiPartition& lambda);

/// n! / prod |lambda_j|!  *  prod f^{lambda_j}, with f from the hook-length formula.
std::int64_t degree_formula(const MultiPartition& lambda);

/// Character of S_n indexed by mu on the class of cycle type class_shape.
std::int64_t sym_character(const Partition& mu, const Partition& class_shape);

/// Type of the S_n class embedded with all colors zero.
ClassType uncolored_type(int r, const Partition& cycle_shape);

struct CharTable {
    int r = 1;
    int n = 0;
    std::vector<ClassType> classes;
    std::vector<std::int64_t> class_sizes;
    std::vector<MultiPartition> irreducibles;
    std::vector<std::int64_t> degrees;
    std::vector<std::vector<CycloInt>> values;  // [irreducible][class]

    std::int64_t group_order() const;
    std::size_t class_index(const ClassType& t) const;
    std::size_t irreducible_index(const MultiPartition& lambda) const;
    const CycloInt& at(const MultiPartition& lambda, const ClassType& t) const {
        return values[irreducible_index(lambda)][class_index(t)];
    }
};

/// Full exact table of G(r,1,n); classes and irreducibles both in
/// enumerate_multipartitions order. Throws ResourceLimit if |Y(r,n)| > max_size.
CharTable character_table_r1(int r, int n, std::size_t max_size = 1000);

}  // namespace reflecta
