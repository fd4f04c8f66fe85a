#pragma once

// Concrete model of G(r,1,n) = Z_r wr S_n and its index-q subgroups G(r,q,n).

#include <cstdint>
#include <string>
#include <vector>

#include "reflecta/combinatorics.hpp"

namespace reflecta {

/// Identifies G(r,q,n); q must divide r.
struct GroupKey {
    int r = 1;
    int q = 1;
    int n = 1;

    GroupKey() = default;
    GroupKey(int r, int q, int n);

    int m() const noexcept { return r / q; }
    /// r^n * n! / q
    std::int64_t order() const;
    std::string to_string() const;

    friend bool operator==(const GroupKey&, const GroupKey&) = default;
    friend auto operator<=>(const GroupKey&, const GroupKey&) = default;
};

/// (z_1, ..., z_n; sigma). `perm` is one-line notation over 0..n-1, so
/// perm[i] is the image of point i. Serialized 1-based.
struct GroupElement {
    std::vector<int> colors;
    std::vector<int> perm;

    static GroupElement identity(int n);
    int n() const noexcept { return static_cast<int>(perm.size()); }

    friend bool operator==(const GroupElement&, const GroupElement&) = default;
    friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

/// A class type is an r-partite partition: component j collects the lengths
/// of the cycles whose color is j.
using ClassType = MultiPartition;

struct Cycle {
    std::vector<int> points;  // starts at its smallest point
    int color = 0;            // sum of the colors along the cycle, mod r
};

/// Throws InvalidInput unless `x` is a well-formed element of G(r,1,n).
void validate_element(const GroupElement& x, int r);

/// (z;s)(z';s') = (z + s.z'; s o s'), where (s.z')_i = z'_{s^-1(i)} and
/// (s o s')(i) = s(s'(i)).
GroupElement multiply(const GroupElement& a, const GroupElement& b, int r);
GroupElement inverse(const GroupElement& x, int r);
GroupElement power(const GroupElement& x, long long k, int r);

/// Cycles in increasing order of smallest point; fixed points included.
std::vector<Cycle> cycles_of(const GroupElement& x, int r);

/// Least k >= 1 with x^k = 1: lcm over cycles of length * ord(color).
std::int64_t element_order(const GroupElement& x, int r);

ClassType type_of(const GroupElement& x, int r);

/// sum_j j * l(lambda_j) == 0 (mod q).
bool type_in_subgroup(const ClassType& t, int q);

/// Centralizer order in G(r,1,n) of an element of type t.
std::int64_t centralizer_order(const ClassType& t);

/// Size of the G(r,1,n)-class of type t.
std::int64_t class_size(const ClassType& t);

/// Number of G(r,q,n)-classes the G(r,1,n)-class of type t splits into:
/// gcd(z, all cycle lengths, q), z being the gcd of the nonzero cycle colors
/// (0 when there are none).
int splitting_number(const ClassType& t, int q);

/// Order of any element of type t.
std::int64_t type_order(const ClassType& t);

bool is_p_regular(const ClassType& t, int p);

/// Every element of G(r,q,n): permutations in lexicographic order, colors
/// as an odometer inside. Throws ResourceLimit above `max_order`.
std::vector<GroupElement> enumerate_elements(const GroupKey& key, std::int64_t max_order = 10'000);

struct ConjugacyClass {
    GroupElement representative;
    std::vector<GroupElement> elements;
};

/// Orbits of G(r,q,n) acting on itself by conjugation, ordered by the
/// position of their type in enumerate_multipartitions and then by
/// representative (the least element of the class).
std::vector<ConjugacyClass> conjugacy_classes_brute(const GroupKey& key, std::int64_t max_order = 10'000);

/// Largest power of p dividing x.
std::int64_t p_part(std::int64_t x, int p);

bool is_prime(std::int64_t x);

/// Primes dividing x, increasing.
std::vector<int> primes_dividing(std::int64_t x);

/// Order of j in the additive group Z_r.
int additive_order(int j, int r);

}  // namespace reflecta
