#pragma once

// Integer partitions, r-partite partitions, border strips and (m,q)-necklaces.

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace reflecta {

/// A weakly decreasing sequence of positive parts. The empty sequence is the
/// unique partition of 0.
class Partition {
public:
    Partition() = default;
    /// Throws InvalidInput unless `parts` is weakly decreasing and positive.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int size() const noexcept { return size_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }
    int operator[](std::size_t i) const { return parts_[i]; }

    /// Multiplicity of part k.
    int multiplicity(int k) const;

    /// The conjugate (transposed) partition.
    Partition conjugate() const;

    /// (a, 1, ..., 1) with a >= 1; this includes (n) and (1^n).
    bool is_hook() const;

    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

inline bool is_hook(const Partition& p) { return p.is_hook(); }

/// An r-tuple of partitions. Indexes both the class types and the irreducible
/// characters of G(r,1,n).
class MultiPartition {
public:
    MultiPartition() = default;
    explicit MultiPartition(std::vector<Partition> components);

    /// Empty r-tuple.
    static MultiPartition empty(int r);

    int r() const noexcept { return static_cast<int>(components_.size()); }
    int n() const noexcept { return n_; }
    const std::vector<Partition>& components() const noexcept { return components_; }
    const Partition& operator[](std::size_t j) const { return components_[j]; }

    MultiPartition with_component(int j, Partition p) const;

    /// Indices of the non-empty components, ascending.
    std::vector<int> support() const;

    std::string to_string() const;

    friend bool operator==(const MultiPartition&, const MultiPartition&) = default;
    friend auto operator<=>(const MultiPartition& a, const MultiPartition& b) {
        return a.components_ <=> b.components_;
    }

private:
    std::vector<Partition> components_;
    int n_ = 0;
};

/// Result of peeling one border strip (ribbon) off a partition.
struct StripRemoval {
    Partition remaining;
    int height = 0;  // rows spanned by the strip, minus one

    friend bool operator==(const StripRemoval&, const StripRemoval&) = default;
};

/// m circles of q nodes each; nodes[i][j] holds component j*m + i.
struct Necklace {
    int m = 1;
    int q = 1;
    std::vector<std::vector<Partition>> nodes;

    int total_boxes() const;
    /// Simultaneous rotation of every circle: result[i][j] = nodes[i][(j+t) mod q].
    Necklace rotated(int t) const;
    /// Inverse of necklace_of.
    MultiPartition to_multipartition() const;

    friend bool operator==(const Necklace&, const Necklace&) = default;
    friend auto operator<=>(const Necklace& a, const Necklace& b) { return a.nodes <=> b.nodes; }
};

/// All partitions of n in lexicographically descending order.
std::vector<Partition> enumerate_partitions(int n);

/// p(n), the number of partitions of n.
long long partition_count(int n);

/// All of Y(r,n): sizes of the components descend lexicographically
/// ((n,0,...) first), and within a size profile each component runs through
/// enumerate_partitions order.
std::vector<MultiPartition> enumerate_multipartitions(int r, int n);

/// Every way of removing an edge-connected, 2x2-free skew strip of exactly
/// `length` boxes from `shape`. Ordered by the row in which the strip ends
/// (top row first).
std::vector<StripRemoval> remove_border_strips(const Partition& shape, int length);

/// Number of standard Young tableaux, via the hook-length formula.
long long hook_length_count(const Partition& shape);

Necklace necklace_of(const MultiPartition& lambda, int q);

/// Lexicographically least of the q simultaneous rotations.
Necklace necklace_canonical(const Necklace& neck);

}  // namespace reflecta
