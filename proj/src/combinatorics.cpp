#include "reflecta/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "reflecta/errors.hpp"

namespace reflecta {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw InvalidInput("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw InvalidInput("partition parts must be weakly decreasing");
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

int Partition::multiplicity(int k) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), k));
}

Partition Partition::conjugate() const {
    std::vector<int> out;
    if (!parts_.empty()) {
        out.resize(parts_.front());
        for (int p : parts_)
            for (int c = 0; c < p; ++c) ++out[c];
    }
    return Partition(std::move(out));
}

bool Partition::is_hook() const {
    if (parts_.empty()) return false;
    for (std::size_t i = 1; i < parts_.size(); ++i)
        if (parts_[i] != 1) return false;
    return true;
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    os << ']';
    return os.str();
}

MultiPartition::MultiPartition(std::vector<Partition> components)
    : components_(std::move(components)) {
    if (components_.empty())
        throw InvalidInput("a multipartition needs at least one component");
    for (const auto& c : components_) n_ += c.size();
}

MultiPartition MultiPartition::empty(int r) {
    if (r < 1) throw InvalidInput("r must be positive");
    return MultiPartition(std::vector<Partition>(static_cast<std::size_t>(r)));
}

MultiPartition MultiPartition::with_component(int j, Partition p) const {
    auto comps = components_;
    comps.at(static_cast<std::size_t>(j)) = std::move(p);
    return MultiPartition(std::move(comps));
}

std::vector<int> MultiPartition::support() const {
    std::vector<int> out;
    for (int j = 0; j < r(); ++j)
        if (!components_[j].empty()) out.push_back(j);
    return out;
}

std::string MultiPartition::to_string() const {
    std::string s = "[";
    for (std::size_t j = 0; j < components_.size(); ++j) {
        if (j) s += ',';
        s += components_[j].to_string();
    }
    return s + "]";
}

int Necklace::total_boxes() const {
    int total = 0;
    for (const auto& circle : nodes)
        for (const auto& p : circle) total += p.size();
    return total;
}

Necklace Necklace::rotated(int t) const {
    Necklace out = *this;
    const int shift = ((t % q) + q) % q;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < q; ++j) out.nodes[i][j] = nodes[i][(j + shift) % q];
    return out;
}

MultiPartition Necklace::to_multipartition() const {
    std::vector<Partition> comps(static_cast<std::size_t>(m * q));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < q; ++j) comps[j * m + i] = nodes[i][j];
    return MultiPartition(std::move(comps));
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int k = std::min(remaining, max_part); k >= 1; --k) {
        cur.push_back(k);
        partitions_rec(remaining - k, k, cur, out);
        cur.pop_back();
    }
}

void compositions_rec(int r, int remaining, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == r - 1) {
        cur.push_back(remaining);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int k = remaining; k >= 0; --k) {
        cur.push_back(k);
        compositions_rec(r, remaining - k, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
    if (n < 0) throw InvalidInput("n must be nonnegative");
    std::vector<Partition> out;
    std::vector<int> cur;
    partitions_rec(n, n, cur, out);
    return out;
}

long long partition_count(int n) {
    if (n < 0) return 0;
    std::vector<long long> ways(static_cast<std::size_t>(n) + 1, 0);
    ways[0] = 1;
    for (int k = 1; k <= n; ++k)
        for (int s = k; s <= n; ++s) ways[s] += ways[s - k];
    return ways[n];
}

std::vector<MultiPartition> enumerate_multipartitions(int r, int n) {
    if (r < 1) throw InvalidInput("r must be positive");
    if (n < 0) throw InvalidInput("n must be nonnegative");

    std::vector<std::vector<Partition>> by_size;
    for (int k = 0; k <= n; ++k) by_size.push_back(enumerate_partitions(k));

    std::vector<std::vector<int>> profiles;
    std::vector<int> cur;
    compositions_rec(r, n, cur, profiles);

    std::vector<MultiPartition> out;
    for (const auto& profile : profiles) {
        std::vector<std::size_t> idx(static_cast<std::size_t>(r), 0);
        while (true) {
            std::vector<Partition> comps;
            comps.reserve(static_cast<std::size_t>(r));
            for (int j = 0; j < r; ++j) comps.push_back(by_size[profile[j]][idx[j]]);
            out.emplace_back(std::move(comps));
            // odometer, last component fastest
            int j = r - 1;
            while (j >= 0) {
                if (++idx[j] < by_size[profile[j]].size()) break;
                idx[j] = 0;
                --j;
            }
            if (j < 0) break;
        }
    }
    return out;
}

std::vector<StripRemoval> remove_border_strips(const Partition& shape, int length) {
    if (length < 1) throw InvalidInput("strip length must be positive");
    std::vector<StripRemoval> out;
    const int rows = shape.length();
    if (length > shape.size()) return out;

    // Beta numbers: beta_i = parts_i + (rows - 1 - i), strictly decreasing.
    std::vector<int> beta(static_cast<std::size_t>(rows));
    for (int i = 0; i < rows; ++i) beta[i] = shape[i] + (rows - 1 - i);

    for (int i = 0; i < rows; ++i) {
        const int target = beta[i] - length;
        if (target < 0) continue;
        if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
        int height = 0;
        for (int b : beta)
            if (b > target && b < beta[i]) ++height;
        std::vector<int> moved = beta;
        moved[i] = target;
        std::sort(moved.rbegin(), moved.rend());
        std::vector<int> parts;
        for (int k = 0; k < rows; ++k) {
            const int part = moved[k] - (rows - 1 - k);
            if (part > 0) parts.push_back(part);
        }
        out.push_back({Partition(std::move(parts)), height});
    }
    return out;
}

long long hook_length_count(const Partition& shape) {
    const auto conj = shape.conjugate();
    // n! / product of hook lengths
    long long num = 1;
    for (int k = 2; k <= shape.size(); ++k) num *= k;
    long long den = 1;
    for (int i = 0; i < shape.length(); ++i)
        for (int j = 0; j < shape[i]; ++j) den *= (shape[i] - j - 1) + (conj[j] - i - 1) + 1;
    if (num % den != 0) throw InternalError("hook-length quotient is not integral");
    return num / den;
}

Necklace necklace_of(const MultiPartition& lambda, int q) {
    const int r = lambda.r();
    if (q < 1 || r % q != 0) throw InvalidInput("q must divide r");
    Necklace neck;
    neck.q = q;
    neck.m = r / q;
    neck.nodes.assign(static_cast<std::size_t>(neck.m), std::vector<Partition>(static_cast<std::size_t>(q)));
    for (int i = 0; i < neck.m; ++i)
        for (int j = 0; j < q; ++j) neck.nodes[i][j] = lambda[static_cast<std::size_t>(j * neck.m + i)];
    return neck;
}

Necklace necklace_canonical(const Necklace& neck) {
    Necklace best = neck;
    for (int t = 1; t < neck.q; ++t) {
        Necklace cand = neck.rotated(t);
        if (cand < best) best = std::move(cand);
    }
    return best;
}

}  // namespace reflecta
