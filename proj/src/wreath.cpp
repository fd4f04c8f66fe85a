#include "reflecta/wreath.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "reflecta/errors.hpp"

namespace reflecta {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_mul_overflow(a, b, &out)) throw ResourceLimit("integer overflow in group order arithmetic");
    return out;
}

std::int64_t factorial(int n) {
    std::int64_t f = 1;
    for (int k = 2; k <= n; ++k) f = checked_mul(f, k);
    return f;
}

std::int64_t ipow(std::int64_t base, int e) {
    std::int64_t out = 1;
    for (int i = 0; i < e; ++i) out = checked_mul(out, base);
    return out;
}

void require_same_shape(const GroupElement& a, const GroupElement& b) {
    if (a.perm.size() != b.perm.size() || a.colors.size() != b.colors.size())
        throw InvalidInput("group elements of different degree");
}

}  // namespace

GroupKey::GroupKey(int r_, int q_, int n_) : r(r_), q(q_), n(n_) {
    if (r < 1 || q < 1 || n < 1) throw InvalidInput("r, q and n must be positive");
    if (r % q != 0) throw InvalidInput("q must divide r");
}

std::int64_t GroupKey::order() const { return checked_mul(ipow(r, n), factorial(n)) / q; }

std::string GroupKey::to_string() const {
    return "G(" + std::to_string(r) + "," + std::to_string(q) + "," + std::to_string(n) + ")";
}

GroupElement GroupElement::identity(int n) {
    GroupElement e;
    e.colors.assign(static_cast<std::size_t>(n), 0);
    e.perm.resize(static_cast<std::size_t>(n));
    std::iota(e.perm.begin(), e.perm.end(), 0);
    return e;
}

void validate_element(const GroupElement& x, int r) {
    const auto n = x.perm.size();
    if (x.colors.size() != n) throw InvalidInput("colors and permutation differ in length");
    std::vector<bool> seen(n, false);
    for (int p : x.perm) {
        if (p < 0 || static_cast<std::size_t>(p) >= n || seen[static_cast<std::size_t>(p)])
            throw InvalidInput("not a permutation");
        seen[static_cast<std::size_t>(p)] = true;
    }
    for (int z : x.colors)
        if (z < 0 || z >= r) throw InvalidInput("color out of range");
}

GroupElement multiply(const GroupElement& a, const GroupElement& b, int r) {
    require_same_shape(a, b);
    const auto n = a.perm.size();
    GroupElement out;
    out.colors.resize(n);
    out.perm.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        // (a.perm . b.colors) at position a.perm[i] is b.colors[i]
        const auto target = static_cast<std::size_t>(a.perm[i]);
        out.colors[target] = (a.colors[target] + b.colors[i]) % r;
        out.perm[i] = a.perm[static_cast<std::size_t>(b.perm[i])];
    }
    return out;
}

GroupElement inverse(const GroupElement& x, int r) {
    const auto n = x.perm.size();
    GroupElement out;
    out.colors.resize(n);
    out.perm.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto img = static_cast<std::size_t>(x.perm[i]);
        out.perm[img] = static_cast<int>(i);
        // (-s^-1 . z)_i = -z_{s(i)}
        out.colors[i] = (r - x.colors[img]) % r;
    }
    return out;
}

GroupElement power(const GroupElement& x, long long k, int r) {
    GroupElement base = k < 0 ? inverse(x, r) : x;
    unsigned long long e = k < 0 ? static_cast<unsigned long long>(-k) : static_cast<unsigned long long>(k);
    GroupElement acc = GroupElement::identity(x.n());
    while (e) {
        if (e & 1U) acc = multiply(acc, base, r);
        base = multiply(base, base, r);
        e >>= 1U;
    }
    return acc;
}

std::vector<Cycle> cycles_of(const GroupElement& x, int r) {
    const auto n = x.perm.size();
    std::vector<bool> seen(n, false);
    std::vector<Cycle> out;
    for (std::size_t start = 0; start < n; ++start) {
        if (seen[start]) continue;
        Cycle c;
        std::size_t p = start;
        while (!seen[p]) {
            seen[p] = true;
            c.points.push_back(static_cast<int>(p));
            c.color = (c.color + x.colors[p]) % r;
            p = static_cast<std::size_t>(x.perm[p]);
        }
        out.push_back(std::move(c));
    }
    return out;
}

int additive_order(int j, int r) { return r / std::gcd(((j % r) + r) % r, r); }

std::int64_t element_order(const GroupElement& x, int r) {
    std::int64_t out = 1;
    for (const auto& c : cycles_of(x, r))
        out = std::lcm(out, static_cast<std::int64_t>(c.points.size()) * additive_order(c.color, r));
    return out;
}

ClassType type_of(const GroupElement& x, int r) {
    std::vector<std::vector<int>> parts(static_cast<std::size_t>(r));
    for (const auto& c : cycles_of(x, r)) parts[static_cast<std::size_t>(c.color)].push_back(static_cast<int>(c.points.size()));
    std::vector<Partition> comps;
    comps.reserve(parts.size());
    for (auto& p : parts) {
        std::sort(p.rbegin(), p.rend());
        comps.emplace_back(std::move(p));
    }
    return MultiPartition(std::move(comps));
}

bool type_in_subgroup(const ClassType& t, int q) {
    if (q < 1 || t.r() % q != 0) throw InvalidInput("q must divide r");
    long long sum = 0;
    for (int j = 1; j < t.r(); ++j) sum += static_cast<long long>(j) * t[static_cast<std::size_t>(j)].length();
    return sum % q == 0;
}

std::int64_t centralizer_order(const ClassType& t) {
    std::int64_t c = 1;
    for (const auto& comp : t.components()) {
        for (int k = 1; k <= comp.size(); ++k) {
            const int mk = comp.multiplicity(k);
            if (mk == 0) continue;
            c = checked_mul(c, checked_mul(ipow(k, mk), factorial(mk)));
        }
        c = checked_mul(c, ipow(t.r(), comp.length()));
    }
    return c;
}

std::int64_t class_size(const ClassType& t) {
    const std::int64_t total = checked_mul(ipow(t.r(), t.n()), factorial(t.n()));
    return total / centralizer_order(t);
}

int splitting_number(const ClassType& t, int q) {
    if (!type_in_subgroup(t, q)) throw InvalidInput("class type does not lie in G(r,q,n)");
    int z = 0;
    for (int j = 1; j < t.r(); ++j)
        if (!t[static_cast<std::size_t>(j)].empty()) z = std::gcd(z, j);
    int d = std::gcd(z, q);
    for (const auto& comp : t.components())
        for (int part : comp.parts()) d = std::gcd(d, part);
    return d;
}

std::int64_t type_order(const ClassType& t) {
    std::int64_t out = 1;
    for (int j = 0; j < t.r(); ++j)
        for (int part : t[static_cast<std::size_t>(j)].parts())
            out = std::lcm(out, static_cast<std::int64_t>(part) * additive_order(j, t.r()));
    return out;
}

bool is_p_regular(const ClassType& t, int p) { return type_order(t) % p != 0; }

std::vector<GroupElement> enumerate_elements(const GroupKey& key, std::int64_t max_order) {
    if (key.order() > max_order)
        throw ResourceLimit(key.to_string() + " has order " + std::to_string(key.order()) +
                            ", above the bound " + std::to_string(max_order));
    const auto n = static_cast<std::size_t>(key.n);
    std::vector<GroupElement> out;
    out.reserve(static_cast<std::size_t>(key.order()));
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        std::vector<int> colors(n, 0);
        while (true) {
            int sum = 0;
            for (int z : colors) sum += z;
            if (sum % key.q == 0) out.push_back({colors, perm});
            std::size_t i = n;
            while (i > 0) {
                if (++colors[i - 1] < key.r) break;
                colors[i - 1] = 0;
                --i;
            }
            if (i == 0) break;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

std::vector<ConjugacyClass> conjugacy_classes_brute(const GroupKey& key, std::int64_t max_order) {
    const auto elements = enumerate_elements(key, max_order);
    std::set<GroupElement> unassigned(elements.begin(), elements.end());

    std::vector<ConjugacyClass> classes;
    while (!unassigned.empty()) {
        const GroupElement x = *unassigned.begin();
        std::set<GroupElement> orbit;
        for (const auto& g : elements) orbit.insert(multiply(multiply(g, x, key.r), inverse(g, key.r), key.r));
        for (const auto& y : orbit) unassigned.erase(y);
        ConjugacyClass cls;
        cls.representative = *orbit.begin();
        cls.elements.assign(orbit.begin(), orbit.end());
        classes.push_back(std::move(cls));
    }

    const auto types = enumerate_multipartitions(key.r, key.n);
    std::map<MultiPartition, std::size_t> position;
    for (std::size_t i = 0; i < types.size(); ++i) position.emplace(types[i], i);
    std::stable_sort(classes.begin(), classes.end(), [&](const ConjugacyClass& a, const ConjugacyClass& b) {
        const auto pa = position.at(type_of(a.representative, key.r));
        const auto pb = position.at(type_of(b.representative, key.r));
        if (pa != pb) return pa < pb;
        return a.representative < b.representative;
    });
    return classes;
}

std::int64_t p_part(std::int64_t x, int p) {
    if (x < 1 || p < 2) throw InvalidInput("p_part needs x >= 1 and p >= 2");
    std::int64_t out = 1;
    while (x % p == 0) {
        x /= p;
        out *= p;
    }
    return out;
}

bool is_prime(std::int64_t x) {
    if (x < 2) return false;
    for (std::int64_t d = 2; d * d <= x; ++d)
        if (x % d == 0) return false;
    return true;
}

std::vector<int> primes_dividing(std::int64_t x) {
    std::vector<int> out;
    for (std::int64_t d = 2; d * d <= x; ++d) {
        if (x % d != 0) continue;
        out.push_back(static_cast<int>(d));
        while (x % d == 0) x /= d;
    }
    if (x > 1) out.push_back(static_cast<int>(x));
    return out;
}

}  // namespace reflecta
