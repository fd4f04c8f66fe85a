#include "reflecta/classifier.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <tuple>

#include "reflecta/errors.hpp"

namespace reflecta {

namespace {

void require_prime_divisor(int p, const GroupKey& key) {
    if (!is_prime(p) || key.order() % p != 0)
        throw InvalidInput(std::to_string(p) + " is not a prime divisor of |" + key.to_string() + "| = " +
                           std::to_string(key.order()));
}

std::string shape_string(const Partition& p) {
    std::string s = "(";
    for (int i = 0; i < p.length(); ++i) {
        if (i) s += ',';
        s += std::to_string(p[static_cast<std::size_t>(i)]);
    }
    return s + ")";
}

}  // namespace

ClassifierContext::ClassifierContext(ClassifierConfig config) : config_(config), oracle_(config.oracle) {}

const CharTable& ClassifierContext::table(int r, int n) {
    const auto key = std::make_pair(r, n);
    if (auto it = tables_.find(key); it != tables_.end()) return it->second;
    return tables_.emplace(key, character_table_r1(r, n, config_.max_table_size)).first->second;
}

std::optional<int> single_component(const MultiPartition& lambda) {
    const auto s = lambda.support();
    if (s.size() != 1) return std::nullopt;
    return s.front();
}

std::optional<std::pair<int, int>> component_plus_box(const MultiPartition& lambda) {
    const auto s = lambda.support();
    if (lambda.n() < 2 || s.size() != 2) return std::nullopt;
    const Partition box{1};
    const int a = s[0], b = s[1];
    const auto& pa = lambda[static_cast<std::size_t>(a)];
    const auto& pb = lambda[static_cast<std::size_t>(b)];
    if (pb == box) return std::make_pair(a, b);
    if (pa == box) return std::make_pair(b, a);
    return std::nullopt;
}

bool is_equally_spaced_boxes(const MultiPartition& lambda) {
    const int r = lambda.r();
    if (lambda.n() != 3 || r % 3 != 0) return false;
    const auto s = lambda.support();
    if (s.size() != 3) return false;
    for (int j : s)
        if (lambda[static_cast<std::size_t>(j)] != Partition{1}) return false;
    const int step = r / 3;
    return s[1] == s[0] + step && s[2] == s[0] + 2 * step;
}

bool is_antipodal_pair(const MultiPartition& lambda) {
    const int r = lambda.r();
    if (lambda.n() != 4 || r % 2 != 0) return false;
    const auto s = lambda.support();
    if (s.size() != 2) return false;
    const auto& a = lambda[static_cast<std::size_t>(s[0])];
    const auto& b = lambda[static_cast<std::size_t>(s[1])];
    return a.size() == 2 && a == b && s[1] == s[0] + r / 2;
}

bool is_linear(const MultiPartition& lambda) {
    const auto j = single_component(lambda);
    if (!j) return lambda.n() == 0;
    const auto& p = lambda[static_cast<std::size_t>(*j)];
    return p.length() == 1 || p.conjugate().length() == 1;
}

const std::vector<TableRow>& classification_table() {
    using P = Partition;
    static const std::vector<TableRow> rows = {
        {2, ShapeKind::PlusBox, {P{1}}, 2},
        {3, ShapeKind::Single, {P{2, 1}}, 2},
        {3, ShapeKind::PlusBox, {P{2}, P{1, 1}}, 3},
        {4, ShapeKind::Single, {P{2, 2}}, 2},
        {4, ShapeKind::PlusBox, {P{3}, P{2, 1}, P{1, 1, 1}}, 2},
        {4, ShapeKind::Single, {P{3, 1}, P{2, 1, 1}}, 3},
        {5, ShapeKind::Single, {P{4, 1}, P{2, 1, 1, 1}}, 2},
        {5, ShapeKind::Single, {P{3, 2}, P{2, 2, 1}}, 5},
        {6, ShapeKind::Single, {P{3, 2, 1}}, 2},
        {6, ShapeKind::Single, {P{4, 2}, P{2, 2, 1, 1}}, 3},
        {8, ShapeKind::Single, {P{5, 2, 1}, P{3, 2, 1, 1, 1}}, 2},
    };
    return rows;
}

bool closed_form_r1(int r, int n, const MultiPartition& lambda, int p) {
    if (lambda.r() != r || lambda.n() != n) throw InvalidInput("multipartition does not index G(r,1,n)");
    if (is_linear(lambda)) return true;

    std::optional<ShapeKind> kind;
    Partition shape;
    if (auto j = single_component(lambda)) {
        kind = ShapeKind::Single;
        shape = lambda[static_cast<std::size_t>(*j)];
    } else if (auto jk = component_plus_box(lambda)) {
        kind = ShapeKind::PlusBox;
        shape = lambda[static_cast<std::size_t>(jk->first)];
    } else {
        return false;
    }
    for (const auto& row : classification_table()) {
        if (row.n != n || row.kind != *kind || row.p != p) continue;
        if (std::find(row.shapes.begin(), row.shapes.end(), shape) != row.shapes.end()) return true;
    }
    return false;
}

bool closed_form_rqn(const GroupKey& key, const MultiPartition& lambda, int p) {
    if (closed_form_r1(key.r, key.n, lambda, p) && stab_order(lambda, key.q) == 1) return true;
    if (key.n == 3 && key.r % 3 == 0 && key.q % 3 == 0 && is_equally_spaced_boxes(lambda)) return p == 2;
    if (key.n == 4 && key.r % 2 == 0 && key.q % 2 == 0 && is_antipodal_pair(lambda)) return p == 3;
    return false;
}

QSVerdict quasi_bruteforce_r1(const MultiPartition& lambda, int p, const GroupKey& key, ClassifierContext& ctx) {
    if (key.q != 1) throw InvalidInput("quasi_bruteforce_r1 needs q = 1");
    if (lambda.r() != key.r || lambda.n() != key.n) throw InvalidInput("multipartition does not index " + key.to_string());
    require_prime_divisor(p, key);

    QSVerdict v;
    v.group = key;
    v.lambda = lambda;
    v.prime = p;
    if (is_linear(lambda)) {
        v.linear = true;
        return v;
    }
    const CharTable& table = ctx.table(key.r, key.n);
    const auto row = table.irreducible_index(lambda);
    v.degree = table.degrees[row];
    for (std::size_t c = 0; c < table.classes.size(); ++c) {
        if (!is_p_regular(table.classes[c], p)) continue;
        if (table.values[row][c].is_zero()) {
            v.quasi = false;
            v.witness = table.classes[c];
            break;
        }
    }
    return v;
}

std::vector<QSVerdict> classify_r1(const GroupKey& key, ClassifierContext& ctx, bool include_linear) {
    if (key.q != 1) throw InvalidInput("classify_r1 needs q = 1");
    const auto primes = primes_dividing(key.order());
    std::vector<QSVerdict> out;
    for (const auto& lambda : ctx.table(key.r, key.n).irreducibles) {
        if (!include_linear && is_linear(lambda)) continue;
        for (int p : primes) out.push_back(quasi_bruteforce_r1(lambda, p, key, ctx));
    }
    return out;
}

bool feit_check_r1(const MultiPartition& lambda, int p, const GroupKey& key, ClassifierContext& ctx) {
    const QSVerdict v = quasi_bruteforce_r1(lambda, p, key, ctx);
    if (!v.quasi) return false;
    const CharTable& table = ctx.table(key.r, key.n);
    const auto row = table.irreducible_index(lambda);
    for (std::size_t c = 0; c < table.classes.size(); ++c) {
        const auto& t = table.classes[c];
        if (!is_p_regular(t, p)) continue;
        std::int64_t value = 0;
        if (!table.values[row][c].is_integer(&value)) return false;
        const std::int64_t target = p_part(centralizer_order(t), p);
        if (value != target && value != -target) return false;
    }
    return true;
}

QSVerdict quasi_bruteforce_rqn(const GroupKey& key, const NecklaceLabel& label, int p, ClassifierContext& ctx) {
    require_prime_divisor(p, key);
    const MultiPartition lambda = label.representative();
    if (lambda.r() != key.r || lambda.n() != key.n || label.neck.q != key.q)
        throw InvalidInput("label does not belong to " + key.to_string());

    QSVerdict v;
    v.group = key;
    v.lambda = lambda;
    v.label = label;
    v.prime = p;
    const int s = label.stab;
    const CharTable& table = ctx.table(key.r, key.n);
    const auto row = table.irreducible_index(lambda);
    v.degree = table.degrees[row] / s;
    if (v.degree == 1) {
        v.linear = true;
        return v;
    }

    std::vector<std::size_t> undecided;
    for (std::size_t c = 0; c < table.classes.size(); ++c) {
        const auto& t = table.classes[c];
        if (!type_in_subgroup(t, key.q) || !is_p_regular(t, p)) continue;
        if (s > 1 && splitting_number(t, key.q) > 1) {
            undecided.push_back(c);
            continue;
        }
        // Res chi^lambda is the component itself, or s times it on a class that does not split
        if (table.values[row][c].is_zero()) {
            v.quasi = false;
            v.witness = t;
            return v;
        }
    }
    if (undecided.empty()) return v;

    v.oracle_consulted = true;
    const BruteTable& brute = ctx.oracle(key);
    const auto rows = match_restriction(key, lambda, brute);
    const double tol = brute.tolerance;

    // first zero of each constituent, as a position in the canonical class order
    std::vector<std::optional<std::size_t>> first_zero(rows.size());
    for (std::size_t c : undecided) {
        const auto& t = table.classes[c];
        for (std::size_t b = 0; b < brute.num_classes(); ++b) {
            if (brute.class_types[b] != t) continue;
            for (std::size_t k = 0; k < rows.size(); ++k) {
                const double mag = std::abs(brute.values[rows[k]][b]);
                if (mag >= tol && mag <= 10 * tol)
                    throw ValidationFailure("oracle value " + std::to_string(mag) + " on " + t.to_string() +
                                            " is too close to zero to decide");
                if (mag < tol && !first_zero[k]) first_zero[k] = c;
            }
        }
    }
    for (std::size_t k = 1; k < rows.size(); ++k)
        if (first_zero[k].has_value() != first_zero[0].has_value())
            throw ValidationFailure("constituents of " + lambda.to_string() + " in " + key.to_string() +
                                    " disagree on the quasi " + std::to_string(p) + "-Steinberg property");
    const auto& mine = first_zero[static_cast<std::size_t>(label.delta)];
    if (mine) {
        v.quasi = false;
        v.witness = table.classes[*mine];
    }
    return v;
}

std::vector<QSVerdict> classify_rqn(const GroupKey& key, ClassifierContext& ctx, bool include_linear) {
    const auto primes = primes_dividing(key.order());
    std::vector<QSVerdict> out;
    for (const auto& label : irreducible_labels(key)) {
        const MultiPartition lambda = label.representative();
        if (!include_linear && component_degree(lambda, key.q) == 1) continue;
        for (int p : primes) out.push_back(quasi_bruteforce_rqn(key, label, p, ctx));
    }
    return out;
}

std::string render_table(const std::vector<QSVerdict>& verdicts) {
    // (n, kind, p) -> shapes, kind 0 = single component, 1 = plus a box, 2 = other
    std::map<std::tuple<int, int, int>, std::set<Partition, std::greater<>>> groups;
    std::set<std::string> others;
    for (const auto& v : verdicts) {
        if (!v.quasi || v.linear) continue;
        const int n = v.group.n;
        if (auto j = single_component(v.lambda)) {
            groups[{n, 0, v.prime}].insert(v.lambda[static_cast<std::size_t>(*j)]);
        } else if (auto jk = component_plus_box(v.lambda)) {
            groups[{n, 1, v.prime}].insert(v.lambda[static_cast<std::size_t>(jk->first)]);
        } else {
            groups[{n, 2, v.prime}];
            others.insert(std::to_string(n) + " | " + v.lambda.to_string() + " | " + std::to_string(v.prime));
        }
    }
    std::ostringstream os;
    os << "n | lambda | lambda_j | p\n";
    for (const auto& [key, shapes] : groups) {
        const auto [n, kind, p] = key;
        if (kind == 2) continue;
        os << n << " | " << (kind == 0 ? "hat^j" : "hat^{j,k}") << " | ";
        bool first = true;
        for (const auto& s : shapes) {
            if (!first) os << ", ";
            os << shape_string(s);
            first = false;
        }
        os << " | " << p << '\n';
    }
    for (const auto& line : others) os << line << " (other shape)\n";
    return os.str();
}

}  // namespace reflecta
