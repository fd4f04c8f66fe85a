#include "reflecta/oracle.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <optional>
#include <random>
#include <string>

#include "reflecta/clifford.hpp"
#include "reflecta/errors.hpp"
#include "reflecta/murnaghan_nakayama.hpp"

namespace reflecta {

namespace {

using cd = std::complex<double>;

struct ClassAlgebra {
    std::size_t h = 0;
    std::int64_t group_order = 0;
    // coeff[j](k, l): number of ways an element of C_l is a product x*y with x in C_j, y in C_k
    std::vector<Eigen::MatrixXd> coeff;
};

ClassAlgebra class_algebra(const GroupKey& key, const std::vector<ConjugacyClass>& classes) {
    std::map<GroupElement, std::size_t> class_of;
    std::vector<GroupElement> elements;
    for (std::size_t c = 0; c < classes.size(); ++c)
        for (const auto& x : classes[c].elements) {
            class_of.emplace(x, c);
            elements.push_back(x);
        }

    ClassAlgebra alg;
    alg.h = classes.size();
    alg.group_order = static_cast<std::int64_t>(elements.size());
    alg.coeff.assign(alg.h, Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(alg.h), static_cast<Eigen::Index>(alg.h)));
    for (std::size_t l = 0; l < alg.h; ++l) {
        const GroupElement& z = classes[l].representative;
        for (const auto& x : elements) {
            const GroupElement y = multiply(inverse(x, key.r), z, key.r);
            alg.coeff[class_of.at(x)](static_cast<Eigen::Index>(class_of.at(y)), static_cast<Eigen::Index>(l)) += 1.0;
        }
    }
    return alg;
}

double min_separation(const Eigen::VectorXcd& eigenvalues) {
    double best = std::numeric_limits<double>::infinity();
    for (Eigen::Index a = 0; a < eigenvalues.size(); ++a)
        for (Eigen::Index b = a + 1; b < eigenvalues.size(); ++b)
            best = std::min(best, std::abs(eigenvalues[a] - eigenvalues[b]));
    return best;
}

long long quantize(double x, double tol) { return std::llround(x / tol); }

void validate(BruteTable& table) {
    const double tol = table.tolerance;
    const auto h = table.num_classes();
    const double order = static_cast<double>(table.key.order());
    auto& rep = table.report;

    if (table.num_rows() != h)
        throw ValidationFailure(table.key.to_string() + ": " + std::to_string(table.num_rows()) + " rows for " +
                                std::to_string(h) + " classes");

    for (std::size_t a = 0; a < h; ++a)
        for (std::size_t b = 0; b < h; ++b) {
            cd ip = 0.0;
            for (std::size_t c = 0; c < h; ++c)
                ip += static_cast<double>(table.class_sizes[c]) * table.values[a][c] * std::conj(table.values[b][c]);
            ip /= order;
            rep.row_orthogonality_error = std::max(rep.row_orthogonality_error, std::abs(ip - cd(a == b ? 1.0 : 0.0)));
        }
    for (std::size_t c = 0; c < h; ++c)
        for (std::size_t d = 0; d < h; ++d) {
            cd sum = 0.0;
            for (std::size_t i = 0; i < h; ++i) sum += table.values[i][c] * std::conj(table.values[i][d]);
            const double cc = order / static_cast<double>(table.class_sizes[c]);
            const double cd_ = order / static_cast<double>(table.class_sizes[d]);
            sum /= std::sqrt(cc * cd_);
            rep.column_orthogonality_error =
                std::max(rep.column_orthogonality_error, std::abs(sum - cd(c == d ? 1.0 : 0.0)));
        }
    rep.sum_of_squared_degrees = 0;
    for (auto d : table.degrees) rep.sum_of_squared_degrees += d * d;

    if (rep.row_orthogonality_error > tol || rep.column_orthogonality_error > tol)
        throw ValidationFailure(table.key.to_string() + ": orthogonality violated (row " +
                                std::to_string(rep.row_orthogonality_error) + ", column " +
                                std::to_string(rep.column_orthogonality_error) + ")");
    if (rep.sum_of_squared_degrees != table.key.order())
        throw ValidationFailure(table.key.to_string() + ": sum of squared degrees is " +
                                std::to_string(rep.sum_of_squared_degrees));
}

}  // namespace

std::int64_t default_oracle_bound() {
    if (const char* env = std::getenv("REFLECTA_MAX_ORDER")) {
        char* end = nullptr;
        const long long v = std::strtoll(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return v;
        throw InvalidInput(std::string("REFLECTA_MAX_ORDER is not a positive integer: ") + env);
    }
    return 2000;
}

OracleOptions default_oracle_options() {
    OracleOptions opts;
    opts.max_order = default_oracle_bound();
    return opts;
}

std::size_t BruteTable::identity_class() const {
    for (std::size_t c = 0; c < representatives.size(); ++c)
        if (representatives[c] == GroupElement::identity(key.n)) return c;
    throw InternalError("identity class missing");
}

BruteTable brute_table(const GroupKey& key, const OracleOptions& options) {
    if (key.order() > options.max_order)
        throw ResourceLimit(key.to_string() + " has order " + std::to_string(key.order()) + ", above the oracle bound " +
                            std::to_string(options.max_order));

    const auto classes = conjugacy_classes_brute(key, options.max_order);
    const ClassAlgebra alg = class_algebra(key, classes);
    const auto h = static_cast<Eigen::Index>(alg.h);

    BruteTable table;
    table.key = key;
    table.tolerance = options.validation_tolerance;
    table.seed = options.seed;
    for (const auto& cls : classes) {
        table.representatives.push_back(cls.representative);
        table.class_types.push_back(type_of(cls.representative, key.r));
        table.class_sizes.push_back(static_cast<std::int64_t>(cls.elements.size()));
    }
    const std::size_t id = table.identity_class();

    std::mt19937_64 rng(options.seed);
    std::uniform_real_distribution<double> coin(-1.0, 1.0);
    Eigen::MatrixXcd vectors;
    int attempt = 0;
    for (; attempt < options.max_attempts; ++attempt) {
        Eigen::MatrixXd combo = Eigen::MatrixXd::Zero(h, h);
        for (const auto& m : alg.coeff) combo += coin(rng) * m;
        Eigen::EigenSolver<Eigen::MatrixXd> solver(combo);
        if (solver.info() != Eigen::Success) continue;
        const double scale = 1.0 + solver.eigenvalues().cwiseAbs().maxCoeff();
        if (h > 1 && min_separation(solver.eigenvalues()) < options.cluster_tolerance * scale) continue;
        vectors = solver.eigenvectors();
        bool usable = true;
        for (Eigen::Index i = 0; i < h; ++i)
            if (std::abs(vectors(static_cast<Eigen::Index>(id), i)) < options.cluster_tolerance) usable = false;
        if (usable) break;
    }
    if (attempt == options.max_attempts)
        throw DegeneracyUnresolved(key.to_string() + ": class-algebra eigenvalues collided in every attempt");
    table.report.attempts = attempt + 1;

    const double order = static_cast<double>(key.order());
    struct Row {
        std::int64_t degree;
        std::vector<cd> values;
    };
    std::vector<Row> rows;
    for (Eigen::Index i = 0; i < h; ++i) {
        // central character: omega(C_j) = v_j / v_id
        std::vector<cd> omega(alg.h);
        const cd pivot = vectors(static_cast<Eigen::Index>(id), i);
        double norm = 0.0;
        for (std::size_t j = 0; j < alg.h; ++j) {
            omega[j] = vectors(static_cast<Eigen::Index>(j), i) / pivot;
            norm += std::norm(omega[j]) / static_cast<double>(table.class_sizes[j]);
        }
        const double d_est = std::sqrt(order / norm);
        const auto d = static_cast<std::int64_t>(std::llround(d_est));
        table.report.degree_rounding_error = std::max(table.report.degree_rounding_error, std::abs(d_est - d));
        if (d < 1 || std::abs(d_est - d) > options.validation_tolerance * std::max(1.0, d_est))
            throw ValidationFailure(key.to_string() + ": degree estimate " + std::to_string(d_est) + " is not integral");
        Row row{d, {}};
        for (std::size_t j = 0; j < alg.h; ++j)
            row.values.push_back(static_cast<double>(d) * omega[j] / static_cast<double>(table.class_sizes[j]));
        rows.push_back(std::move(row));
    }

    const double tol = options.validation_tolerance;
    std::sort(rows.begin(), rows.end(), [tol](const Row& a, const Row& b) {
        if (a.degree != b.degree) return a.degree < b.degree;
        for (std::size_t j = 0; j < a.values.size(); ++j) {
            const auto ar = quantize(a.values[j].real(), tol), br = quantize(b.values[j].real(), tol);
            if (ar != br) return ar < br;
            const auto ai = quantize(a.values[j].imag(), tol), bi = quantize(b.values[j].imag(), tol);
            if (ai != bi) return ai < bi;
        }
        return false;
    });
    for (auto& row : rows) {
        table.degrees.push_back(row.degree);
        table.values.push_back(std::move(row.values));
    }
    validate(table);
    return table;
}

std::vector<std::size_t> match_restriction(const GroupKey& key, const MultiPartition& lambda, const BruteTable& table) {
    if (!(table.key == key)) throw InvalidInput("table does not belong to " + key.to_string());
    if (lambda.r() != key.r || lambda.n() != key.n) throw InvalidInput("multipartition does not index G(r,1,n)");
    const double tol = table.tolerance;
    const auto h = table.num_classes();

    std::vector<cd> restricted(h);
    std::map<ClassType, cd> by_type;
    for (std::size_t c = 0; c < h; ++c) {
        auto [it, inserted] = by_type.try_emplace(table.class_types[c]);
        if (inserted) it->second = character_value(lambda, table.class_types[c]).to_complex();
        restricted[c] = it->second;
    }

    std::vector<std::size_t> rows;
    const double order = static_cast<double>(key.order());
    for (std::size_t i = 0; i < table.num_rows(); ++i) {
        cd ip = 0.0;
        for (std::size_t c = 0; c < h; ++c)
            ip += static_cast<double>(table.class_sizes[c]) * restricted[c] * std::conj(table.values[i][c]);
        ip /= order;
        if (std::abs(ip) < tol) continue;
        if (std::abs(ip - 1.0) < tol) {
            rows.push_back(i);
            continue;
        }
        throw ValidationFailure("restriction of " + lambda.to_string() + " to " + key.to_string() +
                                " has non-unit multiplicity " + std::to_string(ip.real()) + " at row " +
                                std::to_string(i));
    }

    const int s = stab_order(lambda, key.q);
    if (static_cast<int>(rows.size()) != s)
        throw ValidationFailure("restriction of " + lambda.to_string() + " to " + key.to_string() + " has " +
                                std::to_string(rows.size()) + " constituents, expected " + std::to_string(s));
    for (std::size_t c = 0; c < h; ++c) {
        cd sum = 0.0;
        for (auto i : rows) sum += table.values[i][c];
        if (std::abs(sum - restricted[c]) > tol)
            throw ValidationFailure("constituents of " + lambda.to_string() + " do not sum to the restriction");
    }
    return rows;
}

std::map<std::pair<std::size_t, std::size_t>, std::complex<double>> split_class_values(const GroupKey& key,
                                                                                      const MultiPartition& lambda,
                                                                                      const BruteTable& table) {
    const auto rows = match_restriction(key, lambda, table);
    std::map<std::pair<std::size_t, std::size_t>, cd> out;
    for (std::size_t c = 0; c < table.num_classes(); ++c) {
        const auto& t = table.class_types[c];
        std::optional<cd> expected;
        if (splitting_number(t, key.q) == 1) expected = restricted_value_nonsplit(lambda, t, key.q).to_complex();
        for (auto i : rows) {
            const cd v = table.values[i][c];
            if (expected && std::abs(v - *expected) > table.tolerance)
                throw ValidationFailure("constituent of " + lambda.to_string() + " disagrees with chi/|H| on class " +
                                        t.to_string());
            out.emplace(std::make_pair(i, c), v);
        }
    }
    return out;
}

std::vector<GroupKey> oracle_covered_groups(std::int64_t max_order) {
    std::vector<GroupKey> out;
    for (int n = 2; n <= 6; ++n)
        for (int r = 1; r <= 6; ++r)
            for (int q = 1; q <= r; ++q) {
                if (r % q != 0) continue;
                GroupKey key(r, q, n);
                if (key.order() <= max_order) out.push_back(key);
            }
    return out;
}

const BruteTable& OracleCache::get(const GroupKey& key) {
    if (auto it = tables_.find(key); it != tables_.end()) return it->second;
    return tables_.emplace(key, brute_table(key, options_)).first->second;
}

}  // namespace reflecta
