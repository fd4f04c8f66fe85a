// reflecta: command-line driver for the library.
//
// Exit codes: 0 ok, 1 validation failure, 2 bad input, 3 resource limit,
// 4 brute force and closed form disagree.

#include <CLI11.hpp>

#include <algorithm>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "reflecta/classifier.hpp"
#include "reflecta/clifford.hpp"
#include "reflecta/errors.hpp"
#include "reflecta/io.hpp"
#include "reflecta/murnaghan_nakayama.hpp"
#include "reflecta/oracle.hpp"
#include "verify_suites.hpp"

using namespace reflecta;

namespace {

constexpr int kExitValidation = 1;
constexpr int kExitInput = 2;
constexpr int kExitResource = 3;
constexpr int kExitDisagree = 4;

struct Options {
    std::uint64_t seed = default_oracle_options().seed;
    std::int64_t max_order = default_oracle_bound();
    std::size_t max_table = ClassifierConfig{}.max_table_size;
    double tolerance = default_oracle_options().validation_tolerance;
    double cluster_tolerance = default_oracle_options().cluster_tolerance;
    std::string format = "json";

    int r = 1, q = 1, n = 1;
    std::string prime = "all";
    std::string mode = "brute";
    bool table = false, feit = false, include_linear = false;
    std::string lambda, type, suite;
};

ClassifierConfig make_config(const Options& o) {
    ClassifierConfig c;
    c.max_table_size = o.max_table;
    c.oracle.seed = o.seed;
    c.oracle.max_order = o.max_order;
    c.oracle.validation_tolerance = o.tolerance;
    c.oracle.cluster_tolerance = o.cluster_tolerance;
    return c;
}

std::string cell(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

// Records share the keys of the first one.
void emit(const std::vector<Json>& records, const std::string& format) {
    if (format == "json") {
        for (const auto& r : records) std::cout << with_schema(r).dump() << '\n';
        return;
    }
    if (records.empty()) return;
    std::vector<std::string> keys;
    for (const auto& item : records.front().items()) keys.push_back(item.key());
    std::vector<std::vector<std::string>> rows{keys};
    for (const auto& r : records) {
        std::vector<std::string> row;
        for (const auto& k : keys) row.push_back(r.contains(k) ? cell(r[k]) : "");
        rows.push_back(std::move(row));
    }
    if (format == "csv") {
        for (const auto& row : rows) {
            for (std::size_t i = 0; i < row.size(); ++i) std::cout << (i ? "," : "") << csv_field(row[i]);
            std::cout << "\r\n";
        }
        return;
    }
    std::vector<std::size_t> width(keys.size(), 0);
    for (const auto& row : rows)
        for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            std::cout << std::left << std::setw(static_cast<int>(width[i]) + (i + 1 < row.size() ? 2 : 0)) << row[i];
        std::cout << '\n';
    }
}

std::vector<int> selected_primes(const Options& o, const GroupKey& key) {
    if (o.prime == "all") return primes_dividing(key.order());
    int p = 0;
    try {
        std::size_t used = 0;
        p = std::stoi(o.prime, &used);
        if (used != o.prime.size()) throw InvalidInput("");
    } catch (const std::exception&) {
        throw InvalidInput("--p expects a prime or 'all', got " + o.prime);
    }
    if (!is_prime(p) || key.order() % p != 0)
        throw InvalidInput(std::to_string(p) + " is not a prime divisor of |" + key.to_string() + "|");
    return {p};
}

int run_classes(const Options& o) {
    const GroupKey key(o.r, o.q, o.n);
    const auto primes = primes_dividing(key.order());
    const std::int64_t full_order = GroupKey(key.r, 1, key.n).order();
    std::vector<Json> out;
    for (const auto& t : enumerate_multipartitions(key.r, key.n)) {
        if (!type_in_subgroup(t, key.q)) continue;
        const int d = splitting_number(t, key.q);
        // all elements of a type in the subgroup lie in it
        const std::int64_t size = full_order / centralizer_order(t);
        Json rec{{"group", to_json(key)}, {"type", to_json(t)}, {"size", size},
                 {"splitting", d},        {"class_size", size / d}};
        Json regular = Json::object();
        for (int p : primes) regular[std::to_string(p)] = is_p_regular(t, p);
        rec["p_regular"] = regular;
        out.push_back(std::move(rec));
    }
    emit(out, o.format);
    return 0;
}

// One record per irreducible of G(r,q,n); values are exact where determined,
// oracle [re, im] pairs on split classes.
std::vector<Json> chartable_rqn(const GroupKey& key, ClassifierContext& ctx) {
    const CharTable& table = ctx.table(key.r, key.n);
    std::vector<Json> out;
    for (const auto& label : irreducible_labels(key)) {
        const MultiPartition lambda = label.representative();
        const auto row = table.irreducible_index(lambda);
        std::optional<std::vector<std::size_t>> rows;
        Json values = Json::array();
        for (std::size_t c = 0; c < table.classes.size(); ++c) {
            const auto& t = table.classes[c];
            if (!type_in_subgroup(t, key.q)) continue;
            const int d = splitting_number(t, key.q);
            Json entry{{"type", to_json(t)}};
            if (label.stab == 1) {
                entry["exact"] = to_json(table.values[row][c]);
            } else if (d == 1) {
                entry["exact"] = to_json(restricted_value_nonsplit(table.values[row][c], lambda, t, key.q));
            } else {
                const BruteTable& brute = ctx.oracle(key);
                if (!rows) rows = match_restriction(key, lambda, brute);
                const auto mine = (*rows)[static_cast<std::size_t>(label.delta)];
                Json approx = Json::array();
                for (std::size_t b = 0; b < brute.num_classes(); ++b)
                    if (brute.class_types[b] == t)
                        approx.push_back({brute.values[mine][b].real(), brute.values[mine][b].imag()});
                entry["oracle"] = approx;
            }
            values.push_back(std::move(entry));
        }
        out.push_back({{"group", to_json(key)},
                       {"label", to_json(label)},
                       {"degree", table.degrees[row] / label.stab},
                       {"values", values}});
    }
    return out;
}

int run_chartable(const Options& o) {
    const GroupKey key(o.r, o.q, o.n);
    ClassifierContext ctx(make_config(o));
    if (key.q == 1) {
        const CharTable& t = ctx.table(key.r, key.n);
        if (o.format == "csv")
            std::cout << chartable_csv(t);
        else if (o.format == "pretty")
            std::cout << chartable_pretty(t);
        else
            std::cout << with_schema(to_json(t)).dump() << '\n';
        return 0;
    }
    if (o.format != "json") throw InvalidInput("chartable with q > 1 supports --format json only");
    for (const auto& rec : chartable_rqn(key, ctx)) std::cout << with_schema(rec).dump() << '\n';
    return 0;
}

std::vector<NecklaceLabel> selected_labels(const Options& o, const GroupKey& key) {
    if (o.lambda.empty()) return irreducible_labels(key);
    const MultiPartition lambda = parse_multipartition(o.lambda, key.r);
    if (lambda.n() != key.n) throw InvalidInput("--lambda has " + std::to_string(lambda.n()) + " boxes, expected " + std::to_string(key.n));
    return labels_of(lambda, key.q);
}

QSVerdict closed_verdict(const GroupKey& key, const MultiPartition& lambda, const std::optional<NecklaceLabel>& label,
                         int p, ClassifierContext& ctx) {
    QSVerdict v;
    v.group = key;
    v.lambda = lambda;
    v.label = label;
    v.prime = p;
    const CharTable& table = ctx.table(key.r, key.n);
    v.degree = table.degrees[table.irreducible_index(lambda)] / (label ? label->stab : 1);
    v.linear = v.degree == 1;
    v.quasi = key.q == 1 ? closed_form_r1(key.r, key.n, lambda, p) : closed_form_rqn(key, lambda, p);
    return v;
}

int run_qsteinberg(const Options& o) {
    const GroupKey key(o.r, o.q, o.n);
    if (o.mode != "brute" && o.mode != "closed" && o.mode != "both")
        throw InvalidInput("--mode expects brute, closed or both");
    ClassifierContext ctx(make_config(o));
    const auto primes = selected_primes(o, key);
    const bool brute = o.mode != "closed", closed = o.mode != "brute";

    std::vector<QSVerdict> verdicts;
    bool disagree = false;
    std::vector<Json> records;
    for (const auto& label : selected_labels(o, key)) {
        const MultiPartition lambda = label.representative();
        const std::optional<NecklaceLabel> tag = key.q == 1 ? std::nullopt : std::optional(label);
        if (!o.include_linear && o.lambda.empty() && component_degree(lambda, key.q) == 1) continue;
        for (int p : primes) {
            std::optional<QSVerdict> b, c;
            if (brute) {
                b = key.q == 1 ? quasi_bruteforce_r1(lambda, p, key, ctx) : quasi_bruteforce_rqn(key, label, p, ctx);
                if (o.feit && key.q == 1) b->feit = feit_check_r1(lambda, p, key, ctx);
            }
            if (closed) c = closed_verdict(key, lambda, tag, p, ctx);
            // the closed form covers non-linear characters only
            const bool comparable = b && c && !b->linear;
            Json rec = to_json(b ? *b : *c);
            if (b && c) {
                rec["closed_form"] = comparable ? Json(c->quasi) : Json(nullptr);
                if (comparable && b->quasi != c->quasi) {
                    disagree = true;
                    rec["agree"] = false;
                } else {
                    rec["agree"] = true;
                }
            }
            verdicts.push_back(b ? *b : *c);
            records.push_back(std::move(rec));
        }
    }
    if (o.table)
        std::cout << render_table(verdicts);
    else
        emit(records, o.format);
    if (disagree) {
        std::cerr << "brute force and closed form disagree\n";
        return kExitDisagree;
    }
    return 0;
}

int run_value(const Options& o) {
    const MultiPartition lambda = parse_multipartition(o.lambda);
    const ClassType t = parse_multipartition(o.type, lambda.r());
    if (t.n() != lambda.n()) throw InvalidInput("--lambda and --type have different sizes");
    const CycloInt v = character_value(lambda, t);
    const auto z = v.to_complex();
    emit({Json{{"lambda", to_json(lambda)},
               {"type", to_json(t)},
               {"value", to_json(v)},
               {"pretty", v.pretty()},
               {"complex", {z.real(), z.imag()}}}},
         o.format);
    return 0;
}

int run_verify(const Options& o) {
    ClassifierContext ctx(make_config(o));
    const auto result = cli::run_suite(o.suite, ctx);
    std::cout << result.to_json().dump() << '\n';
    return result.pass ? 0 : kExitValidation;
}

void add_group_options(CLI::App* cmd, Options& o, bool need_q) {
    cmd->add_option("--r", o.r, "color count r")->required()->check(CLI::PositiveNumber);
    auto* q = cmd->add_option("--q", o.q, "subgroup parameter q, dividing r")->check(CLI::PositiveNumber);
    if (need_q) q->required();
    cmd->add_option("--n", o.n, "rank n")->required()->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
    Options o;
    CLI::App app{"Characters and quasi p-Steinberg classification for G(r,q,n)"};
    app.require_subcommand(1);
    app.add_option("--seed", o.seed, "oracle RNG seed");
    app.add_option("--max-order", o.max_order, "largest |G| the oracle will tabulate");
    app.add_option("--max-table", o.max_table, "largest exact table, in irreducibles");
    app.add_option("--tolerance", o.tolerance, "oracle validation tolerance");
    app.add_option("--cluster-tolerance", o.cluster_tolerance, "oracle eigenvalue collision tolerance");
    app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "csv", "pretty"}));

    auto* classes = app.add_subcommand("classes", "conjugacy classes of G(r,q,n) by type");
    add_group_options(classes, o, true);

    auto* chartable = app.add_subcommand("chartable", "character table");
    add_group_options(chartable, o, false);

    auto* qst = app.add_subcommand("qsteinberg", "quasi p-Steinberg verdicts");
    add_group_options(qst, o, true);
    qst->add_option("--p", o.prime, "prime or 'all'");
    qst->add_option("--mode", o.mode, "brute, closed or both");
    qst->add_flag("--table", o.table, "render the positives as a classification table");
    qst->add_flag("--feit", o.feit, "add the Feit check (q = 1)");
    qst->add_flag("--include-linear", o.include_linear, "keep linear characters");
    qst->add_option("--lambda", o.lambda, "restrict to one multipartition, as JSON");

    auto* value = app.add_subcommand("value", "one exact character value of G(r,1,n)");
    value->add_option("--lambda", o.lambda, "multipartition, as JSON")->required();
    value->add_option("--type", o.type, "class type, as JSON")->required();

    auto* verify = app.add_subcommand("verify", "run an invariant suite");
    verify->add_option("suite", o.suite)->required()->check(CLI::IsMember(cli::suite_names()));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (*classes) return run_classes(o);
        if (*chartable) return run_chartable(o);
        if (*qst) return run_qsteinberg(o);
        if (*value) return run_value(o);
        if (*verify) return run_verify(o);
    } catch (const InvalidInput& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return kExitInput;
    } catch (const ResourceLimit& e) {
        std::cerr << "resource limit: " << e.what() << '\n';
        return kExitResource;
    } catch (const ValidationFailure& e) {
        std::cerr << "validation failure: " << e.what() << '\n';
        return kExitValidation;
    } catch (const DegeneracyUnresolved& e) {
        std::cerr << "degeneracy unresolved: " << e.what() << '\n';
        return kExitValidation;
    }
    return 0;
}
