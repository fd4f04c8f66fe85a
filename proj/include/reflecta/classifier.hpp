#pragma once

// Quasi p-Steinberg detection.
//
// A character is quasi p-Steinberg when it vanishes on no p-regular element.
// Two independent routes are provided: brute force over p-regular classes
// with exact character values, and closed-form membership tests for the
// known classification. The p-Steinberg condition chi(x) = +-|C(x)|_p is
// checked for G(r,1,n).

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "reflecta/clifford.hpp"
#include "reflecta/combinatorics.hpp"
#include "reflecta/murnaghan_nakayama.hpp"
#include "reflecta/oracle.hpp"
#include "reflecta/wreath.hpp"

namespace reflecta {

struct QSVerdict {
    GroupKey group;
    MultiPartition lambda;               // G(r,1,n) label (necklace representative when q > 1)
    std::optional<NecklaceLabel> label;  // present when q > 1
    int prime = 2;
    bool quasi = true;
    bool linear = false;
    std::optional<ClassType> witness;  // a p-regular class where the character vanishes
    std::optional<bool> feit;
    std::int64_t degree = 1;            // of the (component) character
    bool oracle_consulted = false;      // split-class values came from the oracle
};

struct ClassifierConfig {
    std::size_t max_table_size = 1000;  // bound on |Y(r,n)|
    OracleOptions oracle = default_oracle_options();
};

/// Caches exact G(r,1,n) tables and oracle tables across calls. Not
/// synchronized; use one per thread.
class ClassifierContext {
public:
    explicit ClassifierContext(ClassifierConfig config = {});

    const ClassifierConfig& config() const noexcept { return config_; }
    const CharTable& table(int r, int n);
    const BruteTable& oracle(const GroupKey& key) { return oracle_.get(key); }

private:
    ClassifierConfig config_;
    OracleCache oracle_;
    std::map<std::pair<int, int>, CharTable> tables_;
};

// ---- special shapes -------------------------------------------------------

/// j if lambda has exactly one non-empty component j.
std::optional<int> single_component(const MultiPartition& lambda);

/// (j, k) if lambda_j is a partition of n-1, lambda_k = (1) and every other
/// component is empty. For n = 2 both (1)'s qualify; the smaller index is j.
std::optional<std::pair<int, int>> component_plus_box(const MultiPartition& lambda);

/// n = 3, three single boxes at j, j + r/3, j + 2r/3.
bool is_equally_spaced_boxes(const MultiPartition& lambda);

/// n = 4, two equal partitions of 2 at j and j + r/2.
bool is_antipodal_pair(const MultiPartition& lambda);

/// Degree 1 for G(r,1,n).
bool is_linear(const MultiPartition& lambda);

// ---- G(r,1,n) -------------------------------------------------------------

/// Scans p-regular classes in enumerate_multipartitions order; the witness is
/// the first zero. Throws InvalidInput if q != 1 or p is not a prime divisor of |G|.
QSVerdict quasi_bruteforce_r1(const MultiPartition& lambda, int p, const GroupKey& key, ClassifierContext& ctx);

/// Verdicts for every non-linear lambda (or every lambda, with include_linear)
/// and every prime divisor of |G|, primes increasing within each lambda.
std::vector<QSVerdict> classify_r1(const GroupKey& key, ClassifierContext& ctx, bool include_linear = false);

/// Membership in the classification table of non-linear quasi p-Steinberg
/// characters of G(r,1,n). No character values are computed.
bool closed_form_r1(int r, int n, const MultiPartition& lambda, int p);

/// chi(x) = +-|C(x)|_p on every p-regular x (false whenever chi is not quasi p-Steinberg).
bool feit_check_r1(const MultiPartition& lambda, int p, const GroupKey& key, ClassifierContext& ctx);

// ---- G(r,q,n) -------------------------------------------------------------

/// Exact values decide every class where the component value is determined
/// (irreducible restriction, or a class that does not split); the oracle is
/// consulted for split classes only when no exact zero exists. Throws
/// ResourceLimit if that is needed and the group exceeds the oracle bound,
/// ValidationFailure if the constituents disagree or a value sits between
/// tolerance and 10 * tolerance.
QSVerdict quasi_bruteforce_rqn(const GroupKey& key, const NecklaceLabel& label, int p, ClassifierContext& ctx);

/// One verdict per (label, prime), labels in irreducible_labels order.
std::vector<QSVerdict> classify_rqn(const GroupKey& key, ClassifierContext& ctx, bool include_linear = false);

/// The closed-form criterion for a non-linear constituent of Res chi^lambda.
bool closed_form_rqn(const GroupKey& key, const MultiPartition& lambda, int p);

// ---- the classification table ---------------------------------------------

enum class ShapeKind { Single, PlusBox };

struct TableRow {
    int n;
    ShapeKind kind;
    std::vector<Partition> shapes;  // lambda_j
    int p;
};

/// The rows of the G(r,1,n) table; restricted to Single rows it is the S_n table.
const std::vector<TableRow>& classification_table();

/// Renders verdicts grouped like the classification table: one line per
/// (n, kind, p) with the lambda_j shapes.
std::string render_table(const std::vector<QSVerdict>& verdicts);

}  // namespace reflecta
