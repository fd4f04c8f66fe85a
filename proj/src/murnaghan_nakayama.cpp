#include "reflecta/murnaghan_nakayama.hpp"

#include <algorithm>

#include "reflecta/errors.hpp"

namespace reflecta {

namespace {

std::string shape_key(const MultiPartition& shape, std::size_t index) {
    std::string key;
    key.push_back(static_cast<char>(index));
    for (const auto& comp : shape.components()) {
        for (int part : comp.parts()) key.push_back(static_cast<char>(part));
        key.push_back('\0');
    }
    return key;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("character value overflow");
    return out;
}

}  // namespace

CycleSpec canonical_cycle_spec(const ClassType& t) {
    CycleSpec spec;
    for (int j = 0; j < t.r(); ++j)
        for (int part : t[static_cast<std::size_t>(j)].parts()) spec.push_back({part, j});
    std::sort(spec.begin(), spec.end(), [](const CycleEntry& a, const CycleEntry& b) {
        if (a.length != b.length) return a.length > b.length;
        return a.color < b.color;
    });
    return spec;
}

CharacterEvaluator::CharacterEvaluator(int r, CycleSpec spec) : r_(r), spec_(std::move(spec)) {
    if (r < 1) throw InvalidInput("r must be positive");
    for (const auto& c : spec_)
        if (c.length < 1 || c.color < 0 || c.color >= r) throw InvalidInput("malformed cycle specification");
}

CycloInt CharacterEvaluator::value(const MultiPartition& lambda) {
    if (lambda.r() != r_) throw InvalidInput("multipartition has the wrong number of components");
    int n = 0;
    for (const auto& c : spec_) n += c.length;
    if (lambda.n() != n) throw InvalidInput("multipartition size does not match the class");
    return CycloInt::from_powers(r_, eval(lambda, 0));
}

const CharacterEvaluator::Powers& CharacterEvaluator::eval(const MultiPartition& shape, std::size_t index) {
    auto key = shape_key(shape, index);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    Powers acc(static_cast<std::size_t>(r_), 0);
    if (index == spec_.size()) {
        acc[0] = 1;  // sizes agree, so the shape is empty here
    } else {
        const auto [length, color] = spec_[index];
        for (int j = 0; j < r_; ++j) {
            const auto& comp = shape[static_cast<std::size_t>(j)];
            if (comp.size() < length) continue;
            const auto shift = static_cast<std::size_t>((static_cast<long long>(j) * color) % r_);
            for (auto& removal : remove_border_strips(comp, length)) {
                const Powers& sub = eval(shape.with_component(j, std::move(removal.remaining)), index + 1);
                const bool negative = removal.height % 2 == 1;
                for (std::size_t k = 0; k < sub.size(); ++k) {
                    if (sub[k] == 0) continue;
                    auto& slot = acc[(k + shift) % static_cast<std::size_t>(r_)];
                    slot = checked_add(slot, negative ? -sub[k] : sub[k]);
                }
            }
        }
    }
    return memo_.emplace(std::move(key), std::move(acc)).first->second;
}

CycloInt character_value(const MultiPartition& lambda, const ClassType& t) {
    if (lambda.r() != t.r() || lambda.n() != t.n())
        throw InvalidInput("character and class belong to different groups");
    return CharacterEvaluator(t.r(), canonical_cycle_spec(t)).value(lambda);
}

CycloInt character_value(const MultiPartition& lambda, const CycleSpec& spec) {
    return CharacterEvaluator(lambda.r(), spec).value(lambda);
}

std::int64_t degree_formula(const MultiPartition& lambda) {
    // multinomial n! / prod |lambda_j|!, built as a product of binomials
    std::int64_t out = 1;
    int placed = 0;
    for (const auto& comp : lambda.components()) {
        for (int k = 1; k <= comp.size(); ++k) out = out * (placed + k) / k;
        placed += comp.size();
        out *= hook_length_count(comp);
    }
    return out;
}

std::int64_t degree(const MultiPartition& lambda) {
    const CycleSpec identity(static_cast<std::size_t>(lambda.n()), CycleEntry{1, 0});
    std::int64_t via_rule = 0;
    if (!character_value(lambda, identity).is_integer(&via_rule))
        throw InternalError("character value at the identity is not an integer");
    const std::int64_t via_formula = degree_formula(lambda);
    if (via_rule != via_formula)
        throw InternalError("degree mismatch for " + lambda.to_string() + ": " + std::to_string(via_rule) +
                            " vs " + std::to_string(via_formula));
    return via_rule;
}

ClassType uncolored_type(int r, const Partition& cycle_shape) {
    return MultiPartition::empty(r).with_component(0, cycle_shape);
}

std::int64_t sym_character(const Partition& mu, const Partition& class_shape) {
    const auto value = character_value(MultiPartition({mu}), uncolored_type(1, class_shape));
    std::int64_t out = 0;
    if (!value.is_integer(&out)) throw InternalError("S_n character value is not an integer");
    return out;
}

std::int64_t CharTable::group_order() const {
    std::int64_t total = 0;
    for (auto s : class_sizes) total += s;
    return total;
}

std::size_t CharTable::class_index(const ClassType& t) const {
    auto it = std::find(classes.begin(), classes.end(), t);
    if (it == classes.end()) throw InvalidInput("class type " + t.to_string() + " not in table");
    return static_cast<std::size_t>(it - classes.begin());
}

std::size_t CharTable::irreducible_index(const MultiPartition& lambda) const {
    auto it = std::find(irreducibles.begin(), irreducibles.end(), lambda);
    if (it == irreducibles.end()) throw InvalidInput("irreducible " + lambda.to_string() + " not in table");
    return static_cast<std::size_t>(it - irreducibles.begin());
}

CharTable character_table_r1(int r, int n, std::size_t max_size) {
    CharTable table;
    table.r = r;
    table.n = n;
    table.classes = enumerate_multipartitions(r, n);
    if (table.classes.size() > max_size)
        throw ResourceLimit("|Y(" + std::to_string(r) + "," + std::to_string(n) + ")| = " +
                            std::to_string(table.classes.size()) + " exceeds the bound " + std::to_string(max_size));
    table.irreducibles = table.classes;
    for (const auto& t : table.classes) table.class_sizes.push_back(class_size(t));
    for (const auto& lambda : table.irreducibles) table.degrees.push_back(degree(lambda));

    const auto h = table.classes.size();
    table.values.assign(h, std::vector<CycloInt>(h, CycloInt(r)));
    for (std::size_t c = 0; c < h; ++c) {
        CharacterEvaluator column(r, canonical_cycle_spec(table.classes[c]));
        for (std::size_t i = 0; i < h; ++i) table.values[i][c] = column.value(table.irreducibles[i]);
    }
    return table;
}

}  // namespace reflecta
