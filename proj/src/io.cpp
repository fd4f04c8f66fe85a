#include "reflecta/io.hpp"

#include <algorithm>
#include <iomanip>
#include <limits>
#include <sstream>

#include "reflecta/errors.hpp"

namespace reflecta {

namespace {

Json complex_json(std::complex<double> z) { return Json::array({z.real(), z.imag()}); }

int as_int(const Json& j, const char* what) {
    if (!j.is_number_integer()) throw InvalidInput(std::string(what) + " must be an integer");
    const auto v = j.get<long long>();
    if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
        throw InvalidInput(std::string(what) + " is out of range");
    return static_cast<int>(v);
}

}  // namespace

Json to_json(const Partition& p) { return Json(p.parts()); }

Json to_json(const MultiPartition& lambda) {
    Json out = Json::array();
    for (const auto& c : lambda.components()) out.push_back(to_json(c));
    return out;
}

Json to_json(const CycloInt& x) { return Json{{"order", x.order()}, {"coeffs", x.coeffs()}}; }

Json to_json(const GroupKey& key) { return Json{{"r", key.r}, {"q", key.q}, {"n", key.n}}; }

Json to_json(const GroupElement& x) {
    std::vector<int> perm(x.perm);
    for (auto& v : perm) ++v;
    return Json{{"colors", x.colors}, {"perm", perm}};
}

Json to_json(const NecklaceLabel& label) {
    Json necklace = Json::array();
    for (const auto& circle : label.neck.nodes) {
        Json c = Json::array();
        for (const auto& p : circle) c.push_back(to_json(p));
        necklace.push_back(std::move(c));
    }
    return Json{{"necklace", std::move(necklace)}, {"delta", label.delta}, {"stab", label.stab}};
}

Json to_json(const CharTable& table) {
    Json classes = Json::array();
    for (std::size_t c = 0; c < table.classes.size(); ++c)
        classes.push_back(Json::array({to_json(table.classes[c]), table.class_sizes[c]}));
    Json irreducibles = Json::array();
    for (const auto& lambda : table.irreducibles) irreducibles.push_back(to_json(lambda));
    Json values = Json::array();
    for (const auto& row : table.values) {
        Json jr = Json::array();
        for (const auto& v : row) jr.push_back(to_json(v));
        values.push_back(std::move(jr));
    }
    return Json{{"r", table.r},
                {"n", table.n},
                {"classes", std::move(classes)},
                {"irreducibles", std::move(irreducibles)},
                {"degrees", table.degrees},
                {"values", std::move(values)}};
}

Json to_json(const QSVerdict& v) {
    Json out{{"group", to_json(v.group)}, {"lambda", to_json(v.lambda)}};
    if (v.label) out["label"] = to_json(*v.label);
    out["prime"] = v.prime;
    out["quasi"] = v.quasi;
    out["linear"] = v.linear;
    out["degree"] = v.degree;
    out["witness"] = v.witness ? to_json(*v.witness) : Json(nullptr);
    if (v.feit) out["feit"] = *v.feit;
    out["oracle_consulted"] = v.oracle_consulted;
    return out;
}

Json to_json(const BruteTable& table) {
    Json classes = Json::array();
    for (std::size_t c = 0; c < table.num_classes(); ++c)
        classes.push_back(Json{{"representative", to_json(table.representatives[c])},
                               {"type", to_json(table.class_types[c])},
                               {"size", table.class_sizes[c]}});
    Json values = Json::array();
    for (const auto& row : table.values) {
        Json jr = Json::array();
        for (const auto& z : row) jr.push_back(complex_json(z));
        values.push_back(std::move(jr));
    }
    const auto& rep = table.report;
    return Json{{"group", to_json(table.key)},
                {"seed", table.seed},
                {"tolerance", table.tolerance},
                {"report",
                 {{"row_orthogonality_error", rep.row_orthogonality_error},
                  {"column_orthogonality_error", rep.column_orthogonality_error},
                  {"degree_rounding_error", rep.degree_rounding_error},
                  {"sum_of_squared_degrees", rep.sum_of_squared_degrees},
                  {"attempts", rep.attempts}}},
                {"classes", std::move(classes)},
                {"degrees", table.degrees},
                {"values", std::move(values)}};
}

Json with_schema(Json object) {
    if (!object.is_object()) throw InvalidInput("schema tag needs a JSON object");
    Json out{{"schema", std::string(kSchema)}};
    for (auto& [k, v] : object.items()) out[k] = std::move(v);
    return out;
}

Partition partition_from_json(const Json& j) {
    if (!j.is_array()) throw InvalidInput("a partition must be a JSON array");
    std::vector<int> parts;
    for (const auto& e : j) parts.push_back(as_int(e, "a part"));
    return Partition(std::move(parts));
}

MultiPartition multipartition_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw InvalidInput("a multipartition must be a non-empty JSON array of arrays");
    std::vector<Partition> comps;
    for (const auto& e : j) comps.push_back(partition_from_json(e));
    return MultiPartition(std::move(comps));
}

CycloInt cyclo_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("order") || !j.contains("coeffs") || !j["coeffs"].is_array())
        throw InvalidInput("a cyclotomic integer needs \"order\" and \"coeffs\"");
    const int order = as_int(j["order"], "order");
    std::vector<std::int64_t> coeffs;
    for (const auto& c : j["coeffs"]) {
        if (!c.is_number_integer()) throw InvalidInput("coefficients must be integers");
        coeffs.push_back(c.get<std::int64_t>());
    }
    return CycloInt::from_powers(order, coeffs);
}

GroupElement element_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("colors") || !j.contains("perm"))
        throw InvalidInput("a group element needs \"colors\" and \"perm\"");
    GroupElement x;
    for (const auto& c : j["colors"]) x.colors.push_back(as_int(c, "a color"));
    for (const auto& p : j["perm"]) x.perm.push_back(as_int(p, "a permutation entry") - 1);
    return x;
}

MultiPartition parse_multipartition(std::string_view text, int r) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InvalidInput(std::string("malformed multipartition: ") + e.what());
    }
    MultiPartition lambda = multipartition_from_json(j);
    if (r > 0 && lambda.r() != r)
        throw InvalidInput("expected " + std::to_string(r) + " components, got " + std::to_string(lambda.r()));
    return lambda;
}

std::string csv_field(std::string_view s) {
    if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

std::string chartable_csv(const CharTable& table) {
    std::ostringstream os;
    os << "lambda";
    for (const auto& t : table.classes) os << ',' << csv_field(t.to_string());
    os << "\r\nclass size";
    for (auto s : table.class_sizes) os << ',' << s;
    os << "\r\n";
    for (std::size_t i = 0; i < table.irreducibles.size(); ++i) {
        os << csv_field(table.irreducibles[i].to_string());
        for (const auto& v : table.values[i]) os << ',' << csv_field(v.pretty());
        os << "\r\n";
    }
    return os.str();
}

std::string chartable_pretty(const CharTable& table) {
    std::vector<std::vector<std::string>> cells;
    std::vector<std::string> header{"G(" + std::to_string(table.r) + ",1," + std::to_string(table.n) + ")"};
    for (const auto& t : table.classes) header.push_back(t.to_string());
    cells.push_back(std::move(header));
    std::vector<std::string> sizes{"|C|"};
    for (auto s : table.class_sizes) sizes.push_back(std::to_string(s));
    cells.push_back(std::move(sizes));
    for (std::size_t i = 0; i < table.irreducibles.size(); ++i) {
        std::vector<std::string> row{table.irreducibles[i].to_string()};
        for (const auto& v : table.values[i]) row.push_back(v.pretty());
        cells.push_back(std::move(row));
    }
    std::vector<std::size_t> width(cells.front().size(), 0);
    for (const auto& row : cells)
        for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    std::ostringstream os;
    for (const auto& row : cells) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) os << "  ";
            os << std::setw(static_cast<int>(width[c])) << (c == 0 ? std::left : std::right) << row[c];
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace reflecta
