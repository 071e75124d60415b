#include <json.hpp>

#include "dihomol/dga.hpp"

namespace dihomol {

namespace {

using nlohmann::json;

std::string line_column(std::string_view text, std::size_t byte) {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

[[noreturn]] void fail(const std::string& pointer, const std::string& message) {
    throw AlgebraParseError(pointer.empty() ? "/" : pointer, message);
}

class Reader {
public:
    explicit Reader(const json& doc) : doc_(doc) {}

    InvolutiveDGA read() {
        if (!doc_.is_object()) fail("", "algebra document must be a JSON object");
        field_ = read_field();
        read_generators();
        read_unit();
        const std::size_t n = basis_.size();

        std::vector<SparseVector> products(n * n);
        for (std::size_t i = 0; i < n; ++i) {
            products[unit_ * n + i] = SparseVector::unit(field_, i);
            products[i * n + unit_] = SparseVector::unit(field_, i);
        }
        if (doc_.contains("product")) {
            const json& p = doc_["product"];
            if (!p.is_array()) fail("/product", "expected an array of [i, j, [[k, coeff], ...]]");
            for (std::size_t r = 0; r < p.size(); ++r) {
                const std::string at = "/product/" + std::to_string(r);
                if (!p[r].is_array() || p[r].size() != 3) fail(at, "expected [i, j, [[k, coeff], ...]]");
                const std::size_t i = index(p[r][0], at + "/0");
                const std::size_t j = index(p[r][1], at + "/1");
                products[i * n + j] = vector(p[r][2], at + "/2");
            }
        }

        LinearMap differential(n);
        if (doc_.contains("differential")) read_map(doc_["differential"], "/differential", differential);

        std::optional<int> max_bar;
        if (doc_.contains("max_bar_length")) {
            const json& m = doc_["max_bar_length"];
            if (!m.is_number_integer() || m.get<int>() < 0) fail("/max_bar_length", "expected a non-negative integer");
            max_bar = m.get<int>();
        }

        LinearMap identity;
        for (std::size_t i = 0; i < n; ++i) identity.push_back(SparseVector::unit(field_, i));
        LinearMap involution = identity;
        if (doc_.contains("involution")) {
            const json& inv = doc_["involution"];
            if (inv.is_string()) {
                const auto mode = inv.get<std::string>();
                if (mode == "auto") {
                    InvolutiveDGA probe(field_, basis_, unit_, products, differential, identity, max_bar);
                    if (!is_graded_commutative(probe)) {
                        fail("/involution", "\"auto\" needs a graded-commutative algebra; give the involution matrix");
                    }
                } else if (mode != "identity") {
                    fail("/involution", "expected \"identity\", \"auto\" or a matrix");
                }
            } else {
                involution = LinearMap(n);
                read_map(inv, "/involution", involution);
            }
        } else {
            fail("/involution", "missing involution (use \"identity\", \"auto\" or a matrix)");
        }

        return make_validated(InvolutiveDGA(field_, basis_, unit_, std::move(products), std::move(differential),
                                            std::move(involution), max_bar));
    }

private:
    Field read_field() {
        if (!doc_.contains("field")) fail("/field", "missing field (\"Q\" or {\"Fp\": p})");
        const json& f = doc_["field"];
        try {
            if (f.is_string()) return Field::parse(f.get<std::string>());
            if (f.is_object() && f.contains("Fp") && f["Fp"].is_number_unsigned()) {
                return Field::prime(f["Fp"].get<std::uint64_t>());
            }
        } catch (const std::invalid_argument& e) {
            fail("/field", e.what());
        }
        fail("/field", "expected \"Q\" or {\"Fp\": p}");
    }

    void read_generators() {
        if (!doc_.contains("generators") || !doc_["generators"].is_array() || doc_["generators"].empty()) {
            fail("/generators", "expected a non-empty array of {\"name\", \"cohomological_degree\"}");
        }
        const json& g = doc_["generators"];
        for (std::size_t i = 0; i < g.size(); ++i) {
            const std::string at = "/generators/" + std::to_string(i);
            if (!g[i].is_object() || !g[i].contains("name") || !g[i]["name"].is_string()) fail(at, "missing name");
            if (!g[i].contains("cohomological_degree") || !g[i]["cohomological_degree"].is_number_integer()) {
                fail(at, "missing integer cohomological_degree");
            }
            basis_.push_back({g[i]["name"].get<std::string>(), g[i]["cohomological_degree"].get<int>()});
        }
    }

    void read_unit() {
        if (!doc_.contains("unit") || !doc_["unit"].is_string()) fail("/unit", "missing unit (name of the basis element 1)");
        const auto name = doc_["unit"].get<std::string>();
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            if (basis_[i].name == name) {
                unit_ = i;
                return;
            }
        }
        fail("/unit", "unit '" + name + "' is not among the generators");
    }

    std::size_t index(const json& v, const std::string& at) const {
        if (v.is_number_unsigned() && v.get<std::size_t>() < basis_.size()) return v.get<std::size_t>();
        if (v.is_string()) {
            for (std::size_t i = 0; i < basis_.size(); ++i) {
                if (basis_[i].name == v.get<std::string>()) return i;
            }
        }
        fail(at, "expected a basis index in [0, " + std::to_string(basis_.size()) + ") or a generator name");
    }

    Scalar coefficient(const json& v, const std::string& at) const {
        try {
            if (v.is_number_integer()) return Scalar(field_, v.get<long>());
            if (v.is_string()) return Scalar::parse(field_, v.get<std::string>());
        } catch (const std::exception& e) {
            fail(at, e.what());
        }
        fail(at, "expected an integer or a \"num/den\" string");
    }

    SparseVector vector(const json& v, const std::string& at) const {
        if (!v.is_array()) fail(at, "expected [[k, coeff], ...]");
        std::vector<Entry> entries;
        for (std::size_t r = 0; r < v.size(); ++r) {
            const std::string here = at + "/" + std::to_string(r);
            if (!v[r].is_array() || v[r].size() != 2) fail(here, "expected [k, coeff]");
            entries.push_back({index(v[r][0], here + "/0"), coefficient(v[r][1], here + "/1")});
        }
        return SparseVector(std::move(entries));
    }

    void read_map(const json& m, const std::string& at, LinearMap& out) const {
        if (!m.is_array()) fail(at, "expected an array of [i, [[k, coeff], ...]]");
        for (std::size_t r = 0; r < m.size(); ++r) {
            const std::string here = at + "/" + std::to_string(r);
            if (!m[r].is_array() || m[r].size() != 2) fail(here, "expected [i, [[k, coeff], ...]]");
            out[index(m[r][0], here + "/0")] = vector(m[r][1], here + "/1");
        }
    }

    const json& doc_;
    Field field_;
    std::vector<Generator> basis_;
    std::size_t unit_ = 0;
};

json coefficient_json(const Scalar& s) {
    if (!s.field().is_rational()) return s.residue();
    const mpq_class q = s.rational();
    if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
    return q.get_str();
}

json vector_json(const SparseVector& v) {
    json out = json::array();
    for (const auto& e : v.entries()) out.push_back({e.index, coefficient_json(e.value)});
    return out;
}

}  // namespace

InvolutiveDGA parse_algebra(std::string_view json_text) {
    json doc;
    try {
        doc = json::parse(json_text.begin(), json_text.end());
    } catch (const json::parse_error& e) {
        throw AlgebraParseError(line_column(json_text, e.byte), "malformed JSON");
    }
    return Reader(doc).read();
}

std::string serialize_algebra(const InvolutiveDGA& a) {
    json doc;
    const Field& f = a.field();
    doc["field"] = f.is_rational() ? json("Q") : json{{"Fp", f.characteristic()}};
    doc["generators"] = json::array();
    for (const auto& g : a.basis()) doc["generators"].push_back({{"name", g.name}, {"cohomological_degree", g.cohomological_degree}});
    doc["unit"] = a.name(a.unit());
    doc["product"] = json::array();
    for (std::size_t i = 0; i < a.dimension(); ++i) {
        for (std::size_t j = 0; j < a.dimension(); ++j) {
            if (i == a.unit() || j == a.unit() || a.product(i, j).empty()) continue;
            doc["product"].push_back({i, j, vector_json(a.product(i, j))});
        }
    }
    doc["differential"] = json::array();
    for (std::size_t i = 0; i < a.dimension(); ++i) {
        if (!a.differential(i).empty()) doc["differential"].push_back({i, vector_json(a.differential(i))});
    }
    if (a.involution_is_identity()) {
        doc["involution"] = "identity";
    } else {
        doc["involution"] = json::array();
        for (std::size_t i = 0; i < a.dimension(); ++i) doc["involution"].push_back({i, vector_json(a.involution(i))});
    }
    if (a.max_bar_length()) doc["max_bar_length"] = *a.max_bar_length();
    return doc.dump(2) + "\n";
}

}  // namespace dihomol
