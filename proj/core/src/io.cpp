#include "dgalg/io.hpp"

#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

namespace dgalg {

namespace {
using nlohmann::json;

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Window parse_window(const json& j) {
    if (!j.is_array() || j.size() != 2)
        throw InputError("\"window\" must be [lo, hi] with null for an "
                         "unbounded side");
    Window w;
    if (!j[0].is_null()) w.lo = j[0].get<int>();
    if (!j[1].is_null()) w.hi = j[1].get<int>();
    return w;
}

Basis parse_basis(const json& j) {
    if (!j.is_array() || j.empty())
        throw InputError("\"basis\" must be a nonempty array");
    Basis b;
    for (const auto& e : j) {
        if (!e.contains("name") || !e.contains("degree"))
            throw InputError("basis entries need \"name\" and \"degree\"");
        std::string name = e.at("name").get<std::string>();
        if (b.index_of(name) >= 0)
            throw InputError("duplicate basis name '" + name + "'");
        b.add(e.at("degree").get<int>(), name);
    }
    return b;
}

int index_or_throw(const Basis& b, const std::string& name,
                   const std::string& where) {
    int i = b.index_of(name);
    if (i < 0)
        throw InputError(where + ": unknown basis element '" + name + "'");
    return i;
}

SVec parse_result(const json& j, const Basis& b, const Field& f,
                  const std::string& where) {
    if (!j.is_array()) throw InputError(where + ": \"result\" must be an array");
    SVec v;
    for (const auto& term : j) {
        if (!term.is_array() || term.size() != 2)
            throw InputError(where + ": result terms are [name, scalar]");
        int i = index_or_throw(b, term[0].get<std::string>(), where);
        svec_add(v, i, Scalar::parse(f, term[1].get<std::string>()));
    }
    return v;
}

json dump_result(const SVec& v, const Basis& b) {
    json out = json::array();
    for (const auto& [i, c] : v)
        out.push_back(json::array({b.name(i), c.to_string()}));
    return out;
}

json dump_window(const Window& w) {
    json out = json::array();
    out.push_back(w.lo == INT_MIN ? json(nullptr) : json(w.lo));
    out.push_back(w.hi == INT_MAX ? json(nullptr) : json(w.hi));
    return out;
}
}  // namespace

DGAlgebra import_algebra(const std::string& json_text) {
    json j = parse_json(json_text);
    DGAlgebra a;
    if (!j.contains("field")) throw InputError("missing \"field\"");
    a.field = Field::parse(j.at("field").get<std::string>());
    a.basis = parse_basis(j.value("basis", json::array()));
    if (!j.contains("unit")) throw InputError("missing \"unit\"");
    a.unit = index_or_throw(a.basis, j.at("unit").get<std::string>(), "unit");
    if (a.basis.degree(a.unit) != 0)
        throw InputError("the unit must sit in degree 0");
    if (j.contains("window")) a.window = parse_window(j.at("window"));

    for (const auto& e : j.value("products", json::array())) {
        int l = index_or_throw(a.basis, e.at("left").get<std::string>(),
                               "products");
        int r = index_or_throw(a.basis, e.at("right").get<std::string>(),
                               "products");
        a.set_product(l, r,
                      parse_result(e.at("result"), a.basis, a.field,
                                   "products"));
    }
    for (const auto& e : j.value("differential", json::array())) {
        int s = index_or_throw(a.basis, e.at("source").get<std::string>(),
                               "differential");
        a.set_differential(
            s, parse_result(e.at("result"), a.basis, a.field, "differential"));
    }
    return a;
}

DGAlgebra load_algebra(const std::string& path) {
    return import_algebra(read_file(path));
}

std::string export_algebra(const DGAlgebra& a) {
    json j;
    j["field"] = a.field.to_string();
    j["basis"] = json::array();
    for (int i = 0; i < a.basis.size(); ++i)
        j["basis"].push_back(
            {{"name", a.basis.name(i)}, {"degree", a.basis.degree(i)}});
    j["unit"] = a.basis.name(a.unit);
    j["window"] = dump_window(a.window);
    j["products"] = json::array();
    for (const auto& [key, v] : a.products)
        if (!v.empty())
            j["products"].push_back({{"left", a.basis.name(key.first)},
                                     {"right", a.basis.name(key.second)},
                                     {"result", dump_result(v, a.basis)}});
    j["differential"] = json::array();
    for (const auto& [i, v] : a.differentials)
        if (!v.empty())
            j["differential"].push_back({{"source", a.basis.name(i)},
                                         {"result", dump_result(v, a.basis)}});
    return j.dump(2) + "\n";
}

DGBimodule import_module(const std::string& json_text,
                         std::shared_ptr<const DGAlgebra> a) {
    json j = parse_json(json_text);
    DGBimodule m;
    m.algebra = a;
    m.field = a->field;
    m.basis = parse_basis(j.value("basis", json::array()));
    if (j.contains("window")) m.window = parse_window(j.at("window"));
    for (const auto& e : j.value("left_action", json::array())) {
        int ai = index_or_throw(a->basis, e.at("a").get<std::string>(),
                                "left_action");
        int mi = index_or_throw(m.basis, e.at("m").get<std::string>(),
                                "left_action");
        SVec v = parse_result(e.at("result"), m.basis, m.field, "left_action");
        if (!v.empty()) m.left_action[{ai, mi}] = std::move(v);
    }
    for (const auto& e : j.value("right_action", json::array())) {
        int mi = index_or_throw(m.basis, e.at("m").get<std::string>(),
                                "right_action");
        int ai = index_or_throw(a->basis, e.at("a").get<std::string>(),
                                "right_action");
        SVec v = parse_result(e.at("result"), m.basis, m.field, "right_action");
        if (!v.empty()) m.right_action[{mi, ai}] = std::move(v);
    }
    for (const auto& e : j.value("differential", json::array())) {
        int s = index_or_throw(m.basis, e.at("source").get<std::string>(),
                               "differential");
        SVec v = parse_result(e.at("result"), m.basis, m.field, "differential");
        if (!v.empty()) m.differentials[s] = std::move(v);
    }
    return m;
}

DGBimodule load_module(const std::string& path,
                       std::shared_ptr<const DGAlgebra> a) {
    return import_module(read_file(path), a);
}

}  // namespace dgalg
