#include "torsurg/modeljson.hpp"

#include "torsurg/errors.hpp"
#include "torsurg/wordparse.hpp"

#include <nlohmann/json.hpp>

#include <fstream>

namespace torsurg {

using nlohmann::json;

namespace {

json matrix_to_json(const IntMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(static_cast<long long>(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

IntMatrix matrix_from_json(const json& j) {
    if (!j.is_array()) throw domain_error("matrix JSON must be an array of rows");
    const std::size_t rows = j.size();
    const std::size_t cols = rows ? j.at(0).size() : 0;
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (j.at(i).size() != cols) throw domain_error("ragged matrix JSON");
        for (std::size_t c = 0; c < cols; ++c) m.at(i, c) = j.at(i).at(c).get<long long>();
    }
    return m;
}

json torus_to_json(const TorusRecord& t, const std::vector<std::string>& gens) {
    json j;
    j["name"] = t.name;
    j["meridian"] = print_word(t.meridian, gens);
    j["surgery_curve"] = print_word(t.surgery_curve, gens);
    j["essential"] = t.essential;
    j["curve_primitive"] = t.curve_primitive;
    j["framing"] = t.framing == Framing::Lagrangian ? "lagrangian" : "null-homologous";
    if (t.form_slot)
        j["form_slot"] = *t.form_slot;
    else
        j["form_slot"] = nullptr;
    if (t.dual_name)
        j["dual_name"] = *t.dual_name;
    else
        j["dual_name"] = nullptr;
    return j;
}

TorusRecord torus_from_json(const json& j, const std::vector<std::string>& gens) {
    TorusRecord t;
    t.name = j.at("name").get<std::string>();
    t.meridian = parse_word(j.at("meridian").get<std::string>(), gens);
    t.surgery_curve = parse_word(j.at("surgery_curve").get<std::string>(), gens);
    t.essential = j.value("essential", true);
    t.curve_primitive = j.value("curve_primitive", true);
    const std::string fr = j.value("framing", "lagrangian");
    if (fr == "lagrangian")
        t.framing = Framing::Lagrangian;
    else if (fr == "null-homologous")
        t.framing = Framing::NullHomologous;
    else
        throw domain_error("unknown framing: " + fr);
    if (j.contains("form_slot") && !j.at("form_slot").is_null())
        t.form_slot = j.at("form_slot").get<std::size_t>();
    if (j.contains("dual_name") && !j.at("dual_name").is_null())
        t.dual_name = j.at("dual_name").get<std::string>();
    return t;
}

}  // namespace

json model_to_json(const ManifoldModel& m) {
    json j;
    j["name"] = m.name;
    j["euler_char"] = m.euler_char;
    j["signature"] = m.signature;
    j["b1"] = m.b1;
    j["b2"] = m.b2;
    json comp;
    comp["generators"] = m.complement.generators;
    json rels = json::array();
    for (const Word& r : m.complement.relators)
        rels.push_back(print_word(r, m.complement.generators));
    comp["relators"] = std::move(rels);
    j["complement"] = std::move(comp);
    json tori = json::array();
    for (const auto& t : m.tori) tori.push_back(torus_to_json(t, m.complement.generators));
    j["tori"] = std::move(tori);
    json blocks = json::array();
    for (const auto& b : m.block_form)
        blocks.push_back(json{{"label", b.label}, {"matrix", matrix_to_json(b.matrix)}});
    j["block_form"] = std::move(blocks);
    j["spin"] = json{{"manifold_nonspin", m.spin.manifold_nonspin},
                     {"universal_cover_nonspin", m.spin.universal_cover_nonspin}};
    j["null_homologous_cores"] =
        std::vector<std::string>(m.null_homologous_cores.begin(), m.null_homologous_cores.end());
    j["notes"] = m.notes;
    json log = json::array();
    for (const auto& a : m.surgery_log) {
        json e;
        e["torus"] = torus_to_json(a.torus, m.complement.generators);
        e["p"] = a.p;
        e["q"] = a.q;
        e["torus_index"] = a.torus_index;
        if (a.block_index)
            e["block_index"] = *a.block_index;
        else
            e["block_index"] = nullptr;
        if (a.removed_block)
            e["removed_block"] =
                json{{"label", a.removed_block->label}, {"matrix", matrix_to_json(a.removed_block->matrix)}};
        else
            e["removed_block"] = nullptr;
        e["relator"] = print_word(a.relator, m.complement.generators);
        log.push_back(std::move(e));
    }
    j["surgeries"] = std::move(log);
    return j;
}

ManifoldModel model_from_json(const json& j) {
    ManifoldModel m;
    m.name = j.value("name", "");
    m.euler_char = j.at("euler_char").get<long long>();
    m.signature = j.at("signature").get<long long>();
    m.b1 = j.at("b1").get<std::size_t>();
    m.b2 = j.at("b2").get<std::size_t>();
    const auto& comp = j.at("complement");
    std::vector<std::string> gens = comp.at("generators").get<std::vector<std::string>>();
    std::vector<Word> rels;
    for (const auto& r : comp.at("relators")) rels.push_back(parse_word(r.get<std::string>(), gens));
    m.complement = Presentation(gens, std::move(rels));
    for (const auto& t : j.at("tori")) m.tori.push_back(torus_from_json(t, gens));
    for (const auto& b : j.at("block_form"))
        m.block_form.push_back(
            {b.at("label").get<std::string>(), matrix_from_json(b.at("matrix"))});
    if (j.contains("spin")) {
        m.spin.manifold_nonspin = j.at("spin").value("manifold_nonspin", true);
        m.spin.universal_cover_nonspin = j.at("spin").value("universal_cover_nonspin", true);
    }
    for (const auto& c : j.value("null_homologous_cores", std::vector<std::string>{}))
        m.null_homologous_cores.insert(c);
    m.notes = j.value("notes", std::vector<std::string>{});
    if (j.contains("surgeries")) {
        for (const auto& e : j.at("surgeries")) {
            AppliedSurgery a;
            a.torus = torus_from_json(e.at("torus"), gens);
            a.p = e.at("p").get<long long>();
            a.q = e.at("q").get<long long>();
            a.torus_index = e.at("torus_index").get<std::size_t>();
            if (e.contains("block_index") && !e.at("block_index").is_null())
                a.block_index = e.at("block_index").get<std::size_t>();
            if (e.contains("removed_block") && !e.at("removed_block").is_null())
                a.removed_block = LabeledBlock{e.at("removed_block").at("label").get<std::string>(),
                                               matrix_from_json(e.at("removed_block").at("matrix"))};
            a.relator = parse_word(e.at("relator").get<std::string>(), gens);
            m.surgery_log.push_back(std::move(a));
        }
    }
    // structural invariants
    std::size_t rank_sum = 0;
    for (const auto& b : m.block_form) rank_sum += b.matrix.rows();
    if (rank_sum != m.b2) throw domain_error("block ranks do not sum to b2");
    for (const auto& t : m.tori) {
        if (t.meridian.empty() || t.surgery_curve.empty())
            throw domain_error("torus " + t.name + " needs nonempty meridian and curve");
        if (t.form_slot && *t.form_slot >= m.block_form.size())
            throw domain_error("torus " + t.name + " form_slot out of range");
    }
    return m;
}

ManifoldModel load_model_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error(1, "cannot open model file " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw parse_error(e.byte ? e.byte : 1, std::string("model JSON: ") + e.what());
    }
    return model_from_json(j);
}

void save_model_file(const ManifoldModel& m, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw parse_error(1, "cannot write model file " + path);
    out << model_to_json(m).dump(1) << "\n";
}

Script script_from_json(const json& j) {
    Script s;
    const auto& base = j.at("base");
    if (base.is_string()) {
        s.base_builtin = base.get<std::string>();
    } else {
        s.base_file = base.at("file").get<std::string>();
    }
    for (const auto& op : j.value("operations", json::array())) {
        ScriptOp so;
        const std::string kind = op.at("op").get<std::string>();
        if (kind == "surgery") {
            so.kind = ScriptOp::Kind::Surgery;
            for (const auto& [name, c] : op.at("coefficients").items())
                so.spec.coefficients[name] = {c.at("p").get<long long>(),
                                              c.value("q", static_cast<long long>(1))};
        } else if (kind == "stabilize") {
            so.kind = ScriptOp::Kind::Stabilize;
        } else if (kind == "reverse") {
            so.kind = ScriptOp::Kind::Reverse;
            so.core = op.at("core").get<std::string>();
        } else {
            throw domain_error("unknown script operation: " + kind);
        }
        s.operations.push_back(std::move(so));
    }
    s.reports = j.value("reports", std::vector<std::string>{});
    s.sw_pmax = j.value("pmax", 5);
    s.catalog = j.value("catalog", std::string("q8"));
    return s;
}

Script load_script_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error(1, "cannot open script file " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw parse_error(e.byte ? e.byte : 1, std::string("script JSON: ") + e.what());
    }
    return script_from_json(j);
}

}  // namespace torsurg
