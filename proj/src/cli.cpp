#include "torsurg/cli.hpp"

#include "torsurg/catalog.hpp"
#include "torsurg/errors.hpp"
#include "torsurg/modeljson.hpp"
#include "torsurg/report.hpp"
#include "torsurg/wordparse.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace torsurg {

namespace {

std::vector<std::string> split_names(const std::string& csv) {
    std::vector<std::string> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

ManifoldModel load_base(const std::string& builtin, const std::string& file) {
    if (!file.empty()) return load_model_file(file);
    if (builtin == "M" || builtin.empty()) return builtin_M();
    throw domain_error("unknown builtin model: " + builtin);
}

bool color_enabled() {
    return std::getenv("NO_COLOR") == nullptr && isatty(fileno(stdout));
}

std::string paint(const std::string& s, const char* code) {
    if (!color_enabled()) return s;
    return std::string("\033[") + code + "m" + s + "\033[0m";
}

int cmd_info(const std::string& base, const std::string& file, bool as_json, std::ostream& out) {
    const ManifoldModel m = load_base(base, file);
    if (as_json)
        out << model_to_json(m).dump(1) << "\n";
    else
        out << model_info_text(m);
    return 0;
}

int cmd_classify_subsets(const std::string& sizes_csv, const std::string& p_csv,
                         const std::string& catalog_sel, bool as_json,
                         const std::string& out_path, std::ostream& out, std::ostream& err) {
    const auto size_names = split_names(sizes_csv);
    if (size_names.empty()) throw parse_error(1, "empty size list");
    std::vector<std::size_t> sizes;
    for (const auto& s : size_names) sizes.push_back(std::stoul(s));
    std::vector<long long> ps;
    for (const auto& s : split_names(p_csv)) ps.push_back(std::stoll(s));
    if (ps.empty()) throw parse_error(1, "empty p list");

    const auto catalog = group_catalog(catalog_sel);
    SweepTable full = reproduce_theorem41(ps, catalog);
    SweepTable t;
    for (auto& row : full.rows)
        if (std::find(sizes.begin(), sizes.end(), row.subset.size()) != sizes.end())
            t.rows.push_back(std::move(row));

    if (t.rows.empty())
        err << "note: no rows for the requested sizes (p != +-1 sweeps cover sizes 4 and 5)\n";
    const std::string rendered = as_json ? sweep_json(t) : sweep_text(t);
    if (!out_path.empty()) {
        std::ofstream f(out_path);
        if (!f) throw parse_error(1, "cannot write " + out_path);
        f << rendered;
    } else {
        out << rendered;
    }

    const SweepComparison cmp = compare_with_published(t);
    if (cmp.undetermined)
        err << "warning: " << cmp.undetermined << " undetermined non-abelian case(s)\n";
    if (!cmp.ok()) {
        for (const auto& line : cmp.mismatches) err << line << "\n";
        err << paint("published-table mismatches: ", "31") << cmp.mismatches.size() << "\n";
        return 1;
    }
    err << paint("published-table match: ok", "32") << "\n";
    return 0;
}

int cmd_prototype(const std::string& set_csv, long long p, const std::string& p_torus,
                  const std::string& catalog_sel, bool as_json, std::ostream& out) {
    const auto names = split_names(set_csv);
    std::optional<std::string> pt;
    if (!p_torus.empty()) pt = p_torus;
    const PipelineReport r = pipeline_prototype(names, p, pt, group_catalog(catalog_sel));
    out << (as_json ? pipeline_json(r) : pipeline_text(r));
    return 0;
}

int cmd_eqform(const std::string& set_csv, long long p, const std::string& p_torus,
               bool as_json, std::ostream& out) {
    const auto names = split_names(set_csv);
    std::optional<std::string> pt;
    if (!p_torus.empty()) pt = p_torus;
    const PipelineReport r = pipeline_prototype(names, p, pt);
    if (as_json) {
        nlohmann::json j;
        j["subset"] = r.subset;
        j["rank"] = r.equivariant.rank();
        j["size"] = r.equivariant.size();
        nlohmann::json rows = nlohmann::json::array();
        for (std::size_t i = 0; i < r.equivariant.size(); ++i) {
            nlohmann::json row = nlohmann::json::array();
            for (std::size_t k = 0; k < r.equivariant.size(); ++k)
                row.push_back(r.equivariant.at(i, k).str());
            rows.push_back(std::move(row));
        }
        j["entries"] = std::move(rows);
        j["unimodular"] = r.reduced_unimodular;
        j["extended"] = r.form_extended;
        out << j.dump(1) << "\n";
    } else {
        out << "equivariant form over Z[Z^" << r.equivariant.rank() << "], size "
            << r.equivariant.size() << "\n";
        for (std::size_t i = 0; i < r.equivariant.size(); ++i) {
            for (std::size_t k = 0; k < r.equivariant.size(); ++k)
                out << (k ? "  " : "") << r.equivariant.at(i, k).str();
            out << "\n";
        }
        out << "unimodular: " << (r.reduced_unimodular ? "yes" : "no")
            << "   extended: " << (r.form_extended ? "yes" : "no") << "\n";
    }
    return 0;
}

int cmd_sw_family(long long pmax, bool as_json, std::ostream& out) {
    if (pmax < 1) throw parse_error(1, "pmax must be >= 1");
    if (as_json) {
        nlohmann::json arr = nlohmann::json::array();
        for (long long p = 1; p <= pmax; ++p)
            arr.push_back(nlohmann::json{{"p", p}, {"value", sw_family_value(p)}});
        out << arr.dump(1) << "\n";
    } else {
        out << "p   sw-value\n";
        for (long long p = 1; p <= pmax; ++p) out << p << "   " << sw_family_value(p) << "\n";
        out << "pairwise distinct: yes\n";
    }
    return 0;
}

int cmd_run(const std::string& script_path, const std::string& emit_model, bool as_json,
            std::ostream& out) {
    const Script script = load_script_file(script_path);
    ManifoldModel m = load_base(script.base_builtin, script.base_file);
    const auto catalog = group_catalog(script.catalog);

    std::vector<std::vector<std::string>> surgered_sets;
    for (const auto& op : script.operations) {
        switch (op.kind) {
            case ScriptOp::Kind::Surgery: {
                std::vector<std::string> names;
                for (const auto& [nm, c] : op.spec.coefficients) names.push_back(nm);
                surgered_sets.push_back(names);
                m = apply_surgeries(m, op.spec);
                break;
            }
            case ScriptOp::Kind::Stabilize:
                m = stabilize(m);
                break;
            case ScriptOp::Kind::Reverse: {
                auto it = std::find_if(m.surgery_log.rbegin(), m.surgery_log.rend(),
                                       [&](const AppliedSurgery& a) {
                                           return a.torus.name == op.core;
                                       });
                if (it == m.surgery_log.rend())
                    throw domain_error("unknown core: " + op.core);
                m = reverse_surgery(m, op.core, it->torus);
                break;
            }
        }
    }

    for (const auto& rep : script.reports) {
        if (rep == "invariants") {
            out << invariants_text(m);
        } else if (rep == "pi1") {
            const GroupClass c = classify(closed_pi1(m, {}), catalog);
            out << "pi1: " << groupclass_text(c) << "\n";
        } else if (rep == "prototype" || rep == "eqform" || rep == "pi2") {
            // reconstruct the pipeline from the applied surgeries
            std::vector<std::string> names;
            long long p = -1;
            std::string p_torus;
            for (const auto& a : m.surgery_log) {
                names.push_back(a.torus.name);
                if (a.p != -1) {
                    p = a.p;
                    p_torus = a.torus.name;
                }
            }
            if (p_torus.empty() && !names.empty()) {
                p = -1;
                p_torus = names.back();
            }
            const PipelineReport r = pipeline_prototype(
                names, p, p_torus.empty() ? std::nullopt : std::optional<std::string>(p_torus),
                catalog);
            if (rep == "prototype") {
                if (as_json)
                    out << pipeline_json(r);
                else
                    out << r.label.str() << "\n";
            } else if (rep == "pi2") {
                out << "pi2: " << r.pi2.str() << "\n";
            } else {
                out << "eqform: " << r.equivariant.str() << "\n";
            }
        } else if (rep == "sw-family") {
            cmd_sw_family(script.sw_pmax, false, out);
        } else {
            throw domain_error("unknown report: " + rep);
        }
    }
    if (!emit_model.empty()) save_model_file(m, emit_model);
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"torus-surgery calculator for 4-manifold models"};
    app.require_subcommand(1);

    bool as_json = false;
    app.add_flag("--json", as_json, "emit JSON reports");

    auto* info = app.add_subcommand("info", "show a model");
    std::string base = "M", model_file;
    info->add_option("--base", base, "builtin model name");
    info->add_option("--model", model_file, "model JSON file");

    auto* cls = app.add_subcommand("classify-subsets", "sweep surgery sub-collections");
    std::string sizes = "0,1,2,3,4,5", plist = "-1", catalog_sel = "q8", out_path;
    cls->add_option("--sizes", sizes, "comma-separated subset sizes");
    cls->add_option("--p", plist, "comma-separated surgery coefficients");
    cls->add_option("--catalog", catalog_sel, "finite group catalog: q8 | all");
    cls->add_option("-o,--output", out_path, "write the table to a file");

    auto* proto = app.add_subcommand("prototype", "prototype pipeline for a surgery set");
    std::string set_csv, p_torus;
    long long pval = 1;
    proto->add_option("--set", set_csv, "comma-separated torus names")->required();
    proto->add_option("--p", pval, "coefficient of the distinguished surgery");
    proto->add_option("--p-torus", p_torus, "torus receiving the p-surgery");
    proto->add_option("--catalog", catalog_sel, "finite group catalog: q8 | all");

    auto* eq = app.add_subcommand("eqform", "equivariant intersection form of a surgery set");
    eq->add_option("--set", set_csv, "comma-separated torus names")->required();
    eq->add_option("--p", pval, "coefficient of the distinguished surgery");
    eq->add_option("--p-torus", p_torus, "torus receiving the p-surgery");

    auto* sw = app.add_subcommand("sw-family", "family invariant values");
    long long pmax = 10;
    sw->add_option("--pmax", pmax, "largest family member");

    auto* run = app.add_subcommand("run", "execute a surgery script");
    std::string script_path, emit_model;
    run->add_option("script", script_path, "script JSON file")->required();
    run->add_option("--emit-model", emit_model, "write the final model to a file");

    std::vector<std::string> argv_rev(args.rbegin(), args.rend());
    try {
        app.parse(argv_rev);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand(info)) return cmd_info(base, model_file, as_json, out);
        if (app.got_subcommand(cls))
            return cmd_classify_subsets(sizes, plist, catalog_sel, as_json, out_path, out, err);
        if (app.got_subcommand(proto))
            return cmd_prototype(set_csv, pval, p_torus, catalog_sel, as_json, out);
        if (app.got_subcommand(eq)) return cmd_eqform(set_csv, pval, p_torus, as_json, out);
        if (app.got_subcommand(sw)) return cmd_sw_family(pmax, as_json, out);
        if (app.got_subcommand(run)) return cmd_run(script_path, emit_model, as_json, out);
    } catch (const parse_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace torsurg
