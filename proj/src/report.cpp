#include "torsurg/report.hpp"

#include "torsurg/wordparse.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace torsurg {

using nlohmann::json;

namespace {

std::string subset_str(const std::vector<std::string>& subset) {
    if (subset.empty()) return "(none)";
    std::string s;
    for (std::size_t i = 0; i < subset.size(); ++i) s += (i ? "," : "") + subset[i];
    return s;
}

std::string rank_str(const GroupClass& c) {
    if (const auto* fa = std::get_if<FreeAbelian>(&c)) return std::to_string(fa->rank);
    if (const auto* u = std::get_if<Undetermined>(&c))
        return std::to_string(u->abelianization_rank);
    return "-";
}

std::string witness_str(const GroupClass& c) {
    if (const auto* na = std::get_if<NonAbelian>(&c)) return na->witness.group;
    return "-";
}

}  // namespace

std::string sweep_text(const SweepTable& t) {
    std::ostringstream os;
    os << std::left << std::setw(18) << "subset" << std::setw(4) << "p" << std::setw(14)
       << "verdict" << std::setw(6) << "rank" << "witness\n";
    os << std::string(18 + 4 + 14 + 6 + 7, '-') << "\n";
    for (const auto& row : t.rows) {
        std::string verdict = verdict_name(row.verdict);
        if (!row.stable) verdict += " (unstable)";
        os << std::left << std::setw(18) << subset_str(row.subset) << std::setw(4) << row.p
           << std::setw(14) << verdict << std::setw(6) << rank_str(row.verdict)
           << witness_str(row.verdict) << "\n";
    }
    return os.str();
}

std::string sweep_json(const SweepTable& t) {
    json arr = json::array();
    for (const auto& row : t.rows) {
        json r;
        r["subset"] = row.subset;
        r["p"] = row.p;
        std::string verdict = verdict_name(row.verdict);
        if (!row.stable) verdict += " (unstable)";
        r["verdict"] = verdict;
        if (const auto* fa = std::get_if<FreeAbelian>(&row.verdict))
            r["rank"] = fa->rank;
        else
            r["rank"] = nullptr;
        if (const auto* na = std::get_if<NonAbelian>(&row.verdict))
            r["witness_group"] = na->witness.group;
        else
            r["witness_group"] = nullptr;
        arr.push_back(std::move(r));
    }
    return arr.dump(1) + "\n";
}

SweepComparison compare_with_published(const SweepTable& t) {
    SweepComparison out;
    auto in_list = [](const std::vector<std::vector<std::string>>& list,
                      const std::vector<std::string>& subset) {
        return std::find(list.begin(), list.end(), subset) != list.end();
    };
    for (const auto& row : t.rows) {
        const std::size_t size = row.subset.size();
        std::optional<std::size_t> expected_rank;  // nullopt = expected non-free-abelian
        if (size == 0) expected_rank = 6;
        if (size == 3 && in_list(published_free_abelian_triples(), row.subset)) expected_rank = 3;
        if (size == 4 && in_list(published_free_abelian_quadruples(), row.subset))
            expected_rank = 2;
        if (size == 5) expected_rank = 1;

        const auto* fa = std::get_if<FreeAbelian>(&row.verdict);
        std::ostringstream line;
        if (expected_rank) {
            if (!fa || fa->rank != *expected_rank || !row.stable) {
                line << "MISMATCH " << subset_str(row.subset) << " p=" << row.p
                     << " expected=free-abelian(" << *expected_rank << ") got="
                     << verdict_name(row.verdict);
                if (const auto* na = std::get_if<NonAbelian>(&row.verdict))
                    line << "(" << na->witness.group << " witness)";
                if (!row.stable) line << " [position-unstable]";
                out.mismatches.push_back(line.str());
            }
        } else if (fa) {
            line << "MISMATCH " << subset_str(row.subset) << " p=" << row.p
                 << " expected=non-free-abelian got=free-abelian(" << fa->rank << ")";
            out.mismatches.push_back(line.str());
        }
        if (std::holds_alternative<Undetermined>(row.verdict)) ++out.undetermined;
    }
    return out;
}

std::string groupclass_text(const GroupClass& c) {
    std::ostringstream os;
    if (const auto* fa = std::get_if<FreeAbelian>(&c)) {
        os << "free-abelian rank " << fa->rank << ", generators";
        for (const auto& g : fa->certificate.generators) os << " " << g;
    } else if (const auto* na = std::get_if<NonAbelian>(&c)) {
        os << "non-abelian (witness onto " << na->witness.group << ":";
        for (std::size_t i = 0; i < na->witness.generator_names.size(); ++i)
            os << " " << na->witness.generator_names[i] << "->" << na->witness.images[i];
        os << ")";
    } else {
        const auto& u = std::get<Undetermined>(c);
        os << "undetermined (abelianization rank " << u.abelianization_rank;
        if (!u.torsion.empty()) {
            os << ", torsion";
            for (const auto& d : u.torsion) os << " " << d;
        }
        os << ")";
    }
    return os.str();
}

std::string invariants_text(const ManifoldModel& m) {
    std::ostringstream os;
    os << "chi=" << m.euler_char << " sigma=" << m.signature << " b1=" << m.b1
       << " b2=" << m.b2 << " betti_check=" << (betti_check(m) ? "ok" : "FAIL") << "\n";
    return os.str();
}

std::string model_info_text(const ManifoldModel& m) {
    std::ostringstream os;
    os << "model " << (m.name.empty() ? "(unnamed)" : m.name) << "\n";
    os << invariants_text(m);
    os << "spin: manifold_nonspin=" << (m.spin.manifold_nonspin ? "yes" : "no")
       << " universal_cover_nonspin=" << (m.spin.universal_cover_nonspin ? "yes" : "no") << "\n";
    os << "complement: " << m.complement.str() << "\n";
    os << "blocks:";
    for (const auto& b : m.block_form) os << " " << b.label << "(rank " << b.matrix.rows() << ")";
    os << "\n";
    if (!m.tori.empty()) {
        os << std::left << std::setw(5) << "torus" << " " << std::setw(18) << "meridian"
           << std::setw(7) << "curve" << std::setw(6) << "slot" << "dual\n";
        for (const auto& t : m.tori) {
            os << std::left << std::setw(5) << t.name << " " << std::setw(18)
               << print_word(t.meridian, m.complement.generators) << std::setw(7)
               << print_word(t.surgery_curve, m.complement.generators) << std::setw(6)
               << (t.form_slot ? std::to_string(*t.form_slot) : "-")
               << (t.dual_name ? *t.dual_name : "-") << "\n";
        }
    }
    if (!m.null_homologous_cores.empty()) {
        os << "null-homologous cores:";
        for (const auto& c : m.null_homologous_cores) os << " " << c;
        os << "\n";
    }
    for (const auto& n : m.notes) os << "note: " << n << "\n";
    return os.str();
}

std::string pipeline_text(const PipelineReport& r) {
    std::ostringstream os;
    os << "subset: " << subset_str(r.subset) << "\n";
    os << "p: " << r.p << " (on " << r.p_torus << ")\n";
    os << "invariants: chi=" << r.chi << " sigma=" << r.sigma << " b1=" << r.b1
       << " b2=" << r.b2 << "\n";
    os << "pi1: " << groupclass_text(r.pi1) << "\n";
    os << "reduced form: rank " << r.reduced.rows() << ", (b2+, b2-) = (" << r.b2_plus << ", "
       << r.b2_minus << ")\n";
    os << "unimodular: " << (r.reduced_unimodular ? "yes" : "no")
       << "   extended: " << (r.form_extended ? "yes" : "no") << "\n";
    os << "label: " << r.label.str() << "\n";
    os << "pi2: " << r.pi2.str() << "\n";
    os << "stable range gap: "
       << (r.b2_plus + r.b2_minus -
           static_cast<std::size_t>(std::llabs(static_cast<long long>(r.b2_plus) -
                                               static_cast<long long>(r.b2_minus))))
       << "\n";
    if (r.sw_value) os << "sw value: " << *r.sw_value << "\n";
    if (r.kodaira_dim) os << "kodaira: " << kodaira_str(*r.kodaira_dim) << "\n";
    return os.str();
}

std::string pipeline_json(const PipelineReport& r) {
    json j;
    j["subset"] = r.subset;
    j["p"] = r.p;
    j["p_torus"] = r.p_torus;
    j["chi"] = r.chi;
    j["sigma"] = r.sigma;
    j["b1"] = r.b1;
    j["b2"] = r.b2;
    j["pi1"] = groupclass_text(r.pi1);
    j["reduced_rank"] = r.reduced.rows();
    j["b2_plus"] = r.b2_plus;
    j["b2_minus"] = r.b2_minus;
    j["unimodular"] = r.reduced_unimodular;
    j["extended"] = r.form_extended;
    j["label"] = r.label.str();
    j["pi2"] = r.pi2.str();
    if (r.sw_value)
        j["sw_value"] = *r.sw_value;
    else
        j["sw_value"] = nullptr;
    if (r.kodaira_dim)
        j["kodaira"] = kodaira_str(*r.kodaira_dim);
    else
        j["kodaira"] = nullptr;
    return j.dump(1) + "\n";
}

}  // namespace torsurg
