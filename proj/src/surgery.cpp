#include "torsurg/surgery.hpp"

#include "torsurg/errors.hpp"

#include <algorithm>
#include <numeric>

namespace torsurg {

namespace {

long long gcd_ll(long long a, long long b) {
    a = a < 0 ? -a : a;
    b = b < 0 ? -b : b;
    while (b) {
        const long long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Word surgery_relator(const TorusRecord& t, long long p, long long q) {
    return free_reduce(concat(pow(t.meridian, p), pow(t.surgery_curve, q)));
}

void check_spec(const ManifoldModel& m, const SurgerySpec& s) {
    for (const auto& [name, c] : s.coefficients) {
        if (!m.find_torus(name)) throw domain_error("unknown torus name: " + name);
        if (gcd_ll(c.p, c.q) != 1)
            throw domain_error("non-coprime surgery coefficient on " + name + ": " +
                               std::to_string(c.p) + "/" + std::to_string(c.q));
    }
}

}  // namespace

const TorusRecord* ManifoldModel::find_torus(const std::string& nm) const {
    for (const auto& t : tori)
        if (t.name == nm) return &t;
    return nullptr;
}

IntMatrix ManifoldModel::total_form() const {
    IntMatrix q(0, 0);
    for (const auto& b : block_form) q = q.direct_sum(b.matrix);
    return q;
}

Presentation closed_pi1(const ManifoldModel& m, const SurgerySpec& s) {
    check_spec(m, s);
    std::vector<Word> rels = m.complement.relators;
    for (const auto& t : m.tori) {
        auto it = s.coefficients.find(t.name);
        if (it != s.coefficients.end())
            rels.push_back(surgery_relator(t, it->second.p, it->second.q));
        else
            rels.push_back(t.meridian);
    }
    return Presentation(m.complement.generators, std::move(rels));
}

ManifoldModel apply_surgeries(const ManifoldModel& m, const SurgerySpec& s) {
    check_spec(m, s);
    for (const auto& [name, c] : s.coefficients) {
        const TorusRecord* t = m.find_torus(name);
        if (!t->essential)
            throw domain_error("torus " + name + " is not homologically essential");
        if (!t->curve_primitive)
            throw domain_error("surgery curve on " + name + " is not primitive");
        if (c.q == 0) throw domain_error("q = 0 surgery on " + name + " not permitted here");
    }

    ManifoldModel out = m;
    // deterministic order: tori list order, so specs are order-independent
    for (std::size_t pos = 0; pos < m.tori.size(); ++pos) {
        const std::string name = m.tori[pos].name;
        auto it = s.coefficients.find(name);
        if (it == s.coefficients.end()) continue;
        const long long p = it->second.p, q = it->second.q;

        // the live record carries a form_slot valid for the current block list
        std::size_t cur = 0;
        while (out.tori[cur].name != name) ++cur;
        const TorusRecord t = out.tori[cur];

        AppliedSurgery log;
        log.torus = t;
        log.p = p;
        log.q = q;
        log.torus_index = cur;
        out.tori.erase(out.tori.begin() + cur);

        if (t.form_slot) {
            const std::size_t bi = *t.form_slot;
            if (bi >= out.block_form.size())
                throw domain_error("form slot block missing for " + t.name);
            log.block_index = bi;
            log.removed_block = out.block_form[bi];
            out.block_form.erase(out.block_form.begin() + bi);
            for (auto& rt : out.tori)
                if (rt.form_slot && *rt.form_slot > bi) --*rt.form_slot;
        }

        log.relator = surgery_relator(t, p, q);
        std::vector<Word> rels = out.complement.relators;
        rels.push_back(log.relator);
        out.complement = Presentation(out.complement.generators, std::move(rels));

        out.b1 -= 1;
        out.b2 -= 2;
        if (q == 1) out.null_homologous_cores.insert(t.name);
        if (q != 1 && q != -1)
            out.notes.push_back("surgery curve of " + t.name + " has order " +
                                std::to_string(q < 0 ? -q : q) + " in first homology");
        out.surgery_log.push_back(std::move(log));
    }
    return out;
}

ManifoldModel reverse_surgery(const ManifoldModel& m_after, const std::string& core_name,
                              const TorusRecord& original) {
    if (!m_after.null_homologous_cores.count(core_name))
        throw domain_error("unknown core: " + core_name + " is not recorded null-homologous");
    auto it = std::find_if(m_after.surgery_log.rbegin(), m_after.surgery_log.rend(),
                           [&](const AppliedSurgery& a) { return a.torus.name == core_name; });
    if (it == m_after.surgery_log.rend())
        throw domain_error("unknown core: " + core_name + " has no surgery record");
    const AppliedSurgery log = *it;
    if (log.torus.name != original.name || log.torus.meridian != original.meridian ||
        log.torus.surgery_curve != original.surgery_curve)
        throw domain_error("original torus record does not match the surgery log for " +
                           core_name);

    ManifoldModel out = m_after;
    const std::size_t log_pos =
        static_cast<std::size_t>(std::distance(m_after.surgery_log.begin(), std::next(it).base()));
    out.surgery_log.erase(out.surgery_log.begin() + log_pos);
    // remove the surgery relator (last occurrence of the recorded word)
    std::vector<Word> rels = out.complement.relators;
    const Word want = canonical_cyclic(log.relator);
    for (auto rit = rels.rbegin(); rit != rels.rend(); ++rit) {
        if (canonical_cyclic(*rit) == want) {
            rels.erase(std::next(rit).base());
            break;
        }
    }
    out.complement = Presentation(out.complement.generators, std::move(rels));

    if (log.block_index) {
        for (auto& rt : out.tori)
            if (rt.form_slot && *rt.form_slot >= *log.block_index) ++*rt.form_slot;
        out.block_form.insert(out.block_form.begin() + *log.block_index, *log.removed_block);
    }
    out.tori.insert(out.tori.begin() + log.torus_index, log.torus);
    out.b1 += 1;
    out.b2 += 2;
    out.null_homologous_cores.erase(core_name);
    return out;
}

ManifoldModel stabilize(const ManifoldModel& m) {
    ManifoldModel out = m;
    std::size_t n = 1;
    for (const auto& b : m.block_form)
        if (b.label.rfind("H_stab", 0) == 0) ++n;
    out.block_form.push_back({"H_stab" + std::to_string(n), IntMatrix::hyperbolic()});
    out.b2 += 2;
    out.euler_char += 2;
    return out;
}

bool betti_check(const ManifoldModel& m) {
    if (m.euler_char != 2 - 2 * static_cast<long long>(m.b1) + static_cast<long long>(m.b2))
        return false;
    std::size_t rank_sum = 0;
    for (const auto& b : m.block_form) rank_sum += b.matrix.rows();
    if (rank_sum != m.b2) return false;
    if (m.b2 == 0) return m.signature == 0;
    try {
        return signature(m.total_form()) == m.signature;
    } catch (const domain_error&) {
        return false;
    }
}

}  // namespace torsurg
