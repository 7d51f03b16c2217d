#include "torsurg/catalog.hpp"

#include "torsurg/errors.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace torsurg {

namespace {

// generator indices in the complement presentation
enum : int { X = 0, Y = 1, A1 = 2, A2 = 3, B1 = 4, B2 = 5 };

Word g(int i, int s = 1) { return {make_letter(i, s)}; }

const std::vector<std::string> kGens{"x", "y", "a1", "a2", "b1", "b2"};

std::vector<Word> complement_relations() {
    return {
        commutator(g(X), g(A1)),  commutator(g(X), g(A2)),  commutator(g(Y), g(A1)),
        commutator(g(Y), g(A2)),  commutator(g(X), g(Y)),   commutator(g(B1), g(B2)),
        commutator(g(A1), g(B1)), commutator(g(A1), g(B2)), commutator(g(A2), g(B2)),
    };
}

struct TorusData {
    const char* name;
    Word meridian;
    Word curve;
    const char* dual;
};

std::vector<TorusData> torus_data() {
    return {
        {"T1", commutator(g(B1, -1), g(Y, -1)), g(X), "R1"},
        {"T2", commutator(g(X, -1), g(B1)), g(A1), "R2"},
        {"T3", commutator(g(B2, -1), g(Y, -1)), g(A2), "R3"},
        {"T4", commutator(g(X, -1), g(B2)), g(Y), "R4"},
        {"T1'", commutator(g(A2, -1), g(A1, -1)), g(B1), "R1'"},
        {"T2'", commutator(g(B1), g(A2)), g(B2), "R2'"},
    };
}

}  // namespace

IntMatrix q4_block() {
    return IntMatrix{{-1, 0, 0, 1}, {0, -1, 0, 1}, {0, 0, 0, 1}, {1, 1, 1, 0}};
}

IntMatrix q_p() { return q4_block().direct_sum(IntMatrix::hyperbolic()); }

IntMatrix q_m() {
    IntMatrix q = q4_block();
    for (int i = 0; i < 6; ++i) q = q.direct_sum(IntMatrix::hyperbolic());
    return q;
}

const std::vector<std::string>& torus_order() {
    static const std::vector<std::string> order{"T1", "T2", "T3", "T4", "T1'", "T2'"};
    return order;
}

ManifoldModel builtin_M() {
    ManifoldModel m;
    m.name = "M";
    m.euler_char = 6;
    m.signature = -2;
    m.b1 = 6;
    m.b2 = 16;
    m.complement = Presentation(kGens, complement_relations());
    m.block_form.push_back({"Q4", q4_block()});
    const auto data = torus_data();
    for (std::size_t i = 0; i < data.size(); ++i) {
        TorusRecord t;
        t.name = data[i].name;
        t.meridian = data[i].meridian;
        t.surgery_curve = data[i].curve;
        t.essential = true;
        t.curve_primitive = true;
        t.framing = Framing::Lagrangian;
        t.form_slot = i + 1;  // block 0 is Q4
        t.dual_name = data[i].dual;
        m.tori.push_back(std::move(t));
        m.block_form.push_back({std::string("H_") + data[i].name, IntMatrix::hyperbolic()});
    }
    m.spin = SpinFlags{true, true};
    return m;
}

RawMaterial builtin_table2(int k) {
    switch (k) {
        case 2:
            return {2, 5, -1, {4, 3}, "(T^4 # CP~2) #_Sigma2 (T^2 x Sigma_2)",
                    "Akhmedov-Park"};
        case 3:
            return {3, 6, -2, {4, 3}, "(T^4 #2 CP~2) #_Sigma2 (T^2 x Sigma_2)",
                    "Akhmedov-Park; Baldridge-Kirk"};
        case 4:
            return {4, 7, -3, {2, 1}, "(T^4 # CP~2) #_Sigma2 (T^4 #2 CP~2)",
                    "Akhmedov-Park"};
        case 5:
            return {5, 8, -4, {2, 1}, "(T^2 x S^2 #4 CP~2) #_Sigma2 (T^2 x Sigma_2)",
                    "Baldridge-Kirk"};
        default:
            throw domain_error("table row k must be in {2,3,4,5}");
    }
}

std::string PrototypeLabel::str() const {
    std::ostringstream os;
    os << "#" << n_pos << " CP^2 #" << n_neg << " CP~2";
    if (tail == Tail::S1xS3) os << " # (S^1 x S^3)";
    if (tail == Tail::T2xS2) os << " # (T^2 x S^2)";
    return os.str();
}

IntMatrix reduced_form(const ManifoldModel& m, int pi1_rank) {
    if (pi1_rank == 1) return m.total_form();
    if (pi1_rank != 2) throw domain_error("reduced form defined for pi1 rank 1 or 2");
    // drop hyperbolic summands from the end until the rank equals chi
    std::vector<LabeledBlock> blocks = m.block_form;
    auto total_rank = [&] {
        std::size_t r = 0;
        for (const auto& b : blocks) r += b.matrix.rows();
        return r;
    };
    while (total_rank() > static_cast<std::size_t>(m.euler_char)) {
        auto it = std::find_if(blocks.rbegin(), blocks.rend(), [](const LabeledBlock& b) {
            return b.matrix == IntMatrix::hyperbolic();
        });
        if (it == blocks.rend())
            throw domain_error("cannot reduce block form to rank chi: no hyperbolic summand");
        blocks.erase(std::next(it).base());
    }
    if (total_rank() != static_cast<std::size_t>(m.euler_char))
        throw domain_error("block form cannot be reduced to rank chi exactly");
    IntMatrix q(0, 0);
    for (const auto& b : blocks) q = q.direct_sum(b.matrix);
    return q;
}

PrototypeLabel prototype(const ManifoldModel& m, const GroupClass& pi1) {
    const auto* fa = std::get_if<FreeAbelian>(&pi1);
    if (!fa || (fa->rank != 1 && fa->rank != 2))
        throw domain_error("prototype requires pi1 FreeAbelian of rank 1 or 2");
    if (!m.spin.manifold_nonspin || !m.spin.universal_cover_nonspin)
        throw domain_error("prototype requires type (I): manifold and cover non-spin");
    const int rank = static_cast<int>(fa->rank);
    const IntMatrix red = reduced_form(m, rank);
    if (parity(red) != Parity::Odd) throw domain_error("prototype requires an odd form");
    const HermitianForm eq = extend_from_integers(red, rank);
    if (!is_extended(eq)) throw domain_error("equivariant form is not extended from the integers");
    const long long sig = signature(red);
    const long long n = static_cast<long long>(red.rows());
    PrototypeLabel label;
    label.n_pos = static_cast<std::size_t>((n + sig) / 2);
    label.n_neg = static_cast<std::size_t>((n - sig) / 2);
    label.tail = rank == 1 ? Tail::S1xS3 : Tail::T2xS2;
    return label;
}

long long sw_family_value(long long p) {
    if (p < 1)
        throw domain_error("family value defined for p >= 1; the symplectic base case "
                           "has value 1");
    return p;
}

std::string kodaira_str(KodairaDim d) {
    switch (d) {
        case KodairaDim::MinusInfinity: return "-inf";
        case KodairaDim::Zero: return "0";
        case KodairaDim::One: return "1";
        case KodairaDim::Two: return "2";
    }
    return "?";
}

KodairaDim kodaira(long long chi, long long sigma, KOmegaSign k_dot_omega) {
    const long long k2 = 2 * chi + 3 * sigma;
    if (k_dot_omega == KOmegaSign::Negative || k2 < 0) return KodairaDim::MinusInfinity;
    if (k_dot_omega == KOmegaSign::Zero) {
        if (k2 == 0) return KodairaDim::Zero;
        throw domain_error("K.omega = 0 with K^2 > 0 is not covered");
    }
    return k2 == 0 ? KodairaDim::One : KodairaDim::Two;
}

unsigned long long star_surface_genus(unsigned long long p, unsigned long long g) {
    return 2 * p * g;
}

namespace {

std::vector<std::vector<std::string>> subsets_of_size(std::size_t size) {
    const auto& order = torus_order();
    std::vector<std::vector<std::string>> out;
    std::vector<std::size_t> idx(size);
    // lexicographic combinations over positions
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t k) {
        if (k == size) {
            std::vector<std::string> s;
            for (auto i : idx) s.push_back(order[i]);
            out.push_back(std::move(s));
            return;
        }
        for (std::size_t i = start; i < order.size(); ++i) {
            idx[k] = i;
            rec(i + 1, k + 1);
        }
    };
    rec(0, 0);
    return out;
}

bool same_fa_verdict(const GroupClass& a, const GroupClass& b) {
    const auto* fa = std::get_if<FreeAbelian>(&a);
    const auto* fb = std::get_if<FreeAbelian>(&b);
    if (!fa != !fb) return false;
    return !fa || fa->rank == fb->rank;
}

SweepRow classify_row(const ManifoldModel& m, const std::vector<std::string>& subset,
                      long long p, const std::vector<FiniteGroup>& catalog) {
    SweepRow row;
    row.subset = subset;
    row.p = p;
    if (p == -1 || p == 1) {
        SurgerySpec spec;
        for (const auto& nm : subset) spec.coefficients[nm] = {p, 1};
        row.verdict = classify(closed_pi1(m, spec), catalog);
        return row;
    }
    // variant: one torus gets p, the rest -1; classify at every position
    std::optional<GroupClass> last;
    bool stable = true;
    for (const auto& pt : subset) {
        SurgerySpec spec;
        for (const auto& nm : subset) spec.coefficients[nm] = {nm == pt ? p : -1, 1};
        GroupClass v = classify(closed_pi1(m, spec), catalog);
        if (last && !same_fa_verdict(*last, v)) stable = false;
        last = std::move(v);
    }
    row.verdict = std::move(*last);  // canonically last torus
    row.stable = stable;
    return row;
}

}  // namespace

namespace {

struct SweepJob {
    std::vector<std::string> subset;
    long long p;
};

// rows sorted by subset (size, then canonical order), then p
std::vector<SweepJob> sweep_jobs(const std::vector<long long>& p_values) {
    if (p_values.empty()) throw domain_error("empty p list for the classification sweep");
    std::vector<SweepJob> jobs;
    for (std::size_t size = 0; size <= 5; ++size) {
        for (auto& subset : subsets_of_size(size)) {
            for (const long long p : p_values) {
                const bool variant = (p != -1 && p != 1);
                if (variant && size != 4 && size != 5) continue;
                jobs.push_back({subset, p});
            }
        }
    }
    return jobs;
}

}  // namespace

SweepTable reproduce_theorem41_serial(const std::vector<long long>& p_values,
                                      const std::vector<FiniteGroup>& catalog) {
    const ManifoldModel m = builtin_M();
    SweepTable t;
    for (const auto& job : sweep_jobs(p_values))
        t.rows.push_back(classify_row(m, job.subset, job.p, catalog));
    return t;
}

SweepTable reproduce_theorem41(const std::vector<long long>& p_values,
                               const std::vector<FiniteGroup>& catalog) {
    const ManifoldModel m = builtin_M();
    const std::vector<SweepJob> jobs = sweep_jobs(p_values);
    SweepTable t;
    t.rows.resize(jobs.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(jobs.size()); ++i)
        t.rows[i] = classify_row(m, jobs[i].subset, jobs[i].p, catalog);
    return t;
}

const std::vector<std::vector<std::string>>& published_free_abelian_triples() {
    static const std::vector<std::vector<std::string>> v{
        {"T1", "T2", "T4"},   {"T1", "T2", "T1'"}, {"T1", "T3", "T4"},  {"T2", "T4", "T2'"},
        {"T2", "T1'", "T2'"}, {"T3", "T4", "T1'"}, {"T3", "T4", "T2'"}, {"T3", "T1'", "T2'"}};
    return v;
}

const std::vector<std::vector<std::string>>& published_free_abelian_quadruples() {
    static const std::vector<std::vector<std::string>> v{
        {"T1", "T2", "T3", "T4"},   {"T1", "T2", "T4", "T1'"},  {"T1", "T2", "T1'", "T2'"},
        {"T1", "T3", "T4", "T1'"},  {"T1", "T3", "T4", "T2'"},  {"T1", "T3", "T1'", "T2'"},
        {"T2", "T3", "T1'", "T2'"}, {"T2", "T4", "T1'", "T2'"}, {"T3", "T4", "T1'", "T2'"}};
    return v;
}

PipelineReport pipeline_prototype(const std::vector<std::string>& torus_names, long long p,
                                  const std::optional<std::string>& p_torus,
                                  const std::vector<FiniteGroup>& catalog) {
    if (torus_names.size() != 4 && torus_names.size() != 5)
        throw domain_error("prototype pipeline needs 4 or 5 tori");
    const ManifoldModel m = builtin_M();
    for (const auto& nm : torus_names)
        if (!m.find_torus(nm)) throw domain_error("unknown torus name: " + nm);

    std::string pt;
    if (p_torus) {
        pt = *p_torus;
        if (std::find(torus_names.begin(), torus_names.end(), pt) == torus_names.end())
            throw domain_error("p-torus " + pt + " is not in the surgery set");
    } else if (std::find(torus_names.begin(), torus_names.end(), "T4") != torus_names.end()) {
        pt = "T4";
    } else {
        // canonically last member
        for (const auto& nm : torus_order())
            if (std::find(torus_names.begin(), torus_names.end(), nm) != torus_names.end())
                pt = nm;
    }

    SurgerySpec spec;
    for (const auto& nm : torus_names) spec.coefficients[nm] = {nm == pt ? p : -1, 1};

    PipelineReport r;
    r.subset = torus_names;
    std::sort(r.subset.begin(), r.subset.end(), [&](const std::string& a, const std::string& b) {
        const auto& o = torus_order();
        return std::find(o.begin(), o.end(), a) < std::find(o.begin(), o.end(), b);
    });
    r.p_torus = pt;
    r.p = p;

    const ManifoldModel after = apply_surgeries(m, spec);
    r.chi = after.euler_char;
    r.sigma = after.signature;
    r.b1 = after.b1;
    r.b2 = after.b2;
    r.pi1 = classify(closed_pi1(m, spec), catalog);

    const auto* fa = std::get_if<FreeAbelian>(&r.pi1);
    if (!fa || (fa->rank != 1 && fa->rank != 2))
        throw domain_error("pipeline requires a certified free abelian pi1 of rank 1 or 2");
    const int rank = static_cast<int>(fa->rank);

    r.reduced = reduced_form(after, rank);
    const long long sig = signature(r.reduced);
    r.b2_plus = static_cast<std::size_t>((static_cast<long long>(r.reduced.rows()) + sig) / 2);
    r.b2_minus = static_cast<std::size_t>((static_cast<long long>(r.reduced.rows()) - sig) / 2);
    r.reduced_unimodular = is_unimodular(r.reduced);
    r.equivariant = extend_from_integers(r.reduced, rank);
    r.form_extended = is_extended(r.equivariant).has_value();
    r.label = prototype(after, r.pi1);
    r.pi2 = pi2_structure(rank, after.b2, after.euler_char);
    const long long ap = p < 0 ? -p : p;
    if (ap >= 1) r.sw_value = sw_family_value(ap);
    if (ap == 1) r.kodaira_dim = kodaira(after.euler_char, after.signature, KOmegaSign::Positive);
    return r;
}

}  // namespace torsurg
