#pragma once

#include "torsurg/linalg.hpp"
#include "torsurg/presentation.hpp"
#include "torsurg/word.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace torsurg {

enum class Framing { Lagrangian, NullHomologous };

// A framed 2-torus available for surgery inside a manifold model. Words are
// over the complement presentation's generators.
struct TorusRecord {
    std::string name;
    Word meridian;
    Word surgery_curve;
    bool essential = true;
    bool curve_primitive = true;
    Framing framing = Framing::Lagrangian;
    std::optional<std::size_t> form_slot;  // index of its hyperbolic summand in block_form
    std::optional<std::string> dual_name;
    bool operator==(const TorusRecord& o) const = default;
};

struct Coefficient {
    long long p = 0, q = 1;
    bool operator==(const Coefficient& o) const = default;
};

// Torus name -> (p/q); absent names are untouched.
struct SurgerySpec {
    std::map<std::string, Coefficient> coefficients;
};

struct LabeledBlock {
    std::string label;
    IntMatrix matrix;
    bool operator==(const LabeledBlock& o) const = default;
};

struct SpinFlags {
    bool manifold_nonspin = true;
    bool universal_cover_nonspin = true;
    bool operator==(const SpinFlags& o) const = default;
};

struct AppliedSurgery {
    TorusRecord torus;
    long long p = 0, q = 1;
    std::size_t torus_index = 0;                // position in the tori list before removal
    std::optional<std::size_t> block_index;     // position in block_form before removal
    std::optional<LabeledBlock> removed_block;
    Word relator;                               // the relator appended to the complement
    bool operator==(const AppliedSurgery& o) const = default;
};

struct ManifoldModel {
    std::string name;
    long long euler_char = 0;
    long long signature = 0;
    std::size_t b1 = 0;
    std::size_t b2 = 0;
    Presentation complement;
    std::vector<TorusRecord> tori;
    std::vector<LabeledBlock> block_form;
    SpinFlags spin;
    std::set<std::string> null_homologous_cores;
    std::vector<AppliedSurgery> surgery_log;
    std::vector<std::string> notes;

    bool operator==(const ManifoldModel& o) const = default;
    const TorusRecord* find_torus(const std::string& name) const;
    IntMatrix total_form() const;  // direct sum of all blocks
};

// Closed-manifold fundamental group presentation: complement relators, plus
// meridian^p curve^q for each surgered torus, plus meridian for each untouched
// torus. Throws domain_error on unknown names or non-coprime (p,q).
Presentation closed_pi1(const ManifoldModel& m, const SurgerySpec& s);

// chi and sigma unchanged; b1 -= k, b2 -= 2k; surgered tori leave the
// available list and their hyperbolic summands leave the block form; q = 1
// cores recorded null-homologous.
ManifoldModel apply_surgeries(const ManifoldModel& m, const SurgerySpec& s);

// Inverse of a single surgery on the recorded core; restores every field.
ManifoldModel reverse_surgery(const ManifoldModel& m_after, const std::string& core_name,
                              const TorusRecord& original);

// Connected sum with S^2 x S^2 at the invariant level.
ManifoldModel stabilize(const ManifoldModel& m);

// chi = 2 - 2 b1 + b2, block ranks sum to b2, signature of the block sum
// matches the signature field.
bool betti_check(const ManifoldModel& m);

}  // namespace torsurg
