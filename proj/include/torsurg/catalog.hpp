#pragma once

#include "torsurg/hermitian.hpp"
#include "torsurg/homsearch.hpp"
#include "torsurg/surgery.hpp"

#include <optional>
#include <string>
#include <vector>

namespace torsurg {

// The six-torus symplectic model: chi = 6, sigma = -2, b1 = 6, b2 = 16,
// complement group on x, y, a1, a2, b1, b2 with nine commutator relations,
// block form Q4 (+) 6 H.
ManifoldModel builtin_M();

// The 4x4 block of the builtin intersection form.
IntMatrix q4_block();
// Q4 (+) H, the reduced equivariant form of the rank-2 prototypes.
IntMatrix q_p();
// Q4 (+) 6 H.
IntMatrix q_m();

// Canonical torus order T1, T2, T3, T4, T1', T2'.
const std::vector<std::string>& torus_order();

struct RawMaterial {
    int k = 0;
    long long chi = 0;
    long long sigma = 0;
    // surgeries used for the two families: first + 1 at coefficient p
    std::vector<int> minus_one_surgery_choices;
    std::string description;
    std::string source_refs;
};

// Raw-material rows for k in {2,3,4,5}.
RawMaterial builtin_table2(int k);

enum class Tail { None, S1xS3, T2xS2 };

struct PrototypeLabel {
    std::size_t n_pos = 0;  // CP^2 summands = b2+
    std::size_t n_neg = 0;  // CP~2 summands = b2-
    Tail tail = Tail::None;
    std::string str() const;  // "#2 CP^2 #4 CP~2 # (S^1 x S^3)"
    bool operator==(const PrototypeLabel& o) const = default;
};

// Homeomorphism prototype of a surgered model with free abelian pi1 of rank 1
// or 2, odd type-(I) form extended from the integers.
PrototypeLabel prototype(const ManifoldModel& m, const GroupClass& pi1);

// The reduced integer form backing the prototype: all blocks for rank 1;
// hyperbolic summands dropped from the end until the rank equals chi for
// rank 2.
IntMatrix reduced_form(const ManifoldModel& m, int pi1_rank);

// Seiberg-Witten value of the p-th family member; value(p) = p for p >= 1.
long long sw_family_value(long long p);

enum class KOmegaSign { Negative, Zero, Positive };
enum class KodairaDim { MinusInfinity, Zero, One, Two };
std::string kodaira_str(KodairaDim d);

// Symplectic Kodaira dimension from K^2 = 2 chi + 3 sigma and the sign of
// K.omega (caller-asserted minimal model). Throws on the uncovered case
// K.omega = 0 with K^2 > 0.
KodairaDim kodaira(long long chi, long long sigma, KOmegaSign k_dot_omega);

// Genus of the surgered surface representative: 2 p g.
unsigned long long star_surface_genus(unsigned long long p, unsigned long long g);

struct SweepRow {
    std::vector<std::string> subset;  // canonical torus order
    long long p = -1;
    GroupClass verdict;
    bool stable = true;  // same free-abelian verdict for p placed on every position
};

struct SweepTable {
    std::vector<SweepRow> rows;
};

// Classification sweep over sub-collections (sizes 0..5) of the six tori.
// p = -1 surgeries everywhere; for p != +-1 only sizes 4 and 5 are swept, with
// the p-surgery on every position in turn (row verdict from the canonically
// last torus; `stable` records cross-position agreement).
SweepTable reproduce_theorem41(const std::vector<long long>& p_values,
                               const std::vector<FiniteGroup>& catalog);
SweepTable reproduce_theorem41_serial(const std::vector<long long>& p_values,
                                      const std::vector<FiniteGroup>& catalog);

// Expected free-abelian sub-collections as published: rank -> subsets.
const std::vector<std::vector<std::string>>& published_free_abelian_triples();
const std::vector<std::vector<std::string>>& published_free_abelian_quadruples();

struct PipelineReport {
    std::vector<std::string> subset;
    std::string p_torus;
    long long p = 1;
    long long chi = 0, sigma = 0;
    std::size_t b1 = 0, b2 = 0;
    GroupClass pi1;
    IntMatrix reduced;
    std::size_t b2_plus = 0, b2_minus = 0;
    bool reduced_unimodular = false;
    bool form_extended = false;
    HermitianForm equivariant;
    PrototypeLabel label;
    Pi2Descriptor pi2;
    std::optional<long long> sw_value;      // |p| >= 1
    std::optional<KodairaDim> kodaira_dim;  // p = +-1 (Luttinger case)

    PipelineReport() : reduced(0, 0), equivariant(1, {}) {}
};

// Full prototype pipeline: surgeries (-1 everywhere, p on p_torus), pi1
// classification, residual form, signature split, equivariant assembly and
// checks, prototype label, pi2, SW and Kodaira bookkeeping.
PipelineReport pipeline_prototype(const std::vector<std::string>& torus_names, long long p,
                                  const std::optional<std::string>& p_torus = std::nullopt,
                                  const std::vector<FiniteGroup>& catalog = group_catalog());

}  // namespace torsurg
