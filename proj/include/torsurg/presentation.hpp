#pragma once

#include "torsurg/linalg.hpp"
#include "torsurg/word.hpp"

#include <optional>
#include <string>
#include <vector>

namespace torsurg {

// A finite group presentation. Relators are stored cyclically reduced.
struct Presentation {
    std::vector<std::string> generators;
    std::vector<Word> relators;

    Presentation() = default;
    Presentation(std::vector<std::string> gens, std::vector<Word> rels);

    std::size_t ngens() const { return generators.size(); }
    std::string str() const;
    bool operator==(const Presentation& o) const = default;
};

struct SimplifyOptions {
    // Each elimination/normalization node consumed from the search counts as a
    // pass; hitting the budget is reported, not an error.
    int pass_budget = 64;
};

struct SimplifyResult {
    Presentation pres;
    bool budget_reached = false;
    bool certified_form = false;  // relators are exactly the pairwise commutators
};

// Deterministic Tietze simplification: generator elimination interleaved with
// sound relator rewriting (commutation sorting, central-twisted collection,
// majority-subword replacement), searched over elimination orders best-first.
SimplifyResult simplify(const Presentation& p, const SimplifyOptions& opts = {});

struct Abelianization {
    std::size_t rank = 0;
    std::vector<Int> torsion;  // diagonal entries > 1, in divisibility order
};

// Exponent-sum matrix fed to Smith normal form.
Abelianization abelianization(const Presentation& p);

// Rank r iff simplification reaches generators g_1..g_r whose relator set is
// exactly the r(r-1)/2 pairwise commutators (or r <= 1 with no relators).
std::optional<std::size_t> certify_free_abelian(const Presentation& p,
                                                const SimplifyOptions& opts = {});

}  // namespace torsurg
