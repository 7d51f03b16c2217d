#pragma once

#include "torsurg/finite_group.hpp"
#include "torsurg/presentation.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace torsurg {

// Assignment generator index -> element index of the target group.
struct Hom {
    std::vector<int> images;
    bool operator==(const Hom& o) const = default;
};

inline constexpr std::uint64_t kDefaultHomBudget = 10'000'000;

// All homomorphisms P -> G, exhaustive up to `limit`, in assignment-tuple
// order. Throws budget_error when |G|^ngens exceeds the budget. The plain
// entry point parallelizes internally but returns the same list as the serial
// reference.
std::vector<Hom> enumerate_homs(const Presentation& p, const FiniteGroup& g,
                                std::size_t limit = SIZE_MAX,
                                std::uint64_t budget = kDefaultHomBudget);
std::vector<Hom> enumerate_homs_serial(const Presentation& p, const FiniteGroup& g,
                                       std::size_t limit = SIZE_MAX,
                                       std::uint64_t budget = kDefaultHomBudget);

struct NonAbelianWitness {
    std::string group;
    std::vector<std::string> generator_names;
    std::vector<std::string> images;  // element names, parallel to generator_names
    Hom hom;
};

// First (in catalog + assignment-tuple order) homomorphism whose image
// subgroup is non-abelian. Groups whose enumeration would exceed the budget
// are skipped. Absence of a witness is not a proof of abelianness.
std::optional<NonAbelianWitness> find_nonabelian_witness(
    const Presentation& p, const std::vector<FiniteGroup>& catalog,
    std::uint64_t budget = kDefaultHomBudget);

struct FreeAbelian {
    std::size_t rank = 0;
    Presentation certificate;
};

struct NonAbelian {
    NonAbelianWitness witness;
    Presentation simplified;
};

struct Undetermined {
    std::size_t abelianization_rank = 0;
    std::vector<Int> torsion;
    Presentation simplified;
};

using GroupClass = std::variant<FreeAbelian, NonAbelian, Undetermined>;

std::string verdict_name(const GroupClass& c);

// simplify -> certify free abelian -> witness search -> undetermined.
GroupClass classify(const Presentation& p, const std::vector<FiniteGroup>& catalog,
                    const SimplifyOptions& opts = {});

}  // namespace torsurg
