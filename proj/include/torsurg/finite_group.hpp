#pragma once

#include "torsurg/presentation.hpp"
#include "torsurg/word.hpp"

#include <string>
#include <vector>

namespace torsurg {

// A finite group given by its multiplication table. The constructor verifies
// the group axioms (identity, inverses, associativity).
class FiniteGroup {
public:
    FiniteGroup(std::string name, std::vector<std::string> element_names,
                std::vector<std::vector<int>> table);

    const std::string& name() const { return name_; }
    std::size_t order() const { return table_.size(); }
    int identity() const { return identity_; }
    int mul(int a, int b) const { return table_[a][b]; }
    int inv(int a) const { return inv_[a]; }
    bool non_abelian() const { return non_abelian_; }
    const std::string& element_name(int a) const { return names_[a]; }

    // Evaluate a word under an assignment generator index -> element.
    int evaluate(const Word& w, const std::vector<int>& images) const;

    // Subgroup generated by the given elements (indices, sorted).
    std::vector<int> generated_subgroup(const std::vector<int>& gens) const;

private:
    std::string name_;
    std::vector<std::string> names_;
    std::vector<std::vector<int>> table_;
    std::vector<int> inv_;
    int identity_ = 0;
    bool non_abelian_ = false;
};

// Shipped catalog.
FiniteGroup quaternion_q8();
FiniteGroup dihedral_8();
FiniteGroup symmetric_3();
FiniteGroup symmetric_4();
FiniteGroup alternating_4();
FiniteGroup special_linear_2_3();

// "q8" -> just Q8; "all" -> the full shipped list.
std::vector<FiniteGroup> group_catalog(const std::string& selection = "q8");

}  // namespace torsurg
