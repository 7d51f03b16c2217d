#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace torsurg {

// A word over a generator alphabet. Letter encoding: generator index i occurs
// as +(i+1), its inverse as -(i+1). Words handed around the API are freely
// reduced; relators are additionally cyclically reduced.
using Word = std::vector<std::int32_t>;

inline int gen_of(std::int32_t letter) { return (letter > 0 ? letter : -letter) - 1; }
inline int sign_of(std::int32_t letter) { return letter > 0 ? 1 : -1; }
inline std::int32_t make_letter(int gen, int sign) {
    return sign > 0 ? gen + 1 : -(gen + 1);
}

Word free_reduce(const Word& w);
// Validating overload: rejects letters outside [0, ngens).
Word free_reduce(const Word& w, std::size_t ngens);
Word cyclic_reduce(const Word& w);
Word inverse(const Word& w);
Word concat(const Word& u, const Word& v);
// u v u^-1 v^-1, freely reduced.
Word commutator(const Word& u, const Word& v);
Word pow(const Word& w, long long e);

// Canonical representative of the cyclic word up to rotation and inversion:
// lexicographic minimum over all rotations of w and of w^-1.
Word canonical_cyclic(const Word& w);

// Rendering against an alphabet, runs collapsed: "x*y^-2"; empty word -> "1".
std::string word_str(const Word& w, const std::vector<std::string>& names);

}  // namespace torsurg
