#pragma once

#include "torsurg/laurent.hpp"
#include "torsurg/linalg.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace torsurg {

using PolyMatrix = std::vector<std::vector<LaurentPoly>>;

// Square hermitian matrix over Z[Z^n]: entries[j][i] == involute(entries[i][j]).
class HermitianForm {
public:
    HermitianForm(int rank, PolyMatrix entries);

    int rank() const { return rank_; }
    std::size_t size() const { return entries_.size(); }
    const LaurentPoly& at(std::size_t i, std::size_t j) const { return entries_[i][j]; }
    const PolyMatrix& entries() const { return entries_; }
    bool operator==(const HermitianForm& o) const = default;

    std::string str() const;

private:
    int rank_;
    PolyMatrix entries_;
};

// Q (x)_Z Z[Z^n]: the constant-entry hermitian form with integer matrix Q.
HermitianForm extend_from_integers(const IntMatrix& q, int rank);

// Entry (i,j) = sum_g data[g](i,j) x^{-g}; throws domain_error when the result
// is not hermitian (inconsistent translate intersections).
HermitianForm assemble_equivariant(const std::map<Exp, IntMatrix>& data, int rank);

// The constant integer matrix iff every entry has support {0}.
std::optional<IntMatrix> is_extended(const HermitianForm& f);

// Apply the augmentation entrywise.
IntMatrix augment(const HermitianForm& f);

// conj-transpose(h) * f2 * h == f1 entrywise and det(h) a unit (+/- monomial).
bool verify_isometry(const PolyMatrix& h, const HermitianForm& f1, const HermitianForm& f2);

LaurentPoly poly_matrix_det(const PolyMatrix& m);

// pi_2 of a closed oriented 4-manifold with free abelian pi_1 of rank 1 or 2:
// rank 1 -> Z[Z]^{b2}; rank 2 -> Z (+) Z[Z^2]^{chi}.
struct Pi2Descriptor {
    int pi1_rank = 1;
    std::size_t ring_rank = 0;   // free rank over the group ring
    bool extra_z = false;        // the Z summand present in the rank-2 case
    std::size_t reduced_rank() const { return ring_rank; }
    std::string str() const;
};

Pi2Descriptor pi2_structure(int pi1_rank, std::size_t b2, long long chi);

}  // namespace torsurg
