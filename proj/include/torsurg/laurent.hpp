#pragma once

#include "torsurg/linalg.hpp"

#include <array>
#include <map>
#include <string>

namespace torsurg {

// Exponent vector for Z[Z^n], n <= 2; the unused coordinate stays 0.
using Exp = std::array<int, 2>;

// Element of the Laurent group ring Z[Z^n] (n = 1 or 2), terms keyed by
// exponent vector in lexicographic order, no zero coefficients stored.
class LaurentPoly {
public:
    explicit LaurentPoly(int rank = 1);
    LaurentPoly(int rank, const Int& constant);
    static LaurentPoly monomial(int rank, Exp e, const Int& coeff = 1);

    int rank() const { return rank_; }
    const std::map<Exp, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Int constant_value() const;  // coefficient at exponent 0 (requires constant support)
    // true iff support is contained in {0}
    bool has_constant_support() const;
    bool is_unit() const;  // +/- a single monomial

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    bool operator==(const LaurentPoly& o) const = default;

    // Send all exponents to 0 (the augmentation Z[Z^n] -> Z).
    Int augmentation() const;

    // Variables: t (and s for rank 2); exponents rendered as t^-2; terms in
    // lexicographic exponent order.
    std::string str() const;

private:
    void set(Exp e, Int v);
    int rank_;
    std::map<Exp, Int> terms_;
};

// The involution extending g -> g^-1 linearly: coefficient at e moves to -e.
LaurentPoly involute(const LaurentPoly& f);

}  // namespace torsurg
