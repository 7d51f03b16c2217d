#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <initializer_list>
#include <string>
#include <vector>

namespace torsurg {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Dense matrix of arbitrary-precision integers, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols) {}
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries);
    IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix zero(std::size_t rows, std::size_t cols) { return IntMatrix(rows, cols); }
    static IntMatrix diag(const std::vector<Int>& d);
    // The rank-2 hyperbolic form [[0,1],[1,0]].
    static IntMatrix hyperbolic();

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Int& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    bool operator==(const IntMatrix& o) const = default;

    bool is_symmetric() const;
    IntMatrix transposed() const;
    IntMatrix operator*(const IntMatrix& o) const;
    IntMatrix operator-() const;
    // Block diagonal sum A (+) B.
    IntMatrix direct_sum(const IntMatrix& o) const;

    std::string str() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Int> e_;
};

struct SmithResult {
    IntMatrix U, D, V;  // D = U * A * V, U and V unimodular, D diagonal with d_i | d_{i+1}
    std::size_t rank = 0;
};

// Smith normal form over Z; valid for any rectangular input.
SmithResult smith_normal_form(const IntMatrix& a);

// Exact determinant, fraction-free Bareiss elimination. Throws domain_error on
// non-square input.
Int determinant(const IntMatrix& a);

struct Inertia {
    std::size_t positive = 0, negative = 0, zero = 0;
    std::size_t rank() const { return positive + negative; }
};

// Sylvester inertia of a symmetric matrix via exact rational congruence
// diagonalization. Throws non_symmetric_error.
Inertia inertia(const IntMatrix& a);

// Signature of a nondegenerate symmetric matrix. Throws non_symmetric_error on
// non-symmetric input and degenerate_error (distinct type) on singular input.
long long signature(const IntMatrix& a);

enum class Parity { Even, Odd };

// Even iff every diagonal entry is even. Throws non_symmetric_error.
Parity parity(const IntMatrix& a);

bool is_unimodular(const IntMatrix& a);

}  // namespace torsurg
