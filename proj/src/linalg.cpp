#include "torsurg/linalg.hpp"

#include "torsurg/errors.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace torsurg {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries)
    : rows_(rows), cols_(cols), e_(std::move(entries)) {
    if (e_.size() != rows_ * cols_)
        throw domain_error("entry count does not match matrix shape");
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    e_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw domain_error("ragged initializer for IntMatrix");
        for (long long v : r) e_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::diag(const std::vector<Int>& d) {
    IntMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
    return m;
}

IntMatrix IntMatrix::hyperbolic() {
    return IntMatrix{{0, 1}, {1, 0}};
}

bool IntMatrix::is_symmetric() const {
    if (!square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw domain_error("matrix product shape mismatch");
    IntMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& aik = at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += aik * o.at(k, j);
        }
    return r;
}

IntMatrix IntMatrix::operator-() const {
    IntMatrix r = *this;
    for (auto& v : r.e_) v = -v;
    return r;
}

IntMatrix IntMatrix::direct_sum(const IntMatrix& o) const {
    IntMatrix r(rows_ + o.rows_, cols_ + o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (std::size_t i = 0; i < o.rows_; ++i)
        for (std::size_t j = 0; j < o.cols_; ++j) r.at(rows_ + i, cols_ + j) = o.at(i, j);
    return r;
}

std::string IntMatrix::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << at(i, j);
        os << "]";
    }
    os << "]";
    return os.str();
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}

// row a -= q * row b
void add_row(IntMatrix& m, std::size_t a, std::size_t b, const Int& q) {
    if (q == 0) return;
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(a, j) -= q * m.at(b, j);
}

void add_col(IntMatrix& m, std::size_t a, std::size_t b, const Int& q) {
    if (q == 0) return;
    for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, a) -= q * m.at(i, b);
}

void negate_row(IntMatrix& m, std::size_t a) {
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(a, j) = -m.at(a, j);
}

}  // namespace

SmithResult smith_normal_form(const IntMatrix& a) {
    const std::size_t m = a.rows(), n = a.cols();
    SmithResult res{IntMatrix::identity(m), a, IntMatrix::identity(n), 0};
    IntMatrix& D = res.D;
    IntMatrix& U = res.U;
    IntMatrix& V = res.V;
    const std::size_t nmin = std::min(m, n);

    for (std::size_t k = 0; k < nmin; ++k) {
        // pivot: smallest nonzero absolute value in the trailing block, row-major scan
        std::size_t pi = k, pj = k;
        Int best = 0;
        for (std::size_t i = k; i < m; ++i)
            for (std::size_t j = k; j < n; ++j) {
                const Int v = abs(D.at(i, j));
                if (v != 0 && (best == 0 || v < best)) {
                    best = v;
                    pi = i;
                    pj = j;
                }
            }
        if (best == 0) break;  // trailing block is zero
        swap_rows(D, k, pi);
        swap_rows(U, k, pi);
        swap_cols(D, k, pj);
        swap_cols(V, k, pj);

        for (;;) {
            bool clean = true;
            for (std::size_t i = k + 1; i < m; ++i) {
                if (D.at(i, k) == 0) continue;
                const Int q = D.at(i, k) / D.at(k, k);
                add_row(D, i, k, q);
                add_row(U, i, k, q);
                if (D.at(i, k) != 0) {
                    // remainder became the smaller pivot
                    swap_rows(D, k, i);
                    swap_rows(U, k, i);
                    clean = false;
                }
            }
            for (std::size_t j = k + 1; j < n; ++j) {
                if (D.at(k, j) == 0) continue;
                const Int q = D.at(k, j) / D.at(k, k);
                add_col(D, j, k, q);
                add_col(V, j, k, q);
                if (D.at(k, j) != 0) {
                    swap_cols(D, k, j);
                    swap_cols(V, k, j);
                    clean = false;
                }
            }
            if (!clean) continue;
            // divisibility fix-up: pivot must divide every trailing entry
            bool fixed = true;
            for (std::size_t i = k + 1; i < m && fixed; ++i)
                for (std::size_t j = k + 1; j < n && fixed; ++j)
                    if (D.at(i, j) % D.at(k, k) != 0) {
                        // fold row i into row k and restart the reduction
                        add_row(D, k, i, Int(-1));
                        add_row(U, k, i, Int(-1));
                        fixed = false;
                    }
            if (fixed) break;
        }
        if (D.at(k, k) < 0) {
            negate_row(D, k);
            negate_row(U, k);
        }
    }
    for (std::size_t k = 0; k < nmin; ++k)
        if (D.at(k, k) != 0) ++res.rank;
    return res;
}

Int determinant(const IntMatrix& a) {
    if (!a.square()) throw domain_error("determinant of non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    IntMatrix w = a;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (w.at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && w.at(p, k) == 0) ++p;
            if (p == n) return 0;
            swap_rows(w, k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                w.at(i, j) = (w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j)) / prev;
            w.at(i, k) = 0;
        }
        prev = w.at(k, k);
    }
    return sign > 0 ? w.at(n - 1, n - 1) : -w.at(n - 1, n - 1);
}

Inertia inertia(const IntMatrix& a) {
    if (!a.is_symmetric()) throw non_symmetric_error("inertia requires a symmetric matrix");
    const std::size_t n = a.rows();
    std::vector<std::vector<Rat>> w(n, std::vector<Rat>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) w[i][j] = Rat(a.at(i, j));

    Inertia out;
    for (std::size_t k = 0; k < n; ++k) {
        if (w[k][k] == 0) {
            // symmetric pre-addition: pull a nonzero off-diagonal entry onto the diagonal
            std::size_t p = n;
            for (std::size_t j = k + 1; j < n; ++j)
                if (w[k][j] != 0) {
                    p = j;
                    break;
                }
            if (p == n) {
                ++out.zero;  // radical direction
                continue;
            }
            if (w[p][p] != 0) {
                for (std::size_t j = 0; j < n; ++j) std::swap(w[k][j], w[p][j]);
                for (std::size_t i = 0; i < n; ++i) std::swap(w[i][k], w[i][p]);
            } else {
                for (std::size_t j = 0; j < n; ++j) w[k][j] += w[p][j];
                for (std::size_t i = 0; i < n; ++i) w[i][k] += w[i][p];
            }
        }
        const Rat piv = w[k][k];
        if (piv > 0)
            ++out.positive;
        else
            ++out.negative;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (w[i][k] == 0) continue;
            const Rat f = w[i][k] / piv;
            for (std::size_t j = k; j < n; ++j) w[i][j] -= f * w[k][j];
            for (std::size_t j = 0; j < n; ++j) w[j][i] = w[i][j];
        }
    }
    return out;
}

long long signature(const IntMatrix& a) {
    const Inertia in = inertia(a);
    if (in.zero != 0) throw degenerate_error("signature of a degenerate form");
    return static_cast<long long>(in.positive) - static_cast<long long>(in.negative);
}

Parity parity(const IntMatrix& a) {
    if (!a.is_symmetric()) throw non_symmetric_error("parity requires a symmetric matrix");
    for (std::size_t i = 0; i < a.rows(); ++i)
        if (a.at(i, i) % 2 != 0) return Parity::Odd;
    return Parity::Even;
}

bool is_unimodular(const IntMatrix& a) {
    if (!a.square()) return false;
    return abs(determinant(a)) == 1;
}

}  // namespace torsurg
