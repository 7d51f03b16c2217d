#include "torsurg/hermitian.hpp"

#include "torsurg/errors.hpp"

#include <sstream>

namespace torsurg {

HermitianForm::HermitianForm(int rank, PolyMatrix entries)
    : rank_(rank), entries_(std::move(entries)) {
    const std::size_t n = entries_.size();
    for (const auto& row : entries_)
        if (row.size() != n) throw domain_error("hermitian form matrix not square");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (entries_[i][j].rank() != rank_)
                throw domain_error("hermitian form entry of wrong ring rank");
            if (!(entries_[j][i] == involute(entries_[i][j])))
                throw domain_error("matrix is not hermitian at entry (" + std::to_string(i) +
                                   "," + std::to_string(j) + ")");
        }
}

std::string HermitianForm::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < size(); ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < size(); ++j) os << (j ? ", " : "") << entries_[i][j].str();
    }
    os << "]";
    return os.str();
}

HermitianForm extend_from_integers(const IntMatrix& q, int rank) {
    if (!q.is_symmetric()) throw non_symmetric_error("extension requires a symmetric matrix");
    PolyMatrix m(q.rows(), std::vector<LaurentPoly>(q.rows(), LaurentPoly(rank)));
    for (std::size_t i = 0; i < q.rows(); ++i)
        for (std::size_t j = 0; j < q.cols(); ++j) m[i][j] = LaurentPoly(rank, q.at(i, j));
    return HermitianForm(rank, std::move(m));
}

HermitianForm assemble_equivariant(const std::map<Exp, IntMatrix>& data, int rank) {
    if (data.empty()) throw domain_error("assemble_equivariant needs at least one translate");
    const std::size_t n = data.begin()->second.rows();
    for (const auto& [g, m] : data)
        if (m.rows() != n || m.cols() != n)
            throw domain_error("translate intersection matrices of mixed size");
    PolyMatrix m(n, std::vector<LaurentPoly>(n, LaurentPoly(rank)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            LaurentPoly entry(rank);
            for (const auto& [g, q] : data) {
                if (q.at(i, j) == 0) continue;
                entry = entry + LaurentPoly::monomial(rank, {-g[0], -g[1]}, q.at(i, j));
            }
            m[i][j] = std::move(entry);
        }
    return HermitianForm(rank, std::move(m));  // ctor rejects non-hermitian data
}

std::optional<IntMatrix> is_extended(const HermitianForm& f) {
    IntMatrix q(f.size(), f.size());
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = 0; j < f.size(); ++j) {
            if (!f.at(i, j).has_constant_support()) return std::nullopt;
            q.at(i, j) = f.at(i, j).constant_value();
        }
    return q;
}

IntMatrix augment(const HermitianForm& f) {
    IntMatrix q(f.size(), f.size());
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = 0; j < f.size(); ++j) q.at(i, j) = f.at(i, j).augmentation();
    return q;
}

LaurentPoly poly_matrix_det(const PolyMatrix& m) {
    const std::size_t n = m.size();
    if (n == 0) return LaurentPoly(1, 1);
    const int rank = m[0][0].rank();
    if (n == 1) return m[0][0];
    LaurentPoly det(rank);
    std::vector<std::size_t> cols(n - 1);
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        PolyMatrix minor;
        minor.reserve(n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<LaurentPoly> row;
            row.reserve(n - 1);
            for (std::size_t jj = 0; jj < n; ++jj)
                if (jj != j) row.push_back(m[i][jj]);
            minor.push_back(std::move(row));
        }
        LaurentPoly term = m[0][j] * poly_matrix_det(minor);
        det = (j % 2 == 0) ? det + term : det - term;
    }
    return det;
}

bool verify_isometry(const PolyMatrix& h, const HermitianForm& f1, const HermitianForm& f2) {
    const std::size_t n = f1.size();
    if (f2.size() != n || h.size() != n || f1.rank() != f2.rank())
        throw domain_error("isometry check size/rank mismatch");
    for (const auto& row : h)
        if (row.size() != n) throw domain_error("isometry matrix not square");

    if (!poly_matrix_det(h).is_unit()) return false;

    const int rank = f1.rank();
    // conj-transpose(h) * F2 * h
    PolyMatrix tmp(n, std::vector<LaurentPoly>(n, LaurentPoly(rank)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            LaurentPoly acc(rank);
            for (std::size_t k = 0; k < n; ++k) acc = acc + f2.at(i, k) * h[k][j];
            tmp[i][j] = std::move(acc);
        }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            LaurentPoly acc(rank);
            for (std::size_t k = 0; k < n; ++k) acc = acc + involute(h[k][i]) * tmp[k][j];
            if (!(acc == f1.at(i, j))) return false;
        }
    return true;
}

std::string Pi2Descriptor::str() const {
    const std::string ring = pi1_rank == 1 ? "Z[Z]" : "Z[Z^2]";
    std::string out;
    if (extra_z) out += "Z + ";
    if (ring_rank == 0) return extra_z ? "Z" : "0";
    out += ring + "^" + std::to_string(ring_rank);
    return out;
}

Pi2Descriptor pi2_structure(int pi1_rank, std::size_t b2, long long chi) {
    Pi2Descriptor d;
    d.pi1_rank = pi1_rank;
    if (pi1_rank == 1) {
        // b1 = 1: chi = 2 - 2 + b2 = b2
        if (chi != static_cast<long long>(b2))
            throw domain_error("chi inconsistent with a closed model of rank-1 pi1");
        d.ring_rank = b2;
        d.extra_z = false;
    } else if (pi1_rank == 2) {
        // b1 = 2: chi = b2 - 2
        if (chi != static_cast<long long>(b2) - 2)
            throw domain_error("chi inconsistent with a closed model of rank-2 pi1");
        d.ring_rank = static_cast<std::size_t>(chi);
        d.extra_z = true;
    } else {
        throw domain_error("pi2_structure supports pi1 rank 1 or 2 only");
    }
    return d;
}

}  // namespace torsurg
