#include "torsurg/laurent.hpp"

#include "torsurg/errors.hpp"

#include <sstream>

namespace torsurg {

LaurentPoly::LaurentPoly(int rank) : rank_(rank) {
    if (rank != 1 && rank != 2) throw domain_error("LaurentPoly rank must be 1 or 2");
}

LaurentPoly::LaurentPoly(int rank, const Int& constant) : LaurentPoly(rank) {
    set({0, 0}, constant);
}

LaurentPoly LaurentPoly::monomial(int rank, Exp e, const Int& coeff) {
    LaurentPoly p(rank);
    if (rank == 1 && e[1] != 0) throw domain_error("rank-1 monomial with second exponent");
    p.set(e, coeff);
    return p;
}

void LaurentPoly::set(Exp e, Int v) {
    if (v == 0)
        terms_.erase(e);
    else
        terms_[e] = std::move(v);
}

bool LaurentPoly::is_constant() const { return has_constant_support(); }

bool LaurentPoly::has_constant_support() const {
    for (const auto& [e, c] : terms_)
        if (e != Exp{0, 0}) return false;
    return true;
}

Int LaurentPoly::constant_value() const {
    if (!has_constant_support()) throw domain_error("polynomial is not constant");
    auto it = terms_.find({0, 0});
    return it == terms_.end() ? Int(0) : it->second;
}

bool LaurentPoly::is_unit() const {
    return terms_.size() == 1 && abs(terms_.begin()->second) == 1;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    if (rank_ != o.rank_) throw domain_error("mixed-rank group ring arithmetic");
    LaurentPoly out = *this;
    for (const auto& [e, c] : o.terms_) {
        auto it = out.terms_.find(e);
        if (it == out.terms_.end()) {
            out.terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) out.terms_.erase(it);
        }
    }
    return out;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    if (rank_ != o.rank_) throw domain_error("mixed-rank group ring arithmetic");
    LaurentPoly out(rank_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            const Exp e{e1[0] + e2[0], e1[1] + e2[1]};
            auto it = out.terms_.find(e);
            if (it == out.terms_.end()) {
                out.terms_.emplace(e, c1 * c2);
            } else {
                it->second += c1 * c2;
                if (it->second == 0) out.terms_.erase(it);
            }
        }
    return out;
}

Int LaurentPoly::augmentation() const {
    Int s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Int coeff = c;
        if (first) {
            if (coeff < 0) {
                os << "-";
                coeff = -coeff;
            }
        } else {
            os << (coeff < 0 ? " - " : " + ");
            if (coeff < 0) coeff = -coeff;
        }
        const bool has_var = e[0] != 0 || e[1] != 0;
        if (!has_var || coeff != 1) os << coeff;
        if (e[0] != 0) {
            os << "t";
            if (e[0] != 1) os << "^" << e[0];
        }
        if (e[1] != 0) {
            os << "s";
            if (e[1] != 1) os << "^" << e[1];
        }
        first = false;
    }
    return os.str();
}

LaurentPoly involute(const LaurentPoly& f) {
    LaurentPoly out(f.rank());
    for (const auto& [e, c] : f.terms())
        out = out + LaurentPoly::monomial(f.rank(), {-e[0], -e[1]}, c);
    return out;
}

}  // namespace torsurg
