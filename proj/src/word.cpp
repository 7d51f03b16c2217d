#include "torsurg/word.hpp"

#include "torsurg/errors.hpp"

#include <algorithm>
#include <sstream>

namespace torsurg {

Word free_reduce(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (auto l : w) {
        if (!out.empty() && out.back() == -l)
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

Word free_reduce(const Word& w, std::size_t ngens) {
    for (auto l : w) {
        if (l == 0 || static_cast<std::size_t>(gen_of(l)) >= ngens)
            throw domain_error("undeclared generator id " + std::to_string(gen_of(l)));
    }
    return free_reduce(w);
}

Word cyclic_reduce(const Word& w) {
    Word r = free_reduce(w);
    std::size_t lo = 0, hi = r.size();
    while (hi - lo >= 2 && r[lo] == -r[hi - 1]) {
        ++lo;
        --hi;
    }
    return Word(r.begin() + lo, r.begin() + hi);
}

Word inverse(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
    return out;
}

Word concat(const Word& u, const Word& v) {
    Word out = u;
    out.insert(out.end(), v.begin(), v.end());
    return free_reduce(out);
}

Word commutator(const Word& u, const Word& v) {
    Word out = u;
    out.insert(out.end(), v.begin(), v.end());
    Word ui = inverse(u), vi = inverse(v);
    out.insert(out.end(), ui.begin(), ui.end());
    out.insert(out.end(), vi.begin(), vi.end());
    return free_reduce(out);
}

Word pow(const Word& w, long long e) {
    Word base = e >= 0 ? w : inverse(w);
    long long n = e >= 0 ? e : -e;
    Word out;
    for (long long i = 0; i < n; ++i) out.insert(out.end(), base.begin(), base.end());
    return free_reduce(out);
}

Word canonical_cyclic(const Word& w) {
    Word r = cyclic_reduce(w);
    if (r.empty()) return r;
    const std::size_t n = r.size();
    Word best;
    auto consider = [&](const Word& base) {
        for (std::size_t i = 0; i < n; ++i) {
            Word rot(base.begin() + i, base.end());
            rot.insert(rot.end(), base.begin(), base.begin() + i);
            if (best.empty() || rot < best) best = std::move(rot);
        }
    };
    consider(r);
    consider(inverse(r));
    return best;
}

std::string word_str(const Word& w, const std::vector<std::string>& names) {
    if (w.empty()) return "1";
    std::ostringstream os;
    std::size_t i = 0;
    bool first = true;
    while (i < w.size()) {
        std::size_t j = i;
        while (j < w.size() && w[j] == w[i]) ++j;
        const long long e = static_cast<long long>(j - i) * sign_of(w[i]);
        if (!first) os << "*";
        os << names.at(gen_of(w[i]));
        if (e != 1) os << "^" << e;
        first = false;
        i = j;
    }
    return os.str();
}

}  // namespace torsurg
