#include "torsurg/finite_group.hpp"

#include "torsurg/errors.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>

namespace torsurg {

FiniteGroup::FiniteGroup(std::string name, std::vector<std::string> element_names,
                         std::vector<std::vector<int>> table)
    : name_(std::move(name)), names_(std::move(element_names)), table_(std::move(table)) {
    const std::size_t n = table_.size();
    if (n == 0 || names_.size() != n)
        throw domain_error("finite group table/name size mismatch");
    for (const auto& row : table_) {
        if (row.size() != n) throw domain_error("finite group table not square");
        for (int v : row)
            if (v < 0 || static_cast<std::size_t>(v) >= n)
                throw domain_error("finite group table entry out of range");
    }
    int id = -1;
    for (std::size_t e = 0; e < n; ++e) {
        bool ok = true;
        for (std::size_t a = 0; a < n; ++a)
            if (table_[e][a] != static_cast<int>(a) || table_[a][e] != static_cast<int>(a)) {
                ok = false;
                break;
            }
        if (ok) {
            id = static_cast<int>(e);
            break;
        }
    }
    if (id < 0) throw domain_error("finite group has no identity");
    identity_ = id;
    inv_.assign(n, -1);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b)
            if (table_[a][b] == identity_ && table_[b][a] == identity_) {
                inv_[a] = static_cast<int>(b);
                break;
            }
        if (inv_[a] < 0) throw domain_error("finite group element without inverse");
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
                    throw domain_error("finite group table not associative");
    for (std::size_t a = 0; a < n && !non_abelian_; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (table_[a][b] != table_[b][a]) {
                non_abelian_ = true;
                break;
            }
}

int FiniteGroup::evaluate(const Word& w, const std::vector<int>& images) const {
    int e = identity_;
    for (auto l : w) {
        int g = images.at(gen_of(l));
        if (l < 0) g = inv_[g];
        e = table_[e][g];
    }
    return e;
}

std::vector<int> FiniteGroup::generated_subgroup(const std::vector<int>& gens) const {
    std::set<int> seen{identity_};
    std::vector<int> frontier{identity_};
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int x : frontier)
            for (int g : gens)
                for (int y : {table_[x][g], table_[x][inv_[g]]})
                    if (seen.insert(y).second) next.push_back(y);
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

namespace {

FiniteGroup from_mul(std::string name, std::vector<std::string> names,
                     auto&& mul) {
    const std::size_t n = names.size();
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) t[a][b] = mul(static_cast<int>(a), static_cast<int>(b));
    return FiniteGroup(std::move(name), std::move(names), std::move(t));
}

// permutation groups: elements are one-line notation over 0..k-1
std::vector<std::vector<int>> perms_of(int k, bool even_only) {
    std::vector<int> p(k);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        if (even_only) {
            int inv_count = 0;
            for (int i = 0; i < k; ++i)
                for (int j = i + 1; j < k; ++j)
                    if (p[i] > p[j]) ++inv_count;
            if (inv_count % 2) continue;
        }
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

FiniteGroup perm_group(std::string name, int k, bool even_only) {
    const auto elems = perms_of(k, even_only);
    std::vector<std::string> names;
    names.reserve(elems.size());
    for (const auto& p : elems) {
        std::string s;
        for (int v : p) s += static_cast<char>('1' + v);
        names.push_back(s);
    }
    auto index_of = [&](const std::vector<int>& p) {
        return static_cast<int>(std::lower_bound(elems.begin(), elems.end(), p) - elems.begin());
    };
    auto mul = [&](int a, int b) {
        // (ab)(x) = a(b(x))
        std::vector<int> c(k);
        for (int x = 0; x < k; ++x) c[x] = elems[a][elems[b][x]];
        return index_of(c);
    };
    return from_mul(std::move(name), std::move(names), mul);
}

}  // namespace

FiniteGroup quaternion_q8() {
    // 0..7 = 1, -1, i, -i, j, -j, k, -k
    std::vector<std::string> names{"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
    // axis multiplication: 1,i,j,k
    static const int ax[4][4][2] = {
        {{1, 0}, {1, 1}, {1, 2}, {1, 3}},
        {{1, 1}, {-1, 0}, {1, 3}, {-1, 2}},
        {{1, 2}, {-1, 3}, {-1, 0}, {1, 1}},
        {{1, 3}, {1, 2}, {-1, 1}, {-1, 0}},
    };
    auto mul = [&](int a, int b) {
        const int sa = a % 2 ? -1 : 1, xa = a / 2;
        const int sb = b % 2 ? -1 : 1, xb = b / 2;
        const int s = ax[xa][xb][0] * sa * sb;
        const int x = ax[xa][xb][1];
        return x * 2 + (s == 1 ? 0 : 1);
    };
    return from_mul("Q8", std::move(names), mul);
}

FiniteGroup dihedral_8() {
    // elements r^a s^b, index a*2+b
    std::vector<std::string> names{"1", "s", "r", "rs", "r2", "r2s", "r3", "r3s"};
    auto mul = [](int x, int y) {
        const int a1 = x / 2, b1 = x % 2, a2 = y / 2, b2 = y % 2;
        const int a = ((a1 + (b1 ? -a2 : a2)) % 4 + 4) % 4;
        return a * 2 + ((b1 + b2) % 2);
    };
    return from_mul("D4", std::move(names), mul);
}

FiniteGroup symmetric_3() { return perm_group("S3", 3, false); }
FiniteGroup symmetric_4() { return perm_group("S4", 4, false); }
FiniteGroup alternating_4() { return perm_group("A4", 4, true); }

FiniteGroup special_linear_2_3() {
    // 2x2 matrices over F_3 with determinant 1, ordered by entry tuple
    std::vector<std::array<int, 4>> elems;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c)
                for (int d = 0; d < 3; ++d)
                    if (((a * d - b * c) % 3 + 3) % 3 == 1) elems.push_back({a, b, c, d});
    std::vector<std::string> names;
    for (const auto& m : elems)
        names.push_back("[" + std::to_string(m[0]) + std::to_string(m[1]) +
                        std::to_string(m[2]) + std::to_string(m[3]) + "]");
    auto index_of = [&](const std::array<int, 4>& m) {
        return static_cast<int>(std::lower_bound(elems.begin(), elems.end(), m) - elems.begin());
    };
    auto mul = [&](int x, int y) {
        const auto& p = elems[x];
        const auto& q = elems[y];
        std::array<int, 4> r{(p[0] * q[0] + p[1] * q[2]) % 3, (p[0] * q[1] + p[1] * q[3]) % 3,
                             (p[2] * q[0] + p[3] * q[2]) % 3, (p[2] * q[1] + p[3] * q[3]) % 3};
        return index_of(r);
    };
    return from_mul("SL(2,3)", std::move(names), mul);
}

std::vector<FiniteGroup> group_catalog(const std::string& selection) {
    if (selection == "q8") {
        std::vector<FiniteGroup> v;
        v.push_back(quaternion_q8());
        return v;
    }
    if (selection == "all") {
        std::vector<FiniteGroup> v;
        v.push_back(quaternion_q8());
        v.push_back(dihedral_8());
        v.push_back(symmetric_3());
        v.push_back(alternating_4());
        v.push_back(symmetric_4());
        v.push_back(special_linear_2_3());
        return v;
    }
    throw domain_error("unknown catalog selection: " + selection);
}

}  // namespace torsurg
