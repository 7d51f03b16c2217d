#include "torsurg/presentation.hpp"

#include "torsurg/errors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <utility>

// Tietze simplification engine. Every rewrite below replaces a relator by a
// word equal to it modulo the normal closure of the *other* relators, so the
// presented group is preserved at each step:
//   - sorting adjacent letters using a commutator relator witnessed elsewhere,
//   - twisted swaps g^s h^t -> h^t g^s z^{st} from relators [g^a,h^b] z with z
//     central (letters commuting with every current generator),
//   - replacing a cyclic subword that covers the majority of another relator
//     by the inverse of its complement,
//   - generator elimination from a relator containing the generator once.
// Elimination orders are searched best-first; a branch succeeds when the
// relator set is exactly the pairwise commutators of the surviving generators.

namespace torsurg {

Presentation::Presentation(std::vector<std::string> gens, std::vector<Word> rels)
    : generators(std::move(gens)) {
    relators.reserve(rels.size());
    for (auto& r : rels) {
        for (auto l : r)
            if (l == 0 || static_cast<std::size_t>(gen_of(l)) >= generators.size())
                throw domain_error("relator uses undeclared generator id");
        Word c = cyclic_reduce(r);
        if (!c.empty()) relators.push_back(std::move(c));
    }
}

std::string Presentation::str() const {
    std::ostringstream os;
    os << "< ";
    for (std::size_t i = 0; i < generators.size(); ++i) os << (i ? ", " : "") << generators[i];
    os << " | ";
    for (std::size_t i = 0; i < relators.size(); ++i)
        os << (i ? ", " : "") << word_str(relators[i], generators);
    os << " >";
    return os.str();
}

namespace {

using ZVec = std::map<int, long long>;  // central generator -> exponent

struct TwistedWitness {
    int g = 0, h = 0;  // g < h
    ZVec z0;           // [g,h] = z0 in the presented group
};

std::vector<Word> rotations(const Word& w) {
    std::vector<Word> out;
    const std::size_t n = std::max<std::size_t>(1, w.size());
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Word r(w.begin() + std::min(i, w.size()), w.end());
        r.insert(r.end(), w.begin(), w.begin() + std::min(i, w.size()));
        out.push_back(std::move(r));
    }
    return out;
}

// If the cyclic word r is [g^a,h^b] interleaved with letters from `central`,
// report the pair and the central word z with [g,h] = z.
std::optional<TwistedWitness> twisted_witness(const Word& r, const std::set<int>& central) {
    Word core;
    ZVec z;
    for (auto l : r) {
        if (central.count(gen_of(l)))
            z[gen_of(l)] += sign_of(l);
        else
            core.push_back(l);
    }
    core = cyclic_reduce(core);
    if (core.size() != 4) return std::nullopt;
    for (const Word& c : rotations(core)) {
        if (c[2] == -c[0] && c[3] == -c[1] && gen_of(c[0]) != gen_of(c[1])) {
            int g = gen_of(c[0]), a = sign_of(c[0]);
            int h = gen_of(c[1]), b = sign_of(c[1]);
            ZVec zv = z;
            if (g > h) {
                std::swap(g, h);
                std::swap(a, b);
                for (auto& [k, v] : zv) v = -v;
            }
            TwistedWitness w;
            w.g = g;
            w.h = h;
            bool bad = false;
            for (auto& [k, v] : zv) {
                if (v == 0) continue;
                if (k == g || k == h) {
                    bad = true;
                    break;
                }
                // r == [g^a,h^b] z = 1  =>  [g,h] = z^{-ab}
                w.z0[k] = -static_cast<long long>(a) * b * v;
            }
            if (bad) return std::nullopt;
            return w;
        }
    }
    return std::nullopt;
}

struct RuleTable {
    // plain pair -> indices of relators witnessing it
    std::map<std::pair<int, int>, std::set<std::size_t>> plain;
    // (pair, z0, witness index)
    std::vector<std::tuple<std::pair<int, int>, ZVec, std::size_t>> entries;
    std::size_t ngens = 0;

    std::set<int> central_for(long long skip) const {
        std::set<int> cs;
        for (std::size_t c = 0; c < ngens; ++c) {
            bool ok = true;
            for (std::size_t g = 0; g < ngens && ok; ++g) {
                if (g == c) continue;
                auto it = plain.find({std::min<int>(c, g), std::max<int>(c, g)});
                if (it == plain.end()) {
                    ok = false;
                } else if (skip >= 0) {
                    bool other = false;
                    for (auto k : it->second)
                        if (static_cast<long long>(k) != skip) other = true;
                    ok = other;
                }
            }
            if (ok) cs.insert(static_cast<int>(c));
        }
        return cs;
    }
};

RuleTable build_rule_table(const std::vector<Word>& rels, std::size_t ngens) {
    RuleTable t;
    t.ngens = ngens;
    const std::set<int> none;
    for (std::size_t k = 0; k < rels.size(); ++k) {
        auto w = twisted_witness(rels[k], none);
        if (w && w->z0.empty()) t.plain[{w->g, w->h}].insert(k);
    }
    const std::set<int> central_all = t.central_for(-1);
    for (std::size_t k = 0; k < rels.size(); ++k) {
        auto w = twisted_witness(rels[k], central_all);
        if (w) t.entries.emplace_back(std::make_pair(w->g, w->h), w->z0, k);
    }
    return t;
}

struct RuleView {
    std::map<std::pair<int, int>, ZVec> rules;
    std::set<int> central;
};

RuleView make_view(const RuleTable& t, long long skip) {
    RuleView v;
    v.central = t.central_for(skip);
    for (const auto& [pair, z0, k] : t.entries) {
        if (static_cast<long long>(k) == skip) continue;
        bool ok = true;
        for (const auto& [c, e] : z0)
            if (!v.central.count(c)) ok = false;
        if (!ok) continue;
        auto it = v.rules.find(pair);
        if (it == v.rules.end())
            v.rules.emplace(pair, z0);
        else if (z0.empty() && !it->second.empty())
            it->second = z0;  // prefer a plain commutation over a twisted one
    }
    return v;
}

Word sort_word(Word w, const RuleView& v) {
    ZVec zacc;
    Word core;
    core.reserve(w.size());
    for (auto l : w) {
        if (v.central.count(gen_of(l)))
            zacc[gen_of(l)] += sign_of(l);
        else
            core.push_back(l);
    }
    core = free_reduce(core);
    bool changed = true;
    while (changed) {
        changed = false;
        std::size_t i = 0;
        while (i + 1 < core.size()) {
            const auto a = core[i], b = core[i + 1];
            if (a == -b) {
                core.erase(core.begin() + i, core.begin() + i + 2);
                if (i > 0) --i;
                changed = true;
                continue;
            }
            const int ga = gen_of(a), gb = gen_of(b);
            if (ga > gb) {
                auto it = v.rules.find({gb, ga});
                if (it != v.rules.end()) {
                    // higher^s lower^t -> lower^t higher^s z0^{-st}
                    const int s = sign_of(a), t = sign_of(b);
                    for (const auto& [c, e] : it->second) zacc[c] += -static_cast<long long>(s) * t * e;
                    core[i] = b;
                    core[i + 1] = a;
                    changed = true;
                    if (i > 0)
                        --i;
                    else
                        ++i;
                } else {
                    ++i;
                }
            } else {
                ++i;
            }
        }
    }
    for (const auto& [c, e] : zacc) {
        const auto letter = make_letter(c, e > 0 ? 1 : -1);
        for (long long j = 0; j < (e > 0 ? e : -e); ++j) core.push_back(letter);
    }
    return core;
}

Word normalize_word(const Word& w0, const RuleView& v) {
    Word w = cyclic_reduce(w0);
    if (w.empty()) return w;
    Word best;
    bool have = false;
    for (const Word& r : rotations(w)) {
        Word s = cyclic_reduce(sort_word(r, v));
        if (!have || s.size() < best.size() || (s.size() == best.size() && s < best)) {
            best = std::move(s);
            have = true;
        }
    }
    return best;
}

// Replace a cyclic subword of r covering a strict majority of another relator
// by the inverse of that relator's complementary part.
std::optional<Word> dehn_shorten(const Word& r, const std::vector<Word>& others) {
    const std::size_t n = r.size();
    if (n == 0) return std::nullopt;
    Word doubled = r;
    doubled.insert(doubled.end(), r.begin(), r.end());
    for (const Word& s : others) {
        const std::size_t L = s.size();
        if (L < 2) continue;
        std::vector<Word> variants = rotations(s);
        for (const Word& rv : rotations(inverse(s))) variants.push_back(rv);
        const std::size_t need = L / 2 + 1;
        for (std::size_t ulen = std::min(n, L); ulen >= need; --ulen) {
            for (const Word& sv : variants) {
                for (std::size_t i = 0; i < n; ++i) {
                    if (std::equal(sv.begin(), sv.begin() + ulen, doubled.begin() + i)) {
                        Word v(sv.begin() + ulen, sv.end());
                        Word rest(doubled.begin() + i + ulen, doubled.begin() + i + n);
                        Word out = inverse(v);
                        out.insert(out.end(), rest.begin(), rest.end());
                        return cyclic_reduce(out);
                    }
                }
            }
        }
    }
    return std::nullopt;
}

std::vector<Word> dedup(const std::vector<Word>& rels) {
    std::set<Word> seen;
    std::vector<Word> out;
    for (const Word& r : rels) {
        Word c = canonical_cyclic(r);
        if (c.empty() || seen.count(c)) continue;
        seen.insert(c);
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<Word> normalize_set(std::vector<Word> rels, std::size_t ngens) {
    rels = dedup(rels);
    for (int round = 0; round < 200; ++round) {
        bool changed = false;
        const RuleTable table = build_rule_table(rels, ngens);
        std::vector<Word> next;
        next.reserve(rels.size());
        for (std::size_t k = 0; k < rels.size(); ++k) {
            const RuleView view = make_view(table, static_cast<long long>(k));
            Word nr = normalize_word(rels[k], view);
            if (canonical_cyclic(nr) != canonical_cyclic(rels[k])) changed = true;
            next.push_back(std::move(nr));
        }
        rels = dedup(next);
        if (!changed) {
            for (std::size_t k = 0; k < rels.size(); ++k) {
                std::vector<Word> others;
                for (std::size_t j = 0; j < rels.size(); ++j)
                    if (j != k) others.push_back(rels[j]);
                if (auto nr = dehn_shorten(rels[k], others)) {
                    rels[k] = *nr;
                    changed = true;
                }
            }
            rels = dedup(rels);
        }
        if (!changed) return rels;
    }
    return rels;
}

bool is_commutator_form(std::size_t ngens, const std::vector<Word>& rels) {
    if (ngens <= 1) return rels.empty();
    std::set<Word> need;
    for (std::size_t i = 0; i < ngens; ++i)
        for (std::size_t j = i + 1; j < ngens; ++j)
            need.insert(canonical_cyclic(
                commutator({make_letter(static_cast<int>(i), 1)}, {make_letter(static_cast<int>(j), 1)})));
    if (rels.size() != need.size()) return false;
    std::set<Word> have;
    for (const Word& r : rels) have.insert(canonical_cyclic(r));
    return have == need;
}

struct ElimCandidate {
    std::size_t len;
    int gen;
    std::size_t rel;
    bool operator<(const ElimCandidate& o) const {
        return std::tie(len, gen, rel) < std::tie(o.len, o.gen, o.rel);
    }
};

std::vector<ElimCandidate> elim_candidates(const std::vector<Word>& rels) {
    std::vector<ElimCandidate> all;
    for (std::size_t k = 0; k < rels.size(); ++k) {
        std::map<int, int> counts;
        for (auto l : rels[k]) ++counts[gen_of(l)];
        for (const auto& [g, c] : counts)
            if (c == 1) all.push_back({rels[k].size(), g, k});
    }
    std::sort(all.begin(), all.end());
    std::set<int> seen;
    std::vector<ElimCandidate> out;
    for (const auto& c : all) {
        if (seen.count(c.gen)) continue;
        seen.insert(c.gen);
        out.push_back(c);
    }
    return out;
}

struct Node {
    std::vector<std::string> names;
    std::vector<Word> rels;
};

Node eliminate(const Node& node, int g, std::size_t k) {
    Word r = node.rels[k];
    std::size_t idx = 0;
    while (gen_of(r[idx]) != g) ++idx;
    std::rotate(r.begin(), r.begin() + idx, r.end());
    Word w;  // g = w
    if (r[0] > 0)
        w = inverse(Word(r.begin() + 1, r.end()));
    else
        w = Word(r.begin() + 1, r.end());

    Node out;
    std::vector<int> remap(node.names.size(), -1);
    for (std::size_t i = 0; i < node.names.size(); ++i) {
        if (static_cast<int>(i) == g) continue;
        remap[i] = static_cast<int>(out.names.size());
        out.names.push_back(node.names[i]);
    }
    Word wi = inverse(w);
    for (std::size_t j = 0; j < node.rels.size(); ++j) {
        if (j == k) continue;
        Word nr;
        for (auto l : node.rels[j]) {
            if (gen_of(l) == g) {
                const Word& sub = l > 0 ? w : wi;
                nr.insert(nr.end(), sub.begin(), sub.end());
            } else {
                nr.push_back(l);
            }
        }
        nr = cyclic_reduce(nr);
        for (auto& l : nr) l = make_letter(remap[gen_of(l)], sign_of(l));
        out.rels.push_back(std::move(nr));
    }
    return out;
}

struct Searcher {
    int budget;
    bool budget_reached = false;
    std::set<std::pair<std::vector<std::string>, std::vector<Word>>> visited;
    std::optional<Node> fallback;

    static std::pair<std::vector<std::string>, std::vector<Word>> key_of(const Node& n) {
        std::vector<Word> ks;
        ks.reserve(n.rels.size());
        for (const Word& r : n.rels) ks.push_back(canonical_cyclic(r));
        std::sort(ks.begin(), ks.end());
        return {n.names, ks};
    }

    std::optional<Node> dfs(const Node& node, bool first_path) {
        if (budget <= 0) {
            budget_reached = true;
            return std::nullopt;
        }
        --budget;
        auto key = key_of(node);
        if (visited.count(key)) return std::nullopt;
        visited.insert(std::move(key));
        if (is_commutator_form(node.names.size(), node.rels)) return node;
        const auto cands = elim_candidates(node.rels);
        if (cands.empty()) {
            if (first_path && !fallback) fallback = node;
            return std::nullopt;
        }
        struct Child {
            std::size_t total;
            std::size_t len;
            int gen;
            Node node;
        };
        std::vector<Child> children;
        children.reserve(cands.size());
        for (const auto& c : cands) {
            Node next = eliminate(node, c.gen, c.rel);
            next.rels = normalize_set(next.rels, next.names.size());
            std::size_t total = 0;
            for (const Word& r : next.rels) total += r.size();
            children.push_back({total, c.len, c.gen, std::move(next)});
        }
        std::sort(children.begin(), children.end(), [](const Child& a, const Child& b) {
            return std::tie(a.total, a.len, a.gen) < std::tie(b.total, b.len, b.gen);
        });
        for (std::size_t ci = 0; ci < children.size(); ++ci) {
            auto res = dfs(children[ci].node, first_path && ci == 0);
            if (res) return res;
        }
        return std::nullopt;
    }
};

}  // namespace

SimplifyResult simplify(const Presentation& p, const SimplifyOptions& opts) {
    Node start{p.generators, p.relators};
    start.rels = normalize_set(start.rels, start.names.size());

    Searcher s;
    s.budget = opts.pass_budget;
    auto res = s.dfs(start, true);

    SimplifyResult out;
    out.budget_reached = s.budget_reached;
    if (res) {
        out.certified_form = true;
        out.pres = Presentation(res->names, res->rels);
    } else if (s.fallback) {
        out.pres = Presentation(s.fallback->names, s.fallback->rels);
    } else {
        out.pres = Presentation(start.names, start.rels);
    }
    out.certified_form =
        out.certified_form || is_commutator_form(out.pres.ngens(), out.pres.relators);
    return out;
}

Abelianization abelianization(const Presentation& p) {
    const std::size_t g = p.ngens(), r = p.relators.size();
    IntMatrix m(r, std::max<std::size_t>(g, 1));
    for (std::size_t i = 0; i < r; ++i)
        for (auto l : p.relators[i]) m.at(i, gen_of(l)) += sign_of(l);
    if (g == 0) return {0, {}};
    const SmithResult snf = smith_normal_form(m);
    Abelianization out;
    out.rank = g - snf.rank;
    for (std::size_t i = 0; i < snf.rank; ++i)
        if (snf.D.at(i, i) > 1) out.torsion.push_back(snf.D.at(i, i));
    return out;
}

std::optional<std::size_t> certify_free_abelian(const Presentation& p,
                                                const SimplifyOptions& opts) {
    const SimplifyResult s = simplify(p, opts);
    const std::size_t r = s.pres.ngens();
    if (r <= 1) return s.pres.relators.empty() ? std::optional<std::size_t>(r) : std::nullopt;
    return s.certified_form ? std::optional<std::size_t>(r) : std::nullopt;
}

}  // namespace torsurg
