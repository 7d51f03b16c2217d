#include "torsurg/homsearch.hpp"

#include "torsurg/errors.hpp"

#include <algorithm>
#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace torsurg {

namespace {

std::uint64_t assignment_count(std::size_t ngens, std::size_t order, std::uint64_t budget) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < ngens; ++i) {
        if (total > budget / std::max<std::size_t>(order, 1)) return budget + 1;
        total *= order;
    }
    return total;
}

void decode(std::uint64_t index, std::size_t ngens, std::size_t order, std::vector<int>& out) {
    for (std::size_t i = ngens; i-- > 0;) {
        out[i] = static_cast<int>(index % order);
        index /= order;
    }
}

bool satisfies(const Presentation& p, const FiniteGroup& g, const std::vector<int>& images) {
    for (const Word& r : p.relators)
        if (g.evaluate(r, images) != g.identity()) return false;
    return true;
}

bool image_non_abelian(const FiniteGroup& g, const std::vector<int>& images) {
    for (std::size_t i = 0; i < images.size(); ++i)
        for (std::size_t j = i + 1; j < images.size(); ++j)
            if (g.mul(images[i], images[j]) != g.mul(images[j], images[i])) return true;
    return false;
}

}  // namespace

std::vector<Hom> enumerate_homs_serial(const Presentation& p, const FiniteGroup& g,
                                       std::size_t limit, std::uint64_t budget) {
    const std::uint64_t total = assignment_count(p.ngens(), g.order(), budget);
    if (total > budget)
        throw budget_error("hom enumeration budget exceeded: |G|^" +
                           std::to_string(p.ngens()) + " assignments");
    std::vector<Hom> out;
    std::vector<int> images(p.ngens(), 0);
    for (std::uint64_t idx = 0; idx < total && out.size() < limit; ++idx) {
        decode(idx, p.ngens(), g.order(), images);
        if (satisfies(p, g, images)) out.push_back(Hom{images});
    }
    return out;
}

std::vector<Hom> enumerate_homs(const Presentation& p, const FiniteGroup& g,
                                std::size_t limit, std::uint64_t budget) {
    const std::uint64_t total = assignment_count(p.ngens(), g.order(), budget);
    if (total > budget)
        throw budget_error("hom enumeration budget exceeded: |G|^" +
                           std::to_string(p.ngens()) + " assignments");
#ifdef _OPENMP
    if (total >= 4096) {
        const int nchunks = omp_get_max_threads() * 8;
        const std::uint64_t chunk = (total + nchunks - 1) / nchunks;
        std::vector<std::vector<Hom>> buckets(nchunks);
#pragma omp parallel for schedule(dynamic, 1)
        for (int c = 0; c < nchunks; ++c) {
            std::vector<int> images(p.ngens(), 0);
            const std::uint64_t lo = c * chunk;
            const std::uint64_t hi = std::min<std::uint64_t>(total, lo + chunk);
            for (std::uint64_t idx = lo; idx < hi; ++idx) {
                decode(idx, p.ngens(), g.order(), images);
                if (satisfies(p, g, images)) buckets[c].push_back(Hom{images});
            }
        }
        std::vector<Hom> out;
        for (auto& b : buckets) {
            for (auto& h : b) {
                if (out.size() >= limit) return out;
                out.push_back(std::move(h));
            }
        }
        return out;
    }
#endif
    return enumerate_homs_serial(p, g, limit, budget);
}

std::optional<NonAbelianWitness> find_nonabelian_witness(const Presentation& p,
                                                         const std::vector<FiniteGroup>& catalog,
                                                         std::uint64_t budget) {
    for (const FiniteGroup& g : catalog) {
        const std::uint64_t total = assignment_count(p.ngens(), g.order(), budget);
        if (total > budget) continue;  // skip groups that would blow the budget

        std::uint64_t found = total;  // min index of a witness, or `total`
#ifdef _OPENMP
        if (total >= 4096) {
            const int nchunks = omp_get_max_threads() * 8;
            const std::uint64_t chunk = (total + nchunks - 1) / nchunks;
#pragma omp parallel for schedule(dynamic, 1) reduction(min : found)
            for (int c = 0; c < nchunks; ++c) {
                std::vector<int> images(p.ngens(), 0);
                const std::uint64_t lo = c * chunk;
                const std::uint64_t hi = std::min<std::uint64_t>(total, lo + chunk);
                for (std::uint64_t idx = lo; idx < hi && idx < found; ++idx) {
                    decode(idx, p.ngens(), g.order(), images);
                    if (satisfies(p, g, images) && image_non_abelian(g, images)) {
                        found = idx;
                        break;
                    }
                }
            }
        } else
#endif
        {
            std::vector<int> images(p.ngens(), 0);
            for (std::uint64_t idx = 0; idx < total; ++idx) {
                decode(idx, p.ngens(), g.order(), images);
                if (satisfies(p, g, images) && image_non_abelian(g, images)) {
                    found = idx;
                    break;
                }
            }
        }
        if (found < total) {
            NonAbelianWitness w;
            w.group = g.name();
            w.hom.images.assign(p.ngens(), 0);
            decode(found, p.ngens(), g.order(), w.hom.images);
            w.generator_names = p.generators;
            for (int img : w.hom.images) w.images.push_back(g.element_name(img));
            return w;
        }
    }
    return std::nullopt;
}

std::string verdict_name(const GroupClass& c) {
    if (std::holds_alternative<FreeAbelian>(c)) return "free-abelian";
    if (std::holds_alternative<NonAbelian>(c)) return "non-abelian";
    return "undetermined";
}

GroupClass classify(const Presentation& p, const std::vector<FiniteGroup>& catalog,
                    const SimplifyOptions& opts) {
    const SimplifyResult s = simplify(p, opts);
    const std::size_t r = s.pres.ngens();
    const bool certified = (r <= 1) ? s.pres.relators.empty() : s.certified_form;
    if (certified) {
        const Abelianization ab = abelianization(p);
        if (ab.rank != r || !ab.torsion.empty())
            throw domain_error("free-abelian certificate contradicts abelianization");
        return FreeAbelian{r, s.pres};
    }
    if (auto w = find_nonabelian_witness(s.pres, catalog)) return NonAbelian{*w, s.pres};
    const Abelianization ab = abelianization(p);
    return Undetermined{ab.rank, ab.torsion, s.pres};
}

}  // namespace torsurg
