#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "torsurg/catalog.hpp"
#include "torsurg/errors.hpp"
#include "torsurg/hermitian.hpp"
#include "torsurg/laurent.hpp"

#include <random>

using namespace torsurg;

namespace {

LaurentPoly rand_poly(std::mt19937_64& rng, int rank) {
    LaurentPoly p(rank);
    const int terms = 1 + rng() % 4;
    std::uniform_int_distribution<int> exp(-3, 3), coeff(-5, 5);
    for (int t = 0; t < terms; ++t) {
        Exp e{exp(rng), rank == 2 ? exp(rng) : 0};
        p = p + LaurentPoly::monomial(rank, e, coeff(rng));
    }
    return p;
}

}  // namespace

TEST_CASE("involution") {
    CHECK(involute(LaurentPoly(1, 3)) == LaurentPoly(1, 3));
    // t + 2t^2 -> t^-1 + 2t^-2
    const LaurentPoly f = LaurentPoly::monomial(1, {1, 0}) +
                          LaurentPoly::monomial(1, {2, 0}, 2);
    const LaurentPoly g = LaurentPoly::monomial(1, {-1, 0}) +
                          LaurentPoly::monomial(1, {-2, 0}, 2);
    CHECK(involute(f) == g);
    CHECK(f.str() == "t + 2t^2");
    CHECK(g.str() == "2t^-2 + t^-1");
}

TEST_CASE("ring laws and involution homomorphism on random polynomials") {
    std::mt19937_64 rng(31);
    for (int it = 0; it < 400; ++it) {
        const int rank = 1 + static_cast<int>(rng() % 2);
        const LaurentPoly a = rand_poly(rng, rank);
        const LaurentPoly b = rand_poly(rng, rank);
        const LaurentPoly c = rand_poly(rng, rank);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(involute(involute(a)) == a);
        CHECK(involute(a * b) == involute(a) * involute(b));
        CHECK(involute(a + b) == involute(a) + involute(b));
        CHECK((a * b).augmentation() == a.augmentation() * b.augmentation());
    }
}

TEST_CASE("polynomial rendering is canonical") {
    CHECK(LaurentPoly(1).str() == "0");
    CHECK(LaurentPoly(1, -1).str() == "-1");
    const LaurentPoly f = LaurentPoly::monomial(1, {1, 0}) +
                          LaurentPoly::monomial(1, {-1, 0});
    CHECK(f.str() == "t^-1 + t");
    const LaurentPoly g = LaurentPoly::monomial(2, {1, -2}, -3) + LaurentPoly(2, 1);
    CHECK(g.str() == "1 - 3ts^-2");
    const LaurentPoly h = LaurentPoly::monomial(2, {0, 1}) - LaurentPoly::monomial(2, {1, 0});
    CHECK(h.str() == "s - t");
}

TEST_CASE("extend_from_integers") {
    const HermitianForm h = extend_from_integers(IntMatrix::hyperbolic(), 1);
    CHECK(h.size() == 2);
    CHECK(h.at(0, 1) == LaurentPoly(1, 1));
    CHECK(h.at(0, 0).is_zero());

    const HermitianForm qp = extend_from_integers(q_p(), 2);
    CHECK(qp.size() == 6);
    CHECK(is_extended(qp) == q_p());

    const HermitianForm z = extend_from_integers(IntMatrix::zero(1, 1), 1);
    CHECK(is_extended(z) == IntMatrix::zero(1, 1));

    CHECK_THROWS_AS(extend_from_integers(IntMatrix{{0, 1}, {2, 0}}, 1), non_symmetric_error);
}

TEST_CASE("assemble_equivariant") {
    // only the identity translate: the constant form
    std::map<Exp, IntMatrix> data{{{0, 0}, q4_block()}};
    CHECK(assemble_equivariant(data, 1) == extend_from_integers(q4_block(), 1));

    // {+1 -> [[1]], -1 -> [[1]]} gives [[t + t^-1]]
    std::map<Exp, IntMatrix> pair{{{1, 0}, IntMatrix{{1}}}, {{-1, 0}, IntMatrix{{1}}}};
    const HermitianForm f = assemble_equivariant(pair, 1);
    const LaurentPoly want =
        LaurentPoly::monomial(1, {1, 0}) + LaurentPoly::monomial(1, {-1, 0});
    CHECK(f.at(0, 0) == want);
    CHECK_FALSE(is_extended(f).has_value());

    // missing conjugate partner: hermitian violation
    std::map<Exp, IntMatrix> bad{{{1, 0}, IntMatrix{{1}}}};
    CHECK_THROWS_AS(assemble_equivariant(bad, 1), domain_error);
}

TEST_CASE("assemble/extend coincide on the catalog's symmetric matrices") {
    std::vector<IntMatrix> mats{q4_block(), q_p(), q_m(), IntMatrix::hyperbolic(),
                                IntMatrix::identity(6), IntMatrix::zero(3, 3),
                                IntMatrix::diag({Int(1), Int(-1), Int(-1)})};
    for (const auto& q : mats) {
        for (int rank : {1, 2}) {
            std::map<Exp, IntMatrix> data{{{0, 0}, q}};
            CHECK(assemble_equivariant(data, rank) == extend_from_integers(q, rank));
        }
    }
}

TEST_CASE("augmentation maps the equivariant form onto the integer form") {
    std::map<Exp, IntMatrix> data{{{1, 0}, IntMatrix{{1, 0}, {2, 1}}},
                                  {{-1, 0}, IntMatrix{{1, 2}, {0, 1}}},
                                  {{0, 0}, IntMatrix{{4, 1}, {1, -4}}}};
    const HermitianForm f = assemble_equivariant(data, 1);
    IntMatrix sum(2, 2);
    for (const auto& [g, m] : data)
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) sum.at(i, j) += m.at(i, j);
    CHECK(augment(f) == sum);
}

TEST_CASE("verify_isometry") {
    const HermitianForm f = extend_from_integers(q_p(), 1);
    PolyMatrix id(6, std::vector<LaurentPoly>(6, LaurentPoly(1)));
    for (int i = 0; i < 6; ++i) id[i][i] = LaurentPoly(1, 1);
    CHECK(verify_isometry(id, f, f));

    // h = [[t]] on a constant 1x1 form: t^-1 c t = c
    const HermitianForm c = extend_from_integers(IntMatrix{{5}}, 1);
    PolyMatrix ht{{LaurentPoly::monomial(1, {1, 0})}};
    CHECK(verify_isometry(ht, c, c));

    // det not a unit
    const HermitianForm one = extend_from_integers(IntMatrix{{1}}, 1);
    PolyMatrix h2{{LaurentPoly(1, 2)}};
    CHECK_FALSE(verify_isometry(h2, one, one));

    CHECK_THROWS_AS(verify_isometry(ht, c, f), domain_error);
}

TEST_CASE("verify_isometry(identity) holds for every constructed form") {
    std::vector<HermitianForm> forms{
        extend_from_integers(q_p(), 2), extend_from_integers(q_m(), 1),
        extend_from_integers(IntMatrix::hyperbolic(), 1)};
    std::map<Exp, IntMatrix> pair{{{1, 0}, IntMatrix{{1}}}, {{-1, 0}, IntMatrix{{1}}}};
    forms.push_back(assemble_equivariant(pair, 1));
    for (const auto& f : forms) {
        PolyMatrix id(f.size(), std::vector<LaurentPoly>(f.size(), LaurentPoly(f.rank())));
        for (std::size_t i = 0; i < f.size(); ++i) id[i][i] = LaurentPoly(f.rank(), 1);
        CHECK(verify_isometry(id, f, f));
    }
}

TEST_CASE("pi2_structure") {
    const Pi2Descriptor a = pi2_structure(1, 6, 6);
    CHECK(a.ring_rank == 6);
    CHECK_FALSE(a.extra_z);
    CHECK(a.reduced_rank() == 6);
    CHECK(a.str() == "Z[Z]^6");

    const Pi2Descriptor b = pi2_structure(2, 8, 6);
    CHECK(b.ring_rank == 6);
    CHECK(b.extra_z);
    CHECK(b.str() == "Z + Z[Z^2]^6");

    const Pi2Descriptor z = pi2_structure(1, 0, 0);
    CHECK(z.str() == "0");

    CHECK_THROWS_AS(pi2_structure(1, 6, 5), domain_error);
    CHECK_THROWS_AS(pi2_structure(3, 6, 6), domain_error);
}
