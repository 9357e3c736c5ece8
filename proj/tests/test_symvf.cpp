#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gambier/basis.hpp"
#include "gambier/errors.hpp"
#include "gambier/field.hpp"
#include "gambier/span.hpp"

#include <random>
#include <string>
#include <vector>

using namespace gambier;

namespace {

int rand_int(std::mt19937_64& rng, int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1));
}

Rat rand_rat(std::mt19937_64& rng) {
    int num = rand_int(rng, -9, 9);
    int den = rand_int(rng, 1, 9);
    return Rat(num, den);
}

PlaneField random_field(std::mt19937_64& rng) {
    PlaneField f;
    for (int c = 0; c < 2; ++c) {
        int nterms = rand_int(rng, 0, 3);
        for (int k = 0; k < nterms; ++k) {
            Mono2 m{{rand_int(rng, -3, 3), rand_int(rng, 0, 3)}};
            f.comp[c].add_term(m, rand_rat(rng));
        }
    }
    return f;
}

struct TableEntry {
    const char* i;
    const char* j;
    std::vector<std::pair<std::string, Rat>> combo;
};

// Brackets [Y_i, Y_j] for i in {4, 8, 11}, as published.
const std::vector<TableEntry> kTable1 = {
    {"Y4", "Y1", {{"Y1", 1}}},
    {"Y4", "Y2", {{"Y2", 1}}},
    {"Y4", "Y3", {}},
    {"Y4", "Y4", {}},
    {"Y4", "Y5", {}},
    {"Y4", "Y6", {{"Y6", -1}}},
    {"Y4", "Y7", {{"Y7", -1}}},
    {"Y4", "Y8", {{"Y8", -1}}},
    {"Y4", "Y9", {{"Y9", -1}}},
    {"Y4", "Y10", {{"Y10", -1}}},
    {"Y4", "Y11", {}},
    {"Y8", "Y1", {{"Y11", 1}, {"Y4", -1}}},
    {"Y8", "Y2", {{"Y4", 2}}},
    {"Y8", "Y3", {{"Y7", 1}}},
    {"Y8", "Y4", {{"Y8", 1}}},
    {"Y8", "Y5", {{"Y9", 1}}},
    {"Y8", "Y6", {}},
    {"Y8", "Y7", {}},
    {"Y8", "Y8", {}},
    {"Y8", "Y9", {}},
    {"Y8", "Y10", {}},
    {"Y8", "Y11", {{"Y8", -1}}},
    {"Y11", "Y1", {{"Y1", -1}}},
    {"Y11", "Y2", {{"Y2", -1}}},
    {"Y11", "Y3", {{"Y3", 1}}},
    {"Y11", "Y4", {}},
    {"Y11", "Y5", {{"Y5", -1}}},
    {"Y11", "Y6", {{"Y6", 3}}},
    {"Y11", "Y7", {{"Y7", 2}}},
    {"Y11", "Y8", {{"Y8", 1}}},
    {"Y11", "Y9", {}},
    {"Y11", "Y10", {{"Y10", -1}}},
    {"Y11", "Y11", {}},
};

const std::vector<TableEntry> kTable2 = {
    {"Y4", "Y12", {}},
    {"Y4", "Y13", {}},
    {"Y4", "Y14", {{"Y14", 1}}},
    {"Y4", "Y15", {}},
    {"Y4", "Y16", {{"Y16", -1}}},
    {"Y4", "Y17", {{"Y17", 1}}},
    {"Y8", "Y12", {{"Y9", -1}}},
    {"Y8", "Y13", {{"Y7", -1}}},
    {"Y8", "Y14", {{"Y13", 1}, {"Y3", -1}}},
    {"Y8", "Y15", {{"Y6", -1}}},
    {"Y8", "Y16", {}},
    {"Y8", "Y17", {{"Y3", 2}}},
    {"Y11", "Y12", {{"Y12", -1}}},
    {"Y11", "Y13", {{"Y13", 1}}},
    {"Y11", "Y14", {}},
    {"Y11", "Y15", {{"Y15", 2}}},
    {"Y11", "Y16", {{"Y16", 4}}},
    {"Y11", "Y17", {}},
};

}  // namespace

TEST_CASE("named basis fields match their printed form") {
    PlaneField y2 = basis("Y2");
    CHECK(y2.comp[0].is_zero());
    CHECK(y2.comp[1].terms().size() == 1);
    auto it = y2.comp[1].terms().begin();
    CHECK(it->first.e[0] == -1);
    CHECK(it->first.e[1] == 2);
    CHECK(it->second == Rat(1));

    PlaneField y11 = basis("Y11");
    CHECK(y11.comp[1].is_zero());
    CHECK(y11.comp[0].terms().begin()->first.e[0] == 1);

    PlaneField y9 = basis("Y9");
    CHECK(y9.comp[0].is_zero());
    CHECK(y9.comp[1].terms().begin()->first == Mono2{{0, 0}});

    CHECK_THROWS_AS(basis("Y42"), UnknownIdentifier);
    CHECK_THROWS_AS(basis_linear("W9"), UnknownIdentifier);
}

TEST_CASE("all Table 1 entries reproduce exactly") {
    REQUIRE(kTable1.size() == 33);
    for (const auto& entry : kTable1) {
        PlaneField got = lie_bracket(basis(entry.i), basis(entry.j));
        PlaneField want = combine(entry.combo);
        CAPTURE(entry.i);
        CAPTURE(entry.j);
        CHECK(got == want);
    }
}

TEST_CASE("all Table 2 entries reproduce exactly") {
    REQUIRE(kTable2.size() == 18);
    for (const auto& entry : kTable2) {
        PlaneField got = lie_bracket(basis(entry.i), basis(entry.j));
        PlaneField want = combine(entry.combo);
        CAPTURE(entry.i);
        CAPTURE(entry.j);
        CHECK(got == want);
    }
}

TEST_CASE("bracket is antisymmetric, bilinear and satisfies Jacobi") {
    std::mt19937_64 rng(20130326);
    for (int trial = 0; trial < 40; ++trial) {
        PlaneField A = random_field(rng);
        PlaneField B = random_field(rng);
        PlaneField C = random_field(rng);

        CHECK((lie_bracket(A, B) + lie_bracket(B, A)).is_zero());

        PlaneField jac = lie_bracket(A, lie_bracket(B, C)) +
                         lie_bracket(B, lie_bracket(C, A)) +
                         lie_bracket(C, lie_bracket(A, B));
        CHECK(jac.is_zero());

        Rat a = rand_rat(rng), b = rand_rat(rng);
        PlaneField lhs = lie_bracket(A.scaled(a) + B.scaled(b), C);
        PlaneField rhs = lie_bracket(A, C).scaled(a) + lie_bracket(B, C).scaled(b);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("ad powers of Y3 on Y6 generate x^(j+3) d/dv with alternating sign") {
    PlaneField y3 = basis("Y3"), y6 = basis("Y6");
    for (int j = 1; j <= 6; ++j) {
        PlaneField want;
        want.comp[1].add_term(Mono2{{j + 3, 0}}, Rat(j % 2 == 0 ? 1 : -1));
        CHECK(ad_power(y3, y6, j) == want);
    }
    CHECK(ad_power(basis("Y4"), basis("Y4"), 5).is_zero());
}

TEST_CASE("coords_in_span spans and misses") {
    auto vg = spaces::VG();

    auto c1 = coords_in_span(lie_bracket(basis("Y8"), basis("Y2")), vg);
    REQUIRE(c1.has_value());
    for (std::size_t i = 0; i < c1->size(); ++i)
        CHECK((*c1)[i] == (i == 3 ? Rat(2) : Rat(0)));

    CHECK(!coords_in_span(lie_bracket(basis("Y3"), basis("Y6")), vg).has_value());

    std::vector<PlaneField> single = {basis("Y1")};
    auto c3 = coords_in_span(basis("Y1"), single);
    REQUIRE(c3.has_value());
    CHECK(c3->size() == 1);
    CHECK((*c3)[0] == Rat(1));

    CHECK(span_rank(vg) == 11);
}

TEST_CASE("bracket closure reports") {
    auto wg = spaces::WG();
    auto r1 = bracket_closure(wg, 10);
    CHECK(r1.closed);
    CHECK(r1.dimension() == 3);

    auto r2 = bracket_closure(spaces::V1(), 10);
    CHECK(r2.closed);
    CHECK(r2.dimension() == 4);

    std::vector<PlaneField> y36 = {basis("Y3"), basis("Y6")};
    auto r3 = bracket_closure(y36, 8);
    CHECK(!r3.closed);
    CHECK(r3.offender.has_value());

    auto r4 = bracket_closure(spaces::sl3(), 8);
    CHECK(r4.closed);
    CHECK(r4.dimension() == 8);

    CHECK_THROWS_AS(bracket_closure(spaces::sl3(), 7), std::invalid_argument);
}

TEST_CASE("sl(2,R) relations of the distinguished Z triple") {
    PlaneField a = basis("Z1") + basis("Z5");
    PlaneField b = basis("Z3") - basis("Z4");
    PlaneField c = basis("Z2");
    CHECK(lie_bracket(a, b) == a.scaled(Rat(-2)));
    CHECK(lie_bracket(c, b) == c.scaled(Rat(2)));
    CHECK(lie_bracket(a, c) == b.scaled(Rat(2)));
}

TEST_CASE("derived series of V1 terminates at zero") {
    auto v1 = spaces::V1();
    std::vector<PlaneField> derived;
    for (std::size_t j = 1; j < v1.size(); ++j)
        for (std::size_t i = 0; i < j; ++i) {
            PlaneField br = lie_bracket(v1[i], v1[j]);
            if (!br.is_zero()) derived.push_back(br);
        }
    std::vector<PlaneField> expected = {basis("Z1") + basis("Z5"), basis("Z6")};
    CHECK(span_rank(derived) == 2);
    for (const auto& f : derived) CHECK(in_span(f, expected));
    for (const auto& f : expected) CHECK(in_span(f, derived));

    for (std::size_t j = 1; j < expected.size(); ++j)
        for (std::size_t i = 0; i < j; ++i)
            CHECK(lie_bracket(expected[i], expected[j]).is_zero());
}

TEST_CASE("W fields close the same relations as Z1, Z3, Z1+Z5, Z6") {
    LinearField w1 = basis_linear("W1"), w2 = basis_linear("W2");
    LinearField w3 = basis_linear("W3"), w4 = basis_linear("W4");
    CHECK(lie_bracket(w1, w2) == w3.scaled(Rat(-1, 2)));
    CHECK(lie_bracket(w1, w3) == w4);
    CHECK(lie_bracket(w1, w4).is_zero());
    CHECK(lie_bracket(w2, w3) == w3);
    CHECK(lie_bracket(w2, w4) == w4);
    CHECK(lie_bracket(w3, w4).is_zero());

    // mirror relations on the plane side
    PlaneField z1 = basis("Z1"), z3 = basis("Z3");
    PlaneField z15 = basis("Z1") + basis("Z5"), z6 = basis("Z6");
    CHECK(lie_bracket(z1, z3) == z15.scaled(Rat(-1, 2)));
    CHECK(lie_bracket(z1, z15) == z6);
    CHECK(lie_bracket(z1, z6).is_zero());
    CHECK(lie_bracket(z3, z15) == z15);
    CHECK(lie_bracket(z3, z6) == z6);
    CHECK(lie_bracket(z15, z6).is_zero());
}

TEST_CASE("monomial invariant: no negative exponents outside the Laurent slot") {
    PlanePoly p;
    CHECK_THROWS_AS(p.add_term(Mono2{{0, -1}}, Rat(1)), std::invalid_argument);
    p.add_term(Mono2{{-4, 2}}, Rat(1, 3));
    CHECK(p.term_count() == 1);
}

TEST_CASE("pretty printer emits canonical text") {
    CHECK(pretty(basis("Y2")) == "v^2/x d/dv");
    CHECK(pretty(basis("Y9")) == "1 d/dv");
    CHECK(pretty(basis("Y11") - basis("Y4")) == "x d/dx - v d/dv");
    CHECK(pretty(basis("Y6").scaled(Rat(3, 2))) == "3/2*x^3 d/dv");
    CHECK(pretty(PlaneField{}) == "0");
}
