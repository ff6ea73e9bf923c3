#include "dkc/characters.hpp"

#include "doctest.h"

#include <random>

using namespace dkc;

namespace {

const Alphabet V31{3, 1};

LaurentPoly random_poly(std::mt19937& rng)
{
    std::uniform_int_distribution<int> e(-2, 2), c(-3, 3), terms(1, 4);
    LaurentPoly p;
    for (int t = terms(rng); t > 0; --t)
        p.add_term({e(rng), e(rng), e(rng), e(rng)}, c(rng));
    return p;
}

LaurentPoly x(int i)
{
    return LaurentPoly::variable(i);
}

GLModule natural()
{
    return module_of(BlockSpace(3, 1, {{PowerKind::Sym, false, 1}}), "V");
}

}  // namespace

TEST_CASE("Laurent ring laws")
{
    std::mt19937 rng(23);
    for (int trial = 0; trial < 50; ++trial) {
        const auto a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a * b == b * a);
        CHECK(a.inverted().inverted() == a);
        CHECK((a * b).inverted() == a.inverted() * b.inverted());
        CHECK((a - a).is_zero());
        if (!b.is_zero()) {
            auto q = exact_divide(a * b, b);
            REQUIRE(q);
            CHECK(*q == a);
        }
    }
    CHECK(!exact_divide(x(0) + x(1), x(0) - x(1)));
}

TEST_CASE("canonical text form")
{
    const auto v = x(0) + x(1) + x(2) - x(3);
    CHECK(v.to_string() == "-y + x3 + x2 + x1");
    CHECK(LaurentPoly().to_string() == "0");
}

TEST_CASE("supercharacter of V under both conventions")
{
    const auto v = natural();
    CHECK(supercharacter(v, true) == x(0) + x(1) + x(2) - x(3));
    CHECK(supercharacter(v, false) == x(0) + x(1) + x(2) + x(3));
    CHECK(supercharacter(v, true) == ch_schur_super({1}, true));
}

TEST_CASE("characters are multiplicative and the dual inverts them")
{
    const auto a = module_of(spot_space(Spot{0, 1, 1}, V31));
    const auto b = natural();
    for (bool s : {true, false}) {
        CHECK(supercharacter(tensor_module(a, b), s) == supercharacter(a, s) * supercharacter(b, s));
        CHECK(supercharacter(dual_module(a), s) == supercharacter(a, s).inverted());
    }
}

TEST_CASE("characters add over splittings")
{
    for (int i = 0; i <= 1; ++i) {
        const auto sp = split_symmetric(i, 1, V31);
        const auto whole = module_of(sp.ambient);
        const auto a = submodule(sp.ambient, sp.summand_a, "A");
        const auto b = submodule(sp.ambient, sp.summand_b, "B");
        CHECK(supercharacter(whole, true) == supercharacter(a, true) + supercharacter(b, true));
    }
    const auto sk = split_K(2, 2, V31);
    const auto whole = module_of(sk.ambient);
    CHECK(supercharacter(whole, false) == supercharacter(submodule(sk.ambient, sk.summand_a, "A"), false) +
                                              supercharacter(submodule(sk.ambient, sk.summand_b, "B"), false));
}

TEST_CASE("the alternant a(t,u,v) is antisymmetric")
{
    const auto a = base_a(2, 1, 0);
    CHECK(a.swapped(0, 1) == -a);
    CHECK(a.swapped(1, 2) == -a);
    // a(0,0,0) / Π is a monomial since the rows are x^2, x, 1.
    CHECK(exact_divide(base_a(0, 0, 0), base_Pi()));
}

TEST_CASE("weight classification")
{
    CHECK(classify_weight(WeightLabel::of(1, 1, 1, 1)).type == Atypicality::Type3);
    CHECK(classify_weight(WeightLabel::of(0, 0, 0, 2)).type == Atypicality::Type1);
    CHECK(classify_weight(WeightLabel::of(2, 0, -1, 1)).type == Atypicality::Type2);
    CHECK(classify_weight(WeightLabel::of(1, 1, -1, 0)).type == Atypicality::Typical);
    const auto c = classify_weight(WeightLabel::of(1, 0, 0, 0));
    CHECK(c.dominant);
    CHECK(c.integrable);
}

TEST_CASE("Kac orbit sum equals the typical formula")
{
    for (auto w : {WeightLabel::of(1, 1, -1, 0), WeightLabel::of(2, 0, -1, -2), WeightLabel::of(0, -1, -3, 3)}) {
        REQUIRE(classify_weight(w).type == Atypicality::Typical);
        CHECK(char_equal(kac_sum(w), ch_typical(w)));
    }
}

TEST_CASE("the Berezinian line has the unsigned character x1x2x3/y")
{
    const auto h = construct({"H31", {}}, V31);
    CHECK(supercharacter(h.module, false) == LaurentPoly::monomial({1, 1, 1, -1}));
    CHECK(supercharacter(h.module, true) == LaurentPoly::monomial({1, 1, 1, -1}, -1));
    const auto r = compare_conventions(h.module, ch_irreducible(WeightLabel::of(1, 1, 1, 1)));
    CHECK(r.unsigned_char.equal);
    CHECK(!r.signed_char.equal);
    CHECK(r.signed_char.equal_up_to_sign);
}

TEST_CASE("hook modules realize the super Schur functions")
{
    for (const std::vector<int> hook : {std::vector<int>{1}, {2}, {1, 1}, {2, 1}, {1, 1, 1}, {2, 1, 1, 1}}) {
        const auto built = construct({"Ilambda", hook}, V31);
        CHECK(supercharacter(built.module, true) == ch_schur_super(hook, true));
        CHECK(supercharacter(built.module, false) == ch_schur_super(hook, false));
        CHECK(irreducibility_check(built.module).pass());
    }
    CHECK_THROWS_AS(ch_schur_super({2, 2, 2, 2}), Error);
}

TEST_CASE("closed formulas reproduce the constructed characters")
{
    CHECK(compare_conventions(construct({"Ysummand", {1, 1}}, V31).module, ch_y_formula(1, 1)).unsigned_char.equal);
    CHECK(compare_conventions(construct({"Mmp", {1, 1}}, V31).module, ch_mmp_formula(1, 1)).unsigned_char.equal);
    CHECK(compare_conventions(construct({"ImD", {2, 2}}, V31).module, ch_image_formula(2, 2)).unsigned_char.equal);
    CHECK(compare_conventions(construct({"Mfinal", {1, 1, 1}}, V31).module, ch_mfinal_formula(1, 1, 1))
              .unsigned_char.equal);
}
