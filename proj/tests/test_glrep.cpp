#include "dkc/glrep.hpp"

#include "doctest.h"

using namespace dkc;

namespace {

const Alphabet V31{3, 1};

GLModule natural(int m = 3, int n = 1)
{
    return module_of(BlockSpace(m, n, {{PowerKind::Sym, false, 1}}), "V");
}

}  // namespace

TEST_CASE("generators and parities")
{
    CHECK(all_generators(3, 1).size() == 16);
    CHECK(raising_generators(3, 1).size() == 3);
    CHECK(Generator{1, 4}.parity(3) == Parity::Odd);
    CHECK(Generator{4, 4}.parity(3) == Parity::Even);
    CHECK(Generator{1, 2}.name() == "E12");
}

TEST_CASE("modules of spots satisfy the gl(3|1) relations")
{
    for (const Spot s : {Spot{0, 1, 0}, Spot{0, 1, 1}, Spot{1, 1, 0}, Spot{0, 0, 2}, Spot{1, 1, 1}})
        CHECK(relation_check(module_of(spot_space(s, V31))).empty());
}

TEST_CASE("block action agrees with the tensor ambient action")
{
    const auto space = spot_space(Spot{1, 1, 1}, V31);
    const auto real = space.literal_realization();
    const auto amb = space.ambient();
    for (const auto& g : all_generators(3, 1)) {
        const auto big = generator_matrix(g, amb);
        CHECK(restrict(big, real, real) == generator_matrix(g, space));
    }
}

TEST_CASE("weight labels")
{
    CHECK(weight_label({1, 0, 0, 0}, 3) == std::vector<int>{1, 0, 0, 0});
    CHECK(weight_label({0, 0, 0, 1}, 3) == std::vector<int>{0, 0, 0, -1});
    for (const std::vector<int> l : {std::vector<int>{2, 1, -1, 1}, std::vector<int>{0, 0, 0, 3}})
        CHECK(weight_label(weight_from_label(l, 3), 3) == l);
    CHECK(dominates({1, 0, 0, 0}, {0, 1, 0, 0}));
    CHECK(dominates({1, 0, 0, 0}, {0, 0, 0, 1}));
    CHECK(!dominates({0, 0, 0, 1}, {1, 0, 0, 0}));
}

TEST_CASE("the natural module is irreducible with highest weight (1,0,0|0)")
{
    const auto v = natural();
    const auto hw = singular_vectors(v);
    CHECK(hw.singular_dim == 1);
    CHECK(weight_label(hw.top_weight, 3) == std::vector<int>{1, 0, 0, 0});
    CHECK(irreducibility_check(v).pass());
}

TEST_CASE("V ⊗ V is reducible")
{
    const auto vv = tensor_module(natural(), natural());
    CHECK(vv.dim() == 16);
    CHECK(relation_check(vv).empty());
    CHECK(!irreducibility_check(vv).pass());
    // Its two singular lines are the tops of S_2 and Λ_2.
    CHECK(singular_vectors(vv).singular_dim == 2);
}

TEST_CASE("dual of the dual is the module back")
{
    const auto m = module_of(spot_space(Spot{0, 1, 1}, V31));
    const auto dd = dual_module(dual_module(m));
    CHECK(dd.weights() == m.weights());
    // V** ≅ V through v ↦ (-1)^{p(v)} v, not the identity.
    std::vector<Triple> j;
    for (std::size_t t = 0; t < m.dim(); ++t)
        j.push_back({t, t, m.parities()[t] == Parity::Odd ? Scalar(-1) : Scalar(1)});
    const auto sign = SparseMap::from_triples(m.dim(), m.dim(), j);
    for (const auto& g : all_generators(3, 1)) {
        CHECK(compose(sign, compose(dd.action(g), sign)) == m.action(g));
        if (g.parity(3) == Parity::Odd && !m.action(g).is_zero())
            CHECK(!(dd.action(g) == m.action(g)));
    }
    CHECK(relation_check(dual_module(m)).empty());
    const auto dv = dual_module(natural());
    CHECK(weight_label(singular_vectors(dv).top_weight, 3) == std::vector<int>{0, 0, 0, 1});
}

TEST_CASE("a non-stable subspace is rejected")
{
    const auto space = BlockSpace(3, 1, {{PowerKind::Sym, false, 1}});
    const auto line = Subspace::span(4, {{{0, Scalar(1)}}});
    CHECK_THROWS_AS(submodule(space, line, "x1"), ContainmentError);
}

TEST_CASE("equivariance detects a corrupted map")
{
    const Spot s = Spot::K(1, 1);
    const auto dom = module_of(spot_space(s, V31));
    const auto cod = module_of(spot_space(*target_spot(DiffKind::D, s), V31));
    auto d = differential(DiffKind::D, s, V31);
    CHECK(equivariance_check(d, dom, cod).empty());
    auto cols = d.columns();
    cols[3].clear();
    CHECK(!equivariance_check(SparseMap::from_columns(d.cod_dim(), cols), dom, cod).empty());
}

TEST_CASE("the Berezinian line")
{
    const auto h = construct({"H31", {}}, V31);
    CHECK(h.module.dim() == 1);
    CHECK(h.module.parities()[0] == Parity::Odd);
    CHECK(weight_label(h.module.weights()[0], 3) == std::vector<int>{1, 1, 1, 1});
    // B ⊗ B* is trivial.
    const auto trivial = berezinian_twist(h.module, -1);
    CHECK(trivial.dim() == 1);
    CHECK(weight_label(trivial.weights()[0], 3) == std::vector<int>{0, 0, 0, 0});
    CHECK(trivial.parities()[0] == Parity::Even);
    for (const auto& g : all_generators(3, 1))
        CHECK(trivial.action(g).is_zero());
}

TEST_CASE("images of d are irreducible")
{
    for (auto [k, l] : {std::pair{1, 1}, std::pair{2, 1}, std::pair{1, 2}}) {
        const auto c = construct({"ImD", {k, l}}, V31);
        CHECK(relation_check(c.module).empty());
        CHECK(c.highest.singular_dim == 1);
        CHECK(irreducibility_check(c.module).pass());
    }
}

TEST_CASE("constructed modules have the computed highest weights")
{
    for (int n = 1; n <= 2; ++n)
        for (int p = 1; p <= 2; ++p) {
            const auto y = construct({"Ysummand", {n, p}}, V31);
            CHECK(weight_label(y.highest.top_weight, 3) == std::vector<int>{n, 0, 1 - p, 1});
        }
    for (int m = 1; m <= 2; ++m)
        for (int p = 1; p <= 2; ++p) {
            const auto mm = construct({"Mmp", {m, p}}, V31);
            CHECK(weight_label(mm.highest.top_weight, 3) == std::vector<int>{m, m, -p, 0});
            CHECK(mm.module.twist == m - 1);
        }
    const auto z = construct({"Z1", {1}}, V31);
    CHECK(weight_label(z.highest.top_weight, 3) == std::vector<int>{2, 1, -1, 1});
    const auto mf = construct({"Mfinal", {1, 2, 1}}, V31);
    CHECK(weight_label(mf.highest.top_weight, 3) == std::vector<int>{3, 1, 0, 1});
}

TEST_CASE("construction parsing")
{
    CHECK_THROWS_AS(parse_construction("Nope", {}), Error);
    CHECK_THROWS_AS(parse_construction("Mmp", {1}), Error);
    CHECK_THROWS_AS(parse_construction("Mmp", {0, 1}), Error);
    CHECK_THROWS_AS(parse_construction("Ilambda", {2, 2}), Error);
    CHECK(parse_construction("Mfinal", {1, 2, 1}).name() == "Mfinal(1,2,1)");
}
