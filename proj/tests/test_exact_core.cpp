#include "dkc/linalg.hpp"
#include "dkc/polynomial.hpp"
#include "dkc/spectrum.hpp"

#include "doctest.h"
#include "oracles.hpp"

#include <sstream>

using namespace dkc;

TEST_CASE("scalar parsing and printing")
{
    CHECK(to_string(parse_scalar("6/4")) == "3/2");
    CHECK(to_string(parse_scalar("-7")) == "-7");
    CHECK_THROWS_AS(parse_scalar("1/0"), Error);
    CHECK_THROWS_AS(parse_scalar("x"), Error);
    CHECK(make_scalar(2, -4) == Scalar(-1, 2));
}

TEST_CASE("sparse map algebra")
{
    auto a = SparseMap::from_triples(2, 3, {{0, 0, 1}, {1, 2, 2}, {1, 2, 3}});
    CHECK(a.at(1, 2) == 5);
    CHECK(a.nnz() == 2);
    CHECK((a - a).is_zero());
    CHECK(a.transpose().transpose() == a);
    CHECK_THROWS_AS(compose(a, a), DimensionError);
    CHECK(compose(a, SparseMap::identity(3)) == a);
    auto k = kron(SparseMap::identity(2), a);
    CHECK(k.cod_dim() == 4);
    CHECK(k.dom_dim() == 6);
    CHECK(k.at(3, 5) == 5);
}

TEST_CASE("triple serialization round trip is canonical")
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        auto m = oracle::random_map(rng, 6, 5, 40).scaled(Scalar(3, 7));
        std::ostringstream out;
        write_triples(out, m);
        std::istringstream in(out.str());
        auto back = read_triples(in);
        CHECK(back == m);
        std::ostringstream again;
        write_triples(again, back);
        CHECK(again.str() == out.str());
    }
    std::istringstream bad("sparse-map 2 2 1\n0 5 1 1\n");
    CHECK_THROWS_AS(read_triples(bad), Error);
}

TEST_CASE("rank agrees across three routes")
{
    std::mt19937 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t rows = 3 + rng() % 8, cols = 3 + rng() % 8, f = rng() % 5;
        auto m = oracle::random_map(rng, rows, cols, 45, f);
        const auto r = rank(m);
        CHECK(r == rank_by_echelon(m));
        CHECK(r == oracle::dense_rank(oracle::dense(m)));
        CHECK(kernel(m).dim() + r == cols);
        CHECK(image(m).dim() == r);
        const auto ker = kernel(m);
        for (const auto& v : ker.basis())
            CHECK(m.apply(v).empty());
    }
}

TEST_CASE("subspace operations")
{
    std::mt19937 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        auto a = image(oracle::random_map(rng, 8, 3, 50));
        auto b = image(oracle::random_map(rng, 8, 4, 50));
        CHECK(sum(a, b).dim() + intersect(a, b).dim() == a.dim() + b.dim());
        CHECK(contains(sum(a, b), a));
        CHECK(contains(a, intersect(a, b)));
        auto c = complement_in(sum(a, b), a);
        CHECK(c.dim() + a.dim() == sum(a, b).dim());
        CHECK(intersect(c, a).dim() == 0);
    }
}

TEST_CASE("restrict throws with a witness when the image escapes")
{
    auto shift = SparseMap::from_triples(2, 2, {{1, 0, 1}});
    auto line = Subspace::span(2, {{{0, Scalar(1)}}});
    CHECK_THROWS_AS(restrict(shift, line, line), ContainmentError);
    try {
        restrict(shift, line, line);
    } catch (const ContainmentError& e) {
        CHECK(e.witness() == SparseVector{{1, Scalar(1)}});
    }
}

TEST_CASE("inverse")
{
    std::mt19937 rng(3);
    int tested = 0;
    for (int trial = 0; trial < 30; ++trial) {
        auto m = oracle::random_map(rng, 5, 5, 60);
        if (rank(m) < 5) {
            CHECK_THROWS_AS(inverse(m), Error);
            continue;
        }
        ++tested;
        CHECK(compose(m, inverse(m)) == SparseMap::identity(5));
    }
    CHECK(tested > 0);
}

TEST_CASE("characteristic polynomial matches Faddeev-LeVerrier")
{
    std::mt19937 rng(17);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 1 + rng() % 7;
        auto m = oracle::random_map(rng, n, n, 35);
        auto p = char_poly(m);
        CHECK(p.coeffs() == oracle::faddeev_leverrier(oracle::dense(m)));
        // Cayley–Hamilton
        CHECK(evaluate(p, m).is_zero());
    }
}

TEST_CASE("polynomial arithmetic")
{
    Polynomial p({Scalar(-2), Scalar(0), Scalar(1)});  // t^2 - 2
    Polynomial q = Polynomial::linear_root(3);
    auto [quo, rem] = (p * q + Polynomial::constant(5)).divmod(q);
    CHECK(quo == p);
    CHECK(rem == Polynomial::constant(5));
    CHECK(gcd(p * q, q * q).monic() == q);
    auto roots = rational_roots(p * q * q);
    REQUIRE(roots.roots.size() == 1);
    CHECK(roots.roots[0].first == 3);
    CHECK(roots.roots[0].second == 2);
    CHECK(roots.unresolved_degree == 2);
}

TEST_CASE("rational spectrum of a known matrix")
{
    // Upper triangular with a Jordan block at 2.
    auto j = SparseMap::from_triples(3, 3, {{0, 0, 2}, {0, 1, 1}, {1, 1, 2}, {2, 2, Scalar(1, 3)}});
    auto s = rational_spectrum(j);
    CHECK(!s.diagonalizable);
    REQUIRE(s.pairs.size() == 2);
    CHECK(s.pairs[0].value == Scalar(1, 3));
    CHECK(s.pairs[1].algebraic == 2);
    CHECK(s.pairs[1].geometric == 1);

    auto d = SparseMap::from_triples(3, 3, {{0, 0, 2}, {1, 1, 2}, {2, 2, -1}});
    CHECK(rational_spectrum(d).diagonalizable);

    // x^2 + 1 has no rational roots.
    auto rot = SparseMap::from_triples(2, 2, {{0, 1, -1}, {1, 0, 1}});
    CHECK_THROWS_AS(rational_spectrum(rot), SpectrumError);
}
