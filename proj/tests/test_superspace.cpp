#include "dkc/blocks.hpp"

#include "doctest.h"

#include <functional>

using namespace dkc;

namespace {

// Counts basis monomials by brute force over nondecreasing words.
std::size_t count_monomials(PowerKind kind, int degree, int m, int n)
{
    std::size_t count = 0;
    std::vector<int> w(degree, 0);
    std::function<void(int, int)> rec = [&](int pos, int start) {
        if (pos == degree) {
            bool ok = true;
            for (int t = 1; t < degree; ++t)
                if (w[t] == w[t - 1]) {
                    const bool odd = w[t] >= m;
                    if ((kind == PowerKind::Sym && odd) || (kind == PowerKind::Alt && !odd))
                        ok = false;
                }
            count += ok;
            return;
        }
        for (int c = start; c < m + n; ++c) {
            w[pos] = c;
            rec(pos + 1, c);
        }
    };
    rec(0, 0);
    return count;
}

}  // namespace

TEST_CASE("projectors are idempotent with the expected rank")
{
    for (auto [m, n] : {std::pair{3, 1}, std::pair{2, 1}, std::pair{1, 2}})
        for (auto kind : {PowerKind::Sym, PowerKind::Alt})
            for (int d = 0; d <= 3; ++d) {
                const auto v = standard_space(m, n);
                auto p = projector(kind, d, v);
                CHECK(compose(p, p) == p);
                CHECK(rank(p) == power_dimension(kind, d, m, n));
                CHECK(power_dimension(kind, d, m, n) == count_monomials(kind, d, m, n));
            }
}

TEST_CASE("Λ_2 of (3|1) has seven basis vectors")
{
    CHECK(power_dimension(PowerKind::Alt, 2, 3, 1) == 7);
    CHECK(power_basis(PowerKind::Alt, 2, standard_space(3, 1)).dim() == 7);
    CHECK(monomials(PowerKind::Alt, 2, 3, 1).size() == 7);
}

TEST_CASE("permutation matrices do not depend on the reduced word")
{
    const auto amb = TensorAmbient::power(standard_space(2, 2), 3);
    CHECK(permutation_matrix({1, 2, 1}, amb) == permutation_matrix({2, 1, 2}, amb));
    auto s1 = transposition_matrix(1, amb);
    CHECK(compose(s1, s1) == SparseMap::identity(amb.dim()));
}

TEST_CASE("odd letters square to zero in the symmetric power")
{
    // x4 x4 is not a monomial of S_2 for (3|1); x1 x1 is not one of Λ_2.
    CHECK(!is_monomial(PowerKind::Sym, {3, 3}, 3));
    CHECK(is_monomial(PowerKind::Alt, {3, 3}, 3));
    CHECK(!is_monomial(PowerKind::Alt, {0, 0}, 3));
}

TEST_CASE("block coordinates agree with the projector realization")
{
    for (auto kind : {PowerKind::Sym, PowerKind::Alt})
        for (int d = 1; d <= 3; ++d) {
            const auto v = standard_space(3, 1);
            const auto pb = power_basis(kind, d, v);
            const auto words = monomials(kind, d, 3, 1);
            REQUIRE(words.size() == pb.dim());
            const auto amb = TensorAmbient::power(v, d);
            for (std::size_t t = 0; t < words.size(); ++t) {
                std::vector<int> w(words[t].begin(), words[t].end());
                CHECK(pb.realization.pivots()[t] == amb.index(w));
            }
        }
}

TEST_CASE("weights of a block space")
{
    BlockSpace s(3, 1, {{PowerKind::Alt, false, 1}, {PowerKind::Sym, true, 1}});
    CHECK(s.dim() == 16);
    for (std::size_t t = 0; t < s.dim(); ++t) {
        const auto w = s.weight(t);
        int total = 0;
        for (int c : w)
            total += c;
        CHECK(total == 0);
    }
    CHECK(s.name() == "L1.S1*");
}

TEST_CASE("contraction of V ⊗ V* pairs dual letters")
{
    const auto v = standard_space(3, 1);
    TensorAmbient amb({v, v.dualized()});
    auto ev = contraction_map(0, amb);
    CHECK(ev.cod_dim() == 1);
    // x4 ⊗ ξ^4 picks up the braiding sign.
    CHECK(ev.at(0, amb.index({3, 3})) == -1);
    CHECK(ev.at(0, amb.index({0, 0})) == 1);
    CHECK(ev.at(0, amb.index({0, 1})) == 0);
}
