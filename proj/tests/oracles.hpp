#pragma once

#include "dkc/sparse.hpp"

#include <random>
#include <vector>

namespace oracle {

using dkc::Scalar;
using Dense = std::vector<std::vector<Scalar>>;

inline Dense dense(const dkc::SparseMap& m)
{
    Dense a(m.cod_dim(), std::vector<Scalar>(m.dom_dim()));
    for (const auto& t : m.triples())
        a[t.row][t.col] = t.value;
    return a;
}

inline Dense mul(const Dense& a, const Dense& b)
{
    const std::size_t n = a.size(), k = b.size(), p = b.empty() ? 0 : b[0].size();
    Dense c(n, std::vector<Scalar>(p));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 0; t < k; ++t)
            if (a[i][t] != 0)
                for (std::size_t j = 0; j < p; ++j)
                    c[i][j] += a[i][t] * b[t][j];
    return c;
}

/// Faddeev–LeVerrier: coefficients of det(tI - A), low to high.
inline std::vector<Scalar> faddeev_leverrier(const Dense& a)
{
    const std::size_t n = a.size();
    std::vector<Scalar> c(n + 1);
    c[n] = 1;
    Dense m(n, std::vector<Scalar>(n));
    for (std::size_t k = 1; k <= n; ++k) {
        Dense am = mul(a, m);
        for (std::size_t i = 0; i < n; ++i)
            am[i][i] += c[n - k + 1];
        m = am;
        Dense next = mul(a, m);
        Scalar tr = 0;
        for (std::size_t i = 0; i < n; ++i)
            tr += next[i][i];
        c[n - k] = -tr / Scalar(static_cast<long>(k));
    }
    return c;
}

/// Plain Gaussian elimination on a dense copy.
inline std::size_t dense_rank(Dense a)
{
    std::size_t r = 0;
    const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0)
            ++p;
        if (p == rows)
            continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = r + 1; i < rows; ++i)
            if (a[i][c] != 0) {
                const Scalar f = a[i][c] / a[r][c];
                for (std::size_t j = c; j < cols; ++j)
                    a[i][j] -= f * a[r][j];
            }
        ++r;
    }
    return r;
}

/// Random sparse integer matrix with small entries; low rank when `factor` > 0.
inline dkc::SparseMap random_map(std::mt19937& rng, std::size_t rows, std::size_t cols, int density_pct,
                                 std::size_t factor = 0)
{
    std::uniform_int_distribution<int> pct(0, 99), val(-3, 3);
    auto fill = [&](std::size_t r, std::size_t c) {
        std::vector<dkc::Triple> t;
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                if (pct(rng) < density_pct)
                    if (int v = val(rng))
                        t.push_back({i, j, Scalar(v)});
        return dkc::SparseMap::from_triples(r, c, t);
    };
    if (factor == 0)
        return fill(rows, cols);
    return dkc::compose(fill(rows, factor), fill(factor, cols));
}

}  // namespace oracle
