#include "dkc/spectrum.hpp"

#include "dkc/linalg.hpp"

#include <algorithm>
#include <map>

namespace dkc {

bool Spectrum::contains(const Scalar& v) const
{
    return std::any_of(pairs.begin(), pairs.end(), [&](const Eigenvalue& e) { return e.value == v; });
}

std::vector<Scalar> Spectrum::values() const
{
    std::vector<Scalar> out;
    for (const auto& e : pairs)
        out.push_back(e.value);
    return out;
}

Spectrum rational_spectrum(const SparseMap& m)
{
    if (!m.is_square())
        throw DimensionError("rational_spectrum: matrix is not square");
    const std::size_t n = m.dom_dim();
    std::map<Scalar, std::size_t> algebraic;
    for (const auto& idx : square_blocks(m)) {
        Polynomial p = char_poly_dense(dense_block(m, idx));
        RootSearch rs = rational_roots(p);
        if (rs.unresolved_degree > 0) {
            Polynomial residual = p;
            for (const auto& [r, k] : rs.roots)
                for (std::size_t i = 0; i < k; ++i)
                    residual = residual.divmod(Polynomial::linear_root(r)).first;
            throw SpectrumError("rational_spectrum: irrational or non-split spectrum (residual factor " +
                                    residual.to_string() + ")",
                                residual);
        }
        for (const auto& [r, k] : rs.roots)
            algebraic[r] += k;
    }
    Spectrum s;
    s.dim = n;
    SparseMap product = SparseMap::identity(n);
    for (const auto& [value, alg] : algebraic) {
        SparseMap shifted = m - SparseMap::scalar(n, value);
        s.pairs.push_back({value, alg, n - rank(shifted)});
        product = compose(product, shifted);
    }
    s.diagonalizable = product.is_zero();
    return s;
}

}  // namespace dkc
