#pragma once

#include "dkc/linalg.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace dkc {

enum class Parity : std::uint8_t { Even = 0, Odd = 1 };

inline Parity operator+(Parity a, Parity b)
{
    return static_cast<Parity>(static_cast<int>(a) ^ static_cast<int>(b));
}
inline int sign_of(Parity a, Parity b)
{
    return (a == Parity::Odd && b == Parity::Odd) ? -1 : 1;
}

/// Weight as a vector of ε-coefficients (length m+n).
using Weight = std::vector<int>;

/// Graded basis x_1..x_m (even), x_{m+1}..x_{m+n} (odd), or the dual basis ξ^i.
/// Letters are 0-based in code; labels are 1-based.
struct SuperSpace {
    int m = 0;
    int n = 0;
    bool dual = false;

    int dim() const { return m + n; }
    Parity parity(int letter) const { return letter < m ? Parity::Even : Parity::Odd; }
    Weight weight(int letter) const;
    std::string label(int letter) const;
    SuperSpace dualized() const { return {m, n, !dual}; }

    friend bool operator==(const SuperSpace&, const SuperSpace&) = default;
};

/// Throws Error unless m + n >= 1.
SuperSpace standard_space(int m, int n);

/// Tensor product of super spaces with the lexicographic product basis
/// (first factor most significant).
class TensorAmbient {
public:
    explicit TensorAmbient(std::vector<SuperSpace> factors);
    static TensorAmbient power(const SuperSpace& v, int degree);

    std::size_t dim() const { return dim_; }
    std::size_t factor_count() const { return factors_.size(); }
    const SuperSpace& factor(std::size_t i) const { return factors_[i]; }
    const std::vector<SuperSpace>& factors() const { return factors_; }

    std::vector<int> word(std::size_t index) const;
    std::size_t index(const std::vector<int>& word) const;
    Parity parity(std::size_t index) const;
    Weight weight(std::size_t index) const;

private:
    std::vector<SuperSpace> factors_;
    std::size_t dim_ = 1;
};

enum class PowerKind : std::uint8_t { Sym, Alt };

/// Koszul sign of the adjacent swap of letters with parities a, b: the plain
/// sign for the symmetric action, twisted by -1 for the exterior one.
inline int swap_sign(PowerKind kind, Parity a, Parity b)
{
    int s = sign_of(a, b);
    return kind == PowerKind::Sym ? s : -s;
}

/// Adjacent transposition s_j (1 <= j < N) on a tensor power, with Koszul sign.
SparseMap transposition_matrix(int j, const TensorAmbient& ambient);

/// T_w for a permutation w of {0..N-1}, assembled from adjacent transpositions
/// along the given word of simple reflections (1-based indices j of s_j).
SparseMap permutation_matrix(const std::vector<int>& reduced_word, const TensorAmbient& ambient);

/// X_N = (1/N!) Σ T_w (Sym) or Y_N = (1/N!) Σ (-1)^{l(w)} T_w (Alt) on V^{⊗N}.
/// N = 0 gives the 1x1 identity.
SparseMap projector(PowerKind kind, int degree, const SuperSpace& over);

/// Realization of the exterior or symmetric power as the projector image inside
/// V^{⊗degree}, with the data attached to each canonical basis vector.
struct PowerBasis {
    PowerKind kind;
    int degree;
    SuperSpace over;
    Subspace realization;
    std::vector<std::string> labels;
    std::vector<Weight> weights;
    std::vector<Parity> parities;

    std::size_t dim() const { return realization.dim(); }
};

PowerBasis power_basis(PowerKind kind, int degree, const SuperSpace& over);

/// Closed-form dimension of the power: exterior Σ_j C(m,j) C(d-j+n-1, n-1),
/// symmetric Σ_j C(n,j) C(d-j+m-1, m-1).
std::size_t power_dimension(PowerKind kind, int degree, int m, int n);

/// Contracts factors `position` and `position+1`. For V ⊗ V* the braiding τ is
/// applied first (sign (-1)^{â φ̂}), then ev; for V* ⊗ V ev is applied directly.
/// Returns a map ambient -> ambient with those two factors removed.
SparseMap contraction_map(std::size_t position, const TensorAmbient& ambient);

/// Weight-and-parity multiplicities of a subspace. The subspace must be spanned
/// by its weight components; coordinates carry the given weights and parities.
struct WeightDims {
    std::size_t even = 0;
    std::size_t odd = 0;
    friend bool operator==(const WeightDims&, const WeightDims&) = default;
};
using WeightTable = std::map<Weight, WeightDims>;

WeightTable weight_table(const Subspace& sub, const std::vector<Weight>& coord_weights,
                         const std::vector<Parity>& coord_parities);
WeightTable weight_table(const Subspace& sub, const TensorAmbient& ambient);

}  // namespace dkc
