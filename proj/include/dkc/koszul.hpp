#pragma once

#include "dkc/blocks.hpp"
#include "dkc/spectrum.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace dkc {

/// A term of the double complex: S_i · Λ_k · S_l^*. The K terms Λ_k ⊗ S_l^* are
/// the spots with i = 0, the L terms S_p ⊗ Λ_r those with l = 0.
struct Spot {
    int i = 0;
    int k = 0;
    int l = 0;

    static Spot K(int k, int l) { return {0, k, l}; }
    static Spot L(int p, int r) { return {p, r, 0}; }

    bool valid() const { return i >= 0 && k >= 0 && l >= 0; }
    std::string name() const;
    friend auto operator<=>(const Spot&, const Spot&) = default;
};

/// Super dimension (m|n) of V.
struct Alphabet {
    int m = 3;
    int n = 1;
    friend bool operator==(const Alphabet&, const Alphabet&) = default;
};

BlockSpace spot_space(const Spot& s, const Alphabet& v);

/// d : S_i Λ_k S_l* → S_i Λ_{k+1} S_{l+1}*          (inserts Σ x_c ⊗ ξ^c)
/// Del : S_i Λ_k S_l* → S_i Λ_{k-1} S_{l-1}*        (contracts the last x with the first ξ)
/// P : S_i Λ_k S_l* → S_{i-1} Λ_{k+1} S_l*          (moves a letter from S to Λ)
/// Q : S_i Λ_k S_l* → S_{i+1} Λ_{k-1} S_l*          (moves a letter from Λ to S)
enum class DiffKind { D, Del, P, Q };

std::string to_string(DiffKind kind);
/// Accepts d, del, P, Q (case-insensitive); throws Error otherwise.
DiffKind parse_diff_kind(const std::string& text);

/// Target spot of `kind` applied at `source`; nullopt when an index would go negative.
std::optional<Spot> target_spot(DiffKind kind, const Spot& source);

/// Matrix of the differential from `source` in monomial coordinates.
/// Throws Error if the target spot does not exist.
SparseMap differential(DiffKind kind, const Spot& source, const Alphabet& v);

/// Same map built literally: embed into the tensor ambient, apply the
/// insertion / contraction, project with X ⊗ Y ⊗ X*, and read coordinates in the
/// echelon realizations. Exponential in the total degree; for cross-checks only.
SparseMap literal_differential(DiffKind kind, const Spot& source, const Alphabet& v);

/// Product of the word applied left to right (word[0] acts first), with the spot
/// reached; the empty word gives the identity.
struct ComposedOperator {
    SparseMap matrix;
    Spot start;
    Spot end;
};
ComposedOperator composed_operator(const std::vector<DiffKind>& word, const Spot& start, const Alphabet& v);

/// Residual of
///   l k d_{k-1,l-1} ∂_{k-1,l-1} + (l+1)(k+1) ∂_{k,l} d_{k,l} - (l-k-n+m) id   on Λ_k ⊗ S_l*
/// where ∂_{k,l} is the contraction Λ_{k+1}S*_{l+1} → Λ_k S*_l. Terms with a
/// vanishing prefactor are dropped.
SparseMap dd_identity_residual(int k, int l, const Alphabet& v);

/// Residual of r(p+1) P Q + p(r+1) Q P - (p+r) id on S_p ⊗ Λ_r, where the first
/// product passes through S_{p+1} Λ_{r-1} and the second through S_{p-1} Λ_{r+1}.
SparseMap pq_identity_residual(int p, int r, const Alphabet& v);

/// Scalars c_{k,l} that make the identity on Λ_k S_l* hold when d_{k,l} is
/// replaced by c_{k,l} d_{k,l}, solved degree by degree from c at (0,0).
/// Throws CalibrationError if no scalar works at some spot.
class CalibrationError : public Error {
public:
    CalibrationError(const std::string& what, SparseMap residual) : Error(what), residual_(std::move(residual)) {}
    const SparseMap& residual() const { return residual_; }

private:
    SparseMap residual_;
};
std::map<std::pair<int, int>, Scalar> calibrate_d(int max_k, int max_l, const Alphabet& v);

/// Squares of the double complex, indexed by the corner the two paths leave from.
enum class Square { PD, QDel };
/// PD: P∘d - d∘P on S_i Λ_k S_l* (vacuous for i = 0).
/// QDel: Q∘∂ - ∂∘Q (vacuous for k < 2 or l = 0).
/// nullopt means the square is vacuous.
std::optional<SparseMap> commute_residual(Square sq, const Spot& corner, const Alphabet& v);

struct HomologyReport {
    Spot spot;
    std::size_t dim_space = 0;
    std::size_t dim_image = 0;   ///< image of the incoming differential
    std::size_t dim_kernel = 0;  ///< kernel of the outgoing differential
    std::size_t homology_dim = 0;
    Subspace representative;  ///< complement of the image inside the kernel
};

/// Homology of (K_a, d) at Λ_k ⊗ S_l* (a = k - l).
HomologyReport homology_K(int k, int l, const Alphabet& v);
/// Homology of (L_a, P) at S_p ⊗ Λ_r (a = p + r).
HomologyReport homology_L(int p, int r, const Alphabet& v);

/// Kernel of P ⊗ id on S_i Λ_k S_tail*; the whole space when i = 0.
Subspace kerP_subspace(int i, int k, int tail, const Alphabet& v);
/// Image of P ⊗ id from S_{i+1} Λ_{k-1} S_tail* (zero when k = 0).
Subspace imP_subspace(int i, int k, int tail, const Alphabet& v);
Subspace image_of(DiffKind kind, const Spot& source, const Alphabet& v);
Subspace kernel_of(DiffKind kind, const Spot& source, const Alphabet& v);

/// Predicted eigenvalue sets.
struct PredictedValue {
    int j;
    Scalar value;
};
struct SpectrumPrediction {
    std::string reading;
    std::vector<PredictedValue> values;
    std::vector<Scalar> set() const;  ///< sorted, duplicates removed
};
/// (a+i+3-j) j / ((i+1)(a+i+1)), j = 1..i+1.
SpectrumPrediction dpqd_prediction(int i, int a);
/// The set obtained by unrolling ∂PQd = c_i id + e_i Qd∂P down to i = 0, with
/// c_i = (a+i+2)/(a+i+1) - i/(i+1) and e_i = i(a+i)/((i+1)(a+i+1)).
SpectrumPrediction dpqd_recursion_prediction(int i, int a);
/// (a+k+2i+4-j) j / ((i+1)(k+1)^2(a+i+k+2)) over the two readings of the index
/// list: "listed" j ∈ {1..i+1} ∪ {i+k+1} and "range" j = 1..i+k+1.
std::vector<SpectrumPrediction> pddq_predictions(int i, int k, int a);

struct SpectrumMatch {
    Spectrum spectrum;
    std::vector<SpectrumPrediction> predictions;
    std::vector<bool> matches;  ///< per prediction: computed value set == predicted set
    bool invertible = false;    ///< 0 not an eigenvalue
    std::size_t dim = 0;
};

/// ∂PQd on S_i S_{a+i}*: d, then Q, then P, then ∂. Predictions: displayed set,
/// then the recursion.
SparseMap dpqd_operator(int i, int a, const Alphabet& v);
SpectrumMatch dpqd_spectrum(int i, int a, const Alphabet& v);

/// P∂dQ on S_i Λ_{k+1} S_{a+i+k+1}*, and its restriction to Ker P ⊗ S*.
SparseMap pddq_operator(int i, int k, int a, const Alphabet& v);
SpectrumMatch pddq_spectrum(int i, int k, int a, const Alphabet& v);

/// A direct-sum decomposition ambient = A ⊕ B, checked on construction.
struct Splitting {
    std::string name;
    BlockSpace ambient;
    Subspace summand_a;
    Subspace summand_b;
    bool direct = false;  ///< A ∩ B = 0 and A + B = ambient (or the stated whole)
    Subspace whole;       ///< the space being split
    std::size_t intersection_dim = 0;
};

/// Λ_k S_l* = Im d_{k-1,l-1} ⊕ Im ∂_{k,l}.
Splitting split_K(int k, int l, const Alphabet& v);

/// S_{i+1} S*_{a+i+1} = Qd(S_i S*_{a+i}) ⊕ Ker(∂P); requires ∂PQd invertible.
Splitting split_symmetric(int i, int a, const Alphabet& v);

/// Inside W = S_s · Im d_{t,u} ⊂ S_s Λ_{t+1} S*_{u+1} (s >= 1):
/// W = dQ(Ker P ⊗ S*_u on S_{s-1} Λ_{t+1} S*_u) ⊕ (W ∩ Ker P∂).
/// Requires P∂dQ invertible on the kernel.
Splitting split_image(int s, int t, int u, const Alphabet& v);

/// Throws Error if the operator fails to be invertible.
SparseMap invert_or_throw(const SparseMap& m, const std::string& what);

}  // namespace dkc
