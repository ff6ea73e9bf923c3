#pragma once

#include "dkc/koszul.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dkc {

/// Matrix unit E_ij of gl(m|n), 1-based.
struct Generator {
    int i = 1;
    int j = 1;

    Parity parity(int m) const;
    std::string name() const;  ///< "E12"
    friend auto operator<=>(const Generator&, const Generator&) = default;
};

/// All (m+n)^2 generators, row-major in (i, j).
std::vector<Generator> all_generators(int m, int n);
/// E_{i,i+1}, i = 1..m+n-1.
std::vector<Generator> raising_generators(int m, int n);

/// Action on a tensor ambient by the super derivation rule; a dual factor acts by
/// ξ ↦ -(-1)^{p(E)p(ξ)} ξ∘E.
SparseMap generator_matrix(const Generator& g, const TensorAmbient& ambient);
SparseMap generator_matrix(const Generator& g, const BlockSpace& space);

/// ρ(a)ρ(b) - (-1)^{p(a)p(b)} ρ(b)ρ(a).
SparseMap super_commutator(const SparseMap& a, Parity pa, const SparseMap& b, Parity pb);

/// A finite-dimensional gl(m|n)-module with a weight basis.
class GLModule {
public:
    GLModule(std::string name, int m, int n, std::vector<Weight> weights, std::vector<Parity> parities,
             std::vector<SparseMap> action);

    const std::string& name() const { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }
    int m() const { return m_; }
    int n() const { return n_; }
    std::size_t dim() const { return weights_.size(); }
    const std::vector<Weight>& weights() const { return weights_; }
    const std::vector<Parity>& parities() const { return parities_; }
    const SparseMap& action(const Generator& g) const;
    WeightTable weight_table() const;

    /// Berezinian power tensored on (0 unless built by berezinian_twist).
    int twist = 0;
    /// Where the module lives when it is a subquotient of a block space.
    std::optional<BlockSpace> space;
    std::optional<Subspace> carrier;
    std::optional<Subspace> quotient_by;

private:
    std::string name_;
    int m_;
    int n_;
    std::vector<Weight> weights_;
    std::vector<Parity> parities_;
    std::vector<SparseMap> action_;
};

/// The whole block space as a module.
GLModule module_of(const BlockSpace& space, const std::string& name = "");
/// A generator-stable subspace of a block space; throws ContainmentError if a
/// generator moves it. The subspace must be spanned by weight vectors.
GLModule submodule(const BlockSpace& space, const Subspace& w, const std::string& name);
/// W / U for stable U ⊂ W ⊂ space.
GLModule subquotient(const BlockSpace& space, const Subspace& w, const Subspace& u, const std::string& name);

struct RelationFailure {
    Generator a;
    Generator b;
};
/// Checks [E_a, E_b] against the bracket of gl(m|n) for every ordered pair.
std::vector<RelationFailure> relation_check(const GLModule& mod);

struct EquivarianceFailure {
    Generator g;
    SparseMap residual;
};
/// ρ_cod(E) f - f ρ_dom(E) for every generator; only nonzero residuals are returned.
std::vector<EquivarianceFailure> equivariance_check(const SparseMap& f, const GLModule& dom, const GLModule& cod);

/// Smallest stable subspace containing the vectors (module coordinates).
Subspace submodule_closure(const std::vector<SparseVector>& vectors, const GLModule& mod);

/// Weight label (λ1..λm | λ_{m+1}..λ_{m+n}) with e^λ = x^λ y^{-λ_odd}: the odd
/// entries are the negated ε-coefficients.
std::vector<int> weight_label(const Weight& eps, int m);
Weight weight_from_label(const std::vector<int>& label, int m);
std::string label_string(const std::vector<int>& label, int m);

/// μ ≤ λ: λ - μ is a nonnegative integer combination of simple roots.
bool dominates(const Weight& lambda, const Weight& mu);

struct SingularLine {
    Weight weight;  ///< ε-coefficients
    Parity parity;
    std::size_t multiplicity = 0;
};

struct HighestWeightReport {
    std::vector<SingularLine> singular_lines;
    std::size_t singular_dim = 0;
    Weight top_weight;
    Subspace singular;          ///< all singular vectors, module coordinates
    bool unique_top = false;    ///< exactly one singular line carries a maximal weight
    bool generates_all = false; ///< the top singular vectors generate the module
};

HighestWeightReport singular_vectors(const GLModule& mod);

struct IrreducibilityVerdict {
    bool unique_singular_line = false;
    bool cyclic = false;
    bool dual_unique_singular_line = false;
    bool pass() const { return unique_singular_line && cyclic && dual_unique_singular_line; }
};
IrreducibilityVerdict irreducibility_check(const GLModule& mod, std::size_t max_dim = 3000);

/// Contragredient: E acts by -(-1)^{p(E)p(b)} on the transposed entries; weights negate.
GLModule dual_module(const GLModule& mod);
/// E(a ⊗ b) = Ea ⊗ b + (-1)^{p(E)p(a)} a ⊗ Eb on the lexicographic product basis.
GLModule tensor_module(const GLModule& a, const GLModule& b, std::size_t max_dim = 100000);
/// mod ⊗ B^{⊗t}, B the one-dimensional homology of K at Λ_m S_n* (t < 0 uses B*).
GLModule berezinian_twist(const GLModule& mod, int t);

/// The Berezinian line Ker d_{m,n} / Im d_{m-1,n-1}.
GLModule homology_line(const Alphabet& v);

/// Named constructions over (3|1) (or any alphabet where they make sense).
struct Construction {
    std::string kind;          ///< H31, ImD, Mmp, Ysummand, Z1, Zk, Mfinal, Ilambda
    std::vector<int> params;
    std::string name() const;  ///< e.g. "Mmp(1,1)"
};

/// Parses "Mmp 1 1" style arguments; throws Error on unknown names or arity.
Construction parse_construction(const std::string& kind, const std::vector<int>& params);

struct ConstructedModule {
    Construction what;
    GLModule module;
    HighestWeightReport highest;
};

ConstructedModule construct(const Construction& c, const Alphabet& v = {});

}  // namespace dkc
