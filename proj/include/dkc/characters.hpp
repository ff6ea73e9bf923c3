#pragma once

#include "dkc/glrep.hpp"

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace dkc {

using Exponent = std::vector<int>;

/// Laurent polynomial with exact rational coefficients. For (3|1) the variables
/// are x1, x2, x3, y with x_i = e^{ε_i}, y = e^{ε_4}.
class LaurentPoly {
public:
    explicit LaurentPoly(std::size_t nvars = 4) : nvars_(nvars) {}

    static LaurentPoly constant(const Scalar& c, std::size_t nvars = 4);
    static LaurentPoly monomial(const Exponent& e, const Scalar& c = 1);
    static LaurentPoly variable(std::size_t i, std::size_t nvars = 4);

    std::size_t nvars() const { return nvars_; }
    const std::map<Exponent, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Scalar coefficient(const Exponent& e) const;

    void add_term(const Exponent& e, const Scalar& c);

    LaurentPoly operator-() const;
    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) = default;

    LaurentPoly scaled(const Scalar& c) const;
    LaurentPoly pow(unsigned k) const;
    /// Multiplies by the monomial with exponent e.
    LaurentPoly shifted(const Exponent& e) const;
    /// Every variable replaced by its inverse.
    LaurentPoly inverted() const;
    /// Variable i replaced by -variable i.
    LaurentPoly negated_variable(std::size_t i) const;
    LaurentPoly swapped(std::size_t i, std::size_t j) const;
    /// Exponent-wise map; the caller keeps exponents integral.
    LaurentPoly map_exponents(const std::function<Exponent(const Exponent&)>& f) const;

    /// Canonical text: terms in increasing exponent order, "num/den*x1^a*..."
    /// joined by " + ", or "0".
    std::string to_string(const std::vector<std::string>& names = {"x1", "x2", "x3", "y"}) const;

private:
    std::size_t nvars_;
    std::map<Exponent, Scalar> terms_;
};

/// num / den if the division is exact in the Laurent ring, otherwise nullopt.
std::optional<LaurentPoly> exact_divide(const LaurentPoly& num, const LaurentPoly& den);

/// Variable names x1..xm, then y (n = 1) or y1..yn.
std::vector<std::string> variable_names(int m, int n);

struct CharFraction {
    LaurentPoly num;
    LaurentPoly den;

    static CharFraction of(const LaurentPoly& p);
    /// The quotient as a Laurent polynomial, if exact.
    std::optional<LaurentPoly> as_poly() const { return exact_divide(num, den); }
};

struct CharComparison {
    bool equal = false;
    bool equal_up_to_sign = false;  ///< e1 = ±e2
};
CharComparison char_compare(const CharFraction& a, const CharFraction& b);
bool char_equal(const CharFraction& a, const CharFraction& b);

// ---- (3|1) formulas --------------------------------------------------------

/// R = (x1+y)(x2+y)(x3+y)
LaurentPoly base_R();
/// Π = (x1-x2)(x2-x3)(x1-x3)
LaurentPoly base_Pi();
/// det of the 3x3 matrix with rows (x_i^{t+2}, x_i^{u+1}, x_i^v).
LaurentPoly base_a(int t, int u, int v);

/// Highest weight label (λ1, λ2, λ3 | λ4); e^λ = x^λ y^{-λ4}.
struct WeightLabel {
    std::array<Scalar, 4> lambda{};

    static WeightLabel of(int l1, int l2, int l3, int l4);
    std::array<int, 4> integers() const;  ///< throws Error unless all entries are integers
    std::string to_string() const;
};

enum class Atypicality { Typical, Type1, Type2, Type3 };  ///< λ1+2=λ4, λ2+1=λ4, λ3=λ4
std::string to_string(Atypicality a);

struct WeightClass {
    bool integral = false;    ///< λ1-λ2, λ2-λ3 ∈ Z
    bool dominant = false;    ///< λ1 >= λ2 >= λ3
    bool integrable = false;  ///< all λ_i ∈ Z
    Atypicality type = Atypicality::Typical;
    int conditions_met = 0;   ///< number of atypicality conditions that hold
};
WeightClass classify_weight(const WeightLabel& w);

/// R (x1x2x3)^{λ3-1} a(λ1-λ3, λ2-λ3, 0) / (Π y^{λ4})
CharFraction ch_typical(const WeightLabel& w);
/// The three-term bracket for the atypicality type, over Π y^{λ4} ∏(x_i+y).
CharFraction ch_atypical(const WeightLabel& w);
/// ch_typical or ch_atypical according to classify_weight.
CharFraction ch_irreducible(const WeightLabel& w);
/// (L1/L0) Σ_{w ∈ S3} sign(w) e^{w(λ+ρ)} with ρ = (1/2,-1/2,-3/2|-3/2), computed in
/// doubled exponents; throws Error if the halved result has odd exponents.
CharFraction kac_sum(const WeightLabel& w);

/// Jacobi–Trudi determinant det(h_{λ_i - i + j}) for the super alphabet
/// x1,x2,x3 | y: h_r = h_r(x) - y h_{r-1}(x) (signed) or + y h_{r-1}(x).
/// The partition is given by its parts; throws Error if it is not a partition or
/// has a fourth part above 1 (outside the hook Γ_{3,1}).
LaurentPoly ch_schur_super(const std::vector<int>& partition, bool signed_char = true);

/// R (x1x2x3)^{λ3-1} a(λ1-λ3, λ2-λ3, 0) / (Π y^{e4}) for the shape (λ1,λ2,λ3,1^{λ4}),
/// where e4 = λ4 as printed; the caller picks the y reading.
CharFraction ch_hook_product(int l1, int l2, int l3, int e4);
/// (1/Π)[x2^{λ+1}(x2+y)(x3-x1) + x3^{λ+1}(x3+y)(x1-x2) + x1^{λ+1}(x1+y)(x2-x3)]
CharFraction ch_row_bracket(int lambda1);

/// R y^{k-3} a(l,l,0) / (Π (x1x2x3)^l)
CharFraction ch_image_formula(int k, int l);
/// R a(m+p, m+p, 0) / (Π (x1x2x3)^{p+1})
CharFraction ch_mmp_formula(int m, int p);
/// (x1x2x3) R / (Π y) Σ_cyclic (x_j^{-p-1} x_k^n - x_j^n x_k^{-p-1}) / (x_i+y)
CharFraction ch_y_formula(int n, int p);
/// R a(m+2, m+1, 0) / (Π y (x1x2x3)^{m+1})
CharFraction ch_z1_formula(int m);
/// R (x1x2x3)^{-m} y^{l-3} a(k+m, m-1+shift, 0) / Π; shift = 0 is the printed
/// form, shift = 1 the reading that agrees with the Z_1 case.
CharFraction ch_zk_formula(int k, int l, int m, int shift = 0);
/// R (x1x2x3)^{-p} a(m+p+t-1, m+p-1, 0) / (Π y)
CharFraction ch_mfinal_formula(int m, int t, int p);

/// Σ (even ± odd) x^{c} over the weight table (σ = -1 when signed).
LaurentPoly supercharacter(const WeightTable& table, std::size_t nvars, bool signed_char);
LaurentPoly supercharacter(const GLModule& mod, bool signed_char);

/// Comparison of a module against a formula under both conventions.
struct ConventionReport {
    CharComparison signed_char;
    CharComparison unsigned_char;
    bool any_exact() const { return signed_char.equal || unsigned_char.equal; }
    std::string matched() const;  ///< "signed", "unsigned", "both", "signed up to sign", ... or "none"
};
ConventionReport compare_conventions(const GLModule& mod, const CharFraction& formula);

}  // namespace dkc
