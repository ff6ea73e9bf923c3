#pragma once

#include "dkc/sparse.hpp"

#include <string>
#include <utility>
#include <vector>

namespace dkc {

/// Univariate polynomial over the rationals, coefficients stored low to high.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Scalar> coeffs);

    static Polynomial constant(const Scalar& c);
    /// t - r
    static Polynomial linear_root(const Scalar& r);

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    Scalar coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Scalar(0); }
    const std::vector<Scalar>& coeffs() const { return c_; }
    Scalar leading() const { return c_.empty() ? Scalar(0) : c_.back(); }

    Scalar evaluate(const Scalar& t) const;
    Polynomial derivative() const;
    Polynomial monic() const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// Quotient and remainder; throws Error on division by zero.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const;

    std::string to_string(const std::string& var = "t") const;

private:
    void trim();
    std::vector<Scalar> c_;
};

Polynomial gcd(Polynomial a, Polynomial b);

/// det(t I - M) for a dense square table, via Hessenberg reduction over Q.
Polynomial char_poly_dense(std::vector<std::vector<Scalar>> a);

/// Exact characteristic polynomial det(t I - M); monic, degree = dim. The matrix is
/// split into its diagonal blocks first and the block polynomials multiplied.
Polynomial char_poly(const SparseMap& m);

/// p(M) by Horner's rule.
SparseMap evaluate(const Polynomial& p, const SparseMap& m);

struct RootSearch {
    std::vector<std::pair<Scalar, std::size_t>> roots;  ///< sorted by value, with multiplicity
    int unresolved_degree = 0;                          ///< degree not accounted for by rational roots
};

/// All rational roots of p. Candidates are p/q with p | trailing and q | leading
/// coefficient of the primitive square-free part.
RootSearch rational_roots(const Polynomial& p);

}  // namespace dkc
