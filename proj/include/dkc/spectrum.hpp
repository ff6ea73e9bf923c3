#pragma once

#include "dkc/polynomial.hpp"

#include <vector>

namespace dkc {

struct Eigenvalue {
    Scalar value;
    std::size_t algebraic = 0;
    std::size_t geometric = 0;
};

struct Spectrum {
    std::size_t dim = 0;
    std::vector<Eigenvalue> pairs;  ///< sorted by value
    bool diagonalizable = false;

    bool contains(const Scalar& v) const;
    std::vector<Scalar> values() const;
};

/// Raised when rational roots do not exhaust the characteristic polynomial.
class SpectrumError : public Error {
public:
    SpectrumError(const std::string& what, Polynomial residual)
        : Error(what), residual_(std::move(residual))
    {
    }
    const Polynomial& residual() const { return residual_; }

private:
    Polynomial residual_;
};

/// Exact spectrum of a square matrix whose eigenvalues are all rational.
/// Algebraic multiplicities from the block characteristic polynomials, geometric
/// ones from rank(M - λ), and diagonalizability from prod (M - λ) == 0.
Spectrum rational_spectrum(const SparseMap& m);

}  // namespace dkc
