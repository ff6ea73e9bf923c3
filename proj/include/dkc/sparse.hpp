#pragma once

#include "dkc/scalar.hpp"

#include <cstddef>
#include <iosfwd>
#include <vector>

namespace dkc {

struct Entry {
    std::size_t index;
    Scalar value;

    friend bool operator==(const Entry&, const Entry&) = default;
};

/// Sparse vector: entries sorted by index, no stored zeros.
using SparseVector = std::vector<Entry>;

Scalar coefficient(const SparseVector& v, std::size_t index);

/// acc += c * v
void add_scaled(SparseVector& acc, const Scalar& c, const SparseVector& v);

SparseVector scaled(const SparseVector& v, const Scalar& c);

/// Sorts, merges duplicate indices and drops zeros.
SparseVector normalized(std::vector<Entry> raw);

struct Triple {
    std::size_t row;
    std::size_t col;
    Scalar value;
};

/// Exact rational linear map between indexed bases, stored column-major.
///
/// Column j holds the image of the j-th domain basis vector. Every linear
/// operator in the library (differentials, generator actions, projectors)
/// is one of these.
class SparseMap {
public:
    SparseMap() = default;
    SparseMap(std::size_t cod_dim, std::size_t dom_dim);

    static SparseMap identity(std::size_t n);
    static SparseMap scalar(std::size_t n, const Scalar& c);
    static SparseMap from_columns(std::size_t cod_dim, std::vector<SparseVector> columns);
    /// Duplicate (row, col) pairs are summed.
    static SparseMap from_triples(std::size_t cod_dim, std::size_t dom_dim,
                                  const std::vector<Triple>& triples);

    std::size_t cod_dim() const { return cod_; }
    std::size_t dom_dim() const { return cols_.size(); }
    bool is_square() const { return cod_ == cols_.size(); }

    const SparseVector& column(std::size_t j) const { return cols_[j]; }
    const std::vector<SparseVector>& columns() const { return cols_; }
    Scalar at(std::size_t row, std::size_t col) const;
    std::size_t nnz() const;
    bool is_zero() const;

    std::vector<Triple> triples() const;
    /// Rows as sparse vectors over the domain index.
    std::vector<SparseVector> rows() const;

    SparseMap transpose() const;
    SparseMap scaled(const Scalar& c) const;
    SparseVector apply(const SparseVector& v) const;

    friend SparseMap operator+(const SparseMap& a, const SparseMap& b);
    friend SparseMap operator-(const SparseMap& a, const SparseMap& b);
    friend bool operator==(const SparseMap& a, const SparseMap& b);

private:
    std::size_t cod_ = 0;
    std::vector<SparseVector> cols_;
};

/// a ∘ b; throws DimensionError unless a.dom_dim() == b.cod_dim().
SparseMap compose(const SparseMap& a, const SparseMap& b);

/// Kronecker product a ⊗ b on lexicographic product bases (no Koszul sign).
SparseMap kron(const SparseMap& a, const SparseMap& b);

/// Canonical text form: header "sparse-map <cod> <dom> <nnz>" then one
/// "<row> <col> <num> <den>" line per entry, column-major order.
void write_triples(std::ostream& out, const SparseMap& m);
SparseMap read_triples(std::istream& in);

}  // namespace dkc
