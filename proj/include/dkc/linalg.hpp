#pragma once

#include "dkc/sparse.hpp"

#include <optional>
#include <vector>

namespace dkc {

/// Column span inside a coordinate space, kept in canonical reduced echelon form:
/// each basis vector has entry 1 at its pivot (its smallest index), pivots strictly
/// increase, and every other basis vector vanishes at that pivot. Two subspaces are
/// equal iff their bases are identical.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim) {}

    static Subspace zero(std::size_t ambient_dim) { return Subspace(ambient_dim); }
    static Subspace full(std::size_t ambient_dim);
    static Subspace span(std::size_t ambient_dim, const std::vector<SparseVector>& vectors);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<SparseVector>& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    /// v minus its component along the pivots; zero iff v lies in the subspace.
    SparseVector reduce(const SparseVector& v) const;
    bool contains(const SparseVector& v) const { return reduce(v).empty(); }
    /// Coordinates of v in basis(), or nullopt if v is outside.
    std::optional<SparseVector> coordinates(const SparseVector& v) const;
    /// ambient_dim x dim matrix whose columns are basis().
    SparseMap inclusion() const;

    friend bool operator==(const Subspace&, const Subspace&) = default;

private:
    std::size_t ambient_ = 0;
    std::vector<SparseVector> basis_;
    std::vector<std::size_t> pivots_;
};

/// Raised by restrict() when the image of a domain vector leaves the codomain.
class ContainmentError : public Error {
public:
    ContainmentError(const std::string& what, std::size_t dom_index, SparseVector witness)
        : Error(what), dom_index_(dom_index), witness_(std::move(witness))
    {
    }
    std::size_t dom_index() const { return dom_index_; }
    /// Image vector (ambient coordinates) that escapes the codomain.
    const SparseVector& witness() const { return witness_; }

private:
    std::size_t dom_index_;
    SparseVector witness_;
};

/// Exact rank. Splits the matrix into connected blocks and runs fraction-free
/// Bareiss elimination on each (pivot of smallest bit size in the column).
std::size_t rank(const SparseMap& m);

/// Rank through rational Gauss-Jordan; an independent route to rank().
std::size_t rank_by_echelon(const SparseMap& m);

Subspace kernel(const SparseMap& m);
Subspace image(const SparseMap& m);

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
/// True iff sub ⊆ whole.
bool contains(const Subspace& whole, const Subspace& sub);
/// Some complement of sub inside whole; throws Error if sub ⊄ whole.
Subspace complement_in(const Subspace& whole, const Subspace& sub);

/// Matrix of m : dom -> cod in the bases of dom and cod. Throws ContainmentError
/// with the offending image vector if m(dom) ⊄ cod.
SparseMap restrict(const SparseMap& m, const Subspace& dom, const Subspace& cod);

/// Inverse of a square matrix; throws Error if singular.
SparseMap inverse(const SparseMap& m);

/// Index sets of the diagonal blocks of a square matrix: i and j share a block
/// whenever m(i,j) != 0. The matrix is block diagonal after permuting by them.
std::vector<std::vector<std::size_t>> square_blocks(const SparseMap& m);

/// Principal submatrix on the given (sorted) indices, as a dense row-major table.
std::vector<std::vector<Scalar>> dense_block(const SparseMap& m, const std::vector<std::size_t>& idx);

}  // namespace dkc
