#pragma once

#include "dkc/superspace.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace dkc {

/// Letters of a monomial, sorted nondecreasing. The monomial stands for the
/// canonical echelon basis vector of the power with this word as pivot:
/// Σ over distinct rearrangements u of sort_sign(u) e_u.
using Word = std::vector<std::uint8_t>;

/// Sign picked up when sorting `word` with the Koszul action of `kind`; 0 if the
/// sorted word is not a basis monomial (a repeated odd letter in a symmetric
/// power, a repeated even letter in an exterior one).
int sort_sign(PowerKind kind, const Word& word, int m);

bool is_monomial(PowerKind kind, const Word& sorted, int m);

/// All basis monomials of the power, in lexicographic order (the order of the
/// echelon pivots of the projector image).
std::vector<Word> monomials(PowerKind kind, int degree, int m, int n);

/// One term of the expansion of a monomial after pulling out a copy of `letter`
/// at the right (last) or left (first) end.
struct Split {
    int sign;
    std::uint8_t letter;
    Word rest;
};
std::vector<Split> split_last(PowerKind kind, const Word& w, int m);
std::vector<Split> split_first(PowerKind kind, const Word& w, int m);

/// Projection of (monomial ⊗ e_letter), resp. (e_letter ⊗ monomial), back into
/// the power one degree up: a multiple of a single monomial, or nothing.
struct Attach {
    Scalar coeff;
    Word word;
};
std::optional<Attach> attach_right(PowerKind kind, const Word& w, std::uint8_t letter, int m);
std::optional<Attach> attach_left(PowerKind kind, const Word& w, std::uint8_t letter, int m);

/// A tensor factor of a spot: a symmetric or exterior power of V or V*.
struct Block {
    PowerKind kind;
    bool dual;
    int degree;

    friend bool operator==(const Block&, const Block&) = default;
};

/// Lookup table for the monomials of one power; shared through a process-wide
/// immutable cache.
class MonomialTable {
public:
    MonomialTable(PowerKind kind, int degree, int m, int n);

    const std::vector<Word>& words() const { return words_; }
    std::size_t size() const { return words_.size(); }
    /// Position of a sorted word, or npos.
    std::size_t find(const Word& w) const;

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
    std::uint64_t key(const Word& w) const;
    int letters_;
    int degree_;
    std::vector<Word> words_;
    std::vector<std::pair<std::uint64_t, std::size_t>> sorted_keys_;
};

std::shared_ptr<const MonomialTable> monomial_table(PowerKind kind, int degree, int m, int n);

/// Tensor product of blocks with the lexicographic product of monomial bases.
/// Coordinates agree with the literal realization inside the tensor ambient.
class BlockSpace {
public:
    BlockSpace(int m, int n, std::vector<Block> blocks);

    int m() const { return m_; }
    int n() const { return n_; }
    const std::vector<Block>& blocks() const { return blocks_; }
    std::size_t dim() const { return dim_; }

    const MonomialTable& table(std::size_t b) const { return *tables_[b]; }
    std::size_t index(const std::vector<std::size_t>& locals) const;
    std::vector<std::size_t> locals(std::size_t index) const;

    Parity parity(std::size_t index) const;
    Weight weight(std::size_t index) const;
    std::string label(std::size_t index) const;
    std::vector<Weight> weights() const;
    std::vector<Parity> parities() const;

    /// The V^{⊗?} ⊗ V*^{⊗?} ambient the blocks live in, factor by factor.
    TensorAmbient ambient() const;
    /// Realization of this space inside ambient(), as a Kronecker product of
    /// power realizations; only sensible for small spaces.
    Subspace literal_realization() const;
    /// e.g. "S2.L1.S3*"
    std::string name() const;

private:
    int m_;
    int n_;
    std::vector<Block> blocks_;
    std::vector<std::shared_ptr<const MonomialTable>> tables_;
    std::vector<std::size_t> strides_;
    std::size_t dim_ = 1;
};

Parity word_parity(const Word& w, int m);

/// Matrix of E_ij (0-based letters) on a block space: derivation rule with
/// Koszul signs; on dual blocks ξ^i ↦ -(-1)^{p(E)p(i)} ξ^j.
SparseMap block_generator(int i, int j, const BlockSpace& space);

}  // namespace dkc
