#include "dkc/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace dkc {

namespace {

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
    std::size_t find(std::size_t x)
    {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

private:
    std::vector<std::size_t> parent_;
};

/// Incremental Gauss-Jordan. Vectors are reduced against existing pivots on
/// insertion; finish() back-substitutes to the canonical reduced form.
class EchelonBuilder {
public:
    explicit EchelonBuilder(std::size_t n) : n_(n), slot_(n, -1) {}

    /// Returns true if v was independent of the vectors inserted so far.
    bool insert(SparseVector v)
    {
        std::size_t pos = 0;
        while (pos < v.size()) {
            const int s = slot_[v[pos].index];
            if (s < 0) {
                ++pos;
                continue;
            }
            Scalar c = -v[pos].value;
            add_scaled(v, c, vecs_[s]);
        }
        if (v.empty())
            return false;
        Scalar inv = 1 / v.front().value;
        if (inv != 1)
            for (auto& e : v)
                e.value *= inv;
        slot_[v.front().index] = static_cast<int>(vecs_.size());
        vecs_.push_back(std::move(v));
        return true;
    }

    std::size_t size() const { return vecs_.size(); }

    std::vector<SparseVector> finish_vectors()
    {
        std::sort(vecs_.begin(), vecs_.end(),
                  [](const SparseVector& a, const SparseVector& b) { return a.front().index < b.front().index; });
        for (std::size_t t = 0; t < vecs_.size(); ++t)
            slot_[vecs_[t].front().index] = static_cast<int>(t);
        for (std::size_t t = vecs_.size(); t-- > 0;) {
            SparseVector& v = vecs_[t];
            std::size_t pos = 1;
            while (pos < v.size()) {
                const int s = slot_[v[pos].index];
                if (s < 0) {
                    ++pos;
                    continue;
                }
                Scalar c = -v[pos].value;
                add_scaled(v, c, vecs_[s]);
            }
        }
        return std::move(vecs_);
    }

    std::size_t ambient() const { return n_; }

private:
    std::size_t n_;
    std::vector<int> slot_;
    std::vector<SparseVector> vecs_;
};

Integer lcm_of_denominators(const std::vector<Scalar>& xs)
{
    Integer l = 1;
    for (const auto& x : xs)
        if (x != 0)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
    return l;
}

/// Fraction-free Gaussian elimination; returns the rank of a dense integer table.
std::size_t bareiss_rank(std::vector<std::vector<Integer>> a)
{
    const std::size_t rows = a.size();
    if (rows == 0)
        return 0;
    const std::size_t cols = a[0].size();
    Integer prev = 1;
    std::size_t k = 0;
    for (std::size_t c = 0; c < cols && k < rows; ++c) {
        std::size_t best = rows;
        std::size_t best_bits = 0;
        for (std::size_t r = k; r < rows; ++r) {
            if (a[r][c] == 0)
                continue;
            std::size_t bits = bit_size(a[r][c]);
            if (best == rows || bits < best_bits) {
                best = r;
                best_bits = bits;
            }
        }
        if (best == rows)
            continue;
        std::swap(a[k], a[best]);
        for (std::size_t i = k + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                Integer t = a[k][c] * a[i][j] - a[i][c] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = a[k][c];
        ++k;
    }
    return k;
}

constexpr std::size_t kDenseLimit = 400 * 400;

}  // namespace

Subspace Subspace::full(std::size_t ambient_dim)
{
    Subspace s(ambient_dim);
    for (std::size_t i = 0; i < ambient_dim; ++i) {
        s.basis_.push_back({{i, 1}});
        s.pivots_.push_back(i);
    }
    return s;
}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<SparseVector>& vectors)
{
    EchelonBuilder b(ambient_dim);
    for (const auto& v : vectors) {
        if (!v.empty() && v.back().index >= ambient_dim)
            throw DimensionError("Subspace::span: vector exceeds ambient dimension");
        b.insert(v);
    }
    Subspace s(ambient_dim);
    s.basis_ = b.finish_vectors();
    for (const auto& v : s.basis_)
        s.pivots_.push_back(v.front().index);
    return s;
}

SparseVector Subspace::reduce(const SparseVector& v) const
{
    SparseVector r = v;
    std::size_t t = 0;
    for (const auto& e : v) {
        while (t < pivots_.size() && pivots_[t] < e.index)
            ++t;
        if (t < pivots_.size() && pivots_[t] == e.index)
            add_scaled(r, -e.value, basis_[t]);
    }
    return r;
}

std::optional<SparseVector> Subspace::coordinates(const SparseVector& v) const
{
    SparseVector coords;
    SparseVector r = v;
    std::size_t t = 0;
    for (const auto& e : v) {
        while (t < pivots_.size() && pivots_[t] < e.index)
            ++t;
        if (t < pivots_.size() && pivots_[t] == e.index) {
            coords.push_back({t, e.value});
            add_scaled(r, -e.value, basis_[t]);
        }
    }
    if (!r.empty())
        return std::nullopt;
    return coords;
}

SparseMap Subspace::inclusion() const
{
    return SparseMap::from_columns(ambient_, basis_);
}

std::size_t rank(const SparseMap& m)
{
    const std::size_t R = m.cod_dim();
    const std::size_t C = m.dom_dim();
    UnionFind uf(R + C);
    for (std::size_t j = 0; j < C; ++j)
        for (const auto& e : m.column(j))
            uf.unite(e.index, R + j);
    std::vector<std::vector<std::size_t>> comp_rows(R + C), comp_cols(R + C);
    for (std::size_t i = 0; i < R; ++i)
        comp_rows[uf.find(i)].push_back(i);
    for (std::size_t j = 0; j < C; ++j)
        if (!m.column(j).empty())
            comp_cols[uf.find(R + j)].push_back(j);

    std::size_t total = 0;
    std::vector<std::size_t> local_row(R);
    for (std::size_t root = 0; root < R + C; ++root) {
        const auto& rows = comp_rows[root];
        const auto& cols = comp_cols[root];
        if (rows.empty() || cols.empty())
            continue;
        if (rows.size() * cols.size() > kDenseLimit) {
            std::vector<SparseVector> sub;
            for (std::size_t j : cols)
                sub.push_back(m.column(j));
            total += Subspace::span(R, sub).dim();
            continue;
        }
        for (std::size_t i = 0; i < rows.size(); ++i)
            local_row[rows[i]] = i;
        std::vector<std::vector<Integer>> a(rows.size(), std::vector<Integer>(cols.size()));
        for (std::size_t jj = 0; jj < cols.size(); ++jj) {
            const auto& col = m.column(cols[jj]);
            std::vector<Scalar> vals;
            for (const auto& e : col)
                vals.push_back(e.value);
            Integer l = lcm_of_denominators(vals);
            for (const auto& e : col) {
                Scalar scaled_value = e.value * l;
                a[local_row[e.index]][jj] = scaled_value.get_num();
            }
        }
        total += bareiss_rank(std::move(a));
    }
    return total;
}

std::size_t rank_by_echelon(const SparseMap& m)
{
    return Subspace::span(m.cod_dim(), m.columns()).dim();
}

Subspace image(const SparseMap& m)
{
    return Subspace::span(m.cod_dim(), m.columns());
}

Subspace kernel(const SparseMap& m)
{
    const std::size_t n = m.dom_dim();
    EchelonBuilder b(n);
    for (auto& row : m.rows())
        if (!row.empty())
            b.insert(std::move(row));
    std::vector<SparseVector> rref = b.finish_vectors();
    std::vector<char> is_pivot(n, 0);
    for (const auto& r : rref)
        is_pivot[r.front().index] = 1;
    std::vector<std::vector<Entry>> raw(n);
    for (std::size_t f = 0; f < n; ++f)
        if (!is_pivot[f])
            raw[f].push_back({f, 1});
    for (const auto& r : rref) {
        const std::size_t p = r.front().index;
        for (std::size_t t = 1; t < r.size(); ++t)
            raw[r[t].index].push_back({p, -r[t].value});
    }
    std::vector<SparseVector> null_vectors;
    for (std::size_t f = 0; f < n; ++f)
        if (!is_pivot[f])
            null_vectors.push_back(normalized(std::move(raw[f])));
    return Subspace::span(n, null_vectors);
}

Subspace sum(const Subspace& a, const Subspace& b)
{
    if (a.ambient_dim() != b.ambient_dim())
        throw DimensionError("sum: ambient dimensions differ");
    std::vector<SparseVector> all = a.basis();
    all.insert(all.end(), b.basis().begin(), b.basis().end());
    return Subspace::span(a.ambient_dim(), all);
}

Subspace intersect(const Subspace& a, const Subspace& b)
{
    if (a.ambient_dim() != b.ambient_dim())
        throw DimensionError("intersect: ambient dimensions differ");
    if (a.dim() == 0 || b.dim() == 0)
        return Subspace::zero(a.ambient_dim());
    // Solve A x = B y: kernel of [A | -B], then map back through A.
    std::vector<SparseVector> cols = a.basis();
    for (const auto& v : b.basis())
        cols.push_back(scaled(v, -1));
    Subspace null = kernel(SparseMap::from_columns(a.ambient_dim(), cols));
    std::vector<SparseVector> vecs;
    for (const auto& x : null.basis()) {
        SparseVector v;
        for (const auto& e : x)
            if (e.index < a.dim())
                add_scaled(v, e.value, a.basis()[e.index]);
        vecs.push_back(std::move(v));
    }
    return Subspace::span(a.ambient_dim(), vecs);
}

bool contains(const Subspace& whole, const Subspace& sub)
{
    if (whole.ambient_dim() != sub.ambient_dim())
        throw DimensionError("contains: ambient dimensions differ");
    return std::all_of(sub.basis().begin(), sub.basis().end(),
                       [&](const SparseVector& v) { return whole.contains(v); });
}

Subspace complement_in(const Subspace& whole, const Subspace& sub)
{
    if (!contains(whole, sub))
        throw Error("complement_in: subspace is not contained in the whole space");
    EchelonBuilder b(whole.ambient_dim());
    for (const auto& v : sub.basis())
        b.insert(v);
    std::vector<SparseVector> extra;
    for (const auto& v : whole.basis()) {
        SparseVector r = sub.reduce(v);
        if (b.insert(r))
            extra.push_back(std::move(r));
    }
    return Subspace::span(whole.ambient_dim(), extra);
}

SparseMap restrict(const SparseMap& m, const Subspace& dom, const Subspace& cod)
{
    if (m.dom_dim() != dom.ambient_dim() || m.cod_dim() != cod.ambient_dim())
        throw DimensionError("restrict: subspace ambients do not match the map");
    std::vector<SparseVector> cols;
    cols.reserve(dom.dim());
    for (std::size_t j = 0; j < dom.dim(); ++j) {
        SparseVector w = m.apply(dom.basis()[j]);
        auto c = cod.coordinates(w);
        if (!c)
            throw ContainmentError("restrict: image escapes codomain at domain basis vector " + std::to_string(j),
                                   j, std::move(w));
        cols.push_back(std::move(*c));
    }
    return SparseMap::from_columns(cod.dim(), std::move(cols));
}

std::vector<std::vector<std::size_t>> square_blocks(const SparseMap& m)
{
    if (!m.is_square())
        throw DimensionError("square_blocks: matrix is not square");
    const std::size_t n = m.dom_dim();
    UnionFind uf(n);
    for (std::size_t j = 0; j < n; ++j)
        for (const auto& e : m.column(j))
            uf.unite(e.index, j);
    std::vector<std::vector<std::size_t>> groups(n);
    for (std::size_t i = 0; i < n; ++i)
        groups[uf.find(i)].push_back(i);
    std::vector<std::vector<std::size_t>> out;
    for (auto& g : groups)
        if (!g.empty())
            out.push_back(std::move(g));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<Scalar>> dense_block(const SparseMap& m, const std::vector<std::size_t>& idx)
{
    std::vector<std::vector<Scalar>> a(idx.size(), std::vector<Scalar>(idx.size()));
    for (std::size_t jj = 0; jj < idx.size(); ++jj)
        for (const auto& e : m.column(idx[jj])) {
            auto it = std::lower_bound(idx.begin(), idx.end(), e.index);
            if (it != idx.end() && *it == e.index)
                a[static_cast<std::size_t>(it - idx.begin())][jj] = e.value;
        }
    return a;
}

SparseMap inverse(const SparseMap& m)
{
    if (!m.is_square())
        throw DimensionError("inverse: matrix is not square");
    const std::size_t n = m.dom_dim();
    std::vector<Triple> out;
    for (const auto& idx : square_blocks(m)) {
        const std::size_t b = idx.size();
        auto a = dense_block(m, idx);
        std::vector<std::vector<Scalar>> inv(b, std::vector<Scalar>(b));
        for (std::size_t i = 0; i < b; ++i)
            inv[i][i] = 1;
        for (std::size_t c = 0; c < b; ++c) {
            std::size_t p = c;
            while (p < b && a[p][c] == 0)
                ++p;
            if (p == b)
                throw Error("inverse: matrix is singular");
            std::swap(a[p], a[c]);
            std::swap(inv[p], inv[c]);
            Scalar s = 1 / a[c][c];
            for (std::size_t j = 0; j < b; ++j) {
                a[c][j] *= s;
                inv[c][j] *= s;
            }
            for (std::size_t r = 0; r < b; ++r) {
                if (r == c || a[r][c] == 0)
                    continue;
                Scalar f = a[r][c];
                for (std::size_t j = 0; j < b; ++j) {
                    if (a[c][j] != 0)
                        a[r][j] -= f * a[c][j];
                    if (inv[c][j] != 0)
                        inv[r][j] -= f * inv[c][j];
                }
            }
        }
        for (std::size_t i = 0; i < b; ++i)
            for (std::size_t j = 0; j < b; ++j)
                if (inv[i][j] != 0)
                    out.push_back({idx[i], idx[j], inv[i][j]});
    }
    return SparseMap::from_triples(n, n, out);
}

}  // namespace dkc
