#include "dkc/sparse.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace dkc {

Scalar coefficient(const SparseVector& v, std::size_t index)
{
    auto it = std::lower_bound(v.begin(), v.end(), index,
                               [](const Entry& e, std::size_t i) { return e.index < i; });
    if (it != v.end() && it->index == index)
        return it->value;
    return 0;
}

void add_scaled(SparseVector& acc, const Scalar& c, const SparseVector& v)
{
    if (c == 0 || v.empty())
        return;
    SparseVector out;
    out.reserve(acc.size() + v.size());
    auto a = acc.begin();
    auto b = v.begin();
    while (a != acc.end() || b != v.end()) {
        if (b == v.end() || (a != acc.end() && a->index < b->index)) {
            out.push_back(std::move(*a));
            ++a;
        } else if (a == acc.end() || b->index < a->index) {
            out.push_back({b->index, c * b->value});
            ++b;
        } else {
            Scalar s = a->value + c * b->value;
            if (s != 0)
                out.push_back({a->index, std::move(s)});
            ++a;
            ++b;
        }
    }
    acc = std::move(out);
}

SparseVector scaled(const SparseVector& v, const Scalar& c)
{
    if (c == 0)
        return {};
    SparseVector out;
    out.reserve(v.size());
    for (const auto& e : v)
        out.push_back({e.index, e.value * c});
    return out;
}

SparseVector normalized(std::vector<Entry> raw)
{
    std::sort(raw.begin(), raw.end(), [](const Entry& x, const Entry& y) { return x.index < y.index; });
    SparseVector out;
    for (auto& e : raw) {
        if (!out.empty() && out.back().index == e.index)
            out.back().value += e.value;
        else
            out.push_back(std::move(e));
    }
    std::erase_if(out, [](const Entry& e) { return e.value == 0; });
    return out;
}

SparseMap::SparseMap(std::size_t cod_dim, std::size_t dom_dim) : cod_(cod_dim), cols_(dom_dim) {}

SparseMap SparseMap::identity(std::size_t n)
{
    return scalar(n, 1);
}

SparseMap SparseMap::scalar(std::size_t n, const Scalar& c)
{
    SparseMap m(n, n);
    if (c != 0)
        for (std::size_t j = 0; j < n; ++j)
            m.cols_[j].push_back({j, c});
    return m;
}

SparseMap SparseMap::from_columns(std::size_t cod_dim, std::vector<SparseVector> columns)
{
    SparseMap m(cod_dim, 0);
    for (const auto& col : columns)
        for (const auto& e : col)
            if (e.index >= cod_dim)
                throw DimensionError("from_columns: row index out of range");
    m.cols_ = std::move(columns);
    return m;
}

SparseMap SparseMap::from_triples(std::size_t cod_dim, std::size_t dom_dim,
                                  const std::vector<Triple>& triples)
{
    std::vector<std::vector<Entry>> raw(dom_dim);
    for (const auto& t : triples) {
        if (t.row >= cod_dim || t.col >= dom_dim)
            throw DimensionError("from_triples: index out of range");
        raw[t.col].push_back({t.row, t.value});
    }
    SparseMap m(cod_dim, dom_dim);
    for (std::size_t j = 0; j < dom_dim; ++j)
        m.cols_[j] = normalized(std::move(raw[j]));
    return m;
}

Scalar SparseMap::at(std::size_t row, std::size_t col) const
{
    return coefficient(cols_.at(col), row);
}

std::size_t SparseMap::nnz() const
{
    std::size_t n = 0;
    for (const auto& c : cols_)
        n += c.size();
    return n;
}

bool SparseMap::is_zero() const
{
    return std::all_of(cols_.begin(), cols_.end(), [](const SparseVector& c) { return c.empty(); });
}

std::vector<Triple> SparseMap::triples() const
{
    std::vector<Triple> out;
    out.reserve(nnz());
    for (std::size_t j = 0; j < cols_.size(); ++j)
        for (const auto& e : cols_[j])
            out.push_back({e.index, j, e.value});
    return out;
}

std::vector<SparseVector> SparseMap::rows() const
{
    std::vector<SparseVector> r(cod_);
    for (std::size_t j = 0; j < cols_.size(); ++j)
        for (const auto& e : cols_[j])
            r[e.index].push_back({j, e.value});
    return r;
}

SparseMap SparseMap::transpose() const
{
    SparseMap t(cols_.size(), cod_);
    t.cols_ = rows();
    return t;
}

SparseMap SparseMap::scaled(const Scalar& c) const
{
    SparseMap m(cod_, cols_.size());
    for (std::size_t j = 0; j < cols_.size(); ++j)
        m.cols_[j] = dkc::scaled(cols_[j], c);
    return m;
}

SparseVector SparseMap::apply(const SparseVector& v) const
{
    SparseVector acc;
    for (const auto& e : v) {
        if (e.index >= cols_.size())
            throw DimensionError("apply: vector index out of range");
        add_scaled(acc, e.value, cols_[e.index]);
    }
    return acc;
}

SparseMap operator+(const SparseMap& a, const SparseMap& b)
{
    if (a.cod_ != b.cod_ || a.dom_dim() != b.dom_dim())
        throw DimensionError("operator+: shape mismatch");
    SparseMap m = a;
    for (std::size_t j = 0; j < b.dom_dim(); ++j)
        add_scaled(m.cols_[j], 1, b.cols_[j]);
    return m;
}

SparseMap operator-(const SparseMap& a, const SparseMap& b)
{
    if (a.cod_ != b.cod_ || a.dom_dim() != b.dom_dim())
        throw DimensionError("operator-: shape mismatch");
    SparseMap m = a;
    for (std::size_t j = 0; j < b.dom_dim(); ++j)
        add_scaled(m.cols_[j], -1, b.cols_[j]);
    return m;
}

bool operator==(const SparseMap& a, const SparseMap& b)
{
    return a.cod_ == b.cod_ && a.cols_ == b.cols_;
}

SparseMap compose(const SparseMap& a, const SparseMap& b)
{
    if (a.dom_dim() != b.cod_dim())
        throw DimensionError("compose: inner dimensions " + std::to_string(a.dom_dim()) + " and " +
                             std::to_string(b.cod_dim()) + " differ");
    std::vector<Scalar> scratch(a.cod_dim());
    std::vector<char> touched(a.cod_dim(), 0);
    std::vector<std::size_t> rows;
    std::vector<SparseVector> cols(b.dom_dim());
    for (std::size_t j = 0; j < b.dom_dim(); ++j) {
        rows.clear();
        for (const auto& eb : b.column(j)) {
            for (const auto& ea : a.column(eb.index)) {
                if (!touched[ea.index]) {
                    touched[ea.index] = 1;
                    rows.push_back(ea.index);
                    scratch[ea.index] = ea.value * eb.value;
                } else {
                    scratch[ea.index] += ea.value * eb.value;
                }
            }
        }
        std::sort(rows.begin(), rows.end());
        SparseVector& col = cols[j];
        for (std::size_t r : rows) {
            if (scratch[r] != 0)
                col.push_back({r, scratch[r]});
            touched[r] = 0;
        }
    }
    return SparseMap::from_columns(a.cod_dim(), std::move(cols));
}

SparseMap kron(const SparseMap& a, const SparseMap& b)
{
    const std::size_t br = b.cod_dim();
    const std::size_t bc = b.dom_dim();
    std::vector<SparseVector> cols(a.dom_dim() * bc);
    for (std::size_t ja = 0; ja < a.dom_dim(); ++ja)
        for (std::size_t jb = 0; jb < bc; ++jb) {
            SparseVector& col = cols[ja * bc + jb];
            for (const auto& ea : a.column(ja))
                for (const auto& eb : b.column(jb))
                    col.push_back({ea.index * br + eb.index, ea.value * eb.value});
        }
    return SparseMap::from_columns(a.cod_dim() * br, std::move(cols));
}

void write_triples(std::ostream& out, const SparseMap& m)
{
    out << "sparse-map " << m.cod_dim() << ' ' << m.dom_dim() << ' ' << m.nnz() << '\n';
    for (std::size_t j = 0; j < m.dom_dim(); ++j)
        for (const auto& e : m.column(j))
            out << e.index << ' ' << j << ' ' << e.value.get_num().get_str() << ' '
                << e.value.get_den().get_str() << '\n';
}

SparseMap read_triples(std::istream& in)
{
    std::string tag;
    std::size_t cod = 0, dom = 0, nnz = 0;
    if (!(in >> tag >> cod >> dom >> nnz) || tag != "sparse-map")
        throw Error("read_triples: missing 'sparse-map' header");
    std::vector<Triple> triples;
    triples.reserve(nnz);
    for (std::size_t k = 0; k < nnz; ++k) {
        std::size_t r = 0, c = 0;
        std::string num, den;
        if (!(in >> r >> c >> num >> den))
            throw Error("read_triples: truncated entry list");
        triples.push_back({r, c, parse_scalar(num + "/" + den)});
    }
    return SparseMap::from_triples(cod, dom, triples);
}

}  // namespace dkc
