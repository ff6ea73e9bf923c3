#include "dkc/superspace.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace dkc {

Weight SuperSpace::weight(int letter) const
{
    Weight w(static_cast<std::size_t>(dim()), 0);
    w[static_cast<std::size_t>(letter)] = dual ? -1 : 1;
    return w;
}

std::string SuperSpace::label(int letter) const
{
    return (dual ? "xi" : "x") + std::to_string(letter + 1);
}

SuperSpace standard_space(int m, int n)
{
    if (m < 0 || n < 0 || m + n < 1)
        throw Error("standard_space: need m, n >= 0 and m + n >= 1");
    if (m + n > 8)
        throw Error("standard_space: at most 8 basis vectors are supported");
    return {m, n, false};
}

TensorAmbient::TensorAmbient(std::vector<SuperSpace> factors) : factors_(std::move(factors))
{
    for (const auto& f : factors_)
        dim_ *= static_cast<std::size_t>(f.dim());
}

TensorAmbient TensorAmbient::power(const SuperSpace& v, int degree)
{
    return TensorAmbient(std::vector<SuperSpace>(static_cast<std::size_t>(degree), v));
}

std::vector<int> TensorAmbient::word(std::size_t index) const
{
    std::vector<int> w(factors_.size());
    for (std::size_t t = factors_.size(); t-- > 0;) {
        const auto d = static_cast<std::size_t>(factors_[t].dim());
        w[t] = static_cast<int>(index % d);
        index /= d;
    }
    return w;
}

std::size_t TensorAmbient::index(const std::vector<int>& word) const
{
    std::size_t idx = 0;
    for (std::size_t t = 0; t < factors_.size(); ++t)
        idx = idx * static_cast<std::size_t>(factors_[t].dim()) + static_cast<std::size_t>(word[t]);
    return idx;
}

Parity TensorAmbient::parity(std::size_t index) const
{
    auto w = word(index);
    Parity p = Parity::Even;
    for (std::size_t t = 0; t < w.size(); ++t)
        p = p + factors_[t].parity(w[t]);
    return p;
}

Weight TensorAmbient::weight(std::size_t index) const
{
    auto w = word(index);
    Weight total(factors_.empty() ? 0 : static_cast<std::size_t>(factors_[0].dim()), 0);
    for (std::size_t t = 0; t < w.size(); ++t) {
        auto lw = factors_[t].weight(w[t]);
        for (std::size_t i = 0; i < total.size(); ++i)
            total[i] += lw[i];
    }
    return total;
}

namespace {

void require_homogeneous(const TensorAmbient& ambient, const char* who)
{
    for (const auto& f : ambient.factors())
        if (!(f == ambient.factor(0)))
            throw Error(std::string(who) + ": tensor factors differ");
}

}  // namespace

SparseMap transposition_matrix(int j, const TensorAmbient& ambient)
{
    const int N = static_cast<int>(ambient.factor_count());
    if (j < 1 || j >= N)
        throw Error("transposition_matrix: index " + std::to_string(j) + " out of range for N = " +
                    std::to_string(N));
    require_homogeneous(ambient, "transposition_matrix");
    const auto& v = ambient.factor(0);
    std::vector<Triple> t;
    for (std::size_t col = 0; col < ambient.dim(); ++col) {
        auto w = ambient.word(col);
        const auto a = static_cast<std::size_t>(j - 1);
        int sign = sign_of(v.parity(w[a]), v.parity(w[a + 1]));
        std::swap(w[a], w[a + 1]);
        t.push_back({ambient.index(w), col, sign});
    }
    return SparseMap::from_triples(ambient.dim(), ambient.dim(), t);
}

SparseMap permutation_matrix(const std::vector<int>& reduced_word, const TensorAmbient& ambient)
{
    SparseMap m = SparseMap::identity(ambient.dim());
    for (int j : reduced_word)
        m = compose(transposition_matrix(j, ambient), m);
    return m;
}

SparseMap projector(PowerKind kind, int degree, const SuperSpace& over)
{
    if (degree < 0)
        throw Error("projector: negative degree");
    TensorAmbient amb = TensorAmbient::power(over, degree);
    const auto N = static_cast<std::size_t>(degree);
    std::vector<std::size_t> perm(N);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<std::size_t>> perms;
    do {
        perms.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    Integer fact = 1;
    for (std::size_t i = 2; i <= N; ++i)
        fact *= static_cast<unsigned long>(i);

    std::vector<SparseVector> cols(amb.dim());
    std::unordered_map<std::size_t, long> acc;
    std::vector<int> image(N);
    for (std::size_t col = 0; col < amb.dim(); ++col) {
        acc.clear();
        const auto u = amb.word(col);
        for (const auto& p : perms) {
            int sign = 1;
            for (std::size_t s = 0; s < N; ++s) {
                image[s] = u[p[s]];
                for (std::size_t t = s + 1; t < N; ++t)
                    if (p[s] > p[t])
                        sign *= swap_sign(kind, over.parity(u[p[s]]), over.parity(u[p[t]]));
            }
            acc[amb.index(image)] += sign;
        }
        std::vector<Entry> raw;
        for (const auto& [row, c] : acc)
            if (c != 0)
                raw.push_back({row, Scalar(Integer(c), fact)});
        for (auto& e : raw)
            e.value.canonicalize();
        cols[col] = normalized(std::move(raw));
    }
    return SparseMap::from_columns(amb.dim(), std::move(cols));
}

PowerBasis power_basis(PowerKind kind, int degree, const SuperSpace& over)
{
    TensorAmbient amb = TensorAmbient::power(over, degree);
    PowerBasis pb{kind, degree, over, image(projector(kind, degree, over)), {}, {}, {}};
    for (const auto& v : pb.realization.basis()) {
        const std::size_t pivot = v.front().index;
        auto w = amb.word(pivot);
        std::string label;
        for (std::size_t t = 0; t < w.size(); ++t)
            label += (t ? "." : "") + over.label(w[t]);
        pb.labels.push_back(label.empty() ? "1" : label);
        pb.weights.push_back(degree == 0 ? Weight(static_cast<std::size_t>(over.dim()), 0) : amb.weight(pivot));
        pb.parities.push_back(amb.parity(pivot));
    }
    return pb;
}

namespace {

std::size_t binom(long n, long k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r.get_ui();
}

/// Number of degree-d monomials in k commuting variables.
std::size_t multisets(long k, long d)
{
    if (d < 0)
        return 0;
    if (k == 0)
        return d == 0 ? 1 : 0;
    return binom(d + k - 1, k - 1);
}

}  // namespace

std::size_t power_dimension(PowerKind kind, int degree, int m, int n)
{
    // Exterior: distinct even letters, repeatable odd letters; symmetric: the reverse.
    const int unique = kind == PowerKind::Alt ? m : n;
    const int repeat = kind == PowerKind::Alt ? n : m;
    std::size_t total = 0;
    for (int j = 0; j <= std::min(unique, degree); ++j)
        total += binom(unique, j) * multisets(repeat, degree - j);
    return total;
}

SparseMap contraction_map(std::size_t position, const TensorAmbient& ambient)
{
    if (position + 1 >= ambient.factor_count())
        throw Error("contraction_map: position out of range");
    const auto& a = ambient.factor(position);
    const auto& b = ambient.factor(position + 1);
    if (a.dual == b.dual || a.m != b.m || a.n != b.n)
        throw Error("contraction_map: factors at position are not a V, V* pair");
    std::vector<SuperSpace> rest;
    for (std::size_t t = 0; t < ambient.factor_count(); ++t)
        if (t != position && t != position + 1)
            rest.push_back(ambient.factor(t));
    TensorAmbient target(rest);
    std::vector<Triple> trip;
    for (std::size_t col = 0; col < ambient.dim(); ++col) {
        auto w = ambient.word(col);
        if (w[position] != w[position + 1])
            continue;
        int sign = 1;
        if (!a.dual)  // τ(a ⊗ φ) = (-1)^{â φ̂} φ ⊗ a
            sign = sign_of(a.parity(w[position]), b.parity(w[position + 1]));
        std::vector<int> r;
        for (std::size_t t = 0; t < w.size(); ++t)
            if (t != position && t != position + 1)
                r.push_back(w[t]);
        trip.push_back({target.index(r), col, sign});
    }
    return SparseMap::from_triples(target.dim(), ambient.dim(), trip);
}

WeightTable weight_table(const Subspace& sub, const std::vector<Weight>& coord_weights,
                         const std::vector<Parity>& coord_parities)
{
    if (coord_weights.size() != sub.ambient_dim() || coord_parities.size() != sub.ambient_dim())
        throw DimensionError("weight_table: coordinate labels do not match the ambient");
    std::map<std::pair<Weight, Parity>, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < coord_weights.size(); ++i)
        groups[{coord_weights[i], coord_parities[i]}].push_back(i);
    std::vector<int> group_of(sub.ambient_dim());
    std::vector<std::pair<Weight, Parity>> keys;
    for (const auto& [key, idx] : groups) {
        for (auto i : idx)
            group_of[i] = static_cast<int>(keys.size());
        keys.push_back(key);
    }
    // Project every basis vector onto each group and take ranks.
    std::vector<std::vector<SparseVector>> parts(keys.size());
    for (const auto& v : sub.basis()) {
        std::map<int, SparseVector> split;
        for (const auto& e : v)
            split[group_of[e.index]].push_back(e);
        for (auto& [g, part] : split)
            parts[static_cast<std::size_t>(g)].push_back(std::move(part));
    }
    WeightTable table;
    for (std::size_t g = 0; g < keys.size(); ++g) {
        if (parts[g].empty())
            continue;
        std::size_t d = Subspace::span(sub.ambient_dim(), parts[g]).dim();
        auto& slot = table[keys[g].first];
        (keys[g].second == Parity::Even ? slot.even : slot.odd) += d;
    }
    return table;
}

WeightTable weight_table(const Subspace& sub, const TensorAmbient& ambient)
{
    std::vector<Weight> w;
    std::vector<Parity> p;
    for (std::size_t i = 0; i < ambient.dim(); ++i) {
        w.push_back(ambient.factor_count() ? ambient.weight(i) : Weight{});
        p.push_back(ambient.parity(i));
    }
    return weight_table(sub, w, p);
}

}  // namespace dkc
