#include "dkc/blocks.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <tuple>

namespace dkc {

namespace {

Parity letter_parity(int letter, int m)
{
    return letter < m ? Parity::Even : Parity::Odd;
}

std::size_t multiplicity(const Word& w, std::uint8_t letter)
{
    return static_cast<std::size_t>(std::count(w.begin(), w.end(), letter));
}

Word without_one(const Word& w, std::uint8_t letter)
{
    Word r = w;
    r.erase(std::find(r.begin(), r.end(), letter));
    return r;
}

Word with_one(const Word& w, std::uint8_t letter)
{
    Word r = w;
    r.insert(std::upper_bound(r.begin(), r.end(), letter), letter);
    return r;
}

void extend(PowerKind kind, int degree, int letters, int m, Word& cur, std::vector<Word>& out)
{
    if (static_cast<int>(cur.size()) == degree) {
        out.push_back(cur);
        return;
    }
    const int from = cur.empty() ? 0 : cur.back();
    for (int c = from; c < letters; ++c) {
        const bool repeat = !cur.empty() && cur.back() == c;
        // Exterior powers cannot repeat even letters, symmetric ones odd letters.
        const bool unique = kind == PowerKind::Alt ? c < m : c >= m;
        if (repeat && unique)
            continue;
        cur.push_back(static_cast<std::uint8_t>(c));
        extend(kind, degree, letters, m, cur, out);
        cur.pop_back();
    }
}

}  // namespace

Parity word_parity(const Word& w, int m)
{
    Parity p = Parity::Even;
    for (auto c : w)
        p = p + letter_parity(c, m);
    return p;
}

bool is_monomial(PowerKind kind, const Word& sorted, int m)
{
    for (std::size_t t = 1; t < sorted.size(); ++t) {
        if (sorted[t] != sorted[t - 1])
            continue;
        const bool even = sorted[t] < m;
        if ((kind == PowerKind::Alt) == even)
            return false;
    }
    return true;
}

int sort_sign(PowerKind kind, const Word& word, int m)
{
    Word u = word;
    int sign = 1;
    for (std::size_t i = 1; i < u.size(); ++i)
        for (std::size_t j = i; j > 0 && u[j - 1] > u[j]; --j) {
            sign *= swap_sign(kind, letter_parity(u[j - 1], m), letter_parity(u[j], m));
            std::swap(u[j - 1], u[j]);
        }
    return is_monomial(kind, u, m) ? sign : 0;
}

std::vector<Word> monomials(PowerKind kind, int degree, int m, int n)
{
    if (degree < 0)
        throw Error("monomials: negative degree");
    std::vector<Word> out;
    Word cur;
    extend(kind, degree, m + n, m, cur, out);
    return out;
}

std::vector<Split> split_last(PowerKind kind, const Word& w, int m)
{
    std::vector<Split> out;
    for (std::size_t t = 0; t < w.size(); ++t) {
        if (t > 0 && w[t] == w[t - 1])
            continue;
        Word rest = without_one(w, w[t]);
        Word probe = rest;
        probe.push_back(w[t]);
        out.push_back({sort_sign(kind, probe, m), w[t], std::move(rest)});
    }
    return out;
}

std::vector<Split> split_first(PowerKind kind, const Word& w, int m)
{
    std::vector<Split> out;
    for (std::size_t t = 0; t < w.size(); ++t) {
        if (t > 0 && w[t] == w[t - 1])
            continue;
        Word rest = without_one(w, w[t]);
        Word probe{w[t]};
        probe.insert(probe.end(), rest.begin(), rest.end());
        out.push_back({sort_sign(kind, probe, m), w[t], std::move(rest)});
    }
    return out;
}

std::optional<Attach> attach_right(PowerKind kind, const Word& w, std::uint8_t letter, int m)
{
    Word probe = w;
    probe.push_back(letter);
    const int s = sort_sign(kind, probe, m);
    if (s == 0)
        return std::nullopt;
    Word target = with_one(w, letter);
    Scalar c(static_cast<long>(multiplicity(target, letter)) * s, static_cast<long>(target.size()));
    c.canonicalize();
    return Attach{c, std::move(target)};
}

std::optional<Attach> attach_left(PowerKind kind, const Word& w, std::uint8_t letter, int m)
{
    Word probe{letter};
    probe.insert(probe.end(), w.begin(), w.end());
    const int s = sort_sign(kind, probe, m);
    if (s == 0)
        return std::nullopt;
    Word target = with_one(w, letter);
    Scalar c(static_cast<long>(multiplicity(target, letter)) * s, static_cast<long>(target.size()));
    c.canonicalize();
    return Attach{c, std::move(target)};
}

MonomialTable::MonomialTable(PowerKind kind, int degree, int m, int n)
    : letters_(m + n), degree_(degree), words_(monomials(kind, degree, m, n))
{
    sorted_keys_.reserve(words_.size());
    for (std::size_t i = 0; i < words_.size(); ++i)
        sorted_keys_.push_back({key(words_[i]), i});
    std::sort(sorted_keys_.begin(), sorted_keys_.end());
}

std::uint64_t MonomialTable::key(const Word& w) const
{
    // Multiplicity vector in base degree+1.
    std::uint64_t k = 0;
    const auto base = static_cast<std::uint64_t>(degree_ + 1);
    std::size_t t = 0;
    for (int c = 0; c < letters_; ++c) {
        std::uint64_t mult = 0;
        while (t < w.size() && w[t] == c) {
            ++mult;
            ++t;
        }
        k = k * base + mult;
    }
    return k;
}

std::size_t MonomialTable::find(const Word& w) const
{
    if (static_cast<int>(w.size()) != degree_)
        return npos;
    const auto k = key(w);
    auto it = std::lower_bound(sorted_keys_.begin(), sorted_keys_.end(), std::make_pair(k, std::size_t{0}));
    if (it == sorted_keys_.end() || it->first != k)
        return npos;
    return it->second;
}

std::shared_ptr<const MonomialTable> monomial_table(PowerKind kind, int degree, int m, int n)
{
    static std::mutex mutex;
    static std::map<std::tuple<int, int, int, int>, std::shared_ptr<const MonomialTable>> cache;
    const auto k = std::make_tuple(static_cast<int>(kind), degree, m, n);
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(k); it != cache.end())
            return it->second;
    }
    auto table = std::make_shared<const MonomialTable>(kind, degree, m, n);
    std::lock_guard lock(mutex);
    return cache.emplace(k, std::move(table)).first->second;
}

BlockSpace::BlockSpace(int m, int n, std::vector<Block> blocks) : m_(m), n_(n), blocks_(std::move(blocks))
{
    for (const auto& b : blocks_) {
        if (b.degree < 0)
            throw Error("BlockSpace: negative degree");
        tables_.push_back(monomial_table(b.kind, b.degree, m, n));
    }
    strides_.assign(blocks_.size(), 1);
    for (std::size_t b = blocks_.size(); b-- > 0;) {
        strides_[b] = dim_;
        dim_ *= tables_[b]->size();
    }
}

std::size_t BlockSpace::index(const std::vector<std::size_t>& locals) const
{
    std::size_t idx = 0;
    for (std::size_t b = 0; b < locals.size(); ++b)
        idx += locals[b] * strides_[b];
    return idx;
}

std::vector<std::size_t> BlockSpace::locals(std::size_t index) const
{
    std::vector<std::size_t> out(blocks_.size());
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        out[b] = index / strides_[b];
        index %= strides_[b];
    }
    return out;
}

Parity BlockSpace::parity(std::size_t index) const
{
    auto loc = locals(index);
    Parity p = Parity::Even;
    for (std::size_t b = 0; b < blocks_.size(); ++b)
        p = p + word_parity(tables_[b]->words()[loc[b]], m_);
    return p;
}

Weight BlockSpace::weight(std::size_t index) const
{
    auto loc = locals(index);
    Weight w(static_cast<std::size_t>(m_ + n_), 0);
    for (std::size_t b = 0; b < blocks_.size(); ++b)
        for (auto c : tables_[b]->words()[loc[b]])
            w[c] += blocks_[b].dual ? -1 : 1;
    return w;
}

std::string BlockSpace::label(std::size_t index) const
{
    auto loc = locals(index);
    std::string out;
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        if (b)
            out += " | ";
        const auto& w = tables_[b]->words()[loc[b]];
        if (w.empty())
            out += "1";
        for (std::size_t t = 0; t < w.size(); ++t)
            out += (t ? "." : "") + std::string(blocks_[b].dual ? "xi" : "x") + std::to_string(w[t] + 1);
    }
    return out;
}

std::vector<Weight> BlockSpace::weights() const
{
    std::vector<Weight> out;
    out.reserve(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        out.push_back(weight(i));
    return out;
}

std::vector<Parity> BlockSpace::parities() const
{
    std::vector<Parity> out;
    out.reserve(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        out.push_back(parity(i));
    return out;
}

TensorAmbient BlockSpace::ambient() const
{
    std::vector<SuperSpace> factors;
    for (const auto& b : blocks_)
        for (int t = 0; t < b.degree; ++t)
            factors.push_back({m_, n_, b.dual});
    return TensorAmbient(std::move(factors));
}

Subspace BlockSpace::literal_realization() const
{
    SparseMap incl = SparseMap::identity(1);
    for (const auto& b : blocks_) {
        auto pb = power_basis(b.kind, b.degree, SuperSpace{m_, n_, b.dual});
        incl = kron(incl, pb.realization.inclusion());
    }
    return Subspace::span(incl.cod_dim(), incl.columns());
}

std::string BlockSpace::name() const
{
    std::string out;
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        if (b)
            out += ".";
        out += (blocks_[b].kind == PowerKind::Sym ? "S" : "L") + std::to_string(blocks_[b].degree) +
               (blocks_[b].dual ? "*" : "");
    }
    return out;
}

SparseMap block_generator(int i, int j, const BlockSpace& space)
{
    const int m = space.m();
    if (i < 0 || j < 0 || i >= m + space.n() || j >= m + space.n())
        throw Error("block_generator: generator index out of range");
    const Parity pe = letter_parity(i, m) + letter_parity(j, m);
    const bool odd = pe == Parity::Odd;
    std::vector<Triple> trip;
    for (std::size_t col = 0; col < space.dim(); ++col) {
        auto loc = space.locals(col);
        Parity before = Parity::Even;
        for (std::size_t b = 0; b < space.blocks().size(); ++b) {
            const auto& blk = space.blocks()[b];
            const auto& table = space.table(b);
            const Word& w = table.words()[loc[b]];
            // Letter src is replaced by tgt with factor kappa.
            int src = j, tgt = i, kappa = 1;
            if (blk.dual) {
                src = i;
                tgt = j;
                kappa = (odd && letter_parity(i, m) == Parity::Odd) ? 1 : -1;
            }
            const int block_sign = (odd && before == Parity::Odd) ? -1 : 1;
            before = before + word_parity(w, m);
            const auto s8 = static_cast<std::uint8_t>(src);
            const auto t8 = static_cast<std::uint8_t>(tgt);
            if (std::find(w.begin(), w.end(), s8) == w.end())
                continue;
            Word target = with_one(without_one(w, s8), t8);
            const std::size_t pos = table.find(target);
            if (pos == MonomialTable::npos)
                continue;
            long coef = 0;
            for (std::size_t t = 0; t < target.size(); ++t) {
                if (target[t] != t8)
                    continue;
                Word u = target;
                u[t] = s8;
                Parity prefix = Parity::Even;
                for (std::size_t s = 0; s < t; ++s)
                    prefix = prefix + letter_parity(u[s], m);
                const int inner = (odd && prefix == Parity::Odd) ? -1 : 1;
                coef += sort_sign(blk.kind, u, m) * inner;
            }
            if (coef == 0)
                continue;
            auto tloc = loc;
            tloc[b] = pos;
            trip.push_back({space.index(tloc), col, Scalar(coef * kappa * block_sign)});
        }
    }
    return SparseMap::from_triples(space.dim(), space.dim(), trip);
}

}  // namespace dkc
