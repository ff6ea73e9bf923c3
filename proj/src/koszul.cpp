#include "dkc/koszul.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

namespace dkc {

std::string Spot::name() const
{
    return "S" + std::to_string(i) + ".L" + std::to_string(k) + ".S" + std::to_string(l) + "*";
}

BlockSpace spot_space(const Spot& s, const Alphabet& v)
{
    if (!s.valid())
        throw Error("spot_space: negative index in " + s.name());
    return BlockSpace(v.m, v.n,
                      {{PowerKind::Sym, false, s.i}, {PowerKind::Alt, false, s.k}, {PowerKind::Sym, true, s.l}});
}

std::string to_string(DiffKind kind)
{
    switch (kind) {
    case DiffKind::D: return "d";
    case DiffKind::Del: return "del";
    case DiffKind::P: return "P";
    case DiffKind::Q: return "Q";
    }
    return "?";
}

DiffKind parse_diff_kind(const std::string& text)
{
    std::string t;
    for (char c : text)
        t += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (t == "d")
        return DiffKind::D;
    if (t == "del" || t == "partial")
        return DiffKind::Del;
    if (t == "p")
        return DiffKind::P;
    if (t == "q")
        return DiffKind::Q;
    throw Error("unknown differential '" + text + "' (expected d, del, P or Q)");
}

std::optional<Spot> target_spot(DiffKind kind, const Spot& s)
{
    Spot t = s;
    switch (kind) {
    case DiffKind::D: t = {s.i, s.k + 1, s.l + 1}; break;
    case DiffKind::Del: t = {s.i, s.k - 1, s.l - 1}; break;
    case DiffKind::P: t = {s.i - 1, s.k + 1, s.l}; break;
    case DiffKind::Q: t = {s.i + 1, s.k - 1, s.l}; break;
    }
    if (!s.valid() || !t.valid())
        return std::nullopt;
    return t;
}

namespace {

struct Term {
    Scalar coeff;
    Word first;
    Word second;
};
using PairKernel = std::function<void(const Word&, const Word&, std::vector<Term>&)>;

/// Map acting on blocks (pos, pos+1) by `f` and as the identity elsewhere. The
/// kernels are even, so spectator blocks contribute no sign.
SparseMap pair_map(const BlockSpace& dom, const BlockSpace& cod, std::size_t pos, const PairKernel& f)
{
    std::vector<SparseVector> cols(dom.dim());
    std::vector<Term> terms;
    for (std::size_t col = 0; col < dom.dim(); ++col) {
        auto loc = dom.locals(col);
        terms.clear();
        f(dom.table(pos).words()[loc[pos]], dom.table(pos + 1).words()[loc[pos + 1]], terms);
        std::vector<Entry> raw;
        for (auto& t : terms) {
            const auto a = cod.table(pos).find(t.first);
            const auto b = cod.table(pos + 1).find(t.second);
            if (a == MonomialTable::npos || b == MonomialTable::npos)
                throw Error("pair_map: produced a word outside the target basis");
            auto tl = loc;
            tl[pos] = a;
            tl[pos + 1] = b;
            raw.push_back({cod.index(tl), std::move(t.coeff)});
        }
        cols[col] = normalized(std::move(raw));
    }
    return SparseMap::from_columns(cod.dim(), std::move(cols));
}

int letter_sign(std::uint8_t c, int m)
{
    return c < m ? 1 : -1;
}

}  // namespace

SparseMap differential(DiffKind kind, const Spot& source, const Alphabet& v)
{
    auto target = target_spot(kind, source);
    if (!target)
        throw Error(to_string(kind) + " is not defined at " + source.name());
    const BlockSpace dom = spot_space(source, v);
    const BlockSpace cod = spot_space(*target, v);
    const int m = v.m;
    const int letters = v.m + v.n;
    switch (kind) {
    case DiffKind::D:
        return pair_map(dom, cod, 1, [&](const Word& a, const Word& s, std::vector<Term>& out) {
            for (int c = 0; c < letters; ++c) {
                auto x = attach_right(PowerKind::Alt, a, static_cast<std::uint8_t>(c), m);
                if (!x)
                    continue;
                auto y = attach_left(PowerKind::Sym, s, static_cast<std::uint8_t>(c), m);
                if (!y)
                    continue;
                out.push_back({x->coeff * y->coeff, std::move(x->word), std::move(y->word)});
            }
        });
    case DiffKind::Del:
        return pair_map(dom, cod, 1, [&](const Word& a, const Word& s, std::vector<Term>& out) {
            auto lasts = split_last(PowerKind::Alt, a, m);
            auto firsts = split_first(PowerKind::Sym, s, m);
            for (auto& x : lasts)
                for (auto& y : firsts)
                    if (x.letter == y.letter)
                        out.push_back({Scalar(x.sign * y.sign * letter_sign(x.letter, m)), x.rest, y.rest});
        });
    case DiffKind::P:
        return pair_map(dom, cod, 0, [&](const Word& s, const Word& a, std::vector<Term>& out) {
            for (auto& x : split_last(PowerKind::Sym, s, m)) {
                auto y = attach_left(PowerKind::Alt, a, x.letter, m);
                if (y)
                    out.push_back({y->coeff * x.sign, std::move(x.rest), std::move(y->word)});
            }
        });
    case DiffKind::Q:
        return pair_map(dom, cod, 0, [&](const Word& s, const Word& a, std::vector<Term>& out) {
            for (auto& y : split_first(PowerKind::Alt, a, m)) {
                auto x = attach_right(PowerKind::Sym, s, y.letter, m);
                if (x)
                    out.push_back({x->coeff * y.sign, std::move(x->word), std::move(y.rest)});
            }
        });
    }
    throw Error("differential: unknown kind");
}

namespace {

SparseMap spot_projector(const Spot& s, const Alphabet& v)
{
    const SuperSpace V{v.m, v.n, false};
    return kron(kron(projector(PowerKind::Sym, s.i, V), projector(PowerKind::Alt, s.k, V)),
                projector(PowerKind::Sym, s.l, V.dualized()));
}

}  // namespace

SparseMap literal_differential(DiffKind kind, const Spot& source, const Alphabet& v)
{
    auto target = target_spot(kind, source);
    if (!target)
        throw Error(to_string(kind) + " is not defined at " + source.name());
    const BlockSpace dom = spot_space(source, v);
    const BlockSpace cod = spot_space(*target, v);
    const TensorAmbient amb = dom.ambient();
    SparseMap raw;
    switch (kind) {
    case DiffKind::D: {
        const TensorAmbient out = cod.ambient();
        const auto split = static_cast<std::size_t>(source.i + source.k);
        std::vector<Triple> trip;
        for (std::size_t col = 0; col < amb.dim(); ++col) {
            auto w = amb.word(col);
            for (int c = 0; c < v.m + v.n; ++c) {
                std::vector<int> u(w.begin(), w.begin() + static_cast<long>(split));
                u.push_back(c);
                u.push_back(c);
                u.insert(u.end(), w.begin() + static_cast<long>(split), w.end());
                trip.push_back({out.index(u), col, 1});
            }
        }
        raw = SparseMap::from_triples(out.dim(), amb.dim(), trip);
        break;
    }
    case DiffKind::Del:
        raw = contraction_map(static_cast<std::size_t>(source.i + source.k - 1), amb);
        break;
    case DiffKind::P:
    case DiffKind::Q:
        raw = SparseMap::identity(amb.dim());
        break;
    }
    SparseMap full = compose(spot_projector(*target, v), raw);
    return restrict(full, dom.literal_realization(), cod.literal_realization());
}

ComposedOperator composed_operator(const std::vector<DiffKind>& word, const Spot& start, const Alphabet& v)
{
    Spot cur = start;
    SparseMap m = SparseMap::identity(spot_space(start, v).dim());
    for (auto kind : word) {
        auto next = target_spot(kind, cur);
        if (!next)
            throw Error("composed_operator: " + to_string(kind) + " does not chain at " + cur.name());
        m = compose(differential(kind, cur, v), m);
        cur = *next;
    }
    return {std::move(m), start, cur};
}

SparseMap dd_identity_residual(int k, int l, const Alphabet& v)
{
    const std::size_t dim = spot_space(Spot::K(k, l), v).dim();
    SparseMap res = SparseMap::scalar(dim, Scalar(-(l - k - v.n + v.m)));
    if (k >= 1 && l >= 1)
        res = res + compose(differential(DiffKind::D, Spot::K(k - 1, l - 1), v),
                            differential(DiffKind::Del, Spot::K(k, l), v))
                        .scaled(Scalar(l * k));
    res = res + compose(differential(DiffKind::Del, Spot::K(k + 1, l + 1), v),
                        differential(DiffKind::D, Spot::K(k, l), v))
                    .scaled(Scalar((l + 1) * (k + 1)));
    return res;
}

SparseMap pq_identity_residual(int p, int r, const Alphabet& v)
{
    const std::size_t dim = spot_space(Spot::L(p, r), v).dim();
    SparseMap res = SparseMap::scalar(dim, Scalar(-(p + r)));
    if (r >= 1)
        res = res + compose(differential(DiffKind::P, Spot::L(p + 1, r - 1), v),
                            differential(DiffKind::Q, Spot::L(p, r), v))
                        .scaled(Scalar(r * (p + 1)));
    if (p >= 1)
        res = res + compose(differential(DiffKind::Q, Spot::L(p - 1, r + 1), v),
                            differential(DiffKind::P, Spot::L(p, r), v))
                        .scaled(Scalar(p * (r + 1)));
    return res;
}

std::map<std::pair<int, int>, Scalar> calibrate_d(int max_k, int max_l, const Alphabet& v)
{
    std::map<std::pair<int, int>, Scalar> c;
    for (int k = 0; k <= max_k; ++k)
        for (int l = 0; l <= max_l; ++l) {
            const std::size_t dim = spot_space(Spot::K(k, l), v).dim();
            SparseMap rhs = SparseMap::scalar(dim, Scalar(l - k - v.n + v.m));
            if (k >= 1 && l >= 1)
                rhs = rhs - compose(differential(DiffKind::D, Spot::K(k - 1, l - 1), v),
                                    differential(DiffKind::Del, Spot::K(k, l), v))
                                .scaled(Scalar(l * k) * c.at({k - 1, l - 1}));
            SparseMap lhs = compose(differential(DiffKind::Del, Spot::K(k + 1, l + 1), v),
                                    differential(DiffKind::D, Spot::K(k, l), v))
                                .scaled(Scalar((l + 1) * (k + 1)));
            if (lhs.is_zero()) {
                // Any scalar fits when both sides vanish; keep the natural one.
                if (!rhs.is_zero())
                    throw CalibrationError("calibrate_d: ∂d vanishes at " + Spot::K(k, l).name(), rhs);
                c[{k, l}] = 1;
                continue;
            }
            Scalar factor = 0;
            for (const auto& t : lhs.triples()) {
                factor = rhs.at(t.row, t.col) / t.value;
                break;
            }
            SparseMap residual = lhs.scaled(factor) - rhs;
            if (!residual.is_zero())
                throw CalibrationError("calibrate_d: no scalar fits at " + Spot::K(k, l).name(), residual);
            c[{k, l}] = factor;
        }
    return c;
}

std::optional<SparseMap> commute_residual(Square sq, const Spot& c, const Alphabet& v)
{
    using enum DiffKind;
    if (sq == Square::PD) {
        if (c.i < 1)
            return std::nullopt;
        return compose(differential(P, {c.i, c.k + 1, c.l + 1}, v), differential(D, c, v)) -
               compose(differential(D, {c.i - 1, c.k + 1, c.l}, v), differential(P, c, v));
    }
    if (c.k < 2 || c.l < 1)
        return std::nullopt;
    return compose(differential(Q, {c.i, c.k - 1, c.l - 1}, v), differential(Del, c, v)) -
           compose(differential(Del, {c.i + 1, c.k - 1, c.l}, v), differential(Q, c, v));
}

namespace {

HomologyReport homology_at(const Spot& s, const std::optional<SparseMap>& incoming,
                           const std::optional<SparseMap>& outgoing, std::size_t dim)
{
    HomologyReport r;
    r.spot = s;
    r.dim_space = dim;
    Subspace ker = outgoing ? kernel(*outgoing) : Subspace::full(dim);
    Subspace im = incoming ? image(*incoming) : Subspace::zero(dim);
    if (!contains(ker, im))
        throw Error("homology: consecutive differentials do not compose to zero at " + s.name());
    r.dim_image = im.dim();
    r.dim_kernel = ker.dim();
    r.homology_dim = ker.dim() - im.dim();
    r.representative = complement_in(ker, im);
    return r;
}

}  // namespace

HomologyReport homology_K(int k, int l, const Alphabet& v)
{
    const Spot s = Spot::K(k, l);
    std::optional<SparseMap> in;
    if (k >= 1 && l >= 1)
        in = differential(DiffKind::D, Spot::K(k - 1, l - 1), v);
    return homology_at(s, in, differential(DiffKind::D, s, v), spot_space(s, v).dim());
}

HomologyReport homology_L(int p, int r, const Alphabet& v)
{
    const Spot s = Spot::L(p, r);
    std::optional<SparseMap> in, out;
    if (r >= 1)
        in = differential(DiffKind::P, Spot::L(p + 1, r - 1), v);
    if (p >= 1)
        out = differential(DiffKind::P, s, v);
    return homology_at(s, in, out, spot_space(s, v).dim());
}

namespace {

/// Extends a subspace of S_i Λ_k (an L spot) to S_i Λ_k S_tail* by tensoring
/// with the whole tail.
Subspace with_tail(const Subspace& head, int tail, const Alphabet& v)
{
    const std::size_t t = spot_space({0, 0, tail}, v).dim();
    std::vector<SparseVector> vecs;
    vecs.reserve(head.dim() * t);
    for (const auto& b : head.basis())
        for (std::size_t c = 0; c < t; ++c) {
            SparseVector w;
            w.reserve(b.size());
            for (const auto& e : b)
                w.push_back({e.index * t + c, e.value});
            vecs.push_back(std::move(w));
        }
    return Subspace::span(head.ambient_dim() * t, vecs);
}

}  // namespace

Subspace kerP_subspace(int i, int k, int tail, const Alphabet& v)
{
    if (i == 0)
        return Subspace::full(spot_space({0, k, tail}, v).dim());
    return with_tail(kernel(differential(DiffKind::P, Spot::L(i, k), v)), tail, v);
}

Subspace imP_subspace(int i, int k, int tail, const Alphabet& v)
{
    if (k == 0)
        return Subspace::zero(spot_space({i, 0, tail}, v).dim());
    return with_tail(image(differential(DiffKind::P, Spot::L(i + 1, k - 1), v)), tail, v);
}

Subspace image_of(DiffKind kind, const Spot& source, const Alphabet& v)
{
    return image(differential(kind, source, v));
}

Subspace kernel_of(DiffKind kind, const Spot& source, const Alphabet& v)
{
    return kernel(differential(kind, source, v));
}

std::vector<Scalar> SpectrumPrediction::set() const
{
    std::vector<Scalar> out;
    for (const auto& p : values)
        out.push_back(p.value);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

SpectrumPrediction dpqd_prediction(int i, int a)
{
    SpectrumPrediction p{"j=1..i+1", {}};
    for (int j = 1; j <= i + 1; ++j)
        p.values.push_back({j, Scalar((a + i + 3 - j) * j, (i + 1) * (a + i + 1))});
    for (auto& x : p.values)
        x.value.canonicalize();
    return p;
}

SpectrumPrediction dpqd_recursion_prediction(int i, int a)
{
    // ∂PQd = c_i id + e_i Qd∂P, and Qd∂P has the spectrum one level down.
    std::vector<Scalar> values;
    for (int s = 0; s <= i; ++s) {
        Scalar c = Scalar(a + s + 2, a + s + 1) - Scalar(s, s + 1);
        Scalar e = Scalar(s * (a + s), (s + 1) * (a + s + 1));
        c.canonicalize();
        e.canonicalize();
        for (auto& x : values)
            x = c + e * x;
        values.insert(values.begin(), c);
    }
    SpectrumPrediction p{"recursion from level i-1", {}};
    int j = 1;
    for (auto& x : values)
        p.values.push_back({j++, x});
    return p;
}

std::vector<SpectrumPrediction> pddq_predictions(int i, int k, int a)
{
    auto value = [&](int j) {
        Scalar s((a + k + 2 * i + 4 - j) * j, (i + 1) * (k + 1) * (k + 1) * (a + i + k + 2));
        s.canonicalize();
        return PredictedValue{j, s};
    };
    SpectrumPrediction listed{"j in {1..i+1, i+k+1}", {}};
    for (int j = 1; j <= i + 1; ++j)
        listed.values.push_back(value(j));
    if (i + k + 1 > i + 1)
        listed.values.push_back(value(i + k + 1));
    SpectrumPrediction range{"j=1..i+k+1", {}};
    for (int j = 1; j <= i + k + 1; ++j)
        range.values.push_back(value(j));
    return {listed, range};
}

namespace {

SpectrumMatch match_spectrum(const SparseMap& op, std::vector<SpectrumPrediction> predictions)
{
    SpectrumMatch r;
    r.dim = op.dom_dim();
    r.spectrum = rational_spectrum(op);
    r.invertible = !r.spectrum.contains(0);
    auto computed = r.spectrum.values();
    for (const auto& p : predictions)
        r.matches.push_back(p.set() == computed);
    r.predictions = std::move(predictions);
    return r;
}

}  // namespace

SparseMap dpqd_operator(int i, int a, const Alphabet& v)
{
    using enum DiffKind;
    return composed_operator({D, Q, P, Del}, {i, 0, a + i}, v).matrix;
}

SpectrumMatch dpqd_spectrum(int i, int a, const Alphabet& v)
{
    return match_spectrum(dpqd_operator(i, a, v), {dpqd_prediction(i, a), dpqd_recursion_prediction(i, a)});
}

SparseMap pddq_operator(int i, int k, int a, const Alphabet& v)
{
    using enum DiffKind;
    return composed_operator({Q, D, Del, P}, {i, k + 1, a + i + k + 1}, v).matrix;
}

SpectrumMatch pddq_spectrum(int i, int k, int a, const Alphabet& v)
{
    const Subspace ker = kerP_subspace(i, k + 1, a + i + k + 1, v);
    SparseMap restricted = restrict(pddq_operator(i, k, a, v), ker, ker);
    return match_spectrum(restricted, pddq_predictions(i, k, a));
}

SparseMap invert_or_throw(const SparseMap& m, const std::string& what)
{
    if (!m.is_square() || rank(m) != m.dom_dim())
        throw Error(what + ": operator is not invertible");
    return inverse(m);
}

namespace {

void finish(Splitting& s)
{
    Subspace meet = intersect(s.summand_a, s.summand_b);
    s.intersection_dim = meet.dim();
    s.direct = meet.dim() == 0 && s.summand_a.dim() + s.summand_b.dim() == s.whole.dim() &&
               contains(s.whole, s.summand_a) && contains(s.whole, s.summand_b);
}

}  // namespace

Splitting split_K(int k, int l, const Alphabet& v)
{
    const Spot s = Spot::K(k, l);
    BlockSpace amb = spot_space(s, v);
    Subspace a = (k >= 1 && l >= 1) ? image_of(DiffKind::D, Spot::K(k - 1, l - 1), v) : Subspace::zero(amb.dim());
    Subspace b = image_of(DiffKind::Del, Spot::K(k + 1, l + 1), v);
    Splitting out{"K(" + std::to_string(k) + "," + std::to_string(l) + ")", amb, a, b, false,
                  Subspace::full(amb.dim()), 0};
    finish(out);
    return out;
}

Splitting split_symmetric(int i, int a, const Alphabet& v)
{
    using enum DiffKind;
    const Spot small{i, 0, a + i};
    const Spot big{i + 1, 0, a + i + 1};
    SparseMap embed = composed_operator({D, Q}, small, v).matrix;
    SparseMap retract = composed_operator({P, Del}, big, v).matrix;
    invert_or_throw(compose(retract, embed), "split_symmetric");
    BlockSpace amb = spot_space(big, v);
    Splitting out{"Y(" + std::to_string(i + 1) + "," + std::to_string(a + i + 1) + ")", amb, image(embed),
                  kernel(retract), false, Subspace::full(amb.dim()), 0};
    finish(out);
    return out;
}

Splitting split_image(int s, int t, int u, const Alphabet& v)
{
    using enum DiffKind;
    if (s < 1)
        throw Error("split_image: need at least one symmetric factor");
    const Spot lower{s - 1, t + 1, u};
    const Spot base{s, t, u};
    const Spot top{s, t + 1, u + 1};
    Subspace kp = kerP_subspace(s - 1, t + 1, u, v);
    SparseMap embed = compose(composed_operator({Q, D}, lower, v).matrix, kp.inclusion());
    SparseMap retract = composed_operator({Del, P}, top, v).matrix;
    SparseMap loop = compose(retract, embed);
    // retract ∘ embed lands in Ker P; read it in the basis of kp.
    std::vector<SparseVector> cols;
    for (const auto& c : loop.columns()) {
        auto coords = kp.coordinates(c);
        if (!coords)
            throw ContainmentError("split_image: P∂ leaves Ker P", cols.size(), c);
        cols.push_back(std::move(*coords));
    }
    invert_or_throw(SparseMap::from_columns(kp.dim(), std::move(cols)), "split_image");
    BlockSpace amb = spot_space(top, v);
    Subspace w = image(differential(D, base, v));
    Splitting out{"Z(" + std::to_string(s) + "," + std::to_string(t) + "," + std::to_string(u) + ")", amb,
                  image(embed), intersect(w, kernel(retract)), false, w, 0};
    finish(out);
    return out;
}

}  // namespace dkc
