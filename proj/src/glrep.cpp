#include "dkc/glrep.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace dkc {

namespace {

Parity letter_parity1(int letter, int m)
{
    return letter > m ? Parity::Odd : Parity::Even;
}

std::size_t generator_slot(const Generator& g, int m, int n)
{
    const int N = m + n;
    if (g.i < 1 || g.j < 1 || g.i > N || g.j > N)
        throw Error("generator " + g.name() + " out of range for gl(" + std::to_string(m) + "|" +
                    std::to_string(n) + ")");
    return static_cast<std::size_t>((g.i - 1) * N + (g.j - 1));
}

std::size_t pivot_of(const SparseVector& v)
{
    return v.front().index;
}

/// Stacks maps with a common domain on top of each other.
SparseMap stack(const std::vector<const SparseMap*>& maps, std::size_t dom)
{
    std::vector<Triple> t;
    std::size_t offset = 0;
    for (const auto* m : maps) {
        for (auto tr : m->triples()) {
            tr.row += offset;
            t.push_back(std::move(tr));
        }
        offset += m->cod_dim();
    }
    return SparseMap::from_triples(offset, dom, t);
}

void require_homogeneous(const Subspace& w, const std::vector<Weight>& weights, const std::string& who)
{
    for (const auto& v : w.basis())
        for (const auto& e : v)
            if (weights[e.index] != weights[pivot_of(v)])
                throw Error(who + ": carrier basis is not made of weight vectors");
}

/// Incremental echelon basis: add() returns true when the vector enlarges the span.
class Echelon {
public:
    bool add(const SparseVector& v)
    {
        std::map<std::size_t, Scalar> x;
        for (const auto& e : v)
            x.emplace(e.index, e.value);
        auto it = x.begin();
        while (it != x.end()) {
            auto hit = rows_.find(it->first);
            if (hit == rows_.end()) {
                ++it;
                continue;
            }
            const Scalar c = it->second;
            const std::size_t p = it->first;
            for (const auto& e : hit->second) {
                auto [pos, fresh] = x.emplace(e.index, -c * e.value);
                if (!fresh) {
                    pos->second -= c * e.value;
                    if (pos->second == 0)
                        x.erase(pos);
                }
            }
            it = x.lower_bound(p);
        }
        if (x.empty())
            return false;
        const Scalar lead = x.begin()->second;
        SparseVector r;
        for (const auto& [i, c] : x)
            r.push_back({i, c / lead});
        rows_.emplace(r.front().index, std::move(r));
        return true;
    }
    std::vector<SparseVector> vectors() const
    {
        std::vector<SparseVector> out;
        for (const auto& [p, r] : rows_)
            out.push_back(r);
        return out;
    }
    std::size_t size() const { return rows_.size(); }

private:
    std::map<std::size_t, SparseVector> rows_;
};

}  // namespace

Parity Generator::parity(int m) const
{
    return letter_parity1(i, m) + letter_parity1(j, m);
}

std::string Generator::name() const
{
    return "E" + std::to_string(i) + std::to_string(j);
}

std::vector<Generator> all_generators(int m, int n)
{
    std::vector<Generator> out;
    for (int i = 1; i <= m + n; ++i)
        for (int j = 1; j <= m + n; ++j)
            out.push_back({i, j});
    return out;
}

std::vector<Generator> raising_generators(int m, int n)
{
    std::vector<Generator> out;
    for (int i = 1; i < m + n; ++i)
        out.push_back({i, i + 1});
    return out;
}

SparseMap generator_matrix(const Generator& g, const TensorAmbient& ambient)
{
    std::vector<Triple> trip;
    if (ambient.factor_count() == 0)
        return SparseMap(1, 1);
    const auto& f0 = ambient.factor(0);
    const int m = f0.m;
    generator_slot(g, m, f0.n);
    const bool odd = g.parity(m) == Parity::Odd;
    const int i = g.i - 1, j = g.j - 1;
    for (std::size_t col = 0; col < ambient.dim(); ++col) {
        auto w = ambient.word(col);
        Parity before = Parity::Even;
        for (std::size_t t = 0; t < w.size(); ++t) {
            const auto& f = ambient.factor(t);
            const int sign = (odd && before == Parity::Odd) ? -1 : 1;
            before = before + f.parity(w[t]);
            int src = j, tgt = i, kappa = 1;
            if (f.dual) {
                src = i;
                tgt = j;
                kappa = (odd && f.parity(i) == Parity::Odd) ? 1 : -1;
            }
            if (w[t] != src)
                continue;
            auto u = w;
            u[t] = tgt;
            trip.push_back({ambient.index(u), col, Scalar(sign * kappa)});
        }
    }
    return SparseMap::from_triples(ambient.dim(), ambient.dim(), trip);
}

SparseMap generator_matrix(const Generator& g, const BlockSpace& space)
{
    generator_slot(g, space.m(), space.n());
    return block_generator(g.i - 1, g.j - 1, space);
}

SparseMap super_commutator(const SparseMap& a, Parity pa, const SparseMap& b, Parity pb)
{
    SparseMap ab = compose(a, b);
    SparseMap ba = compose(b, a);
    return sign_of(pa, pb) < 0 ? ab + ba : ab - ba;
}

GLModule::GLModule(std::string name, int m, int n, std::vector<Weight> weights, std::vector<Parity> parities,
                   std::vector<SparseMap> action)
    : name_(std::move(name)), m_(m), n_(n), weights_(std::move(weights)), parities_(std::move(parities)),
      action_(std::move(action))
{
    const auto N = static_cast<std::size_t>(m + n);
    if (action_.size() != N * N)
        throw DimensionError("GLModule: expected one action matrix per generator");
    if (parities_.size() != weights_.size())
        throw DimensionError("GLModule: weights and parities differ in length");
    for (const auto& a : action_)
        if (a.cod_dim() != dim() || a.dom_dim() != dim())
            throw DimensionError("GLModule: action matrix of the wrong size");
}

const SparseMap& GLModule::action(const Generator& g) const
{
    return action_[generator_slot(g, m_, n_)];
}

WeightTable GLModule::weight_table() const
{
    WeightTable t;
    for (std::size_t b = 0; b < dim(); ++b) {
        auto& slot = t[weights_[b]];
        (parities_[b] == Parity::Even ? slot.even : slot.odd) += 1;
    }
    return t;
}

GLModule module_of(const BlockSpace& space, const std::string& name)
{
    std::vector<SparseMap> act;
    for (const auto& g : all_generators(space.m(), space.n()))
        act.push_back(generator_matrix(g, space));
    GLModule mod(name.empty() ? space.name() : name, space.m(), space.n(), space.weights(), space.parities(),
                 std::move(act));
    mod.space = space;
    mod.carrier = Subspace::full(space.dim());
    return mod;
}

GLModule submodule(const BlockSpace& space, const Subspace& w, const std::string& name)
{
    if (w.ambient_dim() != space.dim())
        throw DimensionError("submodule: subspace ambient does not match " + space.name());
    const auto sw = space.weights();
    require_homogeneous(w, sw, "submodule " + name);
    std::vector<SparseMap> act;
    for (const auto& g : all_generators(space.m(), space.n())) {
        try {
            act.push_back(restrict(generator_matrix(g, space), w, w));
        } catch (const ContainmentError& e) {
            throw ContainmentError("submodule " + name + ": not stable under " + g.name(), e.dom_index(),
                                   e.witness());
        }
    }
    std::vector<Weight> weights;
    std::vector<Parity> parities;
    for (const auto& v : w.basis()) {
        weights.push_back(sw[pivot_of(v)]);
        parities.push_back(space.parity(pivot_of(v)));
    }
    GLModule mod(name, space.m(), space.n(), std::move(weights), std::move(parities), std::move(act));
    mod.space = space;
    mod.carrier = w;
    return mod;
}

GLModule subquotient(const BlockSpace& space, const Subspace& w, const Subspace& u, const std::string& name)
{
    if (!contains(w, u))
        throw Error("subquotient " + name + ": U is not contained in W");
    const auto sw = space.weights();
    require_homogeneous(w, sw, "subquotient " + name);
    require_homogeneous(u, sw, "subquotient " + name);
    std::vector<SparseVector> reduced;
    for (const auto& v : w.basis())
        if (auto r = u.reduce(v); !r.empty())
            reduced.push_back(std::move(r));
    const Subspace c = Subspace::span(space.dim(), reduced);
    std::vector<SparseMap> act;
    for (const auto& g : all_generators(space.m(), space.n())) {
        const SparseMap G = generator_matrix(g, space);
        for (std::size_t b = 0; b < u.dim(); ++b) {
            auto x = G.apply(u.basis()[b]);
            if (!u.contains(x))
                throw ContainmentError("subquotient " + name + ": U not stable under " + g.name(), b, x);
        }
        std::vector<SparseVector> cols;
        for (std::size_t b = 0; b < c.dim(); ++b) {
            auto x = G.apply(c.basis()[b]);
            if (!w.contains(x))
                throw ContainmentError("subquotient " + name + ": W not stable under " + g.name(), b, x);
            cols.push_back(*c.coordinates(u.reduce(x)));
        }
        act.push_back(SparseMap::from_columns(c.dim(), std::move(cols)));
    }
    std::vector<Weight> weights;
    std::vector<Parity> parities;
    for (const auto& v : c.basis()) {
        weights.push_back(sw[pivot_of(v)]);
        parities.push_back(space.parity(pivot_of(v)));
    }
    GLModule mod(name, space.m(), space.n(), std::move(weights), std::move(parities), std::move(act));
    mod.space = space;
    mod.carrier = w;
    mod.quotient_by = u;
    return mod;
}

std::vector<RelationFailure> relation_check(const GLModule& mod)
{
    const int m = mod.m();
    const auto gens = all_generators(m, mod.n());
    std::vector<RelationFailure> out;
    for (const auto& a : gens)
        for (const auto& b : gens) {
            SparseMap lhs = super_commutator(mod.action(a), a.parity(m), mod.action(b), b.parity(m));
            SparseMap rhs(mod.dim(), mod.dim());
            if (a.j == b.i)
                rhs = rhs + mod.action({a.i, b.j});
            if (b.j == a.i)
                rhs = rhs - mod.action({b.i, a.j}).scaled(sign_of(a.parity(m), b.parity(m)));
            if (!(lhs == rhs))
                out.push_back({a, b});
        }
    return out;
}

std::vector<EquivarianceFailure> equivariance_check(const SparseMap& f, const GLModule& dom, const GLModule& cod)
{
    if (f.dom_dim() != dom.dim() || f.cod_dim() != cod.dim())
        throw DimensionError("equivariance_check: map does not fit the modules");
    std::vector<EquivarianceFailure> out;
    for (const auto& g : all_generators(dom.m(), dom.n())) {
        SparseMap r = compose(cod.action(g), f) - compose(f, dom.action(g));
        if (!r.is_zero())
            out.push_back({g, std::move(r)});
    }
    return out;
}

Subspace submodule_closure(const std::vector<SparseVector>& vectors, const GLModule& mod)
{
    const auto gens = all_generators(mod.m(), mod.n());
    Echelon ech;
    std::vector<SparseVector> queue;
    for (const auto& v : vectors)
        if (ech.add(v))
            queue.push_back(v);
    while (!queue.empty()) {
        SparseVector v = std::move(queue.back());
        queue.pop_back();
        for (const auto& g : gens) {
            auto x = mod.action(g).apply(v);
            if (!x.empty() && ech.add(x))
                queue.push_back(std::move(x));
        }
        if (ech.size() == mod.dim())
            break;
    }
    return Subspace::span(mod.dim(), ech.vectors());
}

std::vector<int> weight_label(const Weight& eps, int m)
{
    std::vector<int> out(eps.begin(), eps.end());
    for (std::size_t t = static_cast<std::size_t>(m); t < out.size(); ++t)
        out[t] = -out[t];
    return out;
}

Weight weight_from_label(const std::vector<int>& label, int m)
{
    return weight_label(label, m);
}

std::string label_string(const std::vector<int>& label, int m)
{
    std::string s = "(";
    for (std::size_t t = 0; t < label.size(); ++t) {
        if (t > 0)
            s += static_cast<int>(t) == m ? "|" : ",";
        s += std::to_string(label[t]);
    }
    return s + ")";
}

bool dominates(const Weight& lambda, const Weight& mu)
{
    if (lambda.size() != mu.size())
        throw DimensionError("dominates: weights of different length");
    long partial = 0;
    for (std::size_t t = 0; t < lambda.size(); ++t) {
        partial += lambda[t] - mu[t];
        if (partial < 0)
            return false;
    }
    return partial == 0;
}

HighestWeightReport singular_vectors(const GLModule& mod)
{
    HighestWeightReport rep;
    std::vector<const SparseMap*> raising;
    const auto gens = raising_generators(mod.m(), mod.n());
    for (const auto& g : gens)
        raising.push_back(&mod.action(g));
    rep.singular = kernel(stack(raising, mod.dim()));
    rep.singular_dim = rep.singular.dim();
    const WeightTable table = dkc::weight_table(rep.singular, mod.weights(), mod.parities());
    for (const auto& [w, dims] : table) {
        if (dims.even)
            rep.singular_lines.push_back({w, Parity::Even, dims.even});
        if (dims.odd)
            rep.singular_lines.push_back({w, Parity::Odd, dims.odd});
    }
    std::vector<const SingularLine*> maximal;
    for (const auto& a : rep.singular_lines) {
        bool below = false;
        for (const auto& b : rep.singular_lines)
            if (b.weight != a.weight && dominates(b.weight, a.weight))
                below = true;
        if (!below)
            maximal.push_back(&a);
    }
    if (maximal.empty())
        return rep;
    rep.top_weight = maximal.front()->weight;
    rep.unique_top = maximal.size() == 1 && maximal.front()->multiplicity == 1;
    std::vector<SparseVector> top;
    for (const auto& v : rep.singular.basis())
        if (mod.weights()[pivot_of(v)] == rep.top_weight)
            top.push_back(v);
    rep.generates_all = submodule_closure(top, mod).dim() == mod.dim();
    return rep;
}

IrreducibilityVerdict irreducibility_check(const GLModule& mod, std::size_t max_dim)
{
    if (mod.dim() > max_dim)
        throw Error("irreducibility_check: " + mod.name() + " has dimension " + std::to_string(mod.dim()) +
                    " above the bound " + std::to_string(max_dim));
    IrreducibilityVerdict v;
    const auto rep = singular_vectors(mod);
    v.unique_singular_line = rep.singular_dim == 1;
    v.cyclic = rep.generates_all;
    v.dual_unique_singular_line = singular_vectors(dual_module(mod)).singular_dim == 1;
    return v;
}

GLModule dual_module(const GLModule& mod)
{
    const int m = mod.m();
    std::vector<SparseMap> act;
    for (const auto& g : all_generators(m, mod.n())) {
        const bool odd = g.parity(m) == Parity::Odd;
        std::vector<Triple> t;
        for (const auto& tr : mod.action(g).triples()) {
            // entry (a, b) of the dual is -(-1)^{p(E)p(b)} M(b, a)
            const std::size_t a = tr.col, b = tr.row;
            const int s = (odd && mod.parities()[b] == Parity::Odd) ? 1 : -1;
            t.push_back({a, b, tr.value * s});
        }
        act.push_back(SparseMap::from_triples(mod.dim(), mod.dim(), t));
    }
    std::vector<Weight> w;
    for (auto x : mod.weights()) {
        for (auto& c : x)
            c = -c;
        w.push_back(std::move(x));
    }
    GLModule out(mod.name() + "*", m, mod.n(), std::move(w), mod.parities(), std::move(act));
    out.twist = -mod.twist;
    return out;
}

GLModule tensor_module(const GLModule& a, const GLModule& b, std::size_t max_dim)
{
    if (a.m() != b.m() || a.n() != b.n())
        throw Error("tensor_module: modules over different algebras");
    if (a.dim() * b.dim() > max_dim)
        throw Error("tensor_module: dimension " + std::to_string(a.dim() * b.dim()) + " above the bound");
    const int m = a.m();
    std::vector<SparseMap> act;
    for (const auto& g : all_generators(m, a.n())) {
        std::vector<Triple> signs;
        for (std::size_t r = 0; r < a.dim(); ++r)
            signs.push_back({r, r, Scalar(sign_of(g.parity(m), a.parities()[r]))});
        SparseMap sa = SparseMap::from_triples(a.dim(), a.dim(), signs);
        act.push_back(kron(a.action(g), SparseMap::identity(b.dim())) + kron(sa, b.action(g)));
    }
    std::vector<Weight> w;
    std::vector<Parity> p;
    for (std::size_t r = 0; r < a.dim(); ++r)
        for (std::size_t s = 0; s < b.dim(); ++s) {
            Weight x = a.weights()[r];
            for (std::size_t t = 0; t < x.size(); ++t)
                x[t] += b.weights()[s][t];
            w.push_back(std::move(x));
            p.push_back(a.parities()[r] + b.parities()[s]);
        }
    GLModule out(a.name() + "." + b.name(), m, a.n(), std::move(w), std::move(p), std::move(act));
    out.twist = a.twist + b.twist;
    return out;
}

GLModule homology_line(const Alphabet& v)
{
    static std::mutex mu;
    static std::map<std::pair<int, int>, GLModule> cache;
    std::lock_guard lock(mu);
    if (auto it = cache.find({v.m, v.n}); it != cache.end())
        return it->second;
    if (v.m < 1 || v.n < 1)
        throw Error("homology_line: needs m, n >= 1");
    const Spot s = Spot::K(v.m, v.n);
    const BlockSpace space = spot_space(s, v);
    GLModule h = subquotient(space, kernel_of(DiffKind::D, s, v),
                             image_of(DiffKind::D, Spot::K(v.m - 1, v.n - 1), v), "H");
    if (h.dim() != 1)
        throw Error("homology_line: homology has dimension " + std::to_string(h.dim()));
    h.twist = 1;
    cache.emplace(std::pair{v.m, v.n}, h);
    return h;
}

GLModule berezinian_twist(const GLModule& mod, int t)
{
    if (t == 0)
        return mod;
    const Alphabet v{mod.m(), mod.n()};
    GLModule line = homology_line(v);
    if (t < 0)
        line = dual_module(line);
    GLModule out = mod;
    for (int s = 0; s < std::abs(t); ++s)
        out = tensor_module(out, line);
    out.set_name(mod.name() + ".Ber^" + std::to_string(t));
    out.space = mod.space;
    out.carrier = mod.carrier;
    out.quotient_by = mod.quotient_by;
    return out;
}

std::string Construction::name() const
{
    std::string s = kind + "(";
    for (std::size_t t = 0; t < params.size(); ++t)
        s += (t ? "," : "") + std::to_string(params[t]);
    return s + ")";
}

Construction parse_construction(const std::string& kind, const std::vector<int>& params)
{
    static const std::map<std::string, int> arity{{"H31", 0}, {"ImD", 2},  {"Mmp", 2},    {"Ysummand", 2},
                                                  {"Z1", 1},  {"Zk", 3},   {"Mfinal", 3}, {"Ilambda", -1}};
    auto it = arity.find(kind);
    if (it == arity.end())
        throw Error("unknown construction '" + kind + "'");
    if (it->second >= 0 && static_cast<int>(params.size()) != it->second)
        throw Error(kind + " takes " + std::to_string(it->second) + " parameters");
    if (kind == "Ilambda") {
        if (params.empty() || params[0] < 1)
            throw Error("Ilambda needs a nonempty partition");
        for (std::size_t t = 1; t < params.size(); ++t)
            if (params[t] != 1)
                throw Error("Ilambda: only hook shapes (a,1,...,1) are realized");
    }
    const bool positive = kind == "Mmp" || kind == "Ysummand" || kind == "Z1" || kind == "Mfinal";
    for (int p : params)
        if (p < (positive ? 1 : 0))
            throw Error(kind + ": parameter out of range");
    return {kind, params};
}

namespace {

GLModule image_module(int k, int l, const Alphabet& v, const std::string& name)
{
    return submodule(spot_space(Spot::K(k + 1, l + 1), v), image_of(DiffKind::D, Spot::K(k, l), v), name);
}

/// The Z summand of S_k · Im d_{l,m}; for k = 0 the image itself.
GLModule z_summand(int k, int l, int m, const Alphabet& v, const std::string& name)
{
    if (k == 0)
        return image_module(l, m, v, name);
    const Splitting sp = split_image(k, l, m, v);
    return submodule(sp.ambient, sp.summand_b, name);
}

}  // namespace

ConstructedModule construct(const Construction& c, const Alphabet& v)
{
    const Construction what = parse_construction(c.kind, c.params);
    const auto& p = what.params;
    const std::string name = what.name();
    auto build = [&]() -> GLModule {
        if (what.kind == "H31") {
            GLModule h = homology_line(v);
            h.set_name(name);
            return h;
        }
        if (what.kind == "ImD")
            return image_module(p[0], p[1], v, name);
        if (what.kind == "Mmp") {
            GLModule out = berezinian_twist(image_module(p[0] + 2, p[0] + p[1], v, name), p[0] - 1);
            out.set_name(name);
            return out;
        }
        if (what.kind == "Ysummand") {
            const Splitting sp = split_symmetric(p[0] - 1, p[1] - p[0], v);
            return submodule(sp.ambient, sp.summand_b, name);
        }
        if (what.kind == "Z1")
            return z_summand(1, 2, p[0] + 1, v, name);
        if (what.kind == "Zk")
            return z_summand(p[0], p[1], p[2], v, name);
        if (what.kind == "Mfinal") {
            // M(m,t,p) = Z_t inside S_t · Im d_{m+1, m+p-1}, twisted m-1 times.
            const int m = p[0], t = p[1], pp = p[2];
            GLModule out = berezinian_twist(z_summand(t, m + 1, m + pp - 1, v, name), m - 1);
            out.set_name(name);
            return out;
        }
        // Ilambda (a,1^b) = Ker P on S_{a-1} Λ_{b+1}.
        const int a = p[0];
        const int b = static_cast<int>(p.size()) - 1;
        const Spot s{a - 1, b + 1, 0};
        return submodule(spot_space(s, v), kerP_subspace(a - 1, b + 1, 0, v), name);
    };
    try {
        GLModule mod = build();
        HighestWeightReport hw = singular_vectors(mod);
        return {what, std::move(mod), std::move(hw)};
    } catch (const ContainmentError&) {
        throw;
    } catch (const Error& e) {
        throw Error("construct " + name + ": " + e.what());
    }
}

}  // namespace dkc
