#include "dkc/characters.hpp"

#include <algorithm>
#include <numeric>

namespace dkc {

namespace {

void require_same_ring(const LaurentPoly& a, const LaurentPoly& b)
{
    if (a.nvars() != b.nvars())
        throw DimensionError("Laurent polynomials over different numbers of variables");
}

Exponent add(const Exponent& a, const Exponent& b)
{
    Exponent out(a);
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] += b[i];
    return out;
}

Exponent sub(const Exponent& a, const Exponent& b)
{
    Exponent out(a);
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] -= b[i];
    return out;
}

}  // namespace

LaurentPoly LaurentPoly::constant(const Scalar& c, std::size_t nvars)
{
    LaurentPoly p(nvars);
    p.add_term(Exponent(nvars, 0), c);
    return p;
}

LaurentPoly LaurentPoly::monomial(const Exponent& e, const Scalar& c)
{
    LaurentPoly p(e.size());
    p.add_term(e, c);
    return p;
}

LaurentPoly LaurentPoly::variable(std::size_t i, std::size_t nvars)
{
    Exponent e(nvars, 0);
    e.at(i) = 1;
    return monomial(e);
}

Scalar LaurentPoly::coefficient(const Exponent& e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? Scalar(0) : it->second;
}

void LaurentPoly::add_term(const Exponent& e, const Scalar& c)
{
    if (e.size() != nvars_)
        throw DimensionError("LaurentPoly: exponent of the wrong length");
    if (c == 0)
        return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const
{
    return scaled(-1);
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b)
{
    require_same_ring(a, b);
    LaurentPoly out = a;
    for (const auto& [e, c] : b.terms_)
        out.add_term(e, c);
    return out;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b)
{
    require_same_ring(a, b);
    LaurentPoly out = a;
    for (const auto& [e, c] : b.terms_)
        out.add_term(e, -c);
    return out;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b)
{
    require_same_ring(a, b);
    LaurentPoly out(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            out.add_term(add(ea, eb), ca * cb);
    return out;
}

LaurentPoly LaurentPoly::scaled(const Scalar& c) const
{
    LaurentPoly out(nvars_);
    if (c == 0)
        return out;
    for (const auto& [e, v] : terms_)
        out.terms_.emplace(e, v * c);
    return out;
}

LaurentPoly LaurentPoly::pow(unsigned k) const
{
    LaurentPoly out = constant(1, nvars_);
    for (unsigned s = 0; s < k; ++s)
        out = out * *this;
    return out;
}

LaurentPoly LaurentPoly::shifted(const Exponent& e) const
{
    return map_exponents([&](const Exponent& x) { return add(x, e); });
}

LaurentPoly LaurentPoly::inverted() const
{
    return map_exponents([](const Exponent& x) {
        Exponent y(x);
        for (auto& v : y)
            v = -v;
        return y;
    });
}

LaurentPoly LaurentPoly::negated_variable(std::size_t i) const
{
    LaurentPoly out(nvars_);
    for (const auto& [e, c] : terms_)
        out.add_term(e, (e.at(i) % 2 != 0) ? -c : c);
    return out;
}

LaurentPoly LaurentPoly::swapped(std::size_t i, std::size_t j) const
{
    return map_exponents([&](const Exponent& x) {
        Exponent y(x);
        std::swap(y.at(i), y.at(j));
        return y;
    });
}

LaurentPoly LaurentPoly::map_exponents(const std::function<Exponent(const Exponent&)>& f) const
{
    LaurentPoly out(nvars_);
    for (const auto& [e, c] : terms_)
        out.add_term(f(e), c);
    return out;
}

std::string LaurentPoly::to_string(const std::vector<std::string>& names) const
{
    if (terms_.empty())
        return "0";
    if (names.size() < nvars_)
        throw Error("LaurentPoly::to_string: not enough variable names");
    std::string s;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        std::string mono;
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (e[i] == 0)
                continue;
            mono += (mono.empty() ? "" : "*") + names[i];
            if (e[i] != 1)
                mono += "^" + std::to_string(e[i]);
        }
        Scalar mag = abs(c);
        std::string coef = mag.get_str();
        std::string term = mono.empty() ? coef : (mag == 1 ? mono : coef + "*" + mono);
        if (first)
            s += (c < 0 ? "-" : "") + term;
        else
            s += (c < 0 ? " - " : " + ") + term;
        first = false;
    }
    return s;
}

std::optional<LaurentPoly> exact_divide(const LaurentPoly& num, const LaurentPoly& den)
{
    require_same_ring(num, den);
    if (den.is_zero())
        throw Error("exact_divide: division by zero");
    const std::size_t nv = num.nvars();
    LaurentPoly q(nv);
    if (num.is_zero())
        return q;
    // Exponent box the quotient must live in, variable by variable.
    auto extent = [nv](const LaurentPoly& p) {
        Exponent lo(nv, INT32_MAX), hi(nv, INT32_MIN);
        for (const auto& [e, c] : p.terms())
            for (std::size_t i = 0; i < nv; ++i) {
                lo[i] = std::min(lo[i], e[i]);
                hi[i] = std::max(hi[i], e[i]);
            }
        return std::pair{lo, hi};
    };
    const auto [nlo, nhi] = extent(num);
    const auto [dlo, dhi] = extent(den);
    const Exponent qlo = sub(nlo, dlo), qhi = sub(nhi, dhi);
    const auto& [dlead, dcoef] = *den.terms().rbegin();
    LaurentPoly r = num;
    while (!r.is_zero()) {
        const auto& [rlead, rcoef] = *r.terms().rbegin();
        const Exponent e = sub(rlead, dlead);
        for (std::size_t i = 0; i < nv; ++i)
            if (e[i] < qlo[i] || e[i] > qhi[i])
                return std::nullopt;
        const Scalar c = rcoef / dcoef;
        q.add_term(e, c);
        r = r - den.shifted(e).scaled(c);
    }
    return q;
}

std::vector<std::string> variable_names(int m, int n)
{
    std::vector<std::string> out;
    for (int i = 1; i <= m; ++i)
        out.push_back("x" + std::to_string(i));
    for (int i = 1; i <= n; ++i)
        out.push_back(n == 1 ? "y" : "y" + std::to_string(i));
    return out;
}

CharFraction CharFraction::of(const LaurentPoly& p)
{
    return {p, LaurentPoly::constant(1, p.nvars())};
}

CharComparison char_compare(const CharFraction& a, const CharFraction& b)
{
    const LaurentPoly l = a.num * b.den;
    const LaurentPoly r = b.num * a.den;
    CharComparison out;
    out.equal = l == r;
    out.equal_up_to_sign = out.equal || l == -r;
    return out;
}

bool char_equal(const CharFraction& a, const CharFraction& b)
{
    return char_compare(a, b).equal;
}

namespace {

LaurentPoly x(int i)
{
    return LaurentPoly::variable(static_cast<std::size_t>(i - 1));
}

LaurentPoly y()
{
    return LaurentPoly::variable(3);
}

LaurentPoly one()
{
    return LaurentPoly::constant(1);
}

/// x1^a x2^b x3^c y^d
LaurentPoly mono(int a, int b, int c, int d = 0)
{
    return LaurentPoly::monomial({a, b, c, d});
}

/// x_i^e as a monomial, i = 1..3.
LaurentPoly xpow(int i, int e)
{
    Exponent ex(4, 0);
    ex[static_cast<std::size_t>(i - 1)] = e;
    return LaurentPoly::monomial(ex);
}

constexpr int cyclic[3][3] = {{1, 2, 3}, {2, 3, 1}, {3, 1, 2}};

/// Σ_i T_i ∏_{j≠i}(x_j+y) over the common denominator ∏(x_i+y).
LaurentPoly bracket_numerator(const std::function<LaurentPoly(int, int, int)>& term)
{
    LaurentPoly acc(4);
    for (const auto& c : cyclic) {
        LaurentPoly t = term(c[0], c[1], c[2]);
        for (int j = 1; j <= 3; ++j)
            if (j != c[0])
                t = t * (x(j) + y());
        acc = acc + t;
    }
    return acc;
}

int to_int(const Scalar& s)
{
    if (s.get_den() != 1)
        throw Error("weight entry " + s.get_str() + " is not an integer");
    return static_cast<int>(s.get_num().get_si());
}

}  // namespace

LaurentPoly base_R()
{
    return (x(1) + y()) * (x(2) + y()) * (x(3) + y());
}

LaurentPoly base_Pi()
{
    return (x(1) - x(2)) * (x(2) - x(3)) * (x(1) - x(3));
}

LaurentPoly base_a(int t, int u, int v)
{
    const int col[3] = {t + 2, u + 1, v};
    std::array<int, 3> perm{0, 1, 2};
    LaurentPoly det(4);
    do {
        int inversions = 0;
        for (int a = 0; a < 3; ++a)
            for (int b = a + 1; b < 3; ++b)
                inversions += perm[static_cast<std::size_t>(a)] > perm[static_cast<std::size_t>(b)];
        // row i takes column perm[i]
        LaurentPoly term = mono(col[perm[0]], col[perm[1]], col[perm[2]]);
        det = det + (inversions % 2 ? -term : term);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

WeightLabel WeightLabel::of(int l1, int l2, int l3, int l4)
{
    return {{Scalar(l1), Scalar(l2), Scalar(l3), Scalar(l4)}};
}

std::array<int, 4> WeightLabel::integers() const
{
    return {to_int(lambda[0]), to_int(lambda[1]), to_int(lambda[2]), to_int(lambda[3])};
}

std::string WeightLabel::to_string() const
{
    return "(" + lambda[0].get_str() + "," + lambda[1].get_str() + "," + lambda[2].get_str() + "|" +
           lambda[3].get_str() + ")";
}

std::string to_string(Atypicality a)
{
    switch (a) {
    case Atypicality::Typical:
        return "typical";
    case Atypicality::Type1:
        return "atypical l1+2=l4";
    case Atypicality::Type2:
        return "atypical l2+1=l4";
    case Atypicality::Type3:
        return "atypical l3=l4";
    }
    return "?";
}

WeightClass classify_weight(const WeightLabel& w)
{
    const auto& l = w.lambda;
    auto is_int = [](const Scalar& s) { return s.get_den() == 1; };
    WeightClass c;
    c.integral = is_int(l[0] - l[1]) && is_int(l[1] - l[2]);
    c.dominant = l[0] >= l[1] && l[1] >= l[2];
    c.integrable = std::all_of(l.begin(), l.end(), is_int);
    const bool t1 = l[0] + 2 == l[3], t2 = l[1] + 1 == l[3], t3 = l[2] == l[3];
    c.conditions_met = t1 + t2 + t3;
    c.type = t1 ? Atypicality::Type1 : t2 ? Atypicality::Type2 : t3 ? Atypicality::Type3 : Atypicality::Typical;
    if (c.dominant && c.integral && c.conditions_met > 1)
        throw Error("classify_weight: several atypicality conditions hold for dominant " + w.to_string());
    return c;
}

CharFraction ch_typical(const WeightLabel& w)
{
    if (classify_weight(w).type != Atypicality::Typical)
        throw Error("ch_typical: " + w.to_string() + " is atypical");
    const auto [l1, l2, l3, l4] = w.integers();
    return {base_R() * mono(l3 - 1, l3 - 1, l3 - 1) * base_a(l1 - l3, l2 - l3, 0), base_Pi() * mono(0, 0, 0, l4)};
}

CharFraction ch_atypical(const WeightLabel& w)
{
    const auto type = classify_weight(w).type;
    const auto [l1, l2, l3, l4] = w.integers();
    std::function<LaurentPoly(int, int, int)> term;
    switch (type) {
    case Atypicality::Typical:
        throw Error("ch_atypical: " + w.to_string() + " is typical");
    case Atypicality::Type1:
        term = [=](int i, int j, int k) {
            return xpow(i, l1 + 2) * (xpow(j, l2) * xpow(k, l3 - 1) - xpow(j, l3 - 1) * xpow(k, l2));
        };
        break;
    case Atypicality::Type2:
        term = [=](int i, int j, int k) {
            return xpow(i, l2 + 1) * (xpow(j, l3 - 1) * xpow(k, l1 + 1) - xpow(j, l1 + 1) * xpow(k, l3 - 1));
        };
        break;
    case Atypicality::Type3:
        term = [=](int i, int j, int k) {
            return xpow(i, l3) * (xpow(j, l1 + 1) * xpow(k, l2) - xpow(j, l2) * xpow(k, l1 + 1));
        };
        break;
    }
    return {base_R() * bracket_numerator(term), base_Pi() * mono(0, 0, 0, l4) * base_R()};
}

CharFraction ch_irreducible(const WeightLabel& w)
{
    return classify_weight(w).type == Atypicality::Typical ? ch_typical(w) : ch_atypical(w);
}

CharFraction kac_sum(const WeightLabel& w)
{
    const auto cls = classify_weight(w);
    if (cls.type != Atypicality::Typical || !cls.dominant || !cls.integrable)
        throw Error("kac_sum: needs a typical dominant integrable weight, got " + w.to_string());
    const auto [l1, l2, l3, l4] = w.integers();
    // Doubled ε-coordinates; ρ = (1/2, -1/2, -3/2 | -3/2) has ε_4-coefficient +3/2.
    const std::array<int, 4> shifted{2 * l1 + 1, 2 * l2 - 1, 2 * l3 - 3, -2 * l4 + 3};
    auto e2 = [](int a, int b, int c, int d) { return LaurentPoly::monomial({a, b, c, d}); };
    LaurentPoly orbit(4);
    std::array<int, 3> perm{0, 1, 2};
    do {
        int inversions = 0;
        for (int a = 0; a < 3; ++a)
            for (int b = a + 1; b < 3; ++b)
                inversions += perm[static_cast<std::size_t>(a)] > perm[static_cast<std::size_t>(b)];
        LaurentPoly t = e2(shifted[perm[0]], shifted[perm[1]], shifted[perm[2]], shifted[3]);
        orbit = orbit + (inversions % 2 ? -t : t);
    } while (std::next_permutation(perm.begin(), perm.end()));
    LaurentPoly l1p = LaurentPoly::constant(1), l0p = LaurentPoly::constant(1);
    for (int i = 0; i < 3; ++i) {
        Exponent a(4, 0);
        a[static_cast<std::size_t>(i)] = 1;
        a[3] = -1;
        Exponent na(a);
        for (auto& v : na)
            v = -v;
        l1p = l1p * (LaurentPoly::monomial(a) + LaurentPoly::monomial(na));
        for (int j = i + 1; j < 3; ++j) {
            Exponent b(4, 0);
            b[static_cast<std::size_t>(i)] = 1;
            b[static_cast<std::size_t>(j)] = -1;
            Exponent nb(b);
            for (auto& v : nb)
                v = -v;
            l0p = l0p * (LaurentPoly::monomial(b) - LaurentPoly::monomial(nb));
        }
    }
    auto halve = [&](const LaurentPoly& p) {
        return p.map_exponents([&](const Exponent& e) {
            Exponent h(e);
            for (auto& v : h) {
                if (v % 2 != 0)
                    throw Error("kac_sum: odd exponent after doubling for " + w.to_string());
                v /= 2;
            }
            return h;
        });
    };
    return {halve(l1p * orbit), halve(l0p)};
}

namespace {

/// Complete homogeneous symmetric polynomial of degree r in x1, x2, x3.
LaurentPoly h_even(int r)
{
    LaurentPoly out(4);
    if (r < 0)
        return out;
    for (int a = 0; a <= r; ++a)
        for (int b = 0; a + b <= r; ++b)
            out.add_term({a, b, r - a - b, 0}, 1);
    return out;
}

LaurentPoly determinant(std::vector<std::vector<LaurentPoly>> m)
{
    const std::size_t n = m.size();
    if (n == 0)
        return one();
    if (n == 1)
        return m[0][0];
    LaurentPoly det(4);
    for (std::size_t c = 0; c < n; ++c) {
        if (m[0][c].is_zero())
            continue;
        std::vector<std::vector<LaurentPoly>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<LaurentPoly> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != c)
                    row.push_back(m[r][k]);
            minor.push_back(std::move(row));
        }
        LaurentPoly t = m[0][c] * determinant(std::move(minor));
        det = det + (c % 2 ? -t : t);
    }
    return det;
}

}  // namespace

LaurentPoly ch_schur_super(const std::vector<int>& partition, bool signed_char)
{
    std::vector<int> parts;
    for (std::size_t i = 0; i < partition.size(); ++i) {
        if (partition[i] < 0 || (i > 0 && partition[i] > partition[i - 1]))
            throw Error("ch_schur_super: not a partition");
        if (partition[i] > 0)
            parts.push_back(partition[i]);
    }
    if (parts.size() > 3 && parts[3] > 1)
        throw Error("ch_schur_super: shape outside the (3|1) hook");
    const LaurentPoly ys = signed_char ? -y() : y();
    auto h = [&](int r) { return r < 0 ? LaurentPoly(4) : h_even(r) + ys * h_even(r - 1); };
    const std::size_t n = parts.size();
    std::vector<std::vector<LaurentPoly>> m(n, std::vector<LaurentPoly>(n, LaurentPoly(4)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m[i][j] = h(parts[i] - static_cast<int>(i) + static_cast<int>(j));
    return determinant(std::move(m));
}

CharFraction ch_hook_product(int l1, int l2, int l3, int e4)
{
    return {base_R() * mono(l3 - 1, l3 - 1, l3 - 1) * base_a(l1 - l3, l2 - l3, 0), base_Pi() * mono(0, 0, 0, e4)};
}

CharFraction ch_row_bracket(int lambda1)
{
    const int e = lambda1 + 1;
    LaurentPoly num = xpow(2, e) * (x(2) + y()) * (x(3) - x(1)) + xpow(3, e) * (x(3) + y()) * (x(1) - x(2)) +
                      xpow(1, e) * (x(1) + y()) * (x(2) - x(3));
    return {num, base_Pi()};
}

CharFraction ch_image_formula(int k, int l)
{
    return {base_R() * mono(0, 0, 0, k - 3) * base_a(l, l, 0), base_Pi() * mono(l, l, l)};
}

CharFraction ch_mmp_formula(int m, int p)
{
    return {base_R() * base_a(m + p, m + p, 0), base_Pi() * mono(p + 1, p + 1, p + 1)};
}

CharFraction ch_y_formula(int n, int p)
{
    auto term = [=](int, int j, int k) { return xpow(j, -p - 1) * xpow(k, n) - xpow(j, n) * xpow(k, -p - 1); };
    return {mono(1, 1, 1) * base_R() * bracket_numerator(term), base_Pi() * y() * base_R()};
}

CharFraction ch_z1_formula(int m)
{
    return {base_R() * base_a(m + 2, m + 1, 0), base_Pi() * mono(m + 1, m + 1, m + 1, 1)};
}

CharFraction ch_zk_formula(int k, int l, int m, int shift)
{
    return {base_R() * mono(-m, -m, -m, l - 3) * base_a(k + m, m - 1 + shift, 0), base_Pi()};
}

CharFraction ch_mfinal_formula(int m, int t, int p)
{
    return {base_R() * mono(-p, -p, -p) * base_a(m + p + t - 1, m + p - 1, 0), base_Pi() * y()};
}

LaurentPoly supercharacter(const WeightTable& table, std::size_t nvars, bool signed_char)
{
    LaurentPoly out(nvars);
    for (const auto& [w, dims] : table) {
        const long odd = static_cast<long>(dims.odd);
        const long c = static_cast<long>(dims.even) + (signed_char ? -odd : odd);
        out.add_term(Exponent(w.begin(), w.end()), Scalar(c));
    }
    return out;
}

LaurentPoly supercharacter(const GLModule& mod, bool signed_char)
{
    return supercharacter(mod.weight_table(), static_cast<std::size_t>(mod.m() + mod.n()), signed_char);
}

std::string ConventionReport::matched() const
{
    if (signed_char.equal && unsigned_char.equal)
        return "both";
    if (signed_char.equal)
        return "signed";
    if (unsigned_char.equal)
        return "unsigned";
    if (signed_char.equal_up_to_sign)
        return "signed up to sign";
    if (unsigned_char.equal_up_to_sign)
        return "unsigned up to sign";
    return "none";
}

ConventionReport compare_conventions(const GLModule& mod, const CharFraction& formula)
{
    ConventionReport r;
    r.signed_char = char_compare(CharFraction::of(supercharacter(mod, true)), formula);
    r.unsigned_char = char_compare(CharFraction::of(supercharacter(mod, false)), formula);
    return r;
}

}  // namespace dkc
