#include "dkc/polynomial.hpp"

#include "dkc/linalg.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace dkc {

Polynomial::Polynomial(std::vector<Scalar> coeffs) : c_(std::move(coeffs))
{
    trim();
}

void Polynomial::trim()
{
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

Polynomial Polynomial::constant(const Scalar& c)
{
    return Polynomial({c});
}

Polynomial Polynomial::linear_root(const Scalar& r)
{
    return Polynomial({-r, 1});
}

Scalar Polynomial::evaluate(const Scalar& t) const
{
    Scalar acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;)
        acc = acc * t + c_[i];
    return acc;
}

Polynomial Polynomial::derivative() const
{
    std::vector<Scalar> d;
    for (std::size_t i = 1; i < c_.size(); ++i)
        d.push_back(c_[i] * static_cast<long>(i));
    return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const
{
    if (c_.empty())
        return *this;
    std::vector<Scalar> out = c_;
    Scalar lead = c_.back();
    for (auto& x : out)
        x /= lead;
    return Polynomial(std::move(out));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b)
{
    std::vector<Scalar> out(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = a.coeff(i) + b.coeff(i);
    return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b)
{
    std::vector<Scalar> out(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = a.coeff(i) - b.coeff(i);
    return Polynomial(std::move(out));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<Scalar> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            out[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(out));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& d) const
{
    if (d.is_zero())
        throw Error("Polynomial::divmod: division by zero polynomial");
    std::vector<Scalar> r = c_;
    const int dd = d.degree();
    if (degree() < dd)
        return {Polynomial(), *this};
    std::vector<Scalar> q(static_cast<std::size_t>(degree() - dd + 1));
    for (int k = degree(); k >= dd; --k) {
        Scalar f = r[static_cast<std::size_t>(k)] / d.leading();
        q[static_cast<std::size_t>(k - dd)] = f;
        if (f == 0)
            continue;
        for (int i = 0; i <= dd; ++i)
            r[static_cast<std::size_t>(k - dd + i)] -= f * d.c_[static_cast<std::size_t>(i)];
    }
    return {Polynomial(std::move(q)), Polynomial(std::move(r))};
}

std::string Polynomial::to_string(const std::string& var) const
{
    if (c_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0)
            continue;
        Scalar c = c_[i];
        if (!first)
            out << (c < 0 ? " - " : " + ");
        else if (c < 0)
            out << "-";
        Scalar a = abs(c);
        if (i == 0 || a != 1)
            out << dkc::to_string(a) << (i == 0 ? "" : "*");
        if (i >= 1)
            out << var;
        if (i >= 2)
            out << "^" << i;
        first = false;
    }
    return out.str();
}

Polynomial gcd(Polynomial a, Polynomial b)
{
    while (!b.is_zero()) {
        Polynomial r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

Polynomial char_poly_dense(std::vector<std::vector<Scalar>> h)
{
    const std::size_t n = h.size();
    // Similarity transforms to upper Hessenberg form.
    for (std::size_t c = 0; c + 2 < n; ++c) {
        const std::size_t r = c + 1;
        std::size_t best = n;
        std::size_t best_bits = 0;
        for (std::size_t i = r; i < n; ++i) {
            if (h[i][c] == 0)
                continue;
            std::size_t bits = bit_size(h[i][c]);
            if (best == n || bits < best_bits) {
                best = i;
                best_bits = bits;
            }
        }
        if (best == n)
            continue;
        if (best != r) {
            std::swap(h[best], h[r]);
            for (std::size_t k = 0; k < n; ++k)
                std::swap(h[k][best], h[k][r]);
        }
        for (std::size_t i = r + 1; i < n; ++i) {
            if (h[i][c] == 0)
                continue;
            Scalar u = h[i][c] / h[r][c];
            for (std::size_t k = 0; k < n; ++k)
                if (h[r][k] != 0)
                    h[i][k] -= u * h[r][k];
            for (std::size_t k = 0; k < n; ++k)
                if (h[k][i] != 0)
                    h[k][r] += u * h[k][i];
        }
    }
    // p_k = (t - h_kk) p_{k-1} - sum_i h_ik (prod_{j=i+1..k} h_{j,j-1}) p_i
    std::vector<Polynomial> p(n + 1);
    p[0] = Polynomial::constant(1);
    for (std::size_t k = 1; k <= n; ++k) {
        const std::size_t m = k - 1;
        Polynomial acc = Polynomial({-h[m][m], 1}) * p[k - 1];
        Scalar prod = 1;
        for (std::size_t i = m; i-- > 0;) {
            prod *= h[i + 1][i];
            if (prod == 0)
                break;
            if (h[i][m] != 0)
                acc = acc - Polynomial::constant(h[i][m] * prod) * p[i];
        }
        p[k] = std::move(acc);
    }
    return p[n];
}

Polynomial char_poly(const SparseMap& m)
{
    if (!m.is_square())
        throw DimensionError("char_poly: matrix is not square");
    Polynomial result = Polynomial::constant(1);
    for (const auto& idx : square_blocks(m))
        result = result * char_poly_dense(dense_block(m, idx));
    return result;
}

SparseMap evaluate(const Polynomial& p, const SparseMap& m)
{
    if (!m.is_square())
        throw DimensionError("evaluate: matrix is not square");
    const std::size_t n = m.dom_dim();
    SparseMap acc(n, n);
    for (std::size_t i = p.coeffs().size(); i-- > 0;)
        acc = compose(m, acc) + SparseMap::scalar(n, p.coeff(i));
    return acc;
}

namespace {

/// Prime factorisation by trial division; gives up (returns false) on a large
/// composite cofactor.
bool factor(Integer n, std::map<Integer, unsigned>& out)
{
    if (n < 0)
        n = -n;
    for (unsigned long p = 2; p < 2000000; p += (p == 2 ? 1 : 2)) {
        if (n == 1)
            return true;
        Integer pp = p;
        if (pp * pp > n)
            break;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            ++out[pp];
            n /= pp;
        }
    }
    if (n == 1)
        return true;
    if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
        ++out[n];
        return true;
    }
    return false;
}

std::vector<Integer> divisors(const std::map<Integer, unsigned>& f)
{
    std::vector<Integer> ds{1};
    for (const auto& [p, e] : f) {
        const std::size_t base = ds.size();
        Integer pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i)
                ds.push_back(ds[i] * pk);
        }
    }
    return ds;
}

/// Scales to a primitive integer polynomial (as rationals with denominator 1).
Polynomial primitive(const Polynomial& p)
{
    Integer l = 1;
    for (const auto& c : p.coeffs())
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    Integer g = 0;
    for (const auto& c : p.coeffs()) {
        Scalar s = c * l;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), s.get_num().get_mpz_t());
    }
    std::vector<Scalar> out;
    for (const auto& c : p.coeffs())
        out.push_back(c * l / g);
    return Polynomial(std::move(out));
}

}  // namespace

RootSearch rational_roots(const Polynomial& p)
{
    if (p.is_zero())
        throw Error("rational_roots: zero polynomial");
    RootSearch result;
    Polynomial rest = p;
    std::size_t zero_mult = 0;
    while (rest.degree() > 0 && rest.coeff(0) == 0) {
        rest = Polynomial(std::vector<Scalar>(rest.coeffs().begin() + 1, rest.coeffs().end()));
        ++zero_mult;
    }
    if (zero_mult)
        result.roots.push_back({0, zero_mult});
    if (rest.degree() > 0) {
        Polynomial sqfree = primitive(rest.divmod(gcd(rest, rest.derivative())).first);
        std::map<Integer, unsigned> fa, fb;
        if (!factor(sqfree.coeff(0).get_num(), fa) || !factor(sqfree.leading().get_num(), fb))
            throw Error("rational_roots: coefficient too large to factor");
        std::vector<Scalar> found;
        for (const auto& num : divisors(fa))
            for (const auto& den : divisors(fb))
                for (int sign : {1, -1}) {
                    Scalar cand(num * sign, den);
                    cand.canonicalize();
                    if (cand.get_den() != den)
                        continue;  // not in lowest terms; reached through another pair
                    if (sqfree.evaluate(cand) == 0)
                        found.push_back(cand);
                }
        std::sort(found.begin(), found.end());
        found.erase(std::unique(found.begin(), found.end()), found.end());
        for (const auto& r : found) {
            std::size_t mult = 0;
            Polynomial lin = Polynomial::linear_root(r);
            for (;;) {
                auto [q, rem] = rest.divmod(lin);
                if (!rem.is_zero())
                    break;
                rest = std::move(q);
                ++mult;
            }
            result.roots.push_back({r, mult});
        }
    }
    std::sort(result.roots.begin(), result.roots.end());
    result.unresolved_degree = std::max(rest.degree(), 0);
    return result;
}

}  // namespace dkc
