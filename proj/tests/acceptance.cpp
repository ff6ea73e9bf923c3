// One line per acceptance criterion, followed by indented detail lines.
#include "dkc/harness.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

using namespace dkc;

namespace {

const Alphabet V31{3, 1};
const Alphabet V21{2, 1};

struct Outcome {
    bool pass = true;
    std::string summary;
    std::vector<std::string> details;
};

std::string alphabet_name(const Alphabet& v)
{
    return "(" + std::to_string(v.m) + "|" + std::to_string(v.n) + ")";
}

std::string set_string(const std::vector<Scalar>& s)
{
    std::string out = "{";
    for (std::size_t t = 0; t < s.size(); ++t)
        out += (t ? ", " : "") + to_string(s[t]);
    return out + "}";
}

Outcome identities_dd()
{
    Outcome o;
    std::size_t cells = 0;
    for (const auto& v : {V31, V21})
        for (int k = 0; k <= 4; ++k)
            for (int l = 0; l <= 4; ++l) {
                ++cells;
                const auto r = dd_identity_residual(k, l, v);
                if (!r.is_zero()) {
                    o.pass = false;
                    o.details.push_back(alphabet_name(v) + " k=" + std::to_string(k) + " l=" + std::to_string(l) +
                                        ": residual nnz " + std::to_string(r.nnz()));
                }
            }
    o.summary = "l k d∂ + (l+1)(k+1) ∂d = (l-k-n+m) id, k,l <= 4 on (3|1) and (2|1), " + std::to_string(cells) +
                " cells";
    return o;
}

Outcome identities_pq()
{
    Outcome o;
    std::size_t cells = 0;
    for (const auto& v : {V31, V21})
        for (int p = 0; p <= 6; ++p)
            for (int r = 0; p + r <= 6; ++r) {
                ++cells;
                const auto res = pq_identity_residual(p, r, v);
                if (!res.is_zero()) {
                    o.pass = false;
                    o.details.push_back(alphabet_name(v) + " p=" + std::to_string(p) + " r=" + std::to_string(r) +
                                        ": residual nnz " + std::to_string(res.nnz()));
                }
            }
    o.summary = "r(p+1) PQ + p(r+1) QP = (p+r) id, p+r <= 6 on (3|1) and (2|1), " + std::to_string(cells) + " cells";
    return o;
}

Outcome exactness()
{
    Outcome o;
    std::size_t cells = 0;
    for (int k = 0; k <= 5; ++k)
        for (int l = 0; l <= 5; ++l) {
            ++cells;
            const auto h = homology_K(k, l, V31);
            const std::size_t expected = (k == 3 && l == 1) ? 1 : 0;
            if (h.homology_dim != expected) {
                o.pass = false;
                o.details.push_back("k=" + std::to_string(k) + " l=" + std::to_string(l) + ": homology " +
                                    std::to_string(h.homology_dim));
            }
        }
    o.details.push_back("homology at Λ_3 S_1*: " + std::to_string(homology_K(3, 1, V31).homology_dim));
    o.summary = "K_a on (3|1), k,l <= 5: homology zero except one dimension at Λ_3 S_1*, " + std::to_string(cells) +
                " cells";
    return o;
}

Outcome commutativity()
{
    Outcome o;
    std::size_t nonvacuous = 0;
    for (int i = 0; i <= 3; ++i)
        for (int k = 0; k <= 3; ++k)
            for (int l = 0; l <= 3; ++l)
                for (auto sq : {Square::PD, Square::QDel}) {
                    const auto r = commute_residual(sq, {i, k, l}, V31);
                    if (!r)
                        continue;
                    ++nonvacuous;
                    if (!r->is_zero()) {
                        o.pass = false;
                        o.details.push_back(std::string(sq == Square::PD ? "Pd-dP" : "Q∂-∂Q") + " at S" +
                                            std::to_string(i) + " Λ" + std::to_string(k) + " S*" + std::to_string(l));
                    }
                }
    o.summary = "Pd = dP and Q∂ = ∂Q on S_i Λ_k S_l*, i,k,l <= 3, " + std::to_string(nonvacuous) + " squares";
    return o;
}

Outcome spectrum_dpqd()
{
    Outcome o;
    std::size_t matched = 0, recursion = 0, cells = 0;
    for (int i = 0; i <= 3; ++i)
        for (int a = 0; a <= 3; ++a) {
            ++cells;
            const auto s = dpqd_spectrum(i, a, V31);
            const bool ok = s.matches[0] && s.spectrum.diagonalizable && s.invertible;
            matched += ok;
            recursion += s.matches[1];
            if (!ok) {
                o.pass = false;
                o.details.push_back("i=" + std::to_string(i) + " a=" + std::to_string(a) + ": computed " +
                                    set_string(s.spectrum.values()) + ", displayed " +
                                    set_string(s.predictions[0].set()) +
                                    (s.spectrum.diagonalizable ? "" : ", not diagonalizable") +
                                    (s.invertible ? "" : ", singular"));
            }
        }
    o.details.push_back("displayed set matches " + std::to_string(matched) + "/" + std::to_string(cells) +
                        "; set from the recursion matches " + std::to_string(recursion) + "/" + std::to_string(cells));
    o.summary = "∂PQd on S_i S*_{a+i}, i,a <= 3: diagonalizable, invertible, spectrum equal to the displayed set";
    return o;
}

Outcome spectrum_pddq()
{
    Outcome o;
    std::size_t cells = 0;
    std::vector<std::size_t> reading_hits(2, 0);
    std::vector<std::string> names(2);
    for (int i = 0; i <= 2; ++i)
        for (int k = 0; k <= 2; ++k)
            for (int a = 0; a <= 2; ++a) {
                ++cells;
                const auto s = pddq_spectrum(i, k, a, V31);
                if (!s.invertible || !s.spectrum.diagonalizable) {
                    o.pass = false;
                    o.details.push_back("i=" + std::to_string(i) + " k=" + std::to_string(k) + " a=" +
                                        std::to_string(a) + ": invertible " + std::to_string(s.invertible) +
                                        ", diagonalizable " + std::to_string(s.spectrum.diagonalizable));
                }
                bool any = false;
                for (std::size_t t = 0; t < 2; ++t) {
                    names[t] = s.predictions[t].reading;
                    reading_hits[t] += s.matches[t];
                    any = any || s.matches[t];
                }
                if (!any)
                    o.details.push_back("finding: i=" + std::to_string(i) + " k=" + std::to_string(k) + " a=" +
                                        std::to_string(a) + " spectrum " + set_string(s.spectrum.values()) +
                                        " matches neither index reading");
            }
    for (std::size_t t = 0; t < 2; ++t)
        o.details.push_back("reading '" + names[t] + "' matches " + std::to_string(reading_hits[t]) + "/" +
                            std::to_string(cells));
    o.summary = "P∂dQ on Ker P·S*, i,k,a <= 2: diagonalizable and invertible, " + std::to_string(cells) + " cells";
    return o;
}

Outcome splitting()
{
    Outcome o;
    std::size_t cells = 0;
    for (int k = 0; k <= 4; ++k)
        for (int l = 0; l <= 4; ++l) {
            if (k - l == 2)
                continue;
            ++cells;
            const auto sp = split_K(k, l, V31);
            const std::size_t r_prev =
                (k >= 1 && l >= 1) ? rank(differential(DiffKind::D, Spot::K(k - 1, l - 1), V31)) : 0;
            const std::size_t r_here = rank(differential(DiffKind::D, Spot::K(k, l), V31));
            if (sp.ambient.dim() != r_prev + r_here || sp.intersection_dim != 0 || !sp.direct) {
                o.pass = false;
                o.details.push_back("k=" + std::to_string(k) + " l=" + std::to_string(l) + ": dim " +
                                    std::to_string(sp.ambient.dim()) + ", ranks " + std::to_string(r_prev) + " + " +
                                    std::to_string(r_here) + ", intersection " +
                                    std::to_string(sp.intersection_dim));
            }
        }
    o.summary = "dim Λ_k S_l* = rank d_{k-1,l-1} + rank d_{k,l}, trivial intersection, k,l <= 4, k-l != 2, " +
                std::to_string(cells) + " cells";
    return o;
}

Outcome equivariance()
{
    Outcome o;
    std::size_t maps = 0;
    for (int i = 0; i <= 2; ++i)
        for (int k = 0; k <= 4; ++k)
            for (int l = 0; l <= 4; ++l) {
                const Spot s{i, k, l};
                const auto dom = module_of(spot_space(s, V31));
                for (auto kind : {DiffKind::D, DiffKind::Del, DiffKind::P, DiffKind::Q}) {
                    const auto t = target_spot(kind, s);
                    if (!t)
                        continue;
                    ++maps;
                    const auto cod = module_of(spot_space(*t, V31));
                    const auto bad = equivariance_check(differential(kind, s, V31), dom, cod);
                    if (!bad.empty()) {
                        o.pass = false;
                        o.details.push_back(to_string(kind) + " at " + s.name() + ": " +
                                            std::to_string(bad.size()) + " generators fail, first " +
                                            bad.front().g.name());
                    }
                }
            }
    o.summary = "d, ∂, P, Q commute with all 16 E_ij on S_i Λ_k S_l*, i <= 2, k,l <= 4, " + std::to_string(maps) +
                " maps";
    return o;
}

Outcome simplicity()
{
    Outcome o;
    std::size_t tested = 0, outside = 0;
    for (int k = 1; k <= 4; ++k)
        for (int l = 1; l <= 4; ++l) {
            if (k - l == 2)
                continue;
            const std::string cell = "Im d_{" + std::to_string(k + 1) + "," + std::to_string(l + 1) + "}";
            const auto img = image_of(DiffKind::D, Spot::K(k + 1, l + 1), V31);
            if (img.dim() > 3000) {
                ++outside;
                o.details.push_back(cell + ": dim " + std::to_string(img.dim()) + " outside the window");
                continue;
            }
            ++tested;
            const auto c = construct({"ImD", {k + 1, l + 1}}, V31);
            const auto verdict = irreducibility_check(c.module);
            const auto ch = compare_conventions(c.module, ch_image_formula(k + 1, l + 1));
            if (!verdict.pass() || !ch.any_exact()) {
                o.pass = false;
                o.details.push_back(cell + ": unique singular line " + std::to_string(verdict.unique_singular_line) +
                                    ", cyclic " + std::to_string(verdict.cyclic) + ", dual " +
                                    std::to_string(verdict.dual_unique_singular_line) + ", character " +
                                    ch.matched());
            }
        }
    o.details.push_back(std::to_string(tested) + " images tested, " + std::to_string(outside) +
                        " beyond dim 3000; characters compared under the unsigned convention");
    o.summary = "Im d_{k+1,l+1}, 1 <= k,l <= 4, k-l != 2: triple test and character R y^{k-3} a(l,l,0)/(Π (x1x2x3)^l)";
    return o;
}

Outcome constructions()
{
    Outcome o;
    struct Family {
        std::string label;
        std::vector<Construction> cells;
    };
    std::vector<Family> families{{"Y(n,p)", {}}, {"Z_1(m)", {}}, {"M^{m,p}", {}}, {"M(m,t,p)", {}}};
    for (int a = 1; a <= 2; ++a)
        for (int b = 1; b <= 2; ++b) {
            families[0].cells.push_back({"Ysummand", {a, b}});
            families[2].cells.push_back({"Mmp", {a, b}});
            for (int c = 1; c <= 2; ++c)
                families[3].cells.push_back({"Mfinal", {a, b, c}});
        }
    for (int m = 1; m <= 2; ++m)
        families[1].cells.push_back({"Z1", {m}});

    for (const auto& f : families) {
        std::size_t hw = 0, closed = 0, stated = 0, computed = 0, irreducible = 0;
        std::string conventions;
        for (const auto& c : f.cells) {
            const auto built = construct(c, V31);
            const auto claims = construction_claims(c);
            const auto label = weight_label(built.highest.top_weight, 3);
            const bool hw_ok = label == claims.stated_label;
            const auto r_closed = compare_conventions(built.module, *claims.closed_formula);
            const auto r_stated =
                compare_conventions(built.module, ch_irreducible(WeightLabel::of(claims.stated_label[0],
                                                                                 claims.stated_label[1],
                                                                                 claims.stated_label[2],
                                                                                 claims.stated_label[3])));
            const auto r_computed = compare_conventions(
                built.module, ch_irreducible(WeightLabel::of(label[0], label[1], label[2], label[3])));
            const bool irr = irreducibility_check(built.module).pass();
            hw += hw_ok;
            closed += r_closed.any_exact();
            stated += r_stated.any_exact();
            computed += r_computed.any_exact();
            irreducible += irr;
            if (conventions.find(r_closed.matched()) == std::string::npos)
                conventions += (conventions.empty() ? "" : ", ") + r_closed.matched();
            if (!hw_ok || !r_closed.any_exact() || !r_stated.any_exact()) {
                o.pass = false;
                o.details.push_back(c.name() + ": highest weight " + label_string(label, 3) + " vs stated " +
                                    label_string(claims.stated_label, 3) + "; closed formula " + r_closed.matched() +
                                    "; V(stated) " + r_stated.matched() + "; V(computed) " + r_computed.matched());
            }
        }
        const std::string n = "/" + std::to_string(f.cells.size());
        o.details.push_back(f.label + ": highest weight " + std::to_string(hw) + n + ", closed formula " +
                            std::to_string(closed) + n + " (" + conventions + "), V(stated λ) " +
                            std::to_string(stated) + n + ", V(computed λ) " + std::to_string(computed) + n +
                            ", irreducible " + std::to_string(irreducible) + n);
    }
    o.summary = "Y(n,p), Z_1(m), M^{m,p}, M(m,t,p) with parameters <= 2: stated highest weight, closed formula and "
                "V(λ) formula";
    return o;
}

Outcome kac()
{
    Outcome o;
    const auto weights = sample_typical_weights(10);
    for (const auto& w : weights) {
        const bool eq = char_equal(kac_sum(w), ch_typical(w));
        if (!eq)
            o.pass = false;
        o.details.push_back(w.to_string() + (eq ? " equal" : " DIFFERENT"));
    }
    o.summary = "Kac orbit sum equals the typical product formula for " + std::to_string(weights.size()) +
                " typical dominant integrable λ in [-3,3]";
    if (weights.size() < 10)
        o.pass = false;
    return o;
}

}  // namespace

int main()
{
    const std::vector<std::function<Outcome()>> criteria{identities_dd, identities_pq, exactness,    commutativity,
                                                         spectrum_dpqd, spectrum_pddq, splitting,    equivariance,
                                                         simplicity,    constructions, kac};
    int failed = 0;
    for (std::size_t c = 0; c < criteria.size(); ++c) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[c]();
        } catch (const std::exception& e) {
            o.pass = false;
            o.summary = std::string("error: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(2);
        line << "criterion " << (c + 1) << " " << (o.pass ? "PASS" : "FAIL") << " " << o.summary << " [" << secs
             << " s]";
        std::cout << line.str() << "\n";
        for (const auto& d : o.details)
            std::cout << "    " << d << "\n";
        std::cout.flush();
        failed += !o.pass;
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria pass\n";
    return failed ? 1 : 0;
}
