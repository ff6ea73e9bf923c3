#include "dkc/harness.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

using nlohmann::json;

namespace {

void write_json(const json& j, const std::string& path)
{
    if (path.empty() || path == "-") {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw dkc::ConfigError("cannot write " + path);
    out << j.dump(2) << "\n";
}

json poly_json(const dkc::LaurentPoly& p)
{
    return p.to_string();
}

json fraction_json(const dkc::CharFraction& f)
{
    json out{{"numerator", poly_json(f.num)}, {"denominator", poly_json(f.den)}};
    if (auto q = f.as_poly())
        out["quotient"] = poly_json(*q);
    else
        out["quotient"] = nullptr;
    return out;
}

dkc::CharFraction character_formula(const std::string& name, const std::vector<int>& a)
{
    using namespace dkc;
    auto need = [&](std::size_t n) {
        if (a.size() != n)
            throw ConfigError(name + " takes " + std::to_string(n) + " arguments");
    };
    if (name == "irreducible" || name == "typical" || name == "kac") {
        need(4);
        const auto w = WeightLabel::of(a[0], a[1], a[2], a[3]);
        if (name == "typical")
            return ch_typical(w);
        if (name == "kac")
            return kac_sum(w);
        return ch_irreducible(w);
    }
    if (name == "schur" || name == "schur-unsigned")
        return CharFraction::of(ch_schur_super(a, name == "schur"));
    if (name == "hook") {
        need(4);
        return ch_hook_product(a[0], a[1], a[2], a[3]);
    }
    if (name == "row") {
        need(1);
        return ch_row_bracket(a[0]);
    }
    if (name == "image") {
        need(2);
        return ch_image_formula(a[0], a[1]);
    }
    if (name == "mmp") {
        need(2);
        return ch_mmp_formula(a[0], a[1]);
    }
    if (name == "y") {
        need(2);
        return ch_y_formula(a[0], a[1]);
    }
    if (name == "z1") {
        need(1);
        return ch_z1_formula(a[0]);
    }
    if (name == "zk") {
        if (a.size() != 3 && a.size() != 4)
            throw ConfigError("zk takes k l m [shift]");
        return ch_zk_formula(a[0], a[1], a[2], a.size() == 4 ? a[3] : 0);
    }
    if (name == "mfinal") {
        need(3);
        return ch_mfinal_formula(a[0], a[1], a[2]);
    }
    throw ConfigError("unknown formula '" + name + "'");
}

json spectrum_match_json(const dkc::SpectrumMatch& s)
{
    json pairs = json::array();
    for (const auto& p : s.spectrum.pairs)
        pairs.push_back({{"value", p.value.get_str()}, {"algebraic", p.algebraic}, {"geometric", p.geometric}});
    json preds = json::array();
    for (std::size_t t = 0; t < s.predictions.size(); ++t) {
        json set = json::array();
        for (const auto& v : s.predictions[t].set())
            set.push_back(v.get_str());
        preds.push_back({{"reading", s.predictions[t].reading}, {"set", set}, {"matches", bool(s.matches[t])}});
    }
    return {{"dim", s.dim},
            {"diagonalizable", s.spectrum.diagonalizable},
            {"invertible", s.invertible},
            {"eigenvalues", pairs},
            {"predictions", preds}};
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact checks on the double Koszul complex of a super vector space"};
    app.require_subcommand(1);

    int m = 3, n = 1;
    auto add_alphabet = [&](CLI::App* sub) {
        sub->add_option("--m", m, "even dimension")->capture_default_str();
        sub->add_option("--n", n, "odd dimension")->capture_default_str();
    };

    dkc::VerificationPlan plan;
    std::vector<std::string> checks;
    std::string json_out;
    std::string cache_dir;
    bool quiet = false;
    auto* verify = app.add_subcommand("verify", "run the verification grid");
    add_alphabet(verify);
    verify->add_option("--max-k", plan.max_k)->capture_default_str();
    verify->add_option("--max-l", plan.max_l)->capture_default_str();
    verify->add_option("--max-i", plan.max_i)->capture_default_str();
    verify->add_option("--max-a", plan.max_a)->capture_default_str();
    verify->add_option("--max-pr", plan.max_pr, "bound on p + r")->capture_default_str();
    verify->add_option("--checks", checks, "comma separated subset of the check kinds")->delimiter(',');
    verify->add_option("--jobs", plan.jobs)->capture_default_str();
    verify->add_option("--cache-dir", cache_dir, "differential cache (default $DKC_CACHE_DIR)");
    verify->add_option("--json", json_out, "write the report here ('-' for stdout)");
    verify->add_flag("--quiet", quiet, "only the summary line");

    std::string kind;
    std::vector<int> params;
    bool skip_irreducibility = false;
    auto* construct = app.add_subcommand("construct", "build a named gl(3|1)-module and compare characters");
    add_alphabet(construct);
    construct->add_option("name", kind, "H31, ImD, Mmp, Ysummand, Z1, Zk, Mfinal, Ilambda")->required();
    construct->add_option("params", params);
    construct->add_flag("--no-irreducibility", skip_irreducibility);

    std::string prop;
    auto* spectrum = app.add_subcommand("spectrum", "exact spectrum of dPQd (i a) or PddQ on Ker P (i k a)");
    add_alphabet(spectrum);
    spectrum->add_option("operator", prop, "dpqd or pddq")->required()->check(CLI::IsMember({"dpqd", "pddq"}));
    spectrum->add_option("params", params)->required();

    std::string formula;
    auto* character = app.add_subcommand("character", "evaluate a character formula");
    character->add_option("formula", formula,
                          "irreducible, typical, kac, schur, schur-unsigned, hook, row, image, mmp, y, z1, zk, mfinal")
        ->required();
    character->add_option("args", params)->allow_extra_args();

    std::string what;
    std::vector<std::string> key;
    std::string out_path;
    auto* exporter = app.add_subcommand("export", "canonical export of a matrix, basis or report");
    add_alphabet(exporter);
    exporter->add_option("what", what)->required()->check(CLI::IsMember({"matrix", "basis", "report"}));
    exporter->add_option("key", key, "matrix: <d|del|P|Q> i k l; basis: i k l; report: <file>")->required();
    exporter->add_option("--out", out_path);

    // Negative integers are values, not options.
    app.allow_extras(false);
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (*verify) {
            plan.alphabet = {m, n};
            if (!checks.empty()) {
                plan.checks.clear();
                for (const auto& c : checks)
                    plan.checks.insert(dkc::parse_check_kind(c));
            }
            if (!cache_dir.empty())
                plan.cache_dir = cache_dir;
            else
                plan.cache_dir = dkc::DiskCache::env_dir();
            plan.validate();
            const auto report = dkc::run(plan);
            if (!quiet)
                for (const auto& r : report.records)
                    if (r.status != dkc::Status::Pass)
                        std::cerr << dkc::to_string(r.status) << " " << r.claim << " " << r.params.dump() << "\n";
            std::cerr << "pass " << report.count(dkc::Status::Pass) << ", fail " << report.count(dkc::Status::Fail)
                      << ", skipped " << report.count(dkc::Status::Skipped) << "\n";
            if (!json_out.empty())
                write_json(report.to_json(), json_out);
            return dkc::exit_code(report);
        }
        if (*construct) {
            const auto c = dkc::parse_construction(kind, params);
            const auto built = dkc::construct(c, {m, n});
            write_json(dkc::module_json(built, !skip_irreducibility), "-");
            return 0;
        }
        if (*spectrum) {
            const dkc::Alphabet v{m, n};
            if (prop == "dpqd") {
                if (params.size() != 2)
                    throw dkc::ConfigError("dpqd takes i a");
                write_json(spectrum_match_json(dkc::dpqd_spectrum(params[0], params[1], v)), "-");
            } else {
                if (params.size() != 3)
                    throw dkc::ConfigError("pddq takes i k a");
                write_json(spectrum_match_json(dkc::pddq_spectrum(params[0], params[1], params[2], v)), "-");
            }
            return 0;
        }
        if (*character) {
            write_json(fraction_json(character_formula(formula, params)), "-");
            return 0;
        }
        if (*exporter) {
            const dkc::Alphabet v{m, n};
            auto ints = [&](std::size_t from) {
                std::vector<int> out;
                for (std::size_t t = from; t < key.size(); ++t)
                    out.push_back(std::stoi(key[t]));
                if (out.size() != 3)
                    throw dkc::ConfigError("expected i k l");
                return dkc::Spot{out[0], out[1], out[2]};
            };
            std::ostringstream text;
            if (what == "matrix") {
                if (key.size() != 4)
                    throw dkc::ConfigError("export matrix <d|del|P|Q> i k l");
                dkc::write_triples(text, dkc::differential(dkc::parse_diff_kind(key[0]), ints(1), v));
            } else if (what == "basis") {
                const auto space = dkc::spot_space(ints(0), v);
                text << space.name() << " " << space.dim() << "\n";
                for (std::size_t t = 0; t < space.dim(); ++t)
                    text << t << " " << space.label(t) << " "
                         << (space.parity(t) == dkc::Parity::Odd ? "odd" : "even") << "\n";
            } else {
                if (key.size() != 1)
                    throw dkc::ConfigError("export report <file>");
                std::ifstream in(key[0]);
                if (!in)
                    throw dkc::ConfigError("cannot read " + key[0]);
                text << json::parse(in).dump(2) << "\n";
            }
            if (out_path.empty()) {
                std::cout << text.str();
            } else {
                std::ofstream out(out_path, std::ios::binary);
                out << text.str();
            }
            return 0;
        }
    } catch (const dkc::ConfigError& e) {
        std::cerr << "dkc: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "dkc: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "dkc: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
