#include <ctime>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "fincat/decision.hpp"
#include "fincat/io.hpp"
#include "fincat/limits.hpp"

using namespace fincat;

namespace {

// Exit-code contract: 0 = property holds / output written,
// 1 = property fails, 2 = hypotheses or input errors.
constexpr int kHolds = 0;
constexpr int kFails = 1;
constexpr int kError = 2;

Bundle load(const std::string& path) { return parse_file(path); }

const Functor& pick_functor(const Bundle& b, const std::string& name) {
    if (!name.empty()) {
        const Functor* f = b.find_functor(name);
        if (!f) throw ParseError("no functor named '" + name + "' in the file");
        return *f;
    }
    if (b.functors.size() == 1) return b.functors.front();
    throw ParseError(b.functors.empty() ? "the file declares no functor"
                                        : "several functors declared; pick one with --functor");
}

std::string cat_name_of(const Bundle& b, const CatPtr& c) {
    for (size_t i = 0; i < b.cats.size(); ++i)
        if (b.cats[i].get() == c.get()) return b.cat_names[i];
    return "C";
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw ParseError(out_path + ": cannot open for writing");
    out << text;
}

int conclusion_exit(Conclusion c) {
    switch (c) {
        case Conclusion::presentation: return kHolds;
        case Conclusion::criterion_fails: return kFails;
        case Conclusion::hypotheses_not_met: return kError;
    }
    return kError;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-category toolkit: limits, fractions, localization, Kan extensions "
                 "and the presentation criterion"};
    app.require_subcommand(1);

    std::string path, category, functor_name, presheaf_name, out_path;
    std::string format = "text";
    std::uint32_t seed = 0;
    bool timestamps = false;

    auto add_file = [&](CLI::App* sub) {
        sub->add_option("file", path, "description file")->required();
    };

    auto* validate = app.add_subcommand("validate", "parse and validate a description file");
    add_file(validate);

    auto* limits = app.add_subcommand("limits", "check existence of finite limits");
    add_file(limits);
    limits->add_option("--category", category, "category name (default: all)");

    auto* fractions = app.add_subcommand("check-fractions",
                                         "check the right-fraction axioms for SIGMA");
    add_file(fractions);
    fractions->add_option("--category", category, "category name (default: the one with SIGMA)");

    auto* localize_cmd = app.add_subcommand("localize",
                                            "write the localization at SIGMA as a category file");
    add_file(localize_cmd);
    localize_cmd->add_option("--category", category, "category name");
    localize_cmd->add_option("-o,--output", out_path, "output path (default: stdout)");

    auto* kan = app.add_subcommand("kan", "write the left Kan extension of a presheaf");
    add_file(kan);
    kan->add_option("--functor", functor_name, "functor to extend along");
    kan->add_option("--presheaf", presheaf_name, "presheaf to extend")->required();
    kan->add_option("-o,--output", out_path, "output path (default: stdout)");

    auto* present = app.add_subcommand("check-presentation", "run the presentation criterion");
    add_file(present);
    present->add_option("--functor", functor_name, "functor to check");
    present->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));
    present->add_option("--seed", seed, "seed for size-3 probe sampling");

    auto* equiv = app.add_subcommand("check-equivalence", "test equivalence of categories "
                                                          "under the finite-limit hypotheses");
    add_file(equiv);
    equiv->add_option("--functor", functor_name, "functor to check");

    auto* report = app.add_subcommand("report", "full report: criterion, equivalence test, "
                                                "probe-presheaf battery");
    add_file(report);
    report->add_option("--functor", functor_name, "functor to check");
    report->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));
    report->add_option("--seed", seed, "seed for size-3 probe sampling");
    report->add_flag("--timestamps", timestamps, "include a timestamp in text output");

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate->parsed()) {
            Bundle b = load(path);
            for (const auto& n : b.cat_names) std::cout << "category " << n << ": ok\n";
            for (const auto& f : b.functors) std::cout << "functor " << f.name << ": ok\n";
            for (const auto& [n, s] : b.sigmas)
                std::cout << "sigma on " << n << ": ok (" << s.members.size() << " members)\n";
            for (const auto& [n, x] : b.presheaves) std::cout << "presheaf " << n << ": ok\n";
            return kHolds;
        }

        if (limits->parsed()) {
            Bundle b = load(path);
            int rc = kHolds;
            for (size_t i = 0; i < b.cats.size(); ++i) {
                if (!category.empty() && b.cat_names[i] != category) continue;
                Verdict v = has_finite_limits(*b.cats[i]);
                std::cout << b.cat_names[i] << ": "
                          << (v.holds ? "has finite limits" : "lacks finite limits (" +
                                                              v.counterexample + ")")
                          << "\n";
                if (!v.holds) rc = kFails;
            }
            return rc;
        }

        auto sigma_of = [&](const Bundle& b) -> const std::pair<std::string, SigmaSet>& {
            for (const auto& p : b.sigmas)
                if (category.empty() || p.first == category) return p;
            throw ParseError("the file declares no SIGMA" +
                             (category.empty() ? std::string()
                                               : " for category '" + category + "'"));
        };

        if (fractions->parsed()) {
            Bundle b = load(path);
            const auto& [cname, s] = sigma_of(b);
            Verdict v = check_right_fractions(*s.carrier, s);
            std::cout << "right fractions on " << cname << ": "
                      << (v.holds ? "hold" : "fail (" + v.counterexample + ")") << "\n";
            return v.holds ? kHolds : kFails;
        }

        if (localize_cmd->parsed()) {
            Bundle b = load(path);
            const auto& [cname, s] = sigma_of(b);
            if (Verdict v = check_right_fractions(*s.carrier, s); !v.holds) {
                std::cerr << "right fractions on " << cname << " fail: " << v.counterexample
                          << "\n";
                return kFails;
            }
            LocalizationResult loc = localize(b.find_cat(cname), s);
            emit(serialize_localization(loc, cname + "_localized"), out_path);
            return kHolds;
        }

        if (kan->parsed()) {
            Bundle b = load(path);
            const Functor& f = pick_functor(b, functor_name);
            const Presheaf* x = b.find_presheaf(presheaf_name);
            if (!x) throw ParseError("no presheaf named '" + presheaf_name + "' in the file");
            LeftKan lk = left_kan(f, *x);
            std::string cod = cat_name_of(b, f.cod);
            emit(serialize_category(cod, *f.cod) + "\n" +
                     serialize_presheaf(presheaf_name + "_extended", cod, lk.result),
                 out_path);
            return kHolds;
        }

        if (present->parsed()) {
            Bundle b = load(path);
            const Functor& f = pick_functor(b, functor_name);
            FullReport r;
            r.seed = seed;
            r.presentation = check_presentation(f);
            r.equivalence = check_universal_equivalence(f);
            r.oracle = run_oracle_battery(f, r.presentation.relation, seed);
            if (format == "json")
                std::cout << report_to_json(r, f.name).dump(2) << "\n";
            else
                std::cout << render_report_text(r, f.name);
            return conclusion_exit(r.presentation.conclusion);
        }

        if (equiv->parsed()) {
            Bundle b = load(path);
            const Functor& f = pick_functor(b, functor_name);
            EquivalenceReport r = check_universal_equivalence(f);
            std::cout << "hypotheses: " << (r.hypotheses_ok ? "met" : "not met") << "\n";
            std::cout << "equivalence of categories: "
                      << (r.equivalence.holds ? "yes" : "no (" + r.equivalence.counterexample +
                                                        ")")
                      << "\n";
            if (!r.hypotheses_ok) return kError;
            return r.equivalence.holds ? kHolds : kFails;
        }

        if (report->parsed()) {
            Bundle b = load(path);
            const Functor& f = pick_functor(b, functor_name);
            const SigmaSet* sigma = nullptr;
            for (const auto& [n, s] : b.sigmas)
                if (b.find_cat(n).get() == f.dom.get()) sigma = &s;
            FullReport r = full_report(f, sigma, seed);
            if (format == "json") {
                std::cout << report_to_json(r, f.name).dump(2) << "\n";
            } else {
                std::string ts;
                if (timestamps) {
                    char buf[64];
                    std::time_t now = std::time(nullptr);
                    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
                    ts = buf;
                }
                std::cout << render_report_text(r, f.name, ts);
            }
            return conclusion_exit(r.presentation.conclusion);
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kError;
    }
    return kError;
}
