#include "fincat/decision.hpp"

#include <algorithm>
#include <stdexcept>

#include "fincat/limits.hpp"

namespace fincat {

std::string to_string(Conclusion c) {
    switch (c) {
        case Conclusion::presentation: return "presentation";
        case Conclusion::hypotheses_not_met: return "hypotheses-not-met";
        case Conclusion::criterion_fails: return "criterion-fails";
    }
    return "?";
}

namespace {

// For a codomain object y with no isomorph in the image, look for
// retract data: x with α : Fx → y, β : y → Fx, α∘β = id_y. The retract
// is what an idempotent-splitting completion would supply, so naming
// it explains why the criterion missed only by non-splitness.
std::string retract_note(const Functor& f, ObjId y) {
    const FinCat& b = *f.cod;
    for (ObjId x = 0; x < f.dom->objects(); ++x) {
        ObjId fx = f.obj_map[x];
        for (MorId alpha : b.hom(fx, y))
            for (MorId beta : b.hom(y, fx))
                if (b.comp[alpha][beta] == b.identity(y))
                    return b.obj_name(y) + " is a retract of F(" + f.dom->obj_name(x) +
                           ") via (" + b.mor_name(alpha) + ", " + b.mor_name(beta) + ")";
    }
    return {};
}

}  // namespace

PresentationReport check_presentation(const Functor& f,
                                      const std::map<ObjId, Subcat>* choice) {
    if (Verdict v = validate_functor(f); !v.holds)
        throw std::invalid_argument("check_presentation: invalid functor: " + v.counterexample);

    PresentationReport r;
    r.domain = f.dom;
    r.domain_limits = has_finite_limits(*f.dom);
    if (r.domain_limits.holds) {
        r.preservation = preserves_finite_limits(f);
        r.preservation_checked = true;
    } else {
        r.notes.push_back("limit preservation not checked: domain lacks finite limits");
    }
    const bool hypotheses = r.domain_limits.holds && r.preservation.holds;

    r.ess_surj = is_essentially_surjective(f);
    if (!r.ess_surj.holds) {
        // The counterexample names the uncovered object; add retract data
        // when a split idempotent realizes it inside the image.
        for (ObjId y = 0; y < f.cod->objects(); ++y) {
            bool covered = false;
            for (ObjId x = 0; x < f.dom->objects() && !covered; ++x)
                for (MorId v : f.cod->hom(f.obj_map[x], y))
                    if (is_isomorphism(*f.cod, v).holds) { covered = true; break; }
            if (covered) continue;
            if (std::string note = retract_note(f, y); !note.empty()) r.notes.push_back(note);
        }
    }

    r.choice_supplied = choice != nullptr && !choice->empty();
    bool choice_ok = r.choice_supplied;
    if (r.choice_supplied) {
        for (const auto& [d, a] : *choice) {
            Verdict v = is_admissible(f, d, a);
            choice_ok = choice_ok && v.holds;
            r.admissibility.emplace_back(d, std::move(v));
        }
        for (ObjId d = 0; d < f.dom->objects(); ++d)
            if (!choice->count(d)) {
                choice_ok = false;
                r.notes.push_back("no subcategory chosen at " + f.dom->obj_name(d) +
                                  "; falling back to the full-C_d route");
                break;
            }
    }

    bool lifting_ok = true;
    for (ObjId d = 0; d < f.dom->objects(); ++d) {
        CommaCat cd = c_d(f, d);
        auto parent = std::make_shared<const CommaCat>(std::move(cd));
        std::vector<ObjId> all(parent->carrier->objects());
        for (size_t i = 0; i < all.size(); ++i) all[i] = static_cast<ObjId>(i);
        Verdict v = has_lifting_property(f, d, full_subcat(parent, std::move(all)));
        lifting_ok = lifting_ok && v.holds;
        r.lifting.emplace_back(d, std::move(v));
    }

    if (choice_ok) {
        r.relation_label = "S_A";
        r.relation = relation_s_a(*choice);
    } else {
        if (r.choice_supplied)
            r.notes.push_back("supplied choice not admissible everywhere; relation taken as S_C");
        r.relation_label = "S_C";
        r.relation = relation_s_c(f);
    }

    const bool criteria = r.ess_surj.holds && (choice_ok || lifting_ok);
    if (!hypotheses)
        r.conclusion = Conclusion::hypotheses_not_met;
    else if (criteria)
        r.conclusion = Conclusion::presentation;
    else
        r.conclusion = Conclusion::criterion_fails;

    if (r.conclusion == Conclusion::presentation)
        r.notes.push_back("positive verdict certifies the presentation with relation " +
                          r.relation_label);
    return r;
}

EquivalenceReport check_universal_equivalence(const Functor& f) {
    if (Verdict v = validate_functor(f); !v.holds)
        throw std::invalid_argument("check_universal_equivalence: invalid functor: " +
                                    v.counterexample);
    EquivalenceReport r;
    r.domain_limits = has_finite_limits(*f.dom);
    if (r.domain_limits.holds) {
        r.preservation = preserves_finite_limits(f);
        r.preservation_checked = true;
    }
    r.hypotheses_ok = r.domain_limits.holds && r.preservation.holds;
    if (!r.hypotheses_ok)
        r.notes.push_back("hypotheses not met; the equivalence test below is informative only");

    r.equivalence = is_equivalence(f);

    // Direct hom-set cross-check: g ↦ Fg is a bijection hom(d, e) →
    // hom(Fd, Fe) for all d, e. Independent of the equivalence search.
    r.hom_bijection = Verdict::pass();
    const FinCat& c = *f.dom;
    const FinCat& b = *f.cod;
    for (ObjId d = 0; d < c.objects() && r.hom_bijection.holds; ++d)
        for (ObjId e = 0; e < c.objects(); ++e) {
            const auto& src = c.hom(d, e);
            const auto& dst = b.hom(f.obj_map[d], f.obj_map[e]);
            std::vector<MorId> image;
            image.reserve(src.size());
            for (MorId g : src) image.push_back(f.mor_map[g]);
            std::sort(image.begin(), image.end());
            image.erase(std::unique(image.begin(), image.end()), image.end());
            if (image.size() != src.size() || image != dst) {
                r.hom_bijection = Verdict::fail(
                    "hom(" + c.obj_name(d) + ", " + c.obj_name(e) + ") → hom(F" +
                    c.obj_name(d) + ", F" + c.obj_name(e) + ") is not a bijection");
                break;
            }
        }
    return r;
}

PresentationReport check_presentation_via_adjunction(const Adjunction& a) {
    if (Verdict v = verify_adjunction(a); !v.holds)
        throw std::invalid_argument("check_presentation_via_adjunction: invalid adjunction: " +
                                    v.counterexample);
    const Functor& f = a.left;
    PresentationReport r;
    r.domain = f.dom;
    r.domain_limits = has_finite_limits(*f.dom);
    r.relation_label = "S_C";
    r.relation = relation_s_c(f);

    SigmaSet sc = make_sigma(f.dom, r.relation);
    Verdict rf = check_right_fractions(*f.dom, sc);
    Verdict g_full = is_full(a.right);
    Verdict g_faithful = is_faithful(a.right);
    r.ess_surj = is_essentially_surjective(f);

    if (!r.domain_limits.holds || !rf.holds || !g_full.holds || !g_faithful.holds) {
        r.conclusion = Conclusion::hypotheses_not_met;
        if (!rf.holds) r.notes.push_back("right fractions fail for S_C: " + rf.counterexample);
        if (!g_full.holds)
            r.notes.push_back("right adjoint is not full: " + g_full.counterexample);
        if (!g_faithful.holds)
            r.notes.push_back("right adjoint is not faithful: " + g_faithful.counterexample);
        return r;
    }

    LocalizationResult loc = localize(f.dom, sc);
    Functor h = induced_functor(f, loc);
    Verdict h_eq = is_equivalence(h);
    r.notes.push_back("factorization through the localization at S_C constructed; "
                      "induced comparison functor is " +
                      std::string(h_eq.holds ? "an equivalence" : "NOT an equivalence"));
    r.conclusion = h_eq.holds ? Conclusion::presentation : Conclusion::criterion_fails;
    if (!h_eq.holds) r.notes.push_back(h_eq.counterexample);
    return r;
}

OracleBattery run_oracle_battery(const Functor& f, const std::vector<MorId>& relation,
                                 std::uint32_t seed, int sample_count) {
    OracleBattery b;
    KanContext ctx = make_kan_context(f);

    b.counit_iso = Verdict::pass();
    auto check_counit = [&](const Presheaf& y) {
        ++b.codomain_probes;
        Verdict v = is_natural_iso(counit(f, y, &ctx));
        if (!v.holds) {
            b.counit_iso = Verdict::fail("counit fails on a codomain probe (cardinalities " +
                                         [&] {
                                             std::string s;
                                             for (int c : y.card) s += std::to_string(c) + " ";
                                             return s;
                                         }() + "): " + v.counterexample);
        }
        return b.counit_iso.holds;
    };
    enumerate_presheaves(f.cod, 2, check_counit);
    if (b.counit_iso.holds)
        for (const Presheaf& y : sample_presheaves(f.cod, 3, seed, sample_count))
            if (!check_counit(y)) break;

    b.unit_bijective = Verdict::pass();
    auto inverts_relation = [&](const Presheaf& x) {
        for (MorId s : relation) {
            const auto& a = x.act[s];
            if (static_cast<int>(a.size()) != x.card[f.dom->src(s)]) return false;
            std::vector<bool> hit(x.card[f.dom->src(s)], false);
            for (int v : a) {
                if (hit[v]) return false;
                hit[v] = true;
            }
        }
        return true;
    };
    auto check_unit = [&](const Presheaf& x) {
        if (!inverts_relation(x)) return true;
        ++b.inverting_probes;
        Verdict v = is_natural_iso(unit(f, x, &ctx));
        if (!v.holds)
            b.unit_bijective = Verdict::fail("unit fails on a relation-inverting probe: " +
                                             v.counterexample);
        return b.unit_bijective.holds;
    };
    enumerate_presheaves(f.dom, 2, check_unit);
    if (b.unit_bijective.holds)
        for (const Presheaf& x : sample_presheaves(f.dom, 3, seed + 1, sample_count))
            if (!check_unit(x)) break;

    b.kan_representables = Verdict::pass();
    for (ObjId y = 0; y < f.dom->objects(); ++y) {
        Verdict v = is_natural_iso(kan_representable_comparison(f, y));
        if (!v.holds) {
            b.kan_representables = Verdict::fail(
                "Kan extension of the presheaf represented by " + f.dom->obj_name(y) +
                " is not the representable at its image: " + v.counterexample);
            break;
        }
    }
    return b;
}

Verdict cross_validate(const Functor& f, const PresentationReport& report,
                       std::uint32_t seed) {
    if (report.conclusion != Conclusion::presentation)
        return Verdict::fail("report does not certify a presentation");
    OracleBattery b = run_oracle_battery(f, report.relation, seed);
    if (!b.counit_iso.holds) return b.counit_iso;
    if (!b.unit_bijective.holds) return b.unit_bijective;
    if (!b.kan_representables.holds) return b.kan_representables;
    return Verdict::pass({"counit bijective on " + std::to_string(b.codomain_probes) + " probes",
                          "unit bijective on " + std::to_string(b.inverting_probes) +
                              " relation-inverting probes",
                          "representables extend to representables"});
}

Verdict check_monotonicity(const Functor& f, const SigmaSet& sigma) {
    std::vector<MorId> sc = relation_s_c(f);
    for (MorId s : sigma.members)
        if (!std::binary_search(sc.begin(), sc.end(), s))
            return Verdict::fail("sigma member " + f.dom->mor_name(s) +
                                 " is not inverted by the functor");
    if (Verdict rf = check_right_fractions(*f.dom, sigma); !rf.holds)
        return Verdict::pass({"vacuous: sigma admits no calculus of right fractions (" +
                              rf.counterexample + ")"});

    std::map<ObjId, Subcat> choice;
    for (ObjId d = 0; d < f.dom->objects(); ++d) choice.emplace(d, a_sigma(f, sigma, d));
    PresentationReport via_sigma = check_presentation(f, &choice);
    if (via_sigma.conclusion != Conclusion::presentation)
        return Verdict::pass({"vacuous: the sigma route is not a presentation"});

    PresentationReport via_sc = check_presentation(f);
    if (via_sc.conclusion != Conclusion::presentation)
        return Verdict::fail("sigma route yields a presentation but the S_C route does not");
    return Verdict::pass({"presentation upgrades from the sigma relation to S_C"});
}

FullReport full_report(const Functor& f, const SigmaSet* sigma, std::uint32_t seed) {
    FullReport r;
    r.seed = seed;
    r.presentation = check_presentation(f);
    r.equivalence = check_universal_equivalence(f);
    r.oracle = run_oracle_battery(f, r.presentation.relation, seed);
    if (sigma) r.monotonicity = check_monotonicity(f, *sigma);
    return r;
}

}  // namespace fincat
