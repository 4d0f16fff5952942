#include <doctest.h>

#include <algorithm>

#include "corpus.hpp"
#include "fincat/decision.hpp"

using namespace fincat;

TEST_CASE("equivalences between finite-limit categories are presentations") {
    for (CatPtr c : {corpus::chain(3), corpus::walking_iso(), corpus::indiscrete(2)}) {
        PresentationReport r = check_presentation(identity_functor(c));
        CHECK(r.conclusion == Conclusion::presentation);
        // relation S_C is exactly the isomorphisms
        for (MorId u : r.relation) CHECK(is_isomorphism(*c, u).holds);
    }
}

TEST_CASE("boundary to point is hypotheses-not-met") {
    PresentationReport r = check_presentation(corpus::boundary_to_point());
    CHECK(r.conclusion == Conclusion::hypotheses_not_met);
    CHECK_FALSE(r.domain_limits.holds);
    CHECK_FALSE(r.preservation_checked);
}

TEST_CASE("boundary to arrow is hypotheses-not-met and fails lifting at 0") {
    PresentationReport r = check_presentation(corpus::boundary_to_arrow());
    CHECK(r.conclusion == Conclusion::hypotheses_not_met);
    REQUIRE(r.lifting.size() == 2);
    CHECK(r.lifting[0].first == 0);
    CHECK_FALSE(r.lifting[0].second.holds);
    CHECK(r.lifting[0].second.counterexample.find("u") != std::string::npos);
}

TEST_CASE("localization functors are presentations with relation s_c") {
    for (const auto& inst : corpus::proper_sigma_instances()) {
        CAPTURE(inst.name);
        LocalizationResult loc = localize(inst.sigma.carrier, inst.sigma);
        PresentationReport r = check_presentation(loc.p);
        CHECK(r.conclusion == Conclusion::presentation);
        CHECK(r.relation_label == "S_C");
    }
}

TEST_CASE("positive corpus instances are presentations") {
    for (const auto& inst : corpus::positive_instances()) {
        CAPTURE(inst.name);
        PresentationReport r = check_presentation(inst.f);
        CHECK(r.conclusion == Conclusion::presentation);
    }
}

TEST_CASE("negative corpus instances fail the criterion, not the hypotheses") {
    for (const auto& inst : corpus::negative_instances()) {
        CAPTURE(inst.name);
        PresentationReport r = check_presentation(inst.f);
        CHECK(r.conclusion == Conclusion::criterion_fails);
        CHECK_FALSE(r.ess_surj.holds);
    }
}

TEST_CASE("supplied admissible choices switch the relation to s_a") {
    for (const auto& inst : corpus::proper_sigma_instances()) {
        CAPTURE(inst.name);
        LocalizationResult loc = localize(inst.sigma.carrier, inst.sigma);
        std::map<ObjId, Subcat> choice;
        for (ObjId d = 0; d < loc.base->objects(); ++d)
            choice.emplace(d, a_sigma(loc.p, inst.sigma, d));
        PresentationReport r = check_presentation(loc.p, &choice);
        CHECK(r.conclusion == Conclusion::presentation);
        CHECK(r.relation_label == "S_A");
        CHECK(r.relation == inst.sigma.members);
    }
}

TEST_CASE("identity functor is a universal equivalence") {
    EquivalenceReport r = check_universal_equivalence(identity_functor(corpus::chain(3)));
    CHECK(r.hypotheses_ok);
    CHECK(r.equivalence.holds);
    CHECK(r.hom_bijection.holds);
    CHECK(r.holds());
}

TEST_CASE("the idempotent splitting reports hypotheses-not-met") {
    EquivalenceReport r = check_universal_equivalence(corpus::e_to_split());
    CHECK_FALSE(r.hypotheses_ok);
    CHECK_FALSE(r.domain_limits.holds);
}

TEST_CASE("arrow-to-point collapse meets the hypotheses but is no equivalence") {
    EquivalenceReport r = check_universal_equivalence(corpus::arrow_to_point());
    CHECK(r.hypotheses_ok);
    CHECK_FALSE(r.equivalence.holds);
    CHECK_FALSE(r.hom_bijection.holds);
}

TEST_CASE("hom bijection cross-check agrees with the equivalence search") {
    for (const auto& inst : corpus::hypothesis_instances()) {
        CAPTURE(inst.name);
        EquivalenceReport r = check_universal_equivalence(inst.f);
        CHECK((is_full(inst.f).holds && is_faithful(inst.f).holds) ==
              r.hom_bijection.holds);
    }
}

TEST_CASE("identity adjunction yields a presentation") {
    CatPtr c = corpus::chain(3);
    Adjunction a;
    a.left = identity_functor(c);
    a.right = identity_functor(c);
    for (ObjId x = 0; x < c->objects(); ++x) {
        a.unit.push_back(c->identity(x));
        a.counit.push_back(c->identity(x));
    }
    PresentationReport r = check_presentation_via_adjunction(a);
    CHECK(r.conclusion == Conclusion::presentation);
}

TEST_CASE("the reflective instance yields a presentation with relation s_c") {
    PresentationReport r = check_presentation_via_adjunction(corpus::chain_reflection());
    CHECK(r.conclusion == Conclusion::presentation);
    CHECK(r.relation_label == "S_C");
}

TEST_CASE("a non-fully-faithful right adjoint is rejected as hypotheses") {
    // Swap the roles in the reflection: the reflector is not fully faithful.
    Adjunction refl = corpus::chain_reflection();
    // Build the dual adjunction on opposites: right adjoint becomes the
    // reflector, which is not full (hom(top, mid) has no preimage).
    CatPtr closed_op = share(opposite(*refl.right.dom));
    CatPtr full_op = share(opposite(*refl.right.cod));
    Adjunction dual;
    dual.left = opposite_functor(refl.right, closed_op, full_op);
    dual.right = opposite_functor(refl.left, full_op, closed_op);
    dual.unit = refl.counit;
    dual.counit = refl.unit;
    REQUIRE(verify_adjunction(dual).holds);
    PresentationReport r = check_presentation_via_adjunction(dual);
    CHECK(r.conclusion == Conclusion::hypotheses_not_met);
    bool names_failure = std::any_of(r.notes.begin(), r.notes.end(), [](const auto& n) {
        return n.find("not full") != std::string::npos ||
               n.find("not faithful") != std::string::npos ||
               n.find("fractions") != std::string::npos;
    });
    CHECK(names_failure);
}

TEST_CASE("cross-validation passes on positive instances") {
    int checked = 0;
    for (const auto& inst : corpus::positive_instances()) {
        if (inst.f.dom->objects() > 4) continue;  // keep the unit suite quick
        CAPTURE(inst.name);
        PresentationReport r = check_presentation(inst.f);
        REQUIRE(r.conclusion == Conclusion::presentation);
        CHECK(cross_validate(inst.f, r).holds);
        if (++checked == 6) break;
    }
    CHECK(checked > 0);
}

TEST_CASE("cross-validation refuses non-presentation reports") {
    Functor f = corpus::boundary_to_point();
    PresentationReport r = check_presentation(f);
    CHECK_FALSE(cross_validate(f, r).holds);
}

TEST_CASE("oracle battery finds the failing counit on boundary-to-arrow") {
    Functor f = corpus::boundary_to_arrow();
    OracleBattery b = run_oracle_battery(f, relation_s_c(f), 0, 2);
    CHECK_FALSE(b.counit_iso.holds);
}

TEST_CASE("the idempotent splitting passes the counit battery anyway") {
    Functor f = corpus::e_to_split();
    FullReport r = full_report(f);
    CHECK(r.presentation.conclusion == Conclusion::hypotheses_not_met);
    CHECK(r.oracle.counit_iso.holds);
    CHECK(r.oracle.codomain_probes > 0);
}

TEST_CASE("sigma presentations upgrade to the full relation") {
    for (const auto& inst : corpus::proper_sigma_instances()) {
        CAPTURE(inst.name);
        LocalizationResult loc = localize(inst.sigma.carrier, inst.sigma);
        // the sigma is proper: p inverts something outside it
        std::vector<MorId> sc = relation_s_c(loc.p);
        CHECK(sc.size() > inst.sigma.members.size());
        CHECK(check_monotonicity(loc.p, inst.sigma).holds);
    }
}

TEST_CASE("monotonicity rejects sigmas that are not inverted") {
    Functor f = identity_functor(corpus::arrow_cat());
    SigmaSet s = make_sigma(f.dom, {0});  // u is not an isomorphism
    CHECK_FALSE(check_monotonicity(f, s).holds);
}
