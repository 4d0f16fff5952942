#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fincat/comma.hpp"
#include "fincat/fractions.hpp"
#include "fincat/functor.hpp"
#include "fincat/presheaf.hpp"

namespace fincat {

enum class Conclusion { presentation, hypotheses_not_met, criterion_fails };

std::string to_string(Conclusion c);

/// Everything the top-level criterion looked at. The conclusion is a
/// pure function of the sub-verdicts; every negative conclusion
/// carries at least one counterexample among them.
struct PresentationReport {
    CatPtr domain;  // for rendering names
    Verdict domain_limits;
    Verdict preservation;          // skipped (holds=false, empty) when domain_limits fails
    bool preservation_checked = false;
    Verdict ess_surj;
    std::vector<std::pair<ObjId, Verdict>> lifting;        // C_d route, always run
    std::vector<std::pair<ObjId, Verdict>> admissibility;  // only for supplied choices
    bool choice_supplied = false;
    std::string relation_label;    // "S_A" or "S_C"
    std::vector<MorId> relation;   // morphisms of dom(f)
    Conclusion conclusion = Conclusion::criterion_fails;
    std::vector<std::string> notes;
};

/// Decides the presentation criterion for f. With a choice of
/// subcategories A_d the admissibility route is used and the relation
/// is S_A; without one (or when a supplied choice fails) the fallback
/// is the lifting property of the whole C_d, with relation S_C.
PresentationReport check_presentation(const Functor& f,
                                      const std::map<ObjId, Subcat>* choice = nullptr);

struct EquivalenceReport {
    Verdict domain_limits;
    Verdict preservation;
    bool preservation_checked = false;
    bool hypotheses_ok = false;
    Verdict equivalence;
    Verdict hom_bijection;  // g ↦ Fg a bijection hom(d,e) → hom(Fd,Fe), checked directly
    std::vector<std::string> notes;

    bool holds() const { return hypotheses_ok && equivalence.holds; }
};

/// Under the finite-limit hypotheses the universal statement reduces
/// to f being an equivalence of categories; the hom-set bijection is
/// cross-checked independently of the equivalence search.
EquivalenceReport check_universal_equivalence(const Functor& f);

/// The adjunction route: domain finite limits, right fractions for
/// S_C, fully faithful right adjoint. On success the localization at
/// S_C is materialized and the induced comparison functor is verified
/// to be an equivalence.
PresentationReport check_presentation_via_adjunction(const Adjunction& a);

/// Probe-presheaf battery: counit components bijective on every probe
/// over the codomain (exhaustive to value-size 2, seeded sample at 3),
/// unit components bijective on relation-inverting probes over the
/// domain, and the canonical comparison for Kan extensions of
/// representables a natural isomorphism.
struct OracleBattery {
    Verdict counit_iso;
    Verdict unit_bijective;
    Verdict kan_representables;
    int codomain_probes = 0;
    int inverting_probes = 0;

    bool all_pass() const {
        return counit_iso.holds && unit_bijective.holds && kan_representables.holds;
    }
};

OracleBattery run_oracle_battery(const Functor& f, const std::vector<MorId>& relation,
                                 std::uint32_t seed, int sample_count = 5);

/// Confirms a positive report against the oracle battery. Fails (as a
/// finding, not an error) when the report is not a presentation
/// verdict or when any battery check fails.
Verdict cross_validate(const Functor& f, const PresentationReport& report,
                       std::uint32_t seed = 0);

/// If the right-fractions subset sigma ⊆ S_C yields a presentation
/// through the A^Σ_d choice, the S_C route must as well. Returns that
/// implication as a verdict; vacuously passes when the sigma route is
/// negative.
Verdict check_monotonicity(const Functor& f, const SigmaSet& sigma);

/// One-stop orchestration for reporting: presentation criterion,
/// equivalence test, oracle battery (always run, even when hypotheses
/// fail — the battery findings are part of the report), and the
/// monotonicity upgrade when a sigma set is supplied.
struct FullReport {
    PresentationReport presentation;
    EquivalenceReport equivalence;
    OracleBattery oracle;
    std::optional<Verdict> monotonicity;
    std::uint32_t seed = 0;
};

FullReport full_report(const Functor& f, const SigmaSet* sigma = nullptr,
                       std::uint32_t seed = 0);

}  // namespace fincat
