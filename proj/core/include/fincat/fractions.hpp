#pragma once

#include <vector>

#include "fincat/comma.hpp"
#include "fincat/functor.hpp"

namespace fincat {

/// A set Σ of morphisms in a carrier category. Members are kept sorted.
struct SigmaSet {
    CatPtr carrier;
    std::vector<MorId> members;

    bool contains(MorId m) const;
};

SigmaSet make_sigma(CatPtr carrier, std::vector<MorId> members);

/// A right-fraction span: s the denominator (s : x' → x, s ∈ Σ) and f
/// the numerator (f : x' → y), representing f ∘ s^{-1} : x ⇢ y.
struct Fraction {
    MorId s;
    MorId f;
};

/// RF1: Σ contains all identities and is closed under composition.
/// RF2 (right Ore): for s : y' → y in Σ and f : x → y there are
/// t : w → x in Σ and g : w → y' with s∘g = f∘t.
/// RF3 (right cancellability): s∘f = s∘g with s in Σ implies f∘t = g∘t
/// for some t in Σ.
Verdict check_right_fractions(const FinCat& c, const SigmaSet& sigma);

/// The localization C[Σ⁻¹] materialized as a fresh FinCat: objects are
/// those of C; morphisms are equivalence classes of right fractions
/// ordered by their lexicographically smallest representative.
struct LocalizationResult {
    CatPtr base;
    SigmaSet sigma;
    CatPtr quotient;
    Functor p;                  // base -> quotient, f ↦ [id, f]
    std::vector<Fraction> rep;  // canonical representative per quotient MorId
    std::vector<std::vector<MorId>> class_table;  // class_table[s][f], kNoMor if not a fraction

    MorId class_of(MorId s, MorId f) const { return class_table[s][f]; }
};

/// Requires certified RF axioms; throws std::invalid_argument otherwise.
LocalizationResult localize(CatPtr c, SigmaSet sigma);

/// H : C[Σ⁻¹] → cod(f) with H∘p = f on the nose; H([s, g]) = Fg∘(Fs)⁻¹.
/// Requires every σ ∈ Σ to be inverted by f; well-definedness is
/// asserted across all representatives.
Functor induced_functor(const Functor& f, const LocalizationResult& loc);

/// A^Σ_d: the full subcategory of C_d on objects ⟨e, φ⟩ with φ ∈ Σ.
/// Requires every σ ∈ Σ to be inverted by f.
Subcat a_sigma(const Functor& f, const SigmaSet& sigma, ObjId d);

/// Left-fraction duals, defined through the opposite category.
Verdict check_left_fractions(const FinCat& c, const SigmaSet& sigma);
LocalizationResult localize_left(CatPtr c, SigmaSet sigma);

}  // namespace fincat
