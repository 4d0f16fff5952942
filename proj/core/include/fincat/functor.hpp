#pragma once

#include <string>
#include <vector>

#include "fincat/category.hpp"

namespace fincat {

/// A functor as explicit object and morphism assignments. Domain and
/// codomain are shared so derived categories (commas, localizations,
/// opposites) can hand out functors without lifetime puzzles.
struct Functor {
    CatPtr dom;
    CatPtr cod;
    std::vector<ObjId> obj_map;  // indexed by dom ObjId
    std::vector<MorId> mor_map;  // indexed by dom MorId
    std::string name;

    ObjId on_obj(ObjId x) const { return obj_map[x]; }
    MorId on_mor(MorId f) const { return mor_map[f]; }
};

Verdict validate_functor(const Functor& f);

Functor identity_functor(CatPtr c);

/// g after f; domains must match by pointer or table equality.
Functor compose_functors(const Functor& g, const Functor& f);

/// The same assignment viewed between the opposite categories.
Functor opposite_functor(const Functor& f, CatPtr op_dom, CatPtr op_cod);

Verdict is_full(const Functor& f);
Verdict is_faithful(const Functor& f);

/// Searches, per codomain object, for a domain object whose image is
/// isomorphic to it; witnesses record (object, iso).
Verdict is_essentially_surjective(const Functor& f);

/// Full + faithful + essentially surjective, with each sub-check
/// reported separately in the witnesses / counterexample.
Verdict is_equivalence(const Functor& f);

/// Unit/counit presentation of an adjunction left ⊣ right.
struct Adjunction {
    Functor left;   // F : C -> B
    Functor right;  // G : B -> C
    std::vector<MorId> unit;    // per c in C: η_c : c -> GFc
    std::vector<MorId> counit;  // per b in B: ε_b : FGb -> b
};

/// Exhaustive check of unit/counit endpoints, naturality squares and
/// both triangle identities.
Verdict verify_adjunction(const Adjunction& a);

}  // namespace fincat
