#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "fincat/functor.hpp"

namespace fincat {

/// A comma category materialized as a fresh FinCat. obj_label[i] is the
/// defining pair of carrier object i: (object of the source category,
/// the structure morphism in the base). mor_label[m] is the underlying
/// morphism of carrier morphism m. proj is the projection functor from
/// the carrier to the source category.
struct CommaCat {
    CatPtr carrier;
    std::vector<std::pair<ObjId, MorId>> obj_label;
    std::vector<MorId> mor_label;
    Functor proj;

    int find_object(ObjId e, MorId structure) const;
    int find_morphism(int from, int to, MorId label) const;
};

/// (L ↓ k): objects ⟨j, u : Lj → k⟩; morphisms ψ : j1 → j2 with
/// u2 ∘ Lψ = u1. The optional filter keeps only objects it accepts
/// (used for C_d); the result is the full subcategory on those.
CommaCat comma_over(const Functor& l, ObjId k,
                    const std::function<bool(ObjId, MorId)>& filter = {});

/// (b ↓ F): objects ⟨c, β : b → Fc⟩; morphisms ψ : c1 → c2 with
/// Fψ ∘ β1 = β2.
CommaCat comma_under(const Functor& f, ObjId b);

/// C_d: the full subcategory of (C ↓ d) on objects ⟨e, φ⟩ with Fφ
/// invertible. ⟨d, id_d⟩ is always present.
CommaCat c_d(const Functor& f, ObjId d);

/// B_d = (Fd ↓ F).
CommaCat b_d(const Functor& f, ObjId d);

/// C_d, B_d and the comparison functor F_d : C_d → B_d sending
/// ⟨e, φ⟩ to ⟨e, (Fφ)^{-1}⟩ and ψ to ψ.
struct CdSystem {
    std::shared_ptr<const CommaCat> cd;
    std::shared_ptr<const CommaCat> bd;
    Functor fd;
};
CdSystem build_cd_system(const Functor& f, ObjId d);

/// A not-necessarily-full subcategory of a comma category, as explicit
/// carrier object/morphism subsets (sorted, identity- and
/// composition-closed).
struct Subcat {
    std::shared_ptr<const CommaCat> parent;
    std::vector<ObjId> objects;
    std::vector<MorId> morphisms;
};

Verdict validate_subcat(const Subcat& a);

/// Full subcategory on the given carrier objects.
Subcat full_subcat(std::shared_ptr<const CommaCat> parent, std::vector<ObjId> objects);

/// The subcategory as its own FinCat, with the inclusion into the
/// parent carrier.
struct SubFinCat {
    CatPtr cat;
    Functor inclusion;  // cat -> parent carrier
};
SubFinCat materialize(const Subcat& a);

/// Non-empty with one component in the undirected object graph whose
/// edges are the morphisms.
Verdict is_connected(const FinCat& j);

/// Non-empty; every object pair admits a common source span; every
/// parallel pair is equalized by pre-composition with some morphism.
Verdict is_cofiltered(const FinCat& j);

/// Every comma category (l ↓ k) is non-empty and connected.
Verdict is_initial_functor(const Functor& l);

/// For every ⟨e, δ⟩ in B_d there are ⟨e', φ⟩ in a and ψ : e' → e with
/// δ ∘ Fφ = Fψ. Witnesses record one (δ, φ, ψ) per B_d object.
/// Throws std::invalid_argument if a is not a subcategory of C_d(f, d).
Verdict has_lifting_property(const Functor& f, ObjId d, const Subcat& a);

/// Non-empty + cofiltered + lifting. Emptiness is rejected outright:
/// an empty subcategory can never witness the lifting condition.
Verdict is_admissible(const Functor& f, ObjId d, const Subcat& a);

/// S_A: labels φ of the chosen subcategory objects, over all d.
std::vector<MorId> relation_s_a(const std::map<ObjId, Subcat>& choice);

/// S_C: all morphisms of dom(f) mapped to an isomorphism.
std::vector<MorId> relation_s_c(const Functor& f);

}  // namespace fincat
