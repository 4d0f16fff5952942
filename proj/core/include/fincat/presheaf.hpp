#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "fincat/comma.hpp"
#include "fincat/functor.hpp"

namespace fincat {

/// A Set-valued presheaf on a finite category: finite value sets
/// (elements 0..card-1) and a contravariant action. For u : x → y,
/// act[u] is the function value(y) → value(x).
struct Presheaf {
    CatPtr base;
    std::vector<int> card;
    std::vector<std::vector<int>> act;
    std::vector<std::vector<std::string>> elem_names;  // optional, for files

    std::string elem_name(ObjId x, int v) const;
};

Verdict validate_presheaf(const Presheaf& x);

/// Yoneda: value(x) = hom(x, d), action by pre-composition. Element i
/// of value(x) is the i-th entry of hom(x, d).
Presheaf representable(CatPtr c, ObjId d);

/// Position of a morphism inside its hom-set list.
int index_in_hom(const FinCat& c, ObjId x, ObjId y, MorId m);

/// F*Y = Y ∘ F.
Presheaf restrict_along(const Functor& f, const Presheaf& y);

/// A finite diagram of finite sets: covariant edges carry functions
/// node_card[from] → node_card[to].
struct SetDiagram {
    struct Edge {
        int from;
        int to;
        std::vector<int> map;
    };
    std::vector<int> node_card;
    std::vector<Edge> edges;
};

/// Colimit of a SetDiagram: the quotient of the disjoint union by the
/// relation generated by the edges. Classes are ordered by their
/// lexicographically smallest (node, element) member.
struct ColimitSet {
    int classes = 0;
    std::vector<std::vector<int>> copr;      // per node
    std::vector<std::pair<int, int>> rep;    // per class
};

ColimitSet colimit_set(const SetDiagram& d);

/// Left Kan extension along f, computed object-wise as the colimit over
/// (b ↓ F)^op. The per-object comma categories and colimits are kept
/// for unit/counit component construction.
struct LeftKan {
    Presheaf result;  // on cod(f)
    std::vector<CommaCat> commas;
    std::vector<ColimitSet> colims;
};

/// The per-codomain-object comma categories (b ↓ F), which depend only
/// on f. Precompute once when extending many presheaves along the same
/// functor.
struct KanContext {
    std::vector<CommaCat> commas;
};

KanContext make_kan_context(const Functor& f);

LeftKan left_kan(const Functor& f, const Presheaf& x, const KanContext* ctx = nullptr);

struct NatTrans {
    Presheaf source;
    Presheaf target;
    std::vector<std::vector<int>> comp;  // per object of the base
};

Verdict validate_nat(const NatTrans& t);

/// Every component a bijection (naturality is validated first).
Verdict is_natural_iso(const NatTrans& t);

/// ε : F_*F^*Y → Y, collapsing [⟨c, β⟩, v] to Y(β)(v).
NatTrans counit(const Functor& f, const Presheaf& y, const KanContext* ctx = nullptr);

/// η_X : X → F^*F_*X, the coprojection at node ⟨d, id_Fd⟩.
NatTrans unit(const Functor& f, const Presheaf& x, const KanContext* ctx = nullptr);

/// The canonical comparison F_* hom(-, y) → hom(-, Fy) sending
/// [⟨c, β⟩, g] to Fg ∘ β.
NatTrans kan_representable_comparison(const Functor& f, ObjId y);

/// Exhaustive enumeration of presheaves with value sets of size
/// 1..max_card, in a fixed deterministic order. The callback returns
/// false to stop; enumerate_presheaves returns false iff stopped.
bool enumerate_presheaves(CatPtr base, int max_card,
                          const std::function<bool(const Presheaf&)>& fn);

/// Seeded sample: up to `count` presheaves with value sets of size
/// 1..max_card found by randomized search.
std::vector<Presheaf> sample_presheaves(CatPtr base, int max_card, std::uint32_t seed,
                                        int count);

/// All natural transformations source → target (exhaustive).
std::vector<NatTrans> enumerate_nat_trans(const Presheaf& source, const Presheaf& target);

}  // namespace fincat
