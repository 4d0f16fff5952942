#pragma once

#include <memory>
#include <string>
#include <vector>

namespace fincat {

/// Dense small-integer identifiers, stable within one FinCat.
using ObjId = int;
using MorId = int;

inline constexpr MorId kNoMor = -1;
inline constexpr ObjId kNoObj = -1;

struct Arrow {
    ObjId src;
    ObjId tgt;
};

/// Outcome of a decidable check. Exactly one of witnesses/counterexample
/// is populated, depending on whether the property is universally or
/// existentially quantified. All searches run in ascending-identifier
/// order, so the reported data is deterministic.
struct Verdict {
    bool holds = false;
    std::vector<std::string> witnesses;
    std::string counterexample;

    explicit operator bool() const { return holds; }

    static Verdict pass() { return Verdict{true, {}, {}}; }
    static Verdict pass(std::vector<std::string> w) {
        return Verdict{true, std::move(w), {}};
    }
    static Verdict fail(std::string why) {
        return Verdict{false, {}, std::move(why)};
    }
};

/// A finite category as explicit tables. Identities are explicit in
/// memory; comp[g][f] is g∘f, or kNoMor when tgt(f) != src(g).
/// Immutable after construction (by convention; all library operations
/// take const references or shared pointers).
struct FinCat {
    std::vector<std::string> obj_names;
    std::vector<std::string> mor_names;
    std::vector<Arrow> arrows;                  // indexed by MorId
    std::vector<MorId> id_of;                   // indexed by ObjId
    std::vector<std::vector<MorId>> comp;       // comp[g][f]
    std::vector<std::vector<std::vector<MorId>>> homs; // homs[x][y], sorted

    int objects() const { return static_cast<int>(id_of.size()); }
    int morphisms() const { return static_cast<int>(arrows.size()); }
    ObjId src(MorId f) const { return arrows[f].src; }
    ObjId tgt(MorId f) const { return arrows[f].tgt; }
    MorId identity(ObjId x) const { return id_of[x]; }
    bool is_identity(MorId f) const;
    MorId compose(MorId g, MorId f) const { return comp[g][f]; }
    const std::vector<MorId>& hom(ObjId x, ObjId y) const { return homs[x][y]; }

    std::string obj_name(ObjId x) const;
    std::string mor_name(MorId f) const;

    /// Table equality on the nose (names included).
    bool same_tables(const FinCat& other) const;

    /// Recomputes the materialized hom-sets from the arrow table.
    void rebuild_homs();
};

using CatPtr = std::shared_ptr<const FinCat>;

inline CatPtr share(FinCat c) {
    return std::make_shared<const FinCat>(std::move(c));
}

/// Convenience constructor used by builders and the parser. Morphism
/// specs get MorIds 0..n-1 in order; identities are appended after them.
/// Composition entries list (g, f, g∘f) for non-identity composable
/// pairs; identity-law entries are filled in automatically.
struct MorSpec {
    std::string name;
    ObjId src;
    ObjId tgt;
};

struct CompSpec {
    int g;
    int f;
    int gf;
};

FinCat make_category(std::vector<std::string> objects,
                     std::vector<MorSpec> mors,
                     std::vector<CompSpec> comps);

/// Checks table well-formedness only (index ranges, composability domain
/// of the compose table). Law checking lives in validate_category.
/// Returns an empty string when sound.
std::string check_structure(const FinCat& c);

/// Structural soundness plus category laws: endpoints of composites,
/// associativity, identity laws. Structural failures are prefixed
/// "structural error:"; law failures "law violation:".
Verdict validate_category(const FinCat& c);

/// Two-sided inverse search. Witness names the inverse (unique when it
/// exists).
Verdict is_isomorphism(const FinCat& c, MorId f);

/// The inverse morphism, or kNoMor.
MorId inverse_of(const FinCat& c, MorId f);

/// Opposite category with identical identifiers; an involution on the
/// nose.
FinCat opposite(const FinCat& c);

}  // namespace fincat
