#pragma once

#include <string>
#include <vector>

#include "fincat/category.hpp"
#include "fincat/fractions.hpp"
#include "fincat/functor.hpp"

namespace fincat::corpus {

// --- named small categories -------------------------------------------------

CatPtr terminal_cat();        // one object
CatPtr discrete2();           // two objects, identities only
CatPtr arrow_cat();           // 0, 1 and u : 0 -> 1
CatPtr walking_iso();         // 0 <-> 1, composites are identities
CatPtr walking_idempotent();  // one object, e with e.e = e
CatPtr split_idempotent();    // the idempotent with its splitting r.s = id
CatPtr chain(int n);          // total order 0 < 1 < ... < n-1
CatPtr indiscrete(int n);     // exactly one morphism between any two objects

Functor e_to_split();         // walking idempotent into its splitting
Functor boundary_to_point();  // discrete2 -> terminal
Functor boundary_to_arrow();  // discrete2 -> arrow, endpoint inclusion
Functor arrow_to_point();     // arrow -> terminal collapse
Functor arrow_to_iso();       // arrow -> walking iso, u to the 0->1 arrow

// --- meet-semilattices as thin categories -----------------------------------

// Elements are bitmasks; meet is bitwise and; the greatest element is
// the last mask. Objects in ascending mask order; the morphism x -> y
// (x subset of y, x != y) is named le_<x>_<y>.
struct Semilattice {
    std::vector<unsigned> masks;
    CatPtr cat;

    ObjId index_of(unsigned mask) const;
    MorId le(unsigned x, unsigned y) const;  // includes identities
};

Semilattice make_semilattice(std::vector<unsigned> masks);

// All families of subsets of {0..universe-1} that contain the full
// set and are closed under intersection, in a fixed order.
std::vector<Semilattice> moore_families(int universe);

// Packs two lattices into disjoint bit ranges; the categorical product.
Semilattice product_semilattice(const Semilattice& l, const Semilattice& m, int shift);

// x -> x meet a, into the down-set of a (a must be in the family).
Functor collapse_to_downset(const Semilattice& l, unsigned a);
// down-set of a into l.
Functor downset_inclusion(const Semilattice& l, unsigned a);
// product -> left factor; the right adjoint pairs with the top.
Functor product_projection(const Semilattice& p, const Semilattice& l, int shift);

// Reflective instance on the chain 0 < 1 < 2: the reflector rounds 1
// up to 2, the right adjoint is the inclusion of {0, 2}.
Adjunction chain_reflection();

// A monoid acting on a set, as the category with hom(x, y) =
// {m | m.x = y}. mult[a][b] is a.b, unit is the index of 1.
CatPtr action_category(const std::vector<std::vector<int>>& mult, int unit,
                       const std::vector<std::vector<int>>& act);
CatPtr swap_action();        // Z/2 acting on two points by the swap
CatPtr idempotent_action();  // {1, e} acting on two points, e constant

// --- assembled suites --------------------------------------------------------

struct Instance {
    std::string name;
    Functor f;
};

// >= 50 categories with all finite limits.
std::vector<CatPtr> limit_categories();

// All corpus categories including ones without limits (for law tests).
std::vector<CatPtr> all_categories();

// Functors whose domain has finite limits and which preserve them
// (the criterion hypotheses hold by construction).
std::vector<Instance> hypothesis_instances();

// Subset of hypothesis_instances expected to satisfy the criterion.
std::vector<Instance> positive_instances();

// Hypotheses hold but the criterion fails.
std::vector<Instance> negative_instances();

// (category, sigma) pairs; right-fraction certification is up to the test.
struct SigmaInstance {
    std::string name;
    SigmaSet sigma;
};
std::vector<SigmaInstance> sigma_instances();

// Sigma sets with the calculus of right fractions whose localization
// inverts strictly more than sigma.
std::vector<SigmaInstance> proper_sigma_instances();

// Exhaustive functor enumeration (small categories only).
std::vector<Functor> all_functors(CatPtr dom, CatPtr cod);

}  // namespace fincat::corpus
