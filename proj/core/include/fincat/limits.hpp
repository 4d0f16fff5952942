#pragma once

#include <optional>
#include <vector>

#include "fincat/functor.hpp"

namespace fincat {

enum class ConeShape { terminal, product, equalizer, pullback };

/// A limit cone certified by exhaustive universality search. For the
/// terminal shape the diagram is empty and there are no legs; for
/// products the diagram holds the two ObjIds; for equalizers and
/// pullbacks it holds the two MorIds.
struct LimitCone {
    ConeShape shape;
    std::vector<int> diagram;
    ObjId apex;
    std::vector<MorId> legs;
};

/// All objects t with |hom(x, t)| = 1 for every x.
std::vector<ObjId> terminal_objects(const FinCat& c);

/// Certified limit cones, or nullopt when none exists. Ties break to
/// the smallest apex id, then lexicographically smallest legs.
std::optional<LimitCone> equalizer(const FinCat& c, MorId f, MorId g);
std::optional<LimitCone> binary_product(const FinCat& c, ObjId a, ObjId b);
std::optional<LimitCone> pullback(const FinCat& c, MorId f, MorId g);

/// Verifies that a given cone over its diagram is a limit cone in c
/// (commutation plus exhaustive universality). Used to check functor
/// images of cones in the codomain directly.
bool is_limit_cone(const FinCat& c, const LimitCone& cone);

/// Terminal object + all binary products + all equalizers; this
/// characterizes existence of all finite limits.
Verdict has_finite_limits(const FinCat& c);

/// Images of the chosen terminal/product/equalizer cones are limit
/// cones in the codomain. Throws std::invalid_argument if the domain
/// lacks finite limits.
Verdict preserves_finite_limits(const Functor& f);

}  // namespace fincat
