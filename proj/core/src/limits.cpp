#include "fincat/limits.hpp"

#include <stdexcept>

namespace fincat {

namespace {

// Exactly one m : d -> apex satisfying all leg equations legs[i]∘m == want[i].
bool unique_mediator(const FinCat& c, ObjId d, ObjId apex,
                     const std::vector<MorId>& legs, const std::vector<MorId>& want) {
    int count = 0;
    for (MorId m : c.hom(d, apex)) {
        bool ok = true;
        for (size_t i = 0; i < legs.size(); ++i)
            if (c.comp[legs[i]][m] != want[i]) { ok = false; break; }
        if (ok && ++count > 1) return false;
    }
    return count == 1;
}

}  // namespace

std::vector<ObjId> terminal_objects(const FinCat& c) {
    std::vector<ObjId> out;
    for (ObjId t = 0; t < c.objects(); ++t) {
        bool terminal = true;
        for (ObjId x = 0; x < c.objects(); ++x)
            if (c.hom(x, t).size() != 1) { terminal = false; break; }
        if (terminal) out.push_back(t);
    }
    return out;
}

bool is_limit_cone(const FinCat& c, const LimitCone& cone) {
    switch (cone.shape) {
        case ConeShape::terminal: {
            for (ObjId x = 0; x < c.objects(); ++x)
                if (c.hom(x, cone.apex).size() != 1) return false;
            return true;
        }
        case ConeShape::product: {
            ObjId a = cone.diagram[0], b = cone.diagram[1];
            MorId p = cone.legs[0], q = cone.legs[1];
            if (c.src(p) != cone.apex || c.tgt(p) != a) return false;
            if (c.src(q) != cone.apex || c.tgt(q) != b) return false;
            for (ObjId d = 0; d < c.objects(); ++d)
                for (MorId h : c.hom(d, a))
                    for (MorId k : c.hom(d, b))
                        if (!unique_mediator(c, d, cone.apex, {p, q}, {h, k})) return false;
            return true;
        }
        case ConeShape::equalizer: {
            MorId f = cone.diagram[0], g = cone.diagram[1];
            MorId e = cone.legs[0];
            if (c.src(e) != cone.apex || c.tgt(e) != c.src(f)) return false;
            if (c.comp[f][e] != c.comp[g][e]) return false;
            for (ObjId d = 0; d < c.objects(); ++d)
                for (MorId h : c.hom(d, c.src(f))) {
                    if (c.comp[f][h] != c.comp[g][h]) continue;
                    if (!unique_mediator(c, d, cone.apex, {e}, {h})) return false;
                }
            return true;
        }
        case ConeShape::pullback: {
            MorId f = cone.diagram[0], g = cone.diagram[1];
            MorId p = cone.legs[0], q = cone.legs[1];
            if (c.src(p) != cone.apex || c.tgt(p) != c.src(f)) return false;
            if (c.src(q) != cone.apex || c.tgt(q) != c.src(g)) return false;
            if (c.comp[f][p] != c.comp[g][q]) return false;
            for (ObjId d = 0; d < c.objects(); ++d)
                for (MorId h : c.hom(d, c.src(f)))
                    for (MorId k : c.hom(d, c.src(g))) {
                        if (c.comp[f][h] != c.comp[g][k]) continue;
                        if (!unique_mediator(c, d, cone.apex, {p, q}, {h, k})) return false;
                    }
            return true;
        }
    }
    return false;
}

std::optional<LimitCone> equalizer(const FinCat& c, MorId f, MorId g) {
    if (c.src(f) != c.src(g) || c.tgt(f) != c.tgt(g))
        throw std::invalid_argument("equalizer: morphisms are not parallel");
    for (ObjId apex = 0; apex < c.objects(); ++apex)
        for (MorId e : c.hom(apex, c.src(f))) {
            LimitCone cone{ConeShape::equalizer, {f, g}, apex, {e}};
            if (is_limit_cone(c, cone)) return cone;
        }
    return std::nullopt;
}

std::optional<LimitCone> binary_product(const FinCat& c, ObjId a, ObjId b) {
    for (ObjId apex = 0; apex < c.objects(); ++apex)
        for (MorId p : c.hom(apex, a))
            for (MorId q : c.hom(apex, b)) {
                LimitCone cone{ConeShape::product, {a, b}, apex, {p, q}};
                if (is_limit_cone(c, cone)) return cone;
            }
    return std::nullopt;
}

std::optional<LimitCone> pullback(const FinCat& c, MorId f, MorId g) {
    if (c.tgt(f) != c.tgt(g))
        throw std::invalid_argument("pullback: targets do not match");
    for (ObjId apex = 0; apex < c.objects(); ++apex)
        for (MorId p : c.hom(apex, c.src(f)))
            for (MorId q : c.hom(apex, c.src(g))) {
                LimitCone cone{ConeShape::pullback, {f, g}, apex, {p, q}};
                if (is_limit_cone(c, cone)) return cone;
            }
    return std::nullopt;
}

Verdict has_finite_limits(const FinCat& c) {
    auto ts = terminal_objects(c);
    if (ts.empty()) return Verdict::fail("no terminal object");
    for (ObjId a = 0; a < c.objects(); ++a)
        for (ObjId b = a; b < c.objects(); ++b)
            if (!binary_product(c, a, b))
                return Verdict::fail("no product of " + c.obj_name(a) + " and " + c.obj_name(b));
    for (ObjId x = 0; x < c.objects(); ++x)
        for (ObjId y = 0; y < c.objects(); ++y) {
            const auto& h = c.hom(x, y);
            for (MorId f : h)
                for (MorId g : h)
                    if (!equalizer(c, f, g))
                        return Verdict::fail("no equalizer of " + c.mor_name(f) + " and " +
                                             c.mor_name(g));
        }
    return Verdict::pass({"terminal: " + c.obj_name(ts.front())});
}

Verdict preserves_finite_limits(const Functor& f) {
    const FinCat& c = *f.dom;
    const FinCat& b = *f.cod;
    if (!has_finite_limits(c).holds)
        throw std::invalid_argument("preserves_finite_limits: domain lacks finite limits");

    ObjId t = terminal_objects(c).front();
    LimitCone img_t{ConeShape::terminal, {}, f.obj_map[t], {}};
    if (!is_limit_cone(b, img_t))
        return Verdict::fail("image of terminal object " + c.obj_name(t) + " is not terminal");

    for (ObjId x = 0; x < c.objects(); ++x)
        for (ObjId y = x; y < c.objects(); ++y) {
            auto cone = binary_product(c, x, y);
            LimitCone img{ConeShape::product,
                          {f.obj_map[x], f.obj_map[y]},
                          f.obj_map[cone->apex],
                          {f.mor_map[cone->legs[0]], f.mor_map[cone->legs[1]]}};
            if (!is_limit_cone(b, img))
                return Verdict::fail("image of the product cone of (" + c.obj_name(x) + ", " +
                                     c.obj_name(y) + ") is not a limit");
        }
    for (ObjId x = 0; x < c.objects(); ++x)
        for (ObjId y = 0; y < c.objects(); ++y)
            for (MorId u : c.hom(x, y))
                for (MorId v : c.hom(x, y)) {
                    auto cone = equalizer(c, u, v);
                    LimitCone img{ConeShape::equalizer,
                                  {f.mor_map[u], f.mor_map[v]},
                                  f.obj_map[cone->apex],
                                  {f.mor_map[cone->legs[0]]}};
                    if (!is_limit_cone(b, img))
                        return Verdict::fail("image of the equalizer cone of (" + c.mor_name(u) +
                                             ", " + c.mor_name(v) + ") is not a limit");
                }
    return Verdict::pass();
}

}  // namespace fincat
