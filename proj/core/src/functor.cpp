#include "fincat/functor.hpp"

#include <stdexcept>

namespace fincat {

Verdict validate_functor(const Functor& f) {
    const FinCat& c = *f.dom;
    const FinCat& b = *f.cod;
    if (static_cast<int>(f.obj_map.size()) != c.objects())
        return Verdict::fail("object map is not total");
    if (static_cast<int>(f.mor_map.size()) != c.morphisms())
        return Verdict::fail("morphism map is not total");
    for (ObjId x = 0; x < c.objects(); ++x)
        if (f.obj_map[x] < 0 || f.obj_map[x] >= b.objects())
            return Verdict::fail("object map sends " + c.obj_name(x) + " to an unknown object");
    for (MorId u = 0; u < c.morphisms(); ++u) {
        MorId fu = f.mor_map[u];
        if (fu < 0 || fu >= b.morphisms())
            return Verdict::fail("morphism map sends " + c.mor_name(u) + " to an unknown morphism");
        if (b.src(fu) != f.obj_map[c.src(u)] || b.tgt(fu) != f.obj_map[c.tgt(u)])
            return Verdict::fail("src/tgt not preserved at " + c.mor_name(u));
    }
    for (ObjId x = 0; x < c.objects(); ++x)
        if (f.mor_map[c.identity(x)] != b.identity(f.obj_map[x]))
            return Verdict::fail("identity of " + c.obj_name(x) + " not preserved");
    for (MorId g = 0; g < c.morphisms(); ++g)
        for (MorId u = 0; u < c.morphisms(); ++u) {
            MorId gu = c.comp[g][u];
            if (gu == kNoMor) continue;
            if (f.mor_map[gu] != b.comp[f.mor_map[g]][f.mor_map[u]])
                return Verdict::fail("composition not preserved at (" + c.mor_name(g) + ", " +
                                     c.mor_name(u) + ")");
        }
    return Verdict::pass();
}

Functor identity_functor(CatPtr c) {
    Functor f;
    f.dom = c;
    f.cod = c;
    f.obj_map.resize(c->objects());
    f.mor_map.resize(c->morphisms());
    for (ObjId x = 0; x < c->objects(); ++x) f.obj_map[x] = x;
    for (MorId u = 0; u < c->morphisms(); ++u) f.mor_map[u] = u;
    f.name = "id";
    return f;
}

Functor compose_functors(const Functor& g, const Functor& f) {
    if (g.dom.get() != f.cod.get() && !g.dom->same_tables(*f.cod))
        throw std::invalid_argument("compose_functors: domain mismatch");
    Functor h;
    h.dom = f.dom;
    h.cod = g.cod;
    h.obj_map.resize(f.obj_map.size());
    h.mor_map.resize(f.mor_map.size());
    for (size_t x = 0; x < f.obj_map.size(); ++x) h.obj_map[x] = g.obj_map[f.obj_map[x]];
    for (size_t u = 0; u < f.mor_map.size(); ++u) h.mor_map[u] = g.mor_map[f.mor_map[u]];
    h.name = g.name + "." + f.name;
    return h;
}

Functor opposite_functor(const Functor& f, CatPtr op_dom, CatPtr op_cod) {
    Functor g = f;
    g.dom = op_dom;
    g.cod = op_cod;
    g.name = f.name + "^op";
    return g;
}

Verdict is_full(const Functor& f) {
    const FinCat& c = *f.dom;
    const FinCat& b = *f.cod;
    for (ObjId x = 0; x < c.objects(); ++x)
        for (ObjId y = 0; y < c.objects(); ++y)
            for (MorId v : b.hom(f.obj_map[x], f.obj_map[y])) {
                bool hit = false;
                for (MorId u : c.hom(x, y))
                    if (f.mor_map[u] == v) { hit = true; break; }
                if (!hit)
                    return Verdict::fail("not full: " + b.mor_name(v) + " has no preimage in hom(" +
                                         c.obj_name(x) + ", " + c.obj_name(y) + ")");
            }
    return Verdict::pass();
}

Verdict is_faithful(const Functor& f) {
    const FinCat& c = *f.dom;
    for (ObjId x = 0; x < c.objects(); ++x)
        for (ObjId y = 0; y < c.objects(); ++y) {
            const auto& h = c.hom(x, y);
            for (size_t i = 0; i < h.size(); ++i)
                for (size_t j = i + 1; j < h.size(); ++j)
                    if (f.mor_map[h[i]] == f.mor_map[h[j]])
                        return Verdict::fail("not faithful: " + c.mor_name(h[i]) + " and " +
                                             c.mor_name(h[j]) + " have the same image");
        }
    return Verdict::pass();
}

Verdict is_essentially_surjective(const Functor& f) {
    const FinCat& c = *f.dom;
    const FinCat& b = *f.cod;
    std::vector<std::string> witnesses;
    for (ObjId y = 0; y < b.objects(); ++y) {
        bool hit = false;
        for (ObjId x = 0; x < c.objects() && !hit; ++x)
            for (MorId v : b.hom(f.obj_map[x], y)) {
                if (inverse_of(b, v) != kNoMor) {
                    witnesses.push_back(b.obj_name(y) + " ≅ F(" + c.obj_name(x) + ") via " +
                                        b.mor_name(v));
                    hit = true;
                    break;
                }
            }
        if (!hit)
            return Verdict::fail("no object maps isomorphically to " + b.obj_name(y));
    }
    return Verdict::pass(std::move(witnesses));
}

Verdict is_equivalence(const Functor& f) {
    Verdict full = is_full(f);
    if (!full.holds) return full;
    Verdict faithful = is_faithful(f);
    if (!faithful.holds) return faithful;
    Verdict ess = is_essentially_surjective(f);
    if (!ess.holds) {
        ess.counterexample = "not essentially surjective: " + ess.counterexample;
        return ess;
    }
    std::vector<std::string> w = {"full", "faithful"};
    for (auto& s : ess.witnesses) w.push_back(std::move(s));
    return Verdict::pass(std::move(w));
}

Verdict verify_adjunction(const Adjunction& a) {
    Verdict vl = validate_functor(a.left);
    if (!vl.holds) return Verdict::fail("left functor invalid: " + vl.counterexample);
    Verdict vr = validate_functor(a.right);
    if (!vr.holds) return Verdict::fail("right functor invalid: " + vr.counterexample);
    const FinCat& c = *a.left.dom;
    const FinCat& b = *a.left.cod;
    if (a.right.dom.get() != a.left.cod.get() && !a.right.dom->same_tables(b))
        return Verdict::fail("right functor domain is not the left functor codomain");
    if (static_cast<int>(a.unit.size()) != c.objects() ||
        static_cast<int>(a.counit.size()) != b.objects())
        return Verdict::fail("unit/counit family is not total");

    for (ObjId x = 0; x < c.objects(); ++x) {
        MorId e = a.unit[x];
        if (e < 0 || e >= c.morphisms() || c.src(e) != x ||
            c.tgt(e) != a.right.obj_map[a.left.obj_map[x]])
            return Verdict::fail("unit component at " + c.obj_name(x) + " has wrong endpoints");
    }
    for (ObjId y = 0; y < b.objects(); ++y) {
        MorId e = a.counit[y];
        if (e < 0 || e >= b.morphisms() || b.tgt(e) != y ||
            b.src(e) != a.left.obj_map[a.right.obj_map[y]])
            return Verdict::fail("counit component at " + b.obj_name(y) + " has wrong endpoints");
    }
    // Naturality of the unit: GF(u)∘η_x = η_x' ∘ u for u : x -> x'.
    for (MorId u = 0; u < c.morphisms(); ++u) {
        MorId gfu = a.right.mor_map[a.left.mor_map[u]];
        if (c.comp[gfu][a.unit[c.src(u)]] != c.comp[a.unit[c.tgt(u)]][u])
            return Verdict::fail("unit naturality square fails at " + c.mor_name(u));
    }
    // Naturality of the counit: v∘ε_y = ε_y' ∘ FG(v) for v : y -> y'.
    for (MorId v = 0; v < b.morphisms(); ++v) {
        MorId fgv = a.left.mor_map[a.right.mor_map[v]];
        if (b.comp[v][a.counit[b.src(v)]] != b.comp[a.counit[b.tgt(v)]][fgv])
            return Verdict::fail("counit naturality square fails at " + b.mor_name(v));
    }
    // Triangle identities.
    for (ObjId x = 0; x < c.objects(); ++x) {
        ObjId fx = a.left.obj_map[x];
        if (b.comp[a.counit[fx]][a.left.mor_map[a.unit[x]]] != b.identity(fx))
            return Verdict::fail("triangle (εF)(Fη) = id fails at " + c.obj_name(x));
    }
    for (ObjId y = 0; y < b.objects(); ++y) {
        ObjId gy = a.right.obj_map[y];
        if (c.comp[a.right.mor_map[a.counit[y]]][a.unit[gy]] != c.identity(gy))
            return Verdict::fail("triangle (Gε)(ηG) = id fails at " + b.obj_name(y));
    }
    return Verdict::pass();
}

}  // namespace fincat
