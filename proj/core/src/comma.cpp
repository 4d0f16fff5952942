#include "fincat/comma.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace fincat {

namespace {

std::string pair_name(const FinCat& src, const FinCat& base, ObjId e, MorId u) {
    return "<" + src.obj_name(e) + "," + base.mor_name(u) + ">";
}

// Shared assembly: given the object list and a predicate deciding when
// ψ : j1 → j2 in the source category is a comma morphism from object i1
// to object i2, build the carrier with its label tables.
CommaCat assemble(const Functor& source_proj_target, const FinCat& base,
                  std::vector<std::pair<ObjId, MorId>> objs,
                  const std::function<bool(int, int, MorId)>& is_mor) {
    const FinCat& src = *source_proj_target.dom;
    const int n = static_cast<int>(objs.size());

    std::vector<std::string> obj_names;
    obj_names.reserve(objs.size());
    for (auto& [e, u] : objs) obj_names.push_back(pair_name(src, base, e, u));

    std::vector<MorSpec> specs;
    std::vector<MorId> labels;
    // (from, to, label) -> spec index
    std::map<std::tuple<int, int, MorId>, int> index;
    for (int i1 = 0; i1 < n; ++i1)
        for (int i2 = 0; i2 < n; ++i2)
            for (MorId psi : src.hom(objs[i1].first, objs[i2].first)) {
                if (i1 == i2 && src.is_identity(psi)) continue;  // appended later
                if (!is_mor(i1, i2, psi)) continue;
                index[{i1, i2, psi}] = static_cast<int>(specs.size());
                specs.push_back({src.mor_name(psi), i1, i2});
                labels.push_back(psi);
            }
    const int k = static_cast<int>(specs.size());

    std::vector<CompSpec> comps;
    for (int g = 0; g < k; ++g)
        for (int f = 0; f < k; ++f) {
            if (specs[f].tgt != specs[g].src) continue;
            MorId comp = src.comp[labels[g]][labels[f]];
            int gf;
            if (specs[f].src == specs[g].tgt && src.is_identity(comp))
                gf = k + specs[f].src;  // carrier identity
            else
                gf = index.at({specs[f].src, specs[g].tgt, comp});
            comps.push_back({g, f, gf});
        }

    CommaCat cc;
    cc.carrier = share(make_category(std::move(obj_names), specs, comps));
    cc.obj_label = std::move(objs);
    cc.mor_label = std::move(labels);
    for (int i = 0; i < n; ++i)
        cc.mor_label.push_back(src.identity(cc.obj_label[i].first));

    cc.proj.dom = cc.carrier;
    cc.proj.cod = source_proj_target.dom;
    cc.proj.name = "proj";
    for (auto& [e, u] : cc.obj_label) cc.proj.obj_map.push_back(e);
    cc.proj.mor_map = cc.mor_label;
    return cc;
}

}  // namespace

int CommaCat::find_object(ObjId e, MorId structure) const {
    for (int i = 0; i < static_cast<int>(obj_label.size()); ++i)
        if (obj_label[i].first == e && obj_label[i].second == structure) return i;
    return kNoObj;
}

int CommaCat::find_morphism(int from, int to, MorId label) const {
    for (MorId m : carrier->hom(from, to))
        if (mor_label[m] == label) return m;
    return kNoMor;
}

CommaCat comma_over(const Functor& l, ObjId k,
                    const std::function<bool(ObjId, MorId)>& filter) {
    const FinCat& j = *l.dom;
    const FinCat& base = *l.cod;
    if (k < 0 || k >= base.objects())
        throw std::invalid_argument("comma_over: unknown object");
    std::vector<std::pair<ObjId, MorId>> objs;
    for (ObjId x = 0; x < j.objects(); ++x)
        for (MorId u : base.hom(l.obj_map[x], k))
            if (!filter || filter(x, u)) objs.push_back({x, u});
    auto is_mor = [&](int i1, int i2, MorId psi) {
        return base.comp[objs[i2].second][l.mor_map[psi]] == objs[i1].second;
    };
    return assemble(l, base, objs, is_mor);
}

CommaCat comma_under(const Functor& f, ObjId b) {
    const FinCat& c = *f.dom;
    const FinCat& base = *f.cod;
    if (b < 0 || b >= base.objects())
        throw std::invalid_argument("comma_under: unknown object");
    std::vector<std::pair<ObjId, MorId>> objs;
    for (ObjId x = 0; x < c.objects(); ++x)
        for (MorId u : base.hom(b, f.obj_map[x])) objs.push_back({x, u});
    auto is_mor = [&](int i1, int i2, MorId psi) {
        return base.comp[f.mor_map[psi]][objs[i1].second] == objs[i2].second;
    };
    return assemble(f, base, objs, is_mor);
}

CommaCat c_d(const Functor& f, ObjId d) {
    if (d < 0 || d >= f.dom->objects())
        throw std::invalid_argument("c_d: unknown object");
    const FinCat& b = *f.cod;
    Functor id = identity_functor(f.dom);
    return comma_over(id, d, [&](ObjId, MorId phi) {
        return inverse_of(b, f.mor_map[phi]) != kNoMor;
    });
}

CommaCat b_d(const Functor& f, ObjId d) {
    return comma_under(f, f.obj_map[d]);
}

CdSystem build_cd_system(const Functor& f, ObjId d) {
    CdSystem sys;
    sys.cd = std::make_shared<const CommaCat>(c_d(f, d));
    sys.bd = std::make_shared<const CommaCat>(b_d(f, d));
    const FinCat& b = *f.cod;

    Functor fd;
    fd.dom = sys.cd->carrier;
    fd.cod = sys.bd->carrier;
    fd.name = "F_" + f.dom->obj_name(d);
    for (auto& [e, phi] : sys.cd->obj_label) {
        MorId inv = inverse_of(b, f.mor_map[phi]);
        int target = sys.bd->find_object(e, inv);
        if (target == kNoObj)
            throw std::logic_error("build_cd_system: image object missing in B_d");
        fd.obj_map.push_back(target);
    }
    for (MorId m = 0; m < sys.cd->carrier->morphisms(); ++m) {
        int from = fd.obj_map[sys.cd->carrier->src(m)];
        int to = fd.obj_map[sys.cd->carrier->tgt(m)];
        MorId img = sys.bd->find_morphism(from, to, sys.cd->mor_label[m]);
        if (img == kNoMor)
            throw std::logic_error("build_cd_system: image morphism missing in B_d");
        fd.mor_map.push_back(img);
    }
    sys.fd = std::move(fd);
    return sys;
}

Verdict validate_subcat(const Subcat& a) {
    const FinCat& c = *a.parent->carrier;
    std::set<ObjId> os(a.objects.begin(), a.objects.end());
    std::set<MorId> ms(a.morphisms.begin(), a.morphisms.end());
    for (ObjId x : a.objects)
        if (!ms.count(c.identity(x)))
            return Verdict::fail("identity of " + c.obj_name(x) + " missing");
    for (MorId m : a.morphisms)
        if (!os.count(c.src(m)) || !os.count(c.tgt(m)))
            return Verdict::fail("morphism " + c.mor_name(m) + " has endpoints outside the subcategory");
    for (MorId g : a.morphisms)
        for (MorId f : a.morphisms) {
            MorId gf = c.comp[g][f];
            if (gf != kNoMor && !ms.count(gf))
                return Verdict::fail("not closed under composition at (" + c.mor_name(g) + ", " +
                                     c.mor_name(f) + ")");
        }
    return Verdict::pass();
}

Subcat full_subcat(std::shared_ptr<const CommaCat> parent, std::vector<ObjId> objects) {
    Subcat a;
    a.parent = std::move(parent);
    std::sort(objects.begin(), objects.end());
    a.objects = std::move(objects);
    const FinCat& c = *a.parent->carrier;
    std::set<ObjId> os(a.objects.begin(), a.objects.end());
    for (MorId m = 0; m < c.morphisms(); ++m)
        if (os.count(c.src(m)) && os.count(c.tgt(m))) a.morphisms.push_back(m);
    return a;
}

SubFinCat materialize(const Subcat& a) {
    const FinCat& c = *a.parent->carrier;
    std::vector<ObjId> obj_of = a.objects;
    std::vector<int> obj_index(c.objects(), -1);
    for (int i = 0; i < static_cast<int>(obj_of.size()); ++i) obj_index[obj_of[i]] = i;

    std::vector<std::string> obj_names;
    for (ObjId x : obj_of) obj_names.push_back(c.obj_name(x));

    std::vector<MorId> mor_of;
    std::vector<MorSpec> specs;
    std::vector<int> mor_index(c.morphisms(), -1);
    for (MorId m : a.morphisms) {
        if (c.is_identity(m)) continue;
        mor_index[m] = static_cast<int>(specs.size());
        specs.push_back({c.mor_name(m), obj_index[c.src(m)], obj_index[c.tgt(m)]});
        mor_of.push_back(m);
    }
    const int k = static_cast<int>(specs.size());
    std::vector<CompSpec> comps;
    for (int g = 0; g < k; ++g)
        for (int f = 0; f < k; ++f) {
            if (specs[f].tgt != specs[g].src) continue;
            MorId gf = c.comp[mor_of[g]][mor_of[f]];
            int idx = c.is_identity(gf) ? k + specs[f].src : mor_index[gf];
            comps.push_back({g, f, idx});
        }

    SubFinCat out;
    out.cat = share(make_category(std::move(obj_names), specs, comps));
    for (ObjId x : obj_of) mor_of.push_back(c.identity(x));
    out.inclusion.dom = out.cat;
    out.inclusion.cod = a.parent->carrier;
    out.inclusion.obj_map = obj_of;
    out.inclusion.mor_map = mor_of;
    out.inclusion.name = "incl";
    return out;
}

Verdict is_connected(const FinCat& j) {
    if (j.objects() == 0) return Verdict::fail("empty category");
    std::vector<int> comp(j.objects(), -1);
    std::vector<ObjId> stack = {0};
    comp[0] = 0;
    while (!stack.empty()) {
        ObjId x = stack.back();
        stack.pop_back();
        for (MorId m = 0; m < j.morphisms(); ++m) {
            ObjId other = kNoObj;
            if (j.src(m) == x) other = j.tgt(m);
            else if (j.tgt(m) == x) other = j.src(m);
            if (other != kNoObj && comp[other] == -1) {
                comp[other] = 0;
                stack.push_back(other);
            }
        }
    }
    for (ObjId x = 0; x < j.objects(); ++x)
        if (comp[x] == -1)
            return Verdict::fail("object " + j.obj_name(x) + " is in a separate component");
    return Verdict::pass();
}

Verdict is_cofiltered(const FinCat& j) {
    if (j.objects() == 0) return Verdict::fail("empty category");
    for (ObjId a = 0; a < j.objects(); ++a)
        for (ObjId b = a; b < j.objects(); ++b) {
            bool span = false;
            for (ObjId i = 0; i < j.objects() && !span; ++i)
                span = !j.hom(i, a).empty() && !j.hom(i, b).empty();
            if (!span)
                return Verdict::fail("no common source span for (" + j.obj_name(a) + ", " +
                                     j.obj_name(b) + ")");
        }
    for (ObjId a = 0; a < j.objects(); ++a)
        for (ObjId b = 0; b < j.objects(); ++b)
            for (MorId u : j.hom(a, b))
                for (MorId v : j.hom(a, b)) {
                    if (u == v) continue;
                    bool eq = false;
                    for (ObjId i = 0; i < j.objects() && !eq; ++i)
                        for (MorId w : j.hom(i, a))
                            if (j.comp[u][w] == j.comp[v][w]) { eq = true; break; }
                    if (!eq)
                        return Verdict::fail("parallel pair (" + j.mor_name(u) + ", " +
                                             j.mor_name(v) + ") is not equalized by any pre-composition");
                }
    return Verdict::pass();
}

Verdict is_initial_functor(const Functor& l) {
    for (ObjId k = 0; k < l.cod->objects(); ++k) {
        CommaCat comma = comma_over(l, k);
        if (comma.carrier->objects() == 0)
            return Verdict::fail("comma category over " + l.cod->obj_name(k) + " is empty");
        Verdict conn = is_connected(*comma.carrier);
        if (!conn.holds)
            return Verdict::fail("comma category over " + l.cod->obj_name(k) +
                                 " is not connected: " + conn.counterexample);
    }
    return Verdict::pass();
}

namespace {

// a must be a subcategory of C_d(f, d): labels target d and are
// inverted by f.
void require_inside_cd(const Functor& f, ObjId d, const Subcat& a) {
    const FinCat& c = *f.dom;
    const FinCat& b = *f.cod;
    Verdict v = validate_subcat(a);
    if (!v.holds)
        throw std::invalid_argument("not a subcategory: " + v.counterexample);
    for (ObjId i : a.objects) {
        auto [e, phi] = a.parent->obj_label[i];
        if (c.tgt(phi) != d || c.src(phi) != e ||
            inverse_of(b, f.mor_map[phi]) == kNoMor)
            throw std::invalid_argument("object " + a.parent->carrier->obj_name(i) +
                                        " is not an object of C_d");
    }
}

}  // namespace

Verdict has_lifting_property(const Functor& f, ObjId d, const Subcat& a) {
    require_inside_cd(f, d, a);
    const FinCat& c = *f.dom;
    const FinCat& b = *f.cod;
    CommaCat bd = b_d(f, d);
    std::vector<std::string> witnesses;
    for (int i = 0; i < static_cast<int>(bd.obj_label.size()); ++i) {
        auto [e, delta] = bd.obj_label[i];
        bool found = false;
        for (ObjId ai : a.objects) {
            auto [e2, phi] = a.parent->obj_label[ai];
            MorId want = b.comp[delta][f.mor_map[phi]];
            for (MorId psi : c.hom(e2, e))
                if (f.mor_map[psi] == want) {
                    witnesses.push_back("δ=" + b.mor_name(delta) + ": φ=" + c.mor_name(phi) +
                                        ", ψ=" + c.mor_name(psi));
                    found = true;
                    break;
                }
            if (found) break;
        }
        if (!found)
            return Verdict::fail("no lift for ⟨" + c.obj_name(e) + ", δ=" + b.mor_name(delta) +
                                 "⟩ in B_" + c.obj_name(d));
    }
    return Verdict::pass(std::move(witnesses));
}

Verdict is_admissible(const Functor& f, ObjId d, const Subcat& a) {
    require_inside_cd(f, d, a);
    if (a.objects.empty()) return Verdict::fail("subcategory is empty");
    Verdict cof = is_cofiltered(*materialize(a).cat);
    if (!cof.holds) return Verdict::fail("not cofiltered: " + cof.counterexample);
    Verdict lift = has_lifting_property(f, d, a);
    if (!lift.holds) return Verdict::fail("lifting fails: " + lift.counterexample);
    return lift;
}

std::vector<MorId> relation_s_a(const std::map<ObjId, Subcat>& choice) {
    std::set<MorId> out;
    for (const auto& [d, a] : choice)
        for (ObjId i : a.objects) out.insert(a.parent->obj_label[i].second);
    return {out.begin(), out.end()};
}

std::vector<MorId> relation_s_c(const Functor& f) {
    std::vector<MorId> out;
    for (MorId u = 0; u < f.dom->morphisms(); ++u)
        if (inverse_of(*f.cod, f.mor_map[u]) != kNoMor) out.push_back(u);
    return out;
}

}  // namespace fincat
