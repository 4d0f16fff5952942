#include "fincat/category.hpp"

#include <algorithm>
#include <stdexcept>

namespace fincat {

bool FinCat::is_identity(MorId f) const {
    return f >= 0 && f < morphisms() && id_of[arrows[f].src] == f;
}

std::string FinCat::obj_name(ObjId x) const {
    if (x >= 0 && x < static_cast<int>(obj_names.size()) && !obj_names[x].empty())
        return obj_names[x];
    return std::to_string(x);
}

std::string FinCat::mor_name(MorId f) const {
    if (f >= 0 && f < static_cast<int>(mor_names.size()) && !mor_names[f].empty())
        return mor_names[f];
    return "m" + std::to_string(f);
}

bool FinCat::same_tables(const FinCat& other) const {
    auto arrows_eq = [](const Arrow& a, const Arrow& b) {
        return a.src == b.src && a.tgt == b.tgt;
    };
    if (objects() != other.objects() || morphisms() != other.morphisms())
        return false;
    for (MorId f = 0; f < morphisms(); ++f)
        if (!arrows_eq(arrows[f], other.arrows[f])) return false;
    return id_of == other.id_of && comp == other.comp &&
           obj_names == other.obj_names && mor_names == other.mor_names;
}

void FinCat::rebuild_homs() {
    homs.assign(objects(), std::vector<std::vector<MorId>>(objects()));
    for (MorId f = 0; f < morphisms(); ++f)
        homs[arrows[f].src][arrows[f].tgt].push_back(f);
    // MorIds are appended in ascending order, so each hom-set is sorted.
}

FinCat make_category(std::vector<std::string> objects,
                     std::vector<MorSpec> mors,
                     std::vector<CompSpec> comps) {
    FinCat c;
    c.obj_names = std::move(objects);
    const int n = static_cast<int>(c.obj_names.size());
    const int k = static_cast<int>(mors.size());
    for (const auto& m : mors) {
        if (m.src < 0 || m.src >= n || m.tgt < 0 || m.tgt >= n)
            throw std::invalid_argument("make_category: morphism '" + m.name +
                                        "' references an unknown object");
        c.mor_names.push_back(m.name);
        c.arrows.push_back({m.src, m.tgt});
    }
    c.id_of.resize(n);
    for (ObjId x = 0; x < n; ++x) {
        c.id_of[x] = static_cast<MorId>(c.arrows.size());
        c.mor_names.push_back("id_" + c.obj_name(x));
        c.arrows.push_back({x, x});
    }
    const int m = c.morphisms();
    c.comp.assign(m, std::vector<MorId>(m, kNoMor));
    // Identity laws first.
    for (MorId f = 0; f < m; ++f) {
        c.comp[c.id_of[c.arrows[f].tgt]][f] = f;
        c.comp[f][c.id_of[c.arrows[f].src]] = f;
    }
    for (const auto& e : comps) {
        if (e.g < 0 || e.g >= k || e.f < 0 || e.f >= k || e.gf < 0 || e.gf >= m)
            throw std::invalid_argument("make_category: composition entry references an unknown morphism");
        if (c.arrows[e.f].tgt != c.arrows[e.g].src)
            throw std::invalid_argument("make_category: entry for non-composable pair (" +
                                        c.mor_name(e.g) + ", " + c.mor_name(e.f) + ")");
        c.comp[e.g][e.f] = e.gf;
    }
    c.rebuild_homs();
    return c;
}

std::string check_structure(const FinCat& c) {
    const int n = c.objects();
    const int m = c.morphisms();
    if (static_cast<int>(c.arrows.size()) != m) return "arrow table size mismatch";
    for (MorId f = 0; f < m; ++f) {
        if (c.arrows[f].src < 0 || c.arrows[f].src >= n ||
            c.arrows[f].tgt < 0 || c.arrows[f].tgt >= n)
            return "morphism " + c.mor_name(f) + " references an unknown object";
    }
    for (ObjId x = 0; x < n; ++x) {
        MorId i = c.id_of[x];
        if (i < 0 || i >= m) return "identity of " + c.obj_name(x) + " is not a morphism";
        if (c.arrows[i].src != x || c.arrows[i].tgt != x)
            return "identity of " + c.obj_name(x) + " is not an endomorphism of it";
    }
    if (static_cast<int>(c.comp.size()) != m) return "compose table has wrong dimensions";
    for (MorId g = 0; g < m; ++g) {
        if (static_cast<int>(c.comp[g].size()) != m) return "compose table has wrong dimensions";
        for (MorId f = 0; f < m; ++f) {
            const bool composable = c.arrows[f].tgt == c.arrows[g].src;
            MorId gf = c.comp[g][f];
            if (!composable && gf != kNoMor)
                return "non-composable pair (" + c.mor_name(g) + ", " + c.mor_name(f) +
                       ") has an entry";
            if (composable && gf == kNoMor)
                return "composable pair (" + c.mor_name(g) + ", " + c.mor_name(f) +
                       ") has no entry";
            if (composable && (gf < 0 || gf >= m))
                return "entry for (" + c.mor_name(g) + ", " + c.mor_name(f) +
                       ") is not a morphism";
        }
    }
    return {};
}

Verdict validate_category(const FinCat& c) {
    if (auto err = check_structure(c); !err.empty())
        return Verdict::fail("structural error: " + err);
    const int m = c.morphisms();
    for (MorId g = 0; g < m; ++g) {
        for (MorId f = 0; f < m; ++f) {
            MorId gf = c.comp[g][f];
            if (gf == kNoMor) continue;
            if (c.src(gf) != c.src(f) || c.tgt(gf) != c.tgt(g))
                return Verdict::fail("law violation: endpoints of " + c.mor_name(g) + "∘" +
                                     c.mor_name(f) + " = " + c.mor_name(gf) + " are wrong");
        }
    }
    for (MorId f = 0; f < m; ++f) {
        if (c.comp[c.id_of[c.tgt(f)]][f] != f || c.comp[f][c.id_of[c.src(f)]] != f)
            return Verdict::fail("law violation: identity law fails at " + c.mor_name(f));
    }
    for (MorId h = 0; h < m; ++h)
        for (MorId g = 0; g < m; ++g) {
            if (c.tgt(g) != c.src(h)) continue;
            MorId hg = c.comp[h][g];
            for (MorId f = 0; f < m; ++f) {
                if (c.tgt(f) != c.src(g)) continue;
                if (c.comp[hg][f] != c.comp[h][c.comp[g][f]])
                    return Verdict::fail("law violation: associativity fails at (" +
                                         c.mor_name(h) + ", " + c.mor_name(g) + ", " +
                                         c.mor_name(f) + ")");
            }
        }
    return Verdict::pass();
}

MorId inverse_of(const FinCat& c, MorId f) {
    const ObjId x = c.src(f), y = c.tgt(f);
    for (MorId g : c.hom(y, x))
        if (c.comp[g][f] == c.id_of[x] && c.comp[f][g] == c.id_of[y]) return g;
    return kNoMor;
}

Verdict is_isomorphism(const FinCat& c, MorId f) {
    if (f < 0 || f >= c.morphisms())
        return Verdict::fail("unknown morphism " + std::to_string(f));
    MorId g = inverse_of(c, f);
    if (g == kNoMor)
        return Verdict::fail(c.mor_name(f) + " has no two-sided inverse");
    return Verdict::pass({"inverse: " + c.mor_name(g)});
}

FinCat opposite(const FinCat& c) {
    FinCat o = c;
    for (auto& a : o.arrows) std::swap(a.src, a.tgt);
    const int m = c.morphisms();
    for (MorId g = 0; g < m; ++g)
        for (MorId f = 0; f < m; ++f) o.comp[g][f] = c.comp[f][g];
    o.rebuild_homs();
    return o;
}

}  // namespace fincat
