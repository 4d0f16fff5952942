#include "fincat/fractions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace fincat {

bool SigmaSet::contains(MorId m) const {
    return std::binary_search(members.begin(), members.end(), m);
}

SigmaSet make_sigma(CatPtr carrier, std::vector<MorId> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    for (MorId m : members)
        if (m < 0 || m >= carrier->morphisms())
            throw std::invalid_argument("sigma references unknown morphism " + std::to_string(m));
    return SigmaSet{std::move(carrier), std::move(members)};
}

Verdict check_right_fractions(const FinCat& c, const SigmaSet& sigma) {
    for (MorId m : sigma.members)
        if (m < 0 || m >= c.morphisms())
            return Verdict::fail("sigma references unknown morphism " + std::to_string(m));
    // RF1: identities and composition closure.
    for (ObjId x = 0; x < c.objects(); ++x)
        if (!sigma.contains(c.identity(x)))
            return Verdict::fail("RF1: identity of " + c.obj_name(x) + " is not in Σ");
    for (MorId s : sigma.members)
        for (MorId t : sigma.members) {
            if (c.tgt(t) != c.src(s)) continue;
            if (!sigma.contains(c.comp[s][t]))
                return Verdict::fail("RF1: Σ is not closed under composition: " +
                                     c.mor_name(s) + " ∘ " + c.mor_name(t) + " = " +
                                     c.mor_name(c.comp[s][t]) + " escapes");
        }
    // RF2: right Ore squares.
    for (MorId s : sigma.members)
        for (MorId f = 0; f < c.morphisms(); ++f) {
            if (c.tgt(f) != c.tgt(s)) continue;
            bool found = false;
            for (MorId t : sigma.members) {
                if (c.tgt(t) != c.src(f)) continue;
                for (MorId g : c.hom(c.src(t), c.src(s)))
                    if (c.comp[s][g] == c.comp[f][t]) { found = true; break; }
                if (found) break;
            }
            if (!found)
                return Verdict::fail("RF2: no Ore square for s=" + c.mor_name(s) +
                                     ", f=" + c.mor_name(f));
        }
    // RF3: right cancellability.
    for (MorId s : sigma.members)
        for (ObjId a = 0; a < c.objects(); ++a)
            for (MorId f : c.hom(a, c.src(s)))
                for (MorId g : c.hom(a, c.src(s))) {
                    if (f == g || c.comp[s][f] != c.comp[s][g]) continue;
                    bool found = false;
                    for (MorId t : sigma.members) {
                        if (c.tgt(t) != a) continue;
                        if (c.comp[f][t] == c.comp[g][t]) { found = true; break; }
                    }
                    if (!found)
                        return Verdict::fail("RF3: s∘f = s∘g for s=" + c.mor_name(s) + ", f=" +
                                             c.mor_name(f) + ", g=" + c.mor_name(g) +
                                             " but no t ∈ Σ equalizes f, g");
                }
    return Verdict::pass();
}

namespace {

// Direct fraction equivalence: (s,f) ~ (t,g) iff some pair (a,b) of
// refining morphisms satisfies s∘a = t∘b ∈ Σ and f∘a = g∘b.
bool directly_equivalent(const FinCat& c, const SigmaSet& sigma,
                         const Fraction& p, const Fraction& q) {
    for (ObjId w = 0; w < c.objects(); ++w)
        for (MorId a : c.hom(w, c.src(p.s)))
            for (MorId b : c.hom(w, c.src(q.s))) {
                MorId sa = c.comp[p.s][a];
                if (sa != c.comp[q.s][b] || !sigma.contains(sa)) continue;
                if (c.comp[p.f][a] == c.comp[q.f][b]) return true;
            }
    return false;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void unite(int x, int y) { parent[find(x)] = find(y); }
};

}  // namespace

LocalizationResult localize(CatPtr cp, SigmaSet sigma) {
    const FinCat& c = *cp;
    Verdict rf = check_right_fractions(c, sigma);
    if (!rf.holds)
        throw std::invalid_argument("localize: Σ does not admit the calculus of right fractions: " +
                                    rf.counterexample);

    // All fractions, grouped by (x, y), in ascending (s, f) order.
    struct Group {
        std::vector<Fraction> fractions;
        std::vector<int> cls;  // local class index per fraction
        std::vector<Fraction> reps;
    };
    std::vector<std::vector<Group>> groups(c.objects(), std::vector<Group>(c.objects()));
    for (MorId s : sigma.members)
        for (MorId f = 0; f < c.morphisms(); ++f) {
            if (c.src(f) != c.src(s)) continue;
            groups[c.tgt(s)][c.tgt(f)].fractions.push_back({s, f});
        }

    for (auto& row : groups)
        for (Group& g : row) {
            const int n = static_cast<int>(g.fractions.size());
            UnionFind uf(n);
            std::vector<std::vector<bool>> direct(n, std::vector<bool>(n, false));
            for (int i = 0; i < n; ++i)
                for (int j = i; j < n; ++j) {
                    direct[i][j] = direct[j][i] =
                        directly_equivalent(c, sigma, g.fractions[i], g.fractions[j]);
                    if (direct[i][j]) uf.unite(i, j);
                }
            // Under the RF axioms the direct relation is already an
            // equivalence relation; transitive closure must be a no-op.
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (uf.find(i) == uf.find(j) && !direct[i][j])
                        throw std::logic_error("localize: fraction relation is not transitive");
            std::vector<int> root_to_cls;
            g.cls.resize(n);
            for (int i = 0; i < n; ++i) {
                int r = uf.find(i);
                int k = -1;
                for (int ci = 0; ci < static_cast<int>(root_to_cls.size()); ++ci)
                    if (root_to_cls[ci] == r) { k = ci; break; }
                if (k == -1) {
                    k = static_cast<int>(root_to_cls.size());
                    root_to_cls.push_back(r);
                    g.reps.push_back(g.fractions[i]);  // first = lexicographic minimum
                }
                g.cls[i] = k;
            }
        }

    // Assemble the quotient: morphism ids ascending by (x, y, rep).
    LocalizationResult loc;
    loc.base = cp;
    loc.sigma = sigma;

    FinCat q;
    q.obj_names = c.obj_names;
    if (q.obj_names.empty())
        for (ObjId x = 0; x < c.objects(); ++x) q.obj_names.push_back(c.obj_name(x));
    q.id_of.assign(c.objects(), kNoMor);
    loc.class_table.assign(c.morphisms(), std::vector<MorId>(c.morphisms(), kNoMor));
    std::vector<std::vector<std::vector<MorId>>> local_ids(
        c.objects(), std::vector<std::vector<MorId>>(c.objects()));
    for (ObjId x = 0; x < c.objects(); ++x)
        for (ObjId y = 0; y < c.objects(); ++y) {
            Group& g = groups[x][y];
            local_ids[x][y].resize(g.reps.size());
            for (int k = 0; k < static_cast<int>(g.reps.size()); ++k) {
                MorId id = static_cast<MorId>(q.arrows.size());
                local_ids[x][y][k] = id;
                q.arrows.push_back({x, y});
                loc.rep.push_back(g.reps[k]);
                q.mor_names.push_back("[" + c.mor_name(g.reps[k].f) + "." +
                                      c.mor_name(g.reps[k].s) + "^-1]");
            }
            for (int i = 0; i < static_cast<int>(g.fractions.size()); ++i)
                loc.class_table[g.fractions[i].s][g.fractions[i].f] = local_ids[x][y][g.cls[i]];
        }
    for (ObjId x = 0; x < c.objects(); ++x) {
        q.id_of[x] = loc.class_table[c.identity(x)][c.identity(x)];
        if (q.id_of[x] == kNoMor) throw std::logic_error("localize: missing identity class");
    }

    const int m = static_cast<int>(q.arrows.size());
    q.comp.assign(m, std::vector<MorId>(m, kNoMor));
    for (MorId qg = 0; qg < m; ++qg)
        for (MorId qf = 0; qf < m; ++qf) {
            if (q.arrows[qf].tgt != q.arrows[qg].src) continue;
            const Fraction a = loc.rep[qf];  // (s, f) : x ⇢ y
            const Fraction b = loc.rep[qg];  // (t, g) : y ⇢ z
            // Ore completion: t' ∈ Σ, f' with f∘t' = t∘f'.
            MorId found = kNoMor;
            for (MorId t2 : sigma.members) {
                if (c.tgt(t2) != c.src(a.f)) continue;
                for (MorId f2 : c.hom(c.src(t2), c.src(b.s)))
                    if (c.comp[a.f][t2] == c.comp[b.s][f2]) {
                        found = loc.class_table[c.comp[a.s][t2]][c.comp[b.f][f2]];
                        break;
                    }
                if (found != kNoMor) break;
            }
            if (found == kNoMor) throw std::logic_error("localize: Ore completion not found");
            q.comp[qg][qf] = found;
        }
    q.rebuild_homs();

    Verdict laws = validate_category(q);
    if (!laws.holds) throw std::logic_error("localize: quotient is not a category: " + laws.counterexample);

    loc.quotient = share(std::move(q));
    loc.p.dom = cp;
    loc.p.cod = loc.quotient;
    loc.p.name = "P";
    loc.p.obj_map.resize(c.objects());
    std::iota(loc.p.obj_map.begin(), loc.p.obj_map.end(), 0);
    loc.p.mor_map.resize(c.morphisms());
    for (MorId f = 0; f < c.morphisms(); ++f)
        loc.p.mor_map[f] = loc.class_table[c.identity(c.src(f))][f];
    return loc;
}

Functor induced_functor(const Functor& f, const LocalizationResult& loc) {
    const FinCat& c = *loc.base;
    const FinCat& b = *f.cod;
    for (MorId s : loc.sigma.members)
        if (inverse_of(b, f.mor_map[s]) == kNoMor)
            throw std::invalid_argument("induced_functor: " + c.mor_name(s) +
                                        " is not inverted by the functor");
    Functor h;
    h.dom = loc.quotient;
    h.cod = f.cod;
    h.name = "H";
    h.obj_map.resize(loc.quotient->objects());
    for (ObjId x = 0; x < loc.quotient->objects(); ++x) h.obj_map[x] = f.obj_map[x];
    h.mor_map.resize(loc.quotient->morphisms(), kNoMor);
    for (MorId q = 0; q < loc.quotient->morphisms(); ++q) {
        const Fraction r = loc.rep[q];
        h.mor_map[q] = b.comp[f.mor_map[r.f]][inverse_of(b, f.mor_map[r.s])];
    }
    // Representative independence.
    for (MorId s : loc.sigma.members)
        for (MorId g = 0; g < c.morphisms(); ++g) {
            MorId q = loc.class_table[s][g];
            if (q == kNoMor) continue;
            if (h.mor_map[q] != b.comp[f.mor_map[g]][inverse_of(b, f.mor_map[s])])
                throw std::logic_error("induced_functor: value depends on the representative");
        }
    return h;
}

Subcat a_sigma(const Functor& f, const SigmaSet& sigma, ObjId d) {
    const FinCat& b = *f.cod;
    for (MorId s : sigma.members)
        if (inverse_of(b, f.mor_map[s]) == kNoMor)
            throw std::invalid_argument("a_sigma: " + f.dom->mor_name(s) +
                                        " is not inverted by the functor");
    auto cd = std::make_shared<const CommaCat>(c_d(f, d));
    std::vector<ObjId> keep;
    for (int i = 0; i < static_cast<int>(cd->obj_label.size()); ++i)
        if (sigma.contains(cd->obj_label[i].second)) keep.push_back(i);
    return full_subcat(cd, std::move(keep));
}

Verdict check_left_fractions(const FinCat& c, const SigmaSet& sigma) {
    FinCat op = opposite(c);
    SigmaSet s{nullptr, sigma.members};
    return check_right_fractions(op, s);
}

LocalizationResult localize_left(CatPtr cp, SigmaSet sigma) {
    CatPtr op = share(opposite(*cp));
    LocalizationResult right = localize(op, SigmaSet{op, sigma.members});
    LocalizationResult loc;
    loc.base = cp;
    loc.sigma = SigmaSet{cp, sigma.members};
    loc.quotient = share(opposite(*right.quotient));
    loc.p = right.p;
    loc.p.dom = cp;
    loc.p.cod = loc.quotient;
    loc.rep = right.rep;  // cospans in the original category
    loc.class_table = right.class_table;
    return loc;
}

}  // namespace fincat
