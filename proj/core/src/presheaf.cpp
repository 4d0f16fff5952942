#include "fincat/presheaf.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace fincat {

std::string Presheaf::elem_name(ObjId x, int v) const {
    if (x < static_cast<int>(elem_names.size()) && v < static_cast<int>(elem_names[x].size()))
        return elem_names[x][v];
    return base->obj_name(x) + "#" + std::to_string(v);
}

Verdict validate_presheaf(const Presheaf& x) {
    const FinCat& c = *x.base;
    if (static_cast<int>(x.card.size()) != c.objects() ||
        static_cast<int>(x.act.size()) != c.morphisms())
        return Verdict::fail("value/action tables are not total");
    for (MorId u = 0; u < c.morphisms(); ++u) {
        if (static_cast<int>(x.act[u].size()) != x.card[c.tgt(u)])
            return Verdict::fail("action of " + c.mor_name(u) + " has wrong arity");
        for (int v : x.act[u])
            if (v < 0 || v >= x.card[c.src(u)])
                return Verdict::fail("action of " + c.mor_name(u) + " goes out of range");
    }
    for (ObjId o = 0; o < c.objects(); ++o)
        for (int v = 0; v < x.card[o]; ++v)
            if (x.act[c.identity(o)][v] != v)
                return Verdict::fail("action of identity at " + c.obj_name(o) + " is not identity");
    for (MorId g = 0; g < c.morphisms(); ++g)
        for (MorId f = 0; f < c.morphisms(); ++f) {
            MorId gf = c.comp[g][f];
            if (gf == kNoMor) continue;
            for (int v = 0; v < x.card[c.tgt(g)]; ++v)
                if (x.act[gf][v] != x.act[f][x.act[g][v]])
                    return Verdict::fail("contravariant functoriality fails at (" + c.mor_name(g) +
                                         ", " + c.mor_name(f) + ")");
        }
    return Verdict::pass();
}

int index_in_hom(const FinCat& c, ObjId x, ObjId y, MorId m) {
    const auto& h = c.hom(x, y);
    auto it = std::lower_bound(h.begin(), h.end(), m);
    if (it == h.end() || *it != m) return -1;
    return static_cast<int>(it - h.begin());
}

Presheaf representable(CatPtr cp, ObjId d) {
    const FinCat& c = *cp;
    if (d < 0 || d >= c.objects()) throw std::invalid_argument("representable: unknown object");
    Presheaf x;
    x.base = cp;
    x.card.resize(c.objects());
    for (ObjId o = 0; o < c.objects(); ++o) x.card[o] = static_cast<int>(c.hom(o, d).size());
    x.act.resize(c.morphisms());
    for (MorId u = 0; u < c.morphisms(); ++u) {
        const auto& h = c.hom(c.tgt(u), d);
        x.act[u].resize(h.size());
        for (size_t i = 0; i < h.size(); ++i)
            x.act[u][i] = index_in_hom(c, c.src(u), d, c.comp[h[i]][u]);
    }
    return x;
}

Presheaf restrict_along(const Functor& f, const Presheaf& y) {
    if (y.base.get() != f.cod.get() && !y.base->same_tables(*f.cod))
        throw std::invalid_argument("restrict_along: presheaf lives on the wrong category");
    const FinCat& c = *f.dom;
    Presheaf x;
    x.base = f.dom;
    x.card.resize(c.objects());
    for (ObjId o = 0; o < c.objects(); ++o) x.card[o] = y.card[f.obj_map[o]];
    x.act.resize(c.morphisms());
    for (MorId u = 0; u < c.morphisms(); ++u) x.act[u] = y.act[f.mor_map[u]];
    return x;
}

ColimitSet colimit_set(const SetDiagram& d) {
    std::vector<int> offset(d.node_card.size() + 1, 0);
    for (size_t i = 0; i < d.node_card.size(); ++i) offset[i + 1] = offset[i] + d.node_card[i];
    const int total = offset.back();
    std::vector<int> parent(total);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int v) {
        return parent[v] == v ? v : parent[v] = find(parent[v]);
    };
    for (const auto& e : d.edges)
        for (int v = 0; v < d.node_card[e.from]; ++v)
            parent[find(offset[e.from] + v)] = find(offset[e.to] + e.map[v]);

    ColimitSet out;
    std::vector<int> cls(total, -1);
    for (int v = 0; v < total; ++v) {
        int r = find(v);
        if (cls[r] == -1) {
            cls[r] = out.classes++;
            int node = static_cast<int>(std::upper_bound(offset.begin(), offset.end(), v) -
                                        offset.begin()) - 1;
            out.rep.push_back({node, v - offset[node]});
        }
        cls[v] = cls[r];
    }
    out.copr.resize(d.node_card.size());
    for (size_t n = 0; n < d.node_card.size(); ++n) {
        out.copr[n].resize(d.node_card[n]);
        for (int v = 0; v < d.node_card[n]; ++v) out.copr[n][v] = cls[offset[n] + v];
    }
    return out;
}

KanContext make_kan_context(const Functor& f) {
    KanContext ctx;
    ctx.commas.reserve(f.cod->objects());
    for (ObjId bo = 0; bo < f.cod->objects(); ++bo)
        ctx.commas.push_back(comma_under(f, bo));
    return ctx;
}

LeftKan left_kan(const Functor& f, const Presheaf& x, const KanContext* ctx) {
    if (x.base.get() != f.dom.get() && !x.base->same_tables(*f.dom))
        throw std::invalid_argument("left_kan: presheaf lives on the wrong category");
    const FinCat& b = *f.cod;
    LeftKan lk;
    lk.result.base = f.cod;
    lk.result.card.resize(b.objects());
    lk.commas.reserve(b.objects());
    lk.colims.reserve(b.objects());
    for (ObjId bo = 0; bo < b.objects(); ++bo) {
        CommaCat comma = ctx ? ctx->commas[bo] : comma_under(f, bo);
        SetDiagram d;
        for (auto& [c, beta] : comma.obj_label) d.node_card.push_back(x.card[c]);
        for (MorId m = 0; m < comma.carrier->morphisms(); ++m) {
            if (comma.carrier->is_identity(m)) continue;
            // ψ : ⟨c1,β1⟩ → ⟨c2,β2⟩ contributes X(ψ) : X(c2) → X(c1).
            d.edges.push_back({comma.carrier->tgt(m), comma.carrier->src(m),
                               x.act[comma.mor_label[m]]});
        }
        ColimitSet col = colimit_set(d);
        lk.result.card[bo] = col.classes;
        lk.commas.push_back(std::move(comma));
        lk.colims.push_back(std::move(col));
    }
    lk.result.act.resize(b.morphisms());
    for (MorId beta = 0; beta < b.morphisms(); ++beta) {
        const ObjId from = b.tgt(beta);  // contravariant: value(tgt) -> value(src)
        const ObjId to = b.src(beta);
        lk.result.act[beta].resize(lk.result.card[from]);
        for (int k = 0; k < lk.result.card[from]; ++k) {
            auto [node, elt] = lk.colims[from].rep[k];
            auto [c, gamma] = lk.commas[from].obj_label[node];
            MorId shifted = b.comp[gamma][beta];
            int target_node = lk.commas[to].find_object(c, shifted);
            if (target_node == kNoObj) throw std::logic_error("left_kan: re-indexing failed");
            lk.result.act[beta][k] = lk.colims[to].copr[target_node][elt];
        }
    }
    return lk;
}

Verdict validate_nat(const NatTrans& t) {
    const FinCat& c = *t.source.base;
    if (t.target.base.get() != t.source.base.get() && !t.target.base->same_tables(c))
        return Verdict::fail("source and target live on different categories");
    if (static_cast<int>(t.comp.size()) != c.objects())
        return Verdict::fail("component family is not total");
    for (ObjId o = 0; o < c.objects(); ++o) {
        if (static_cast<int>(t.comp[o].size()) != t.source.card[o])
            return Verdict::fail("component at " + c.obj_name(o) + " has wrong arity");
        for (int v : t.comp[o])
            if (v < 0 || v >= t.target.card[o])
                return Verdict::fail("component at " + c.obj_name(o) + " goes out of range");
    }
    for (MorId u = 0; u < c.morphisms(); ++u)
        for (int v = 0; v < t.source.card[c.tgt(u)]; ++v)
            if (t.comp[c.src(u)][t.source.act[u][v]] != t.target.act[u][t.comp[c.tgt(u)][v]])
                return Verdict::fail("naturality square fails at " + c.mor_name(u));
    return Verdict::pass();
}

Verdict is_natural_iso(const NatTrans& t) {
    Verdict nat = validate_nat(t);
    if (!nat.holds) return nat;
    const FinCat& c = *t.source.base;
    for (ObjId o = 0; o < c.objects(); ++o) {
        if (t.source.card[o] != t.target.card[o])
            return Verdict::fail("component at " + c.obj_name(o) + " is not bijective (cardinality)");
        std::vector<bool> hit(t.target.card[o], false);
        for (int v : t.comp[o]) {
            if (hit[v])
                return Verdict::fail("component at " + c.obj_name(o) + " is not injective");
            hit[v] = true;
        }
        for (size_t i = 0; i < hit.size(); ++i)
            if (!hit[i])
                return Verdict::fail("component at " + c.obj_name(o) + " is not surjective");
    }
    return Verdict::pass();
}

NatTrans counit(const Functor& f, const Presheaf& y, const KanContext* ctx) {
    const FinCat& b = *f.cod;
    LeftKan lk = left_kan(f, restrict_along(f, y), ctx);
    NatTrans t;
    t.source = lk.result;
    t.target = y;
    t.comp.resize(b.objects());
    for (ObjId bo = 0; bo < b.objects(); ++bo) {
        t.comp[bo].resize(lk.result.card[bo]);
        for (int k = 0; k < lk.result.card[bo]; ++k) {
            auto [node, elt] = lk.colims[bo].rep[k];
            MorId beta = lk.commas[bo].obj_label[node].second;
            t.comp[bo][k] = y.act[beta][elt];
        }
    }
    return t;
}

NatTrans unit(const Functor& f, const Presheaf& x, const KanContext* ctx) {
    const FinCat& b = *f.cod;
    const FinCat& c = *f.dom;
    LeftKan lk = left_kan(f, x, ctx);
    NatTrans t;
    t.source = x;
    t.target = restrict_along(f, lk.result);
    t.comp.resize(c.objects());
    for (ObjId d = 0; d < c.objects(); ++d) {
        ObjId fd = f.obj_map[d];
        int node = lk.commas[fd].find_object(d, b.identity(fd));
        if (node == kNoObj) throw std::logic_error("unit: missing identity node");
        t.comp[d].resize(x.card[d]);
        for (int v = 0; v < x.card[d]; ++v) t.comp[d][v] = lk.colims[fd].copr[node][v];
    }
    return t;
}

NatTrans kan_representable_comparison(const Functor& f, ObjId y) {
    const FinCat& b = *f.cod;
    Presheaf ry = representable(f.dom, y);
    LeftKan lk = left_kan(f, ry);
    NatTrans t;
    t.source = lk.result;
    t.target = representable(f.cod, f.obj_map[y]);
    t.comp.resize(b.objects());
    for (ObjId bo = 0; bo < b.objects(); ++bo) {
        t.comp[bo].resize(lk.result.card[bo]);
        for (int k = 0; k < lk.result.card[bo]; ++k) {
            auto [node, elt] = lk.colims[bo].rep[k];
            auto [c, beta] = lk.commas[bo].obj_label[node];
            MorId g = f.dom->hom(c, y)[elt];
            t.comp[bo][k] = index_in_hom(b, bo, f.obj_map[y], b.comp[f.mor_map[g]][beta]);
        }
    }
    return t;
}

namespace {

// Depth-first assignment of actions to non-identity morphisms, pruning
// against every composition entry whose factors are already decided.
struct PresheafSearch {
    const FinCat& c;
    Presheaf x;
    std::vector<MorId> todo;  // non-identity morphisms, the assignment order
    const std::function<bool(const Presheaf&)>& fn;
    std::mt19937* rng = nullptr;
    bool keep_going = true;

    bool consistent(size_t assigned) const {
        std::vector<bool> have(c.morphisms(), false);
        for (MorId u = 0; u < c.morphisms(); ++u)
            if (c.is_identity(u)) have[u] = true;
        for (size_t i = 0; i < assigned; ++i) have[todo[i]] = true;
        for (MorId g = 0; g < c.morphisms(); ++g)
            for (MorId f = 0; f < c.morphisms(); ++f) {
                MorId gf = c.comp[g][f];
                if (gf == kNoMor || !have[g] || !have[f] || !have[gf]) continue;
                for (int v = 0; v < x.card[c.tgt(g)]; ++v)
                    if (x.act[gf][v] != x.act[f][x.act[g][v]]) return false;
            }
        return true;
    }

    void run(size_t i) {
        if (!keep_going) return;
        if (i == todo.size()) {
            keep_going = fn(x);
            return;
        }
        MorId u = todo[i];
        const int in = x.card[c.tgt(u)];
        const int out = x.card[c.src(u)];
        long long n_fun = 1;
        for (int k = 0; k < in; ++k) n_fun *= out;
        std::vector<long long> order(n_fun);
        std::iota(order.begin(), order.end(), 0);
        if (rng) std::shuffle(order.begin(), order.end(), *rng);
        for (long long code : order) {
            long long rest = code;
            x.act[u].resize(in);
            for (int k = 0; k < in; ++k) {
                x.act[u][k] = static_cast<int>(rest % out);
                rest /= out;
            }
            if (consistent(i + 1)) run(i + 1);
            if (!keep_going) return;
        }
        x.act[u].clear();
    }
};

bool enumerate_with_cards(CatPtr base, const std::vector<int>& cards,
                          const std::function<bool(const Presheaf&)>& fn,
                          std::mt19937* rng) {
    const FinCat& c = *base;
    PresheafSearch s{c, {}, {}, fn, rng};
    s.x.base = base;
    s.x.card = cards;
    s.x.act.resize(c.morphisms());
    for (ObjId o = 0; o < c.objects(); ++o) {
        s.x.act[c.identity(o)].resize(cards[o]);
        std::iota(s.x.act[c.identity(o)].begin(), s.x.act[c.identity(o)].end(), 0);
    }
    for (MorId u = 0; u < c.morphisms(); ++u)
        if (!c.is_identity(u)) s.todo.push_back(u);
    if (rng) std::shuffle(s.todo.begin(), s.todo.end(), *rng);
    s.run(0);
    return s.keep_going;
}

}  // namespace

bool enumerate_presheaves(CatPtr base, int max_card,
                          const std::function<bool(const Presheaf&)>& fn) {
    const int n = base->objects();
    std::vector<int> cards(n, 1);
    while (true) {
        if (!enumerate_with_cards(base, cards, fn, nullptr)) return false;
        int i = 0;
        while (i < n && cards[i] == max_card) cards[i++] = 1;
        if (i == n) return true;
        ++cards[i];
    }
}

std::vector<Presheaf> sample_presheaves(CatPtr base, int max_card, std::uint32_t seed,
                                        int count) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> pick(1, max_card);
    std::vector<Presheaf> out;
    for (int i = 0; i < count; ++i) {
        std::vector<int> cards(base->objects());
        for (int& k : cards) k = pick(rng);
        auto grab = [&](const Presheaf& x) {
            out.push_back(x);
            return false;  // first solution only
        };
        enumerate_with_cards(base, cards, grab, &rng);
    }
    return out;
}

std::vector<NatTrans> enumerate_nat_trans(const Presheaf& source, const Presheaf& target) {
    const FinCat& c = *source.base;
    std::vector<NatTrans> out;
    NatTrans t;
    t.source = source;
    t.target = target;
    t.comp.assign(c.objects(), {});

    std::function<void(ObjId)> assign = [&](ObjId o) {
        if (o == c.objects()) {
            if (validate_nat(t).holds) out.push_back(t);
            return;
        }
        const int in = source.card[o];
        const int outc = target.card[o];
        long long n_fun = 1;
        for (int k = 0; k < in; ++k) n_fun *= outc;
        for (long long code = 0; code < n_fun; ++code) {
            long long rest = code;
            t.comp[o].resize(in);
            for (int k = 0; k < in; ++k) {
                t.comp[o][k] = static_cast<int>(rest % outc);
                rest /= outc;
            }
            // Prune on morphisms with both endpoints assigned.
            bool ok = true;
            for (MorId u = 0; u < c.morphisms() && ok; ++u) {
                if (c.src(u) > o || c.tgt(u) > o) continue;
                for (int v = 0; v < source.card[c.tgt(u)]; ++v)
                    if (t.comp[c.src(u)][source.act[u][v]] !=
                        target.act[u][t.comp[c.tgt(u)][v]]) { ok = false; break; }
            }
            if (ok) assign(o + 1);
        }
        t.comp[o].clear();
    };
    assign(0);
    return out;
}

}  // namespace fincat
