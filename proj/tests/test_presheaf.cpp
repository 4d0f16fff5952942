#include <doctest.h>

#include <numeric>
#include <set>

#include "corpus.hpp"
#include "fincat/presheaf.hpp"

using namespace fincat;

namespace {

Presheaf constant_presheaf(CatPtr c, int card) {
    Presheaf x;
    x.base = c;
    x.card.assign(c->objects(), card);
    x.act.resize(c->morphisms());
    for (MorId u = 0; u < c->morphisms(); ++u) {
        x.act[u].resize(card);
        std::iota(x.act[u].begin(), x.act[u].end(), 0);
    }
    return x;
}

}  // namespace

TEST_CASE("representables validate on the whole corpus") {
    for (const CatPtr& c : corpus::all_categories())
        for (ObjId d = 0; d < c->objects(); ++d)
            CHECK(validate_presheaf(representable(c, d)).holds);
}

TEST_CASE("representable of the terminal category is the constant singleton") {
    Presheaf x = representable(corpus::terminal_cat(), 0);
    CHECK(x.card == std::vector<int>{1});
}

TEST_CASE("representable at the end of the arrow") {
    Presheaf x = representable(corpus::arrow_cat(), 1);
    CHECK(x.card[0] == 1);  // just u
    CHECK(x.card[1] == 1);  // just id_1
}

TEST_CASE("validate_presheaf rejects a broken action") {
    Presheaf x = representable(corpus::arrow_cat(), 1);
    x.act[corpus::arrow_cat()->identity(0)] = {0};
    CHECK(validate_presheaf(x).holds);  // still fine: identity action was identity
    Presheaf y = constant_presheaf(corpus::walking_idempotent(), 2);
    y.act[0] = {1, 0};  // e would have to be idempotent; a swap is not
    CHECK_FALSE(validate_presheaf(y).holds);
}

TEST_CASE("restriction along the identity is the same presheaf") {
    CatPtr a = corpus::arrow_cat();
    Presheaf x = representable(a, 1);
    Presheaf y = restrict_along(identity_functor(a), x);
    CHECK(y.card == x.card);
    CHECK(y.act == x.act);
}

TEST_CASE("restriction of a constant presheaf is constant") {
    Functor f = corpus::boundary_to_arrow();
    Presheaf y = constant_presheaf(f.cod, 3);
    Presheaf x = restrict_along(f, y);
    CHECK(x.card == std::vector<int>{3, 3});
}

TEST_CASE("restriction of a representable compares hom-sets through f") {
    Functor f = corpus::e_to_split();
    Presheaf y = representable(f.cod, f.obj_map[0]);
    Presheaf x = restrict_along(f, y);
    for (ObjId e = 0; e < f.dom->objects(); ++e)
        CHECK(x.card[e] ==
              static_cast<int>(f.cod->hom(f.obj_map[e], f.obj_map[0]).size()));
}

TEST_CASE("colimit of one node is the node") {
    SetDiagram d;
    d.node_card = {3};
    ColimitSet c = colimit_set(d);
    CHECK(c.classes == 3);
}

TEST_CASE("colimit across a bijection merges the two nodes") {
    SetDiagram d;
    d.node_card = {2, 2};
    d.edges.push_back({0, 1, {1, 0}});
    ColimitSet c = colimit_set(d);
    CHECK(c.classes == 2);
    CHECK(c.copr[0][0] == c.copr[1][1]);
}

TEST_CASE("all-bijection transitions keep every coprojection bijective") {
    SetDiagram d;
    d.node_card = {2, 2, 2};
    d.edges.push_back({0, 1, {0, 1}});
    d.edges.push_back({1, 2, {1, 0}});
    ColimitSet c = colimit_set(d);
    CHECK(c.classes == 2);
    for (const auto& copr : c.copr) {
        std::set<int> image(copr.begin(), copr.end());
        CHECK(image.size() == copr.size());
    }
}

TEST_CASE("kan extension along the identity is the same presheaf up to iso") {
    CatPtr c = corpus::chain(3);
    Presheaf x = representable(c, 2);
    LeftKan lk = left_kan(identity_functor(c), x);
    CHECK(lk.result.card == x.card);
    CHECK(validate_presheaf(lk.result).holds);
}

TEST_CASE("kan extension of a representable is the representable at the image") {
    for (const auto& inst : corpus::hypothesis_instances()) {
        CAPTURE(inst.name);
        for (ObjId y = 0; y < inst.f.dom->objects(); ++y)
            CHECK(is_natural_iso(kan_representable_comparison(inst.f, y)).holds);
    }
}

TEST_CASE("kan extension to the point is the disjoint union for a discrete domain") {
    Functor f = corpus::boundary_to_point();
    Presheaf x;
    x.base = f.dom;
    x.card = {2, 3};
    x.act.resize(f.dom->morphisms());
    x.act[f.dom->identity(0)] = {0, 1};
    x.act[f.dom->identity(1)] = {0, 1, 2};
    REQUIRE(validate_presheaf(x).holds);
    LeftKan lk = left_kan(f, x);
    CHECK(lk.result.card == std::vector<int>{5});  // cardinality oracle: |A| + |B|
}

TEST_CASE("counit along the identity is bijective everywhere") {
    CatPtr c = corpus::chain(3);
    Presheaf y = representable(c, 1);
    CHECK(is_natural_iso(counit(identity_functor(c), y)).holds);
}

TEST_CASE("counit fails on the boundary-to-point example") {
    Functor f = corpus::boundary_to_point();
    Presheaf y = constant_presheaf(f.cod, 1);
    NatTrans t = counit(f, y);
    CHECK(validate_nat(t).holds);
    CHECK_FALSE(is_natural_iso(t).holds);  // 2-element colimit onto a point
}

TEST_CASE("counit is bijective across the idempotent splitting") {
    Functor f = corpus::e_to_split();
    KanContext ctx = make_kan_context(f);
    bool all = true;
    enumerate_presheaves(f.cod, 2, [&](const Presheaf& y) {
        all = all && is_natural_iso(counit(f, y, &ctx)).holds;
        return all;
    });
    CHECK(all);
}

TEST_CASE("unit along the identity is bijective") {
    CatPtr c = corpus::chain(3);
    Presheaf x = representable(c, 0);
    CHECK(is_natural_iso(unit(identity_functor(c), x)).holds);
}

TEST_CASE("unit at the boundary-to-point example is not surjective") {
    Functor f = corpus::boundary_to_point();
    Presheaf x = constant_presheaf(f.dom, 1);
    NatTrans t = unit(f, x);
    CHECK(validate_nat(t).holds);
    Verdict v = is_natural_iso(t);
    CHECK_FALSE(v.holds);  // the target value is a 2-element colimit
}

TEST_CASE("presheaf enumeration counts on the arrow category") {
    // value sets of size <= 2 on 0 -> 1: pick |X0|, |X1| and a map X1 -> X0.
    int count = 0;
    enumerate_presheaves(corpus::arrow_cat(), 2, [&](const Presheaf& x) {
        CHECK(validate_presheaf(x).holds);
        ++count;
        return true;
    });
    // 1*1 + 1*1(2->1... enumerated): sizes (1,1):1, (2,1):2, (1,2):1, (2,2):4
    CHECK(count == 8);
}

TEST_CASE("presheaf enumeration respects the idempotent equation") {
    int count = 0;
    enumerate_presheaves(corpus::walking_idempotent(), 2, [&](const Presheaf& x) {
        CHECK(x.act[0][x.act[0][0]] == x.act[0][0]);
        ++count;
        return true;
    });
    // card 1: 1; card 2: idempotent self-maps of a 2-element set: id, two constants
    CHECK(count == 4);
}

TEST_CASE("sampled presheaves are valid and deterministic in the seed") {
    CatPtr c = corpus::chain(3);
    auto a = sample_presheaves(c, 3, 42, 5);
    auto b = sample_presheaves(c, 3, 42, 5);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(validate_presheaf(a[i]).holds);
        CHECK(a[i].card == b[i].card);
        CHECK(a[i].act == b[i].act);
    }
    auto other = sample_presheaves(c, 3, 43, 5);
    bool any_diff = other.size() != a.size();
    for (size_t i = 0; i < a.size() && i < other.size(); ++i)
        if (other[i].card != a[i].card || other[i].act != a[i].act) any_diff = true;
    CHECK(any_diff);
}

TEST_CASE("natural transformation enumeration matches the Yoneda count") {
    // nat(hom(-, d), X) = X(d)
    CatPtr c = corpus::chain(3);
    Presheaf x = constant_presheaf(c, 2);
    for (ObjId d = 0; d < c->objects(); ++d) {
        auto nats = enumerate_nat_trans(representable(c, d), x);
        CHECK(static_cast<int>(nats.size()) == x.card[d]);
    }
}
