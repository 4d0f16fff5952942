#include <doctest.h>

#include "corpus.hpp"
#include "fincat/comma.hpp"
#include "fincat/limits.hpp"

using namespace fincat;

TEST_CASE("comma under the identity functor lists morphisms out of b") {
    CatPtr a = corpus::arrow_cat();
    CommaCat under = comma_under(identity_functor(a), 0);
    CHECK(under.carrier->objects() == 2);  // id_0 and u
    CHECK(validate_category(*under.carrier).holds);
    CHECK(validate_functor(under.proj).holds);
}

TEST_CASE("comma of the boundary inclusion at 0 is discrete") {
    Functor f = corpus::boundary_to_arrow();
    CommaCat under = comma_under(f, 0);
    CHECK(under.carrier->objects() == 2);  // <0,id> and <1,u>
    for (MorId m = 0; m < under.carrier->morphisms(); ++m)
        CHECK(under.carrier->is_identity(m));
}

TEST_CASE("comma into a terminal codomain recovers the domain") {
    Functor f = corpus::arrow_to_point();
    CommaCat under = comma_under(f, 0);
    CHECK(under.carrier->objects() == f.dom->objects());
    CHECK(under.carrier->morphisms() == f.dom->morphisms());
}

TEST_CASE("c_d of the identity functor is isomorphisms over d") {
    CatPtr i = corpus::walking_iso();
    CommaCat cd = c_d(identity_functor(i), 0);
    CHECK(cd.carrier->objects() == 2);  // id_0 and g : 1 -> 0
    CatPtr a = corpus::arrow_cat();
    CommaCat cd_arrow = c_d(identity_functor(a), 1);
    CHECK(cd_arrow.carrier->objects() == 1);  // only id_1; u is not invertible
}

TEST_CASE("c_d of the boundary-to-point functor at 0 is a single object") {
    Functor f = corpus::boundary_to_point();
    CommaCat cd = c_d(f, 0);
    CHECK(cd.carrier->objects() == 1);
    CHECK(cd.obj_label[0] == std::pair<ObjId, MorId>{0, f.dom->identity(0)});
}

TEST_CASE("f_d sends the identity pair to the identity pair and validates") {
    for (const auto& inst : corpus::hypothesis_instances()) {
        CAPTURE(inst.name);
        for (ObjId d = 0; d < inst.f.dom->objects(); ++d) {
            CdSystem sys = build_cd_system(inst.f, d);
            CHECK(validate_functor(sys.fd).holds);
            int from = sys.cd->find_object(d, inst.f.dom->identity(d));
            REQUIRE(from >= 0);
            ObjId fd = inst.f.obj_map[d];
            CHECK(sys.bd->obj_label[sys.fd.obj_map[from]] ==
                  std::pair<ObjId, MorId>{d, inst.f.cod->identity(fd)});
        }
    }
}

TEST_CASE("connectivity") {
    CHECK(is_connected(*corpus::terminal_cat()).holds);
    CHECK_FALSE(is_connected(*corpus::discrete2()).holds);
}

TEST_CASE("cofiltered basics") {
    CHECK(is_cofiltered(*corpus::terminal_cat()).holds);
    Verdict v = is_cofiltered(*corpus::discrete2());
    CHECK_FALSE(v.holds);
    CHECK(is_cofiltered(*corpus::chain(3)).holds);
    // every cofiltered category is connected
    for (const CatPtr& c : corpus::all_categories())
        if (is_cofiltered(*c).holds) CHECK(is_connected(*c).holds);
}

TEST_CASE("c_d is cofiltered under the hypotheses") {
    for (const auto& inst : corpus::hypothesis_instances()) {
        CAPTURE(inst.name);
        for (ObjId d = 0; d < inst.f.dom->objects(); ++d) {
            CommaCat cd = c_d(inst.f, d);
            CHECK(is_cofiltered(*cd.carrier).holds);
        }
    }
}

TEST_CASE("initial functor checks") {
    CHECK(is_initial_functor(identity_functor(corpus::chain(3))).holds);
    Functor point_in;
    point_in.dom = corpus::terminal_cat();
    point_in.cod = corpus::discrete2();
    point_in.obj_map = {0};
    point_in.mor_map = {point_in.cod->identity(0)};
    Verdict v = is_initial_functor(point_in);
    CHECK_FALSE(v.holds);  // the comma over the other object is empty
}

TEST_CASE("full functors have the lifting property at every d") {
    CatPtr ind = corpus::indiscrete(3);
    Functor f;  // the collapse of an indiscrete category is full
    f.dom = ind;
    f.cod = corpus::terminal_cat();
    f.obj_map = {0, 0, 0};
    f.mor_map.assign(ind->morphisms(), f.cod->identity(0));
    REQUIRE(validate_functor(f).holds);
    REQUIRE(is_full(f).holds);
    for (ObjId d = 0; d < f.dom->objects(); ++d) {
        auto parent = std::make_shared<const CommaCat>(c_d(f, d));
        std::vector<ObjId> all(parent->carrier->objects());
        for (size_t i = 0; i < all.size(); ++i) all[i] = static_cast<ObjId>(i);
        CHECK(has_lifting_property(f, d, full_subcat(parent, all)).holds);
    }
}

TEST_CASE("boundary-to-arrow fails lifting at 0 with delta = u") {
    Functor f = corpus::boundary_to_arrow();
    auto parent = std::make_shared<const CommaCat>(c_d(f, 0));
    std::vector<ObjId> all(parent->carrier->objects());
    for (size_t i = 0; i < all.size(); ++i) all[i] = static_cast<ObjId>(i);
    Verdict v = has_lifting_property(f, 0, full_subcat(parent, all));
    CHECK_FALSE(v.holds);
    CHECK(v.counterexample.find("u") != std::string::npos);
}

TEST_CASE("lifting rejects subcategories of the wrong comma") {
    Functor f = corpus::boundary_to_arrow();
    auto parent = std::make_shared<const CommaCat>(c_d(f, 1));
    std::vector<ObjId> all(parent->carrier->objects());
    for (size_t i = 0; i < all.size(); ++i) all[i] = static_cast<ObjId>(i);
    CHECK_THROWS_AS(has_lifting_property(f, 0, full_subcat(parent, all)),
                    std::invalid_argument);
}

TEST_CASE("admissibility of the singleton at d for a full functor") {
    Functor f = identity_functor(corpus::chain(3));
    for (ObjId d = 0; d < f.dom->objects(); ++d) {
        auto parent = std::make_shared<const CommaCat>(c_d(f, d));
        int self = parent->find_object(d, f.dom->identity(d));
        REQUIRE(self >= 0);
        CHECK(is_admissible(f, d, full_subcat(parent, {self})).holds);
    }
}

TEST_CASE("a discrete pair with no span is not admissible") {
    // In c_1 of the identity on the walking isomorphism both objects are
    // present; dropping all non-identity morphisms kills condition (1).
    CatPtr i = corpus::walking_iso();
    Functor f = identity_functor(i);
    auto parent = std::make_shared<const CommaCat>(c_d(f, 1));
    REQUIRE(parent->carrier->objects() == 2);
    Subcat a;
    a.parent = parent;
    a.objects = {0, 1};
    for (MorId m = 0; m < parent->carrier->morphisms(); ++m)
        if (parent->carrier->is_identity(m)) a.morphisms.push_back(m);
    REQUIRE(validate_subcat(a).holds);
    CHECK_FALSE(is_admissible(f, 1, a).holds);
}

TEST_CASE("s_c of the identity functor is the isomorphisms") {
    CatPtr i = corpus::walking_iso();
    std::vector<MorId> sc = relation_s_c(identity_functor(i));
    for (MorId u : sc) CHECK(is_isomorphism(*i, u).holds);
    CHECK(sc.size() == 4);  // two identities + the two arrows
}
