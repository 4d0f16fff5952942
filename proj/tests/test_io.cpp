#include <doctest.h>

#include "corpus.hpp"
#include "fincat/io.hpp"

using namespace fincat;

namespace {

const char* kArrowBundle = R"(
CATEGORY C
OBJECTS
0 1
MORPHISMS
u : 0 -> 1
COMPOSE
END

CATEGORY pt
OBJECTS
*
MORPHISMS
COMPOSE
END

FUNCTOR F : C -> pt
OBJECTS
0 -> *
1 -> *
MORPHISMS
u -> id_*
END

SIGMA ON C
u
END

PRESHEAF X ON C
OBJECT 0 : a b
OBJECT 1 : p
MAP u = a
END
)";

}  // namespace

TEST_CASE("parsing a full bundle") {
    Bundle b = parse_text(kArrowBundle);
    REQUIRE(b.cats.size() == 2);
    CHECK(b.find_cat("C")->morphisms() == 3);
    REQUIRE(b.functors.size() == 1);
    CHECK(b.functors[0].name == "F");
    REQUIRE(b.sigmas.size() == 1);
    CHECK(b.sigmas[0].second.members.size() == 3);  // u + both implicit identities
    REQUIRE(b.presheaves.size() == 1);
    CHECK(b.presheaves[0].second.card == std::vector<int>{2, 1});
}

TEST_CASE("identities stay implicit in files") {
    Bundle b = parse_text(kArrowBundle);
    std::string text = serialize_category("C", *b.find_cat("C"));
    CHECK(text.find("id_0 :") == std::string::npos);
    CHECK(text.find("u : 0 -> 1") != std::string::npos);
}

TEST_CASE("round trip reproduces identical tables for the whole corpus") {
    int i = 0;
    for (const CatPtr& c : corpus::all_categories()) {
        std::string name = "c" + std::to_string(i++);
        Bundle back = parse_text(serialize_category(name, *c));
        CHECK(back.find_cat(name)->same_tables(*c));
    }
}

TEST_CASE("bundle round trip keeps functors, sigmas and presheaves") {
    Bundle b = parse_text(kArrowBundle);
    Bundle back = parse_text(serialize_bundle(b));
    CHECK(back.find_cat("C")->same_tables(*b.find_cat("C")));
    CHECK(back.functors[0].obj_map == b.functors[0].obj_map);
    CHECK(back.functors[0].mor_map == b.functors[0].mor_map);
    CHECK(back.sigmas[0].second.members == b.sigmas[0].second.members);
    CHECK(back.presheaves[0].second.card == b.presheaves[0].second.card);
    CHECK(back.presheaves[0].second.act == b.presheaves[0].second.act);
}

TEST_CASE("serialization is byte-identical across calls") {
    Bundle b = parse_text(kArrowBundle);
    CHECK(serialize_bundle(b) == serialize_bundle(b));
}

TEST_CASE("a dangling morphism name is a parse error naming the identifier") {
    const char* bad = "CATEGORY C\nOBJECTS\n0 1\nMORPHISMS\nu : 0 -> 1\nCOMPOSE\nv . u = u\nEND\n";
    try {
        parse_text(bad, "bad.cat");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        std::string msg = e.what();
        CHECK(msg.find("'v'") != std::string::npos);
        CHECK(msg.find("bad.cat:7") != std::string::npos);
    }
}

TEST_CASE("a law-violating table is rejected at parse time") {
    // composite with wrong endpoints
    const char* bad =
        "CATEGORY C\nOBJECTS\n0 1 2\nMORPHISMS\nf : 0 -> 1\ng : 1 -> 2\nh : 0 -> 2\n"
        "COMPOSE\ng . f = g\nEND\n";
    CHECK_THROWS_AS(parse_text(bad), ParseError);
}

TEST_CASE("json mirror round trips") {
    Bundle b = parse_text(kArrowBundle);
    Bundle back = bundle_from_json(bundle_to_json(b));
    CHECK(back.find_cat("C")->same_tables(*b.find_cat("C")));
    CHECK(back.functors[0].mor_map == b.functors[0].mor_map);
    CHECK(back.presheaves[0].second.act == b.presheaves[0].second.act);
}

TEST_CASE("localization serialization stays a loadable category file") {
    CatPtr a = corpus::arrow_cat();
    SigmaSet s = make_sigma(a, {0, a->identity(0), a->identity(1)});
    LocalizationResult loc = localize(a, s);
    std::string text = serialize_localization(loc, "L");
    Bundle back = parse_text(text);
    CHECK(back.find_cat("L")->objects() == loc.quotient->objects());
    CHECK(back.find_cat("L")->morphisms() == loc.quotient->morphisms());
    CHECK(text.find("# CLASSES") != std::string::npos);
}

TEST_CASE("report rendering is deterministic and timestamp-free by default") {
    Functor f = corpus::boundary_to_point();
    FullReport r = full_report(f);
    std::string a = render_report_text(r, f.name);
    std::string b = render_report_text(r, f.name);
    CHECK(a == b);
    CHECK(a.find("timestamp") == std::string::npos);
    CHECK(render_report_text(r, f.name, "2000-01-01").find("timestamp: 2000-01-01") !=
          std::string::npos);
    nlohmann::json j = report_to_json(r, f.name);
    CHECK(j["presentation"]["conclusion"] == "hypotheses-not-met");
}
