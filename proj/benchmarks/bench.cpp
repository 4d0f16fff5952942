#include <benchmark/benchmark.h>

#include <algorithm>

#include "fincat/comma.hpp"
#include "fincat/fractions.hpp"
#include "fincat/presheaf.hpp"

using namespace fincat;

namespace {

CatPtr chain(int n) {
    std::vector<std::string> objs;
    for (int i = 0; i < n; ++i) objs.push_back("c" + std::to_string(i));
    std::vector<MorSpec> mors;
    std::vector<std::pair<int, int>> idx;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            mors.push_back({"le_" + std::to_string(i) + "_" + std::to_string(j),
                            static_cast<ObjId>(i), static_cast<ObjId>(j)});
            idx.push_back({i, j});
        }
    auto find = [&](int i, int j) {
        for (size_t k = 0; k < idx.size(); ++k)
            if (idx[k].first == i && idx[k].second == j) return static_cast<MorId>(k);
        return kNoMor;
    };
    std::vector<CompSpec> comps;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                comps.push_back({find(j, k), find(i, j), find(i, k)});
    return share(make_category(objs, mors, comps));
}

void bm_localize(benchmark::State& state) {
    CatPtr c = chain(static_cast<int>(state.range(0)));
    std::vector<MorId> from_bottom;
    for (ObjId x = 0; x < c->objects(); ++x) from_bottom.push_back(c->identity(x));
    for (MorId u = 0; u < c->morphisms(); ++u)
        if (!c->is_identity(u) && c->src(u) == 0) from_bottom.push_back(u);
    SigmaSet sigma = make_sigma(c, from_bottom);
    for (auto _ : state) benchmark::DoNotOptimize(localize(c, sigma));
}
BENCHMARK(bm_localize)->Arg(3)->Arg(5)->Arg(7);

void bm_left_kan(benchmark::State& state) {
    CatPtr dom = chain(static_cast<int>(state.range(0)));
    CatPtr cod = chain(static_cast<int>(state.range(0)) + 1);
    std::vector<ObjId> om;
    std::vector<MorId> mm;
    for (ObjId x = 0; x < dom->objects(); ++x) om.push_back(x);
    for (MorId u = 0; u < dom->morphisms(); ++u) {
        if (dom->is_identity(u)) {
            mm.push_back(cod->identity(dom->src(u)));
            continue;
        }
        auto it = std::find(cod->mor_names.begin(), cod->mor_names.end(), dom->mor_name(u));
        mm.push_back(static_cast<MorId>(it - cod->mor_names.begin()));
    }
    Functor f{dom, cod, om, mm, "step"};
    Presheaf x = representable(dom, dom->objects() - 1);
    KanContext ctx = make_kan_context(f);
    for (auto _ : state) benchmark::DoNotOptimize(left_kan(f, x, &ctx));
}
BENCHMARK(bm_left_kan)->Arg(3)->Arg(5)->Arg(7);

void bm_cofiltered(benchmark::State& state) {
    CatPtr c = chain(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(is_cofiltered(*c));
}
BENCHMARK(bm_cofiltered)->Arg(4)->Arg(6)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
