#include "fincat/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

namespace fincat {

CatPtr Bundle::find_cat(const std::string& name) const {
    for (size_t i = 0; i < cat_names.size(); ++i)
        if (cat_names[i] == name) return cats[i];
    return nullptr;
}

const Functor* Bundle::find_functor(const std::string& name) const {
    for (const Functor& f : functors)
        if (f.name == name) return &f;
    return nullptr;
}

const SigmaSet* Bundle::find_sigma(const std::string& cat_name) const {
    for (const auto& [n, s] : sigmas)
        if (n == cat_name) return &s;
    return nullptr;
}

const Presheaf* Bundle::find_presheaf(const std::string& name) const {
    for (const auto& [n, x] : presheaves)
        if (n == name) return &x;
    return nullptr;
}

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string t;
    while (in >> t) {
        if (t[0] == '#') break;
        out.push_back(t);
    }
    return out;
}

struct Parser {
    std::string source;
    std::istringstream in;
    int lineno = 0;
    Bundle bundle;

    [[noreturn]] void err(int line, const std::string& msg) {
        throw ParseError(source + ":" + std::to_string(line) + ": " + msg);
    }

    int lookup(const std::vector<std::string>& names, const std::string& name,
               int line, const char* kind) {
        auto it = std::find(names.begin(), names.end(), name);
        if (it == names.end()) err(line, std::string("unknown ") + kind + " '" + name + "'");
        return static_cast<int>(it - names.begin());
    }

    CatPtr need_cat(const std::string& name, int line) {
        CatPtr c = bundle.find_cat(name);
        if (!c) err(line, "unknown category '" + name + "'");
        return c;
    }

    void run(const std::string& text) {
        in.str(text);
        std::string line;
        while (std::getline(in, line)) {
            ++lineno;
            auto toks = tokens_of(line);
            if (toks.empty()) continue;
            if (toks[0] == "CATEGORY") parse_category(toks, lineno);
            else if (toks[0] == "FUNCTOR") parse_functor(toks, lineno);
            else if (toks[0] == "SIGMA") parse_sigma(toks, lineno);
            else if (toks[0] == "PRESHEAF") parse_presheaf(toks, lineno);
            else err(lineno, "expected a CATEGORY, FUNCTOR, SIGMA or PRESHEAF block, got '" +
                             toks[0] + "'");
        }
    }

    // Reads body lines of a block up to END, dispatching per line.
    template <typename Fn>
    void block_lines(Fn&& fn) {
        std::string line;
        while (std::getline(in, line)) {
            ++lineno;
            auto toks = tokens_of(line);
            if (toks.empty()) continue;
            if (toks[0] == "END") return;
            fn(toks, lineno);
        }
        err(lineno, "unterminated block (missing END)");
    }

    void parse_category(const std::vector<std::string>& head, int head_line) {
        if (head.size() != 2) err(head_line, "expected: CATEGORY <name>");
        const std::string name = head[1];
        if (bundle.find_cat(name)) err(head_line, "duplicate category '" + name + "'");

        std::vector<std::string> objects;
        std::vector<MorSpec> mors;
        struct RawComp { std::string g, f, gf; int line; };
        std::vector<RawComp> raw;
        enum { none, in_objects, in_morphisms, in_compose } section = none;

        block_lines([&](const std::vector<std::string>& toks, int line) {
            if (toks[0] == "OBJECTS" && toks.size() == 1) { section = in_objects; return; }
            if (toks[0] == "MORPHISMS" && toks.size() == 1) { section = in_morphisms; return; }
            if (toks[0] == "COMPOSE" && toks.size() == 1) { section = in_compose; return; }
            switch (section) {
                case in_objects:
                    for (const auto& t : toks) {
                        if (std::find(objects.begin(), objects.end(), t) != objects.end())
                            err(line, "duplicate object '" + t + "'");
                        objects.push_back(t);
                    }
                    break;
                case in_morphisms: {
                    if (toks.size() != 5 || toks[1] != ":" || toks[3] != "->")
                        err(line, "expected: <name> : <src> -> <tgt>");
                    ObjId s = lookup(objects, toks[2], line, "object");
                    ObjId t = lookup(objects, toks[4], line, "object");
                    for (const auto& m : mors)
                        if (m.name == toks[0]) err(line, "duplicate morphism '" + toks[0] + "'");
                    mors.push_back({toks[0], s, t});
                    break;
                }
                case in_compose:
                    if (toks.size() != 5 || toks[1] != "." || toks[3] != "=")
                        err(line, "expected: <g> . <f> = <h>");
                    raw.push_back({toks[0], toks[2], toks[4], line});
                    break;
                default:
                    err(line, "expected an OBJECTS, MORPHISMS or COMPOSE section header");
            }
        });

        const int k = static_cast<int>(mors.size());
        auto resolve = [&](const std::string& t, int line) -> int {
            for (int i = 0; i < k; ++i)
                if (mors[i].name == t) return i;
            if (t.rfind("id_", 0) == 0) {
                auto it = std::find(objects.begin(), objects.end(), t.substr(3));
                if (it != objects.end())
                    return k + static_cast<int>(it - objects.begin());
            }
            err(line, "unknown morphism '" + t + "'");
        };
        std::vector<CompSpec> comps;
        for (const auto& e : raw) {
            int g = resolve(e.g, e.line);
            int f = resolve(e.f, e.line);
            int gf = resolve(e.gf, e.line);
            if (g >= k || f >= k) {
                // Identity compositions are implicit; entries that state
                // them are checked for consistency and dropped.
                int forced = g >= k ? f : g;
                if (gf != forced) err(e.line, "composition with an identity must equal the other factor");
                continue;
            }
            comps.push_back({g, f, gf});
        }

        FinCat c;
        try {
            c = make_category(std::move(objects), std::move(mors), std::move(comps));
        } catch (const std::invalid_argument& e) {
            err(head_line, e.what());
        }
        if (Verdict v = validate_category(c); !v.holds)
            err(head_line, "category '" + name + "' is invalid: " + v.counterexample);
        bundle.cat_names.push_back(name);
        bundle.cats.push_back(share(std::move(c)));
    }

    void parse_functor(const std::vector<std::string>& head, int head_line) {
        if (head.size() != 6 || head[2] != ":" || head[4] != "->")
            err(head_line, "expected: FUNCTOR <name> : <dom> -> <cod>");
        Functor f;
        f.name = head[1];
        if (bundle.find_functor(f.name)) err(head_line, "duplicate functor '" + f.name + "'");
        f.dom = need_cat(head[3], head_line);
        f.cod = need_cat(head[5], head_line);
        f.obj_map.assign(f.dom->objects(), kNoObj);
        f.mor_map.assign(f.dom->morphisms(), kNoMor);

        enum { none, in_objects, in_morphisms } section = none;
        block_lines([&](const std::vector<std::string>& toks, int line) {
            if (toks[0] == "OBJECTS" && toks.size() == 1) { section = in_objects; return; }
            if (toks[0] == "MORPHISMS" && toks.size() == 1) { section = in_morphisms; return; }
            if (toks.size() != 3 || toks[1] != "->")
                err(line, "expected: <domain name> -> <codomain name>");
            if (section == in_objects) {
                ObjId x = lookup(f.dom->obj_names, toks[0], line, "object");
                f.obj_map[x] = lookup(f.cod->obj_names, toks[2], line, "object");
            } else if (section == in_morphisms) {
                MorId u = lookup(f.dom->mor_names, toks[0], line, "morphism");
                f.mor_map[u] = lookup(f.cod->mor_names, toks[2], line, "morphism");
            } else {
                err(line, "expected an OBJECTS or MORPHISMS section header");
            }
        });

        for (ObjId x = 0; x < f.dom->objects(); ++x) {
            if (f.obj_map[x] == kNoObj)
                err(head_line, "functor '" + f.name + "' misses object '" +
                               f.dom->obj_name(x) + "'");
            f.mor_map[f.dom->identity(x)] = f.cod->identity(f.obj_map[x]);
        }
        for (MorId u = 0; u < f.dom->morphisms(); ++u)
            if (f.mor_map[u] == kNoMor)
                err(head_line, "functor '" + f.name + "' misses morphism '" +
                               f.dom->mor_name(u) + "'");
        if (Verdict v = validate_functor(f); !v.holds)
            err(head_line, "functor '" + f.name + "' is invalid: " + v.counterexample);
        bundle.functors.push_back(std::move(f));
    }

    void parse_sigma(const std::vector<std::string>& head, int head_line) {
        if (head.size() != 3 || head[1] != "ON")
            err(head_line, "expected: SIGMA ON <category>");
        CatPtr c = need_cat(head[2], head_line);
        if (bundle.find_sigma(head[2]))
            err(head_line, "duplicate SIGMA for category '" + head[2] + "'");
        std::vector<MorId> members;
        for (ObjId x = 0; x < c->objects(); ++x) members.push_back(c->identity(x));
        block_lines([&](const std::vector<std::string>& toks, int line) {
            for (const auto& t : toks)
                members.push_back(lookup(c->mor_names, t, line, "morphism"));
        });
        bundle.sigmas.emplace_back(head[2], make_sigma(c, std::move(members)));
    }

    void parse_presheaf(const std::vector<std::string>& head, int head_line) {
        if (head.size() != 4 || head[2] != "ON")
            err(head_line, "expected: PRESHEAF <name> ON <category>");
        CatPtr c = need_cat(head[3], head_line);
        if (bundle.find_presheaf(head[1]))
            err(head_line, "duplicate presheaf '" + head[1] + "'");
        Presheaf x;
        x.base = c;
        x.card.assign(c->objects(), -1);
        x.act.resize(c->morphisms());
        x.elem_names.resize(c->objects());

        block_lines([&](const std::vector<std::string>& toks, int line) {
            if (toks[0] == "OBJECT") {
                if (toks.size() < 3 || toks[2] != ":")
                    err(line, "expected: OBJECT <obj> : <element names>");
                ObjId o = lookup(c->obj_names, toks[1], line, "object");
                if (x.card[o] != -1) err(line, "duplicate OBJECT line for '" + toks[1] + "'");
                x.elem_names[o].assign(toks.begin() + 3, toks.end());
                x.card[o] = static_cast<int>(x.elem_names[o].size());
                if (x.card[o] == 0) err(line, "value set of '" + toks[1] + "' is empty");
            } else if (toks[0] == "MAP") {
                if (toks.size() < 3 || toks[2] != "=")
                    err(line, "expected: MAP <mor> = <image elements>");
                MorId u = lookup(c->mor_names, toks[1], line, "morphism");
                if (!x.act[u].empty()) err(line, "duplicate MAP line for '" + toks[1] + "'");
                ObjId s = c->src(u), t = c->tgt(u);
                if (x.card[s] == -1 || x.card[t] == -1)
                    err(line, "MAP before the OBJECT lines of its endpoints");
                if (static_cast<int>(toks.size()) - 3 != x.card[t])
                    err(line, "MAP for '" + toks[1] + "' needs " + std::to_string(x.card[t]) +
                              " images");
                for (size_t i = 3; i < toks.size(); ++i) {
                    x.act[u].push_back(
                        lookup(x.elem_names[s], toks[i], line, "element"));
                }
            } else {
                err(line, "expected an OBJECT or MAP line");
            }
        });

        for (ObjId o = 0; o < c->objects(); ++o) {
            if (x.card[o] == -1)
                err(head_line, "presheaf '" + head[1] + "' misses object '" +
                               c->obj_name(o) + "'");
            x.act[c->identity(o)].resize(x.card[o]);
            std::iota(x.act[c->identity(o)].begin(), x.act[c->identity(o)].end(), 0);
        }
        for (MorId u = 0; u < c->morphisms(); ++u)
            if (x.act[u].empty() && x.card[c->tgt(u)] > 0 && !c->is_identity(u))
                err(head_line, "presheaf '" + head[1] + "' misses MAP for '" +
                               c->mor_name(u) + "'");
        if (Verdict v = validate_presheaf(x); !v.holds)
            err(head_line, "presheaf '" + head[1] + "' is invalid: " + v.counterexample);
        bundle.presheaves.emplace_back(head[1], std::move(x));
    }
};

// Name of a morphism as files reference it: identities by convention,
// everything else verbatim.
std::string file_mor_name(const FinCat& c, MorId u) {
    if (c.is_identity(u)) return "id_" + c.obj_name(c.src(u));
    return c.mor_name(u);
}

}  // namespace

Bundle parse_text(const std::string& text, const std::string& source_name) {
    Parser p;
    p.source = source_name;
    p.run(text);
    return std::move(p.bundle);
}

Bundle parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_text(buf.str(), path);
}

std::string serialize_category(const std::string& name, const FinCat& c) {
    std::ostringstream out;
    out << "CATEGORY " << name << "\nOBJECTS\n";
    for (ObjId x = 0; x < c.objects(); ++x)
        out << c.obj_name(x) << "\n";
    out << "MORPHISMS\n";
    for (MorId u = 0; u < c.morphisms(); ++u)
        if (!c.is_identity(u))
            out << c.mor_name(u) << " : " << c.obj_name(c.src(u)) << " -> "
                << c.obj_name(c.tgt(u)) << "\n";
    out << "COMPOSE\n";
    for (MorId g = 0; g < c.morphisms(); ++g) {
        if (c.is_identity(g)) continue;
        for (MorId f = 0; f < c.morphisms(); ++f) {
            if (c.is_identity(f) || c.comp[g][f] == kNoMor) continue;
            out << c.mor_name(g) << " . " << c.mor_name(f) << " = "
                << file_mor_name(c, c.comp[g][f]) << "\n";
        }
    }
    out << "END\n";
    return out.str();
}

std::string serialize_functor(const Functor& f, const std::string& dom_name,
                              const std::string& cod_name) {
    std::ostringstream out;
    out << "FUNCTOR " << (f.name.empty() ? "F" : f.name) << " : " << dom_name << " -> "
        << cod_name << "\nOBJECTS\n";
    for (ObjId x = 0; x < f.dom->objects(); ++x)
        out << f.dom->obj_name(x) << " -> " << f.cod->obj_name(f.obj_map[x]) << "\n";
    out << "MORPHISMS\n";
    for (MorId u = 0; u < f.dom->morphisms(); ++u)
        if (!f.dom->is_identity(u))
            out << f.dom->mor_name(u) << " -> " << file_mor_name(*f.cod, f.mor_map[u]) << "\n";
    out << "END\n";
    return out.str();
}

std::string serialize_sigma(const std::string& cat_name, const SigmaSet& s) {
    std::ostringstream out;
    out << "SIGMA ON " << cat_name << "\n";
    for (MorId u : s.members)
        if (!s.carrier->is_identity(u)) out << s.carrier->mor_name(u) << "\n";
    out << "END\n";
    return out.str();
}

std::string serialize_presheaf(const std::string& name, const std::string& cat_name,
                               const Presheaf& x) {
    std::ostringstream out;
    const FinCat& c = *x.base;
    out << "PRESHEAF " << name << " ON " << cat_name << "\n";
    for (ObjId o = 0; o < c.objects(); ++o) {
        out << "OBJECT " << c.obj_name(o) << " :";
        for (int v = 0; v < x.card[o]; ++v) out << " " << x.elem_name(o, v);
        out << "\n";
    }
    for (MorId u = 0; u < c.morphisms(); ++u) {
        if (c.is_identity(u)) continue;
        out << "MAP " << c.mor_name(u) << " =";
        for (int v : x.act[u]) out << " " << x.elem_name(c.src(u), v);
        out << "\n";
    }
    out << "END\n";
    return out.str();
}

std::string serialize_bundle(const Bundle& b) {
    std::ostringstream out;
    for (size_t i = 0; i < b.cats.size(); ++i)
        out << serialize_category(b.cat_names[i], *b.cats[i]) << "\n";
    auto name_of = [&](const CatPtr& c) -> std::string {
        for (size_t i = 0; i < b.cats.size(); ++i)
            if (b.cats[i].get() == c.get() || b.cats[i]->same_tables(*c))
                return b.cat_names[i];
        throw std::logic_error("serialize_bundle: functor endpoint is not in the bundle");
    };
    for (const Functor& f : b.functors)
        out << serialize_functor(f, name_of(f.dom), name_of(f.cod)) << "\n";
    for (const auto& [n, s] : b.sigmas) out << serialize_sigma(n, s) << "\n";
    for (const auto& [n, x] : b.presheaves) out << serialize_presheaf(n, name_of(x.base), x) << "\n";
    return out.str();
}

std::string serialize_localization(const LocalizationResult& loc,
                                   const std::string& quotient_name) {
    std::ostringstream out;
    out << serialize_category(quotient_name, *loc.quotient);
    // The classes table rides along as comments so the file stays a
    // plain category description.
    out << "# CLASSES (denominator numerator -> class)\n";
    const FinCat& c = *loc.base;
    for (MorId q = 0; q < loc.quotient->morphisms(); ++q)
        out << "# " << c.mor_name(loc.rep[q].s) << " " << c.mor_name(loc.rep[q].f) << " -> "
            << loc.quotient->mor_name(q) << "\n";
    return out.str();
}

namespace {

nlohmann::json verdict_json(const Verdict& v) {
    nlohmann::json j;
    j["holds"] = v.holds;
    if (!v.witnesses.empty()) j["witnesses"] = v.witnesses;
    if (!v.counterexample.empty()) j["counterexample"] = v.counterexample;
    return j;
}

std::string yn(const Verdict& v) {
    if (v.holds) return "yes";
    return "no (" + v.counterexample + ")";
}

}  // namespace

nlohmann::json bundle_to_json(const Bundle& b) {
    nlohmann::json j;
    j["categories"] = nlohmann::json::array();
    for (size_t i = 0; i < b.cats.size(); ++i) {
        const FinCat& c = *b.cats[i];
        nlohmann::json jc;
        jc["name"] = b.cat_names[i];
        jc["objects"] = c.obj_names;
        jc["morphisms"] = nlohmann::json::array();
        jc["compose"] = nlohmann::json::array();
        for (MorId u = 0; u < c.morphisms(); ++u)
            if (!c.is_identity(u))
                jc["morphisms"].push_back({{"name", c.mor_name(u)},
                                           {"src", c.obj_name(c.src(u))},
                                           {"tgt", c.obj_name(c.tgt(u))}});
        for (MorId g = 0; g < c.morphisms(); ++g) {
            if (c.is_identity(g)) continue;
            for (MorId f = 0; f < c.morphisms(); ++f)
                if (!c.is_identity(f) && c.comp[g][f] != kNoMor)
                    jc["compose"].push_back({c.mor_name(g), c.mor_name(f),
                                             file_mor_name(c, c.comp[g][f])});
        }
        j["categories"].push_back(std::move(jc));
    }
    auto name_of = [&](const CatPtr& c) -> std::string {
        for (size_t i = 0; i < b.cats.size(); ++i)
            if (b.cats[i].get() == c.get() || b.cats[i]->same_tables(*c))
                return b.cat_names[i];
        throw std::logic_error("bundle_to_json: endpoint category is not in the bundle");
    };
    j["functors"] = nlohmann::json::array();
    for (const Functor& f : b.functors) {
        nlohmann::json jf;
        jf["name"] = f.name;
        jf["dom"] = name_of(f.dom);
        jf["cod"] = name_of(f.cod);
        for (ObjId x = 0; x < f.dom->objects(); ++x)
            jf["objects"][f.dom->obj_name(x)] = f.cod->obj_name(f.obj_map[x]);
        for (MorId u = 0; u < f.dom->morphisms(); ++u)
            if (!f.dom->is_identity(u))
                jf["morphisms"][f.dom->mor_name(u)] = file_mor_name(*f.cod, f.mor_map[u]);
        j["functors"].push_back(std::move(jf));
    }
    j["sigmas"] = nlohmann::json::array();
    for (const auto& [n, s] : b.sigmas) {
        nlohmann::json js;
        js["category"] = n;
        js["members"] = nlohmann::json::array();
        for (MorId u : s.members)
            if (!s.carrier->is_identity(u)) js["members"].push_back(s.carrier->mor_name(u));
        j["sigmas"].push_back(std::move(js));
    }
    j["presheaves"] = nlohmann::json::array();
    for (const auto& [n, x] : b.presheaves) {
        nlohmann::json jp;
        jp["name"] = n;
        jp["category"] = name_of(x.base);
        const FinCat& c = *x.base;
        for (ObjId o = 0; o < c.objects(); ++o) {
            auto& arr = jp["values"][c.obj_name(o)] = nlohmann::json::array();
            for (int v = 0; v < x.card[o]; ++v) arr.push_back(x.elem_name(o, v));
        }
        for (MorId u = 0; u < c.morphisms(); ++u) {
            if (c.is_identity(u)) continue;
            auto& arr = jp["maps"][c.mor_name(u)] = nlohmann::json::array();
            for (int v : x.act[u]) arr.push_back(x.elem_name(c.src(u), v));
        }
        j["presheaves"].push_back(std::move(jp));
    }
    return j;
}

Bundle bundle_from_json(const nlohmann::json& j) {
    // The JSON schema mirrors the text format field for field, so the
    // simplest correct reader renders text and reuses the one parser.
    std::ostringstream out;
    for (const auto& jc : j.value("categories", nlohmann::json::array())) {
        out << "CATEGORY " << jc.at("name").get<std::string>() << "\nOBJECTS\n";
        for (const auto& o : jc.at("objects")) out << o.get<std::string>() << "\n";
        out << "MORPHISMS\n";
        for (const auto& m : jc.at("morphisms"))
            out << m.at("name").get<std::string>() << " : " << m.at("src").get<std::string>()
                << " -> " << m.at("tgt").get<std::string>() << "\n";
        out << "COMPOSE\n";
        for (const auto& e : jc.at("compose"))
            out << e.at(0).get<std::string>() << " . " << e.at(1).get<std::string>() << " = "
                << e.at(2).get<std::string>() << "\n";
        out << "END\n";
    }
    for (const auto& jf : j.value("functors", nlohmann::json::array())) {
        out << "FUNCTOR " << jf.at("name").get<std::string>() << " : "
            << jf.at("dom").get<std::string>() << " -> " << jf.at("cod").get<std::string>()
            << "\nOBJECTS\n";
        for (const auto& [k, v] : jf.at("objects").items())
            out << k << " -> " << v.get<std::string>() << "\n";
        out << "MORPHISMS\n";
        const nlohmann::json jm = jf.value("morphisms", nlohmann::json::object());
        for (const auto& [k, v] : jm.items())
            out << k << " -> " << v.get<std::string>() << "\n";
        out << "END\n";
    }
    for (const auto& js : j.value("sigmas", nlohmann::json::array())) {
        out << "SIGMA ON " << js.at("category").get<std::string>() << "\n";
        for (const auto& m : js.at("members")) out << m.get<std::string>() << "\n";
        out << "END\n";
    }
    for (const auto& jp : j.value("presheaves", nlohmann::json::array())) {
        out << "PRESHEAF " << jp.at("name").get<std::string>() << " ON "
            << jp.at("category").get<std::string>() << "\n";
        for (const auto& [k, v] : jp.at("values").items()) {
            out << "OBJECT " << k << " :";
            for (const auto& e : v) out << " " << e.get<std::string>();
            out << "\n";
        }
        const nlohmann::json jmaps = jp.value("maps", nlohmann::json::object());
        for (const auto& [k, v] : jmaps.items()) {
            out << "MAP " << k << " =";
            for (const auto& e : v) out << " " << e.get<std::string>();
            out << "\n";
        }
        out << "END\n";
    }
    return parse_text(out.str(), "<json>");
}

nlohmann::json report_to_json(const FullReport& r, const std::string& functor_name) {
    nlohmann::json j;
    j["functor"] = functor_name;
    j["seed"] = r.seed;

    nlohmann::json jp;
    jp["domain_finite_limits"] = verdict_json(r.presentation.domain_limits);
    if (r.presentation.preservation_checked)
        jp["limit_preservation"] = verdict_json(r.presentation.preservation);
    jp["essential_surjectivity"] = verdict_json(r.presentation.ess_surj);
    const FinCat& dom = *r.presentation.domain;
    jp["lifting"] = nlohmann::json::object();
    for (const auto& [d, v] : r.presentation.lifting)
        jp["lifting"][dom.obj_name(d)] = verdict_json(v);
    if (!r.presentation.admissibility.empty()) {
        jp["admissibility"] = nlohmann::json::object();
        for (const auto& [d, v] : r.presentation.admissibility)
            jp["admissibility"][dom.obj_name(d)] = verdict_json(v);
    }
    jp["conclusion"] = to_string(r.presentation.conclusion);
    jp["relation"] = nlohmann::json::object();
    jp["relation"]["label"] = r.presentation.relation_label;
    jp["relation"]["members"] = nlohmann::json::array();
    for (MorId u : r.presentation.relation)
        jp["relation"]["members"].push_back(dom.mor_name(u));
    jp["notes"] = r.presentation.notes;
    j["presentation"] = std::move(jp);

    nlohmann::json je;
    je["hypotheses_met"] = r.equivalence.hypotheses_ok;
    je["equivalence_of_categories"] = verdict_json(r.equivalence.equivalence);
    je["hom_bijection"] = verdict_json(r.equivalence.hom_bijection);
    je["notes"] = r.equivalence.notes;
    j["equivalence"] = std::move(je);

    nlohmann::json jo;
    jo["counit_bijective"] = verdict_json(r.oracle.counit_iso);
    jo["codomain_probes"] = r.oracle.codomain_probes;
    jo["unit_bijective"] = verdict_json(r.oracle.unit_bijective);
    jo["relation_inverting_probes"] = r.oracle.inverting_probes;
    jo["kan_of_representables"] = verdict_json(r.oracle.kan_representables);
    j["oracle"] = std::move(jo);

    if (r.monotonicity) j["monotonicity"] = verdict_json(*r.monotonicity);
    return j;
}

std::string render_report_text(const FullReport& r, const std::string& functor_name,
                               const std::string& timestamp) {
    std::ostringstream out;
    out << "REPORT functor=" << functor_name << "\n";
    out << "seed: " << r.seed << "\n";
    if (!timestamp.empty()) out << "timestamp: " << timestamp << "\n";

    const PresentationReport& p = r.presentation;
    const FinCat& dom = *p.domain;
    out << "\nPRESENTATION\n";
    out << "  domain finite limits: " << yn(p.domain_limits) << "\n";
    out << "  limit preservation: "
        << (p.preservation_checked ? yn(p.preservation) : std::string("not checked")) << "\n";
    out << "  essential surjectivity: " << yn(p.ess_surj) << "\n";
    for (const auto& [d, v] : p.admissibility)
        out << "  admissibility of the chosen subcategory at " << dom.obj_name(d) << ": "
            << yn(v) << "\n";
    for (const auto& [d, v] : p.lifting)
        out << "  lifting at " << dom.obj_name(d) << ": " << yn(v) << "\n";
    out << "  relation " << p.relation_label << " = {";
    for (size_t i = 0; i < p.relation.size(); ++i)
        out << (i ? ", " : "") << dom.mor_name(p.relation[i]);
    out << "}\n";
    out << "  conclusion: " << to_string(p.conclusion) << "\n";
    for (const auto& n : p.notes) out << "  note: " << n << "\n";

    const EquivalenceReport& e = r.equivalence;
    out << "\nEQUIVALENCE\n";
    out << "  hypotheses: " << (e.hypotheses_ok ? "met" : "not met") << "\n";
    out << "  equivalence of categories: " << yn(e.equivalence) << "\n";
    out << "  hom-set bijection: " << yn(e.hom_bijection) << "\n";
    for (const auto& n : e.notes) out << "  note: " << n << "\n";

    out << "\nORACLE\n";
    out << "  counit bijective on codomain probes: " << yn(r.oracle.counit_iso) << " ("
        << r.oracle.codomain_probes << " probes)\n";
    out << "  unit bijective on relation-inverting probes: " << yn(r.oracle.unit_bijective)
        << " (" << r.oracle.inverting_probes << " probes)\n";
    out << "  kan extension of representables: " << yn(r.oracle.kan_representables) << "\n";

    if (r.monotonicity) {
        out << "\nMONOTONICITY\n";
        out << "  sigma-to-full-relation upgrade: " << yn(*r.monotonicity) << "\n";
        for (const auto& w : r.monotonicity->witnesses) out << "  note: " << w << "\n";
    }
    return out.str();
}

}  // namespace fincat
