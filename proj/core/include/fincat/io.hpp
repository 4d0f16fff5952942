#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fincat/decision.hpp"
#include "fincat/fractions.hpp"
#include "fincat/presheaf.hpp"

namespace fincat {

/// Thrown on malformed input; what() carries "source:line: message".
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Everything a description file can declare. Categories are validated
/// on parse; functors, sigma sets and presheaves are resolved against
/// the categories declared earlier in the same file.
struct Bundle {
    std::vector<std::string> cat_names;
    std::vector<CatPtr> cats;
    std::vector<Functor> functors;                          // names in Functor::name
    std::vector<std::pair<std::string, SigmaSet>> sigmas;   // keyed by category name
    std::vector<std::pair<std::string, Presheaf>> presheaves;

    CatPtr find_cat(const std::string& name) const;
    const Functor* find_functor(const std::string& name) const;
    const SigmaSet* find_sigma(const std::string& cat_name) const;
    const Presheaf* find_presheaf(const std::string& name) const;
};

Bundle parse_text(const std::string& text, const std::string& source_name = "<input>");
Bundle parse_file(const std::string& path);

/// Identities are implicit in files: only non-identity morphisms and
/// composition entries between them are written.
std::string serialize_category(const std::string& name, const FinCat& c);
std::string serialize_functor(const Functor& f, const std::string& dom_name,
                              const std::string& cod_name);
std::string serialize_sigma(const std::string& cat_name, const SigmaSet& s);
std::string serialize_presheaf(const std::string& name, const std::string& cat_name,
                               const Presheaf& x);
std::string serialize_bundle(const Bundle& b);

/// Quotient category plus a CLASSES section mapping each canonical
/// representative fraction to the quotient morphism it names.
std::string serialize_localization(const LocalizationResult& loc,
                                   const std::string& quotient_name = "localization");

nlohmann::json bundle_to_json(const Bundle& b);
Bundle bundle_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const FullReport& r, const std::string& functor_name);
std::string render_report_text(const FullReport& r, const std::string& functor_name,
                               const std::string& timestamp = "");

}  // namespace fincat
