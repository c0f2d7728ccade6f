#pragma once

#include <map>
#include <string>
#include <vector>

#include "artin/field_spec.hpp"
#include "artin/group.hpp"

namespace artin {

// Expand a named group ("S3", "A5", "C4", ...) or parse raw generator syntax
// "(1 2 3),(1 2)". Degree 0 means: use the named degree, or the largest point
// mentioned in the cycles.
Group parse_group(const std::string& text, int degree = 0);
std::vector<Perm> parse_generators(const std::string& text, int degree);
bool is_named_group(const std::string& name);
std::vector<std::string> named_group_list();

// A worked example bundled with expected results. `source` records where an
// expected value comes from: "literature" for published tables, "derived"
// for values computed by independent means.
struct CatalogEntry {
    std::string name;
    std::string description;
    std::string poly;     // empty when only the cyclotomic map applies
    std::string group;    // named group
    long cyclotomic_m = 0; // nonzero: Frobenius is p mod m
    // subgroup name -> generator string (empty generators = trivial subgroup)
    std::vector<std::pair<std::string, std::string>> subgroups;
    // subgroup name -> expected decomposition of its permutation character
    std::map<std::string, std::vector<long>> zeta_exponents;
    std::string zeta_exponents_source;
    // observable key -> expected density
    std::map<std::string, Rat> densities;
    std::string densities_source;

    FieldSpec field() const;
};

const std::vector<CatalogEntry>& catalog_entries();
const CatalogEntry& catalog_lookup(const std::string& name);

} // namespace artin
