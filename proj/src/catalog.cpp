#include "artin/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "artin/errors.hpp"

namespace artin {

namespace {

struct NamedGroup {
    const char* name;
    int degree;
    const char* gens;
};

// Short names for the groups the worked examples use; raw generator syntax
// stays available everywhere.
const NamedGroup kNamed[] = {
    {"C1", 1, ""},
    {"C2", 2, "(1 2)"},
    {"C3", 3, "(1 2 3)"},
    {"C4", 4, "(1 2 3 4)"},
    {"C5", 5, "(1 2 3 4 5)"},
    {"C6", 6, "(1 2 3 4 5 6)"},
    {"S3", 3, "(1 2),(1 2 3)"},
    {"A4", 4, "(1 2 3),(1 2)(3 4)"},
    {"A5", 5, "(1 2 3),(1 2 3 4 5)"},
    {"D4", 4, "(1 2 3 4),(1 3)"},
    {"D5", 5, "(1 2 3 4 5),(2 5)(3 4)"},
    {"V4", 4, "(1 2)(3 4),(1 3)(2 4)"},
};

std::string upper(std::string s) {
    for (char& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    return s;
}

const NamedGroup* find_named(const std::string& name) {
    std::string u = upper(name);
    for (const NamedGroup& g : kNamed)
        if (u == g.name) return &g;
    return nullptr;
}

// Split on commas that sit outside parentheses.
std::vector<std::string> split_generators(const std::string& text) {
    std::vector<std::string> parts;
    std::string cur;
    int depth = 0;
    for (char c : text) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) parts.push_back(cur);
    return parts;
}

int max_point(const std::string& text) {
    int best = 1;
    std::string digits;
    for (size_t i = 0; i <= text.size(); ++i) {
        if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            digits += text[i];
        } else if (!digits.empty()) {
            best = std::max(best, std::stoi(digits));
            digits.clear();
        }
    }
    return best;
}

} // namespace

bool is_named_group(const std::string& name) { return find_named(name) != nullptr; }

std::vector<std::string> named_group_list() {
    std::vector<std::string> names;
    for (const NamedGroup& g : kNamed) names.push_back(g.name);
    return names;
}

std::vector<Perm> parse_generators(const std::string& text, int degree) {
    std::vector<Perm> gens;
    for (const std::string& part : split_generators(text)) {
        if (part.find('(') == std::string::npos)
            throw DomainError("generator must use cycle notation: " + part);
        gens.push_back(Perm::parse_cycles(part, degree));
    }
    return gens;
}

Group parse_group(const std::string& text, int degree) {
    if (const NamedGroup* named = find_named(text)) {
        int deg = degree > 0 ? degree : named->degree;
        if (deg < named->degree) throw DomainError("degree too small for group " + text);
        return Group::from_generators(deg, parse_generators(named->gens, deg));
    }
    int deg = degree > 0 ? degree : max_point(text);
    return Group::from_generators(deg, parse_generators(text, deg));
}

FieldSpec CatalogEntry::field() const {
    if (poly.empty()) throw DomainError("catalog entry " + name + " has no polynomial model");
    return FieldSpec::make(IntPoly::parse(poly), parse_group(group));
}

const std::vector<CatalogEntry>& catalog_entries() {
    static const std::vector<CatalogEntry> entries = [] {
        std::vector<CatalogEntry> v;

        {
            CatalogEntry e;
            e.name = "rationals";
            e.description = "degree-1 field; every prime splits, plain zeta factors";
            e.poly = "x";
            e.group = "C1";
            e.densities = {{"1", Rat(1)}};
            e.densities_source = "derived";
            v.push_back(std::move(e));
        }
        {
            CatalogEntry e;
            e.name = "gauss-i";
            e.description = "x^2+1 with C2: split/inert by p mod 4";
            e.poly = "x^2 + 1";
            e.group = "C2";
            e.densities = {{"1+1", frac(1, 2)}, {"2", frac(1, 2)}};
            e.densities_source = "derived";
            v.push_back(std::move(e));
        }
        {
            CatalogEntry e;
            e.name = "s3-cubic";
            e.description = "x^3-2 with S3 acting on the three roots";
            e.poly = "x^3 - 2";
            e.group = "S3";
            e.densities = {{"1+1+1", frac(1, 6)}, {"2+1", frac(1, 2)}, {"3", frac(1, 3)}};
            e.densities_source = "derived";
            v.push_back(std::move(e));
        }
        {
            CatalogEntry e;
            e.name = "cyclo5";
            e.description = "Q(zeta_5): Frobenius of p is the residue p mod 5";
            e.poly = "x^4 + x^3 + x^2 + x + 1";
            e.group = "C4"; // acting as j -> 2j mod 5 on root labels would be (1 2 4 3)
            e.cyclotomic_m = 5;
            e.densities = {{"1", frac(1, 4)}, {"2", frac(1, 4)}, {"3", frac(1, 4)}, {"4", frac(1, 4)}};
            e.densities_source = "derived";
            v.push_back(std::move(e));
        }
        {
            CatalogEntry e;
            e.name = "a5";
            e.description = "icosahedral quintic x^5+20x+16 (square discriminant 32000^2)";
            e.poly = "x^5 + 20x + 16";
            e.group = "A5";
            e.subgroups = {
                {"A5", "(1 2 3),(1 2 3 4 5)"},
                {"A4", "(1 2 3),(1 2)(3 4)"},
                {"D5", "(1 2 3 4 5),(2 5)(3 4)"},
                {"S3", "(1 2 3),(1 2)(4 5)"},
                {"C5", "(1 2 3 4 5)"},
                {"V4", "(1 2)(3 4),(1 3)(2 4)"},
                {"C3", "(1 2 3)"},
                {"C2", "(1 2)(3 4)"},
                {"C1", ""},
            };
            e.zeta_exponents = {
                {"A5", {1, 0, 0, 0, 0}}, {"A4", {1, 0, 0, 1, 0}}, {"D5", {1, 0, 0, 0, 1}},
                {"S3", {1, 0, 0, 1, 1}}, {"C5", {1, 1, 1, 0, 1}}, {"V4", {1, 0, 0, 1, 2}},
                {"C3", {1, 1, 1, 2, 1}}, {"C2", {1, 1, 1, 2, 3}}, {"C1", {1, 3, 3, 4, 5}},
            };
            e.zeta_exponents_source = "literature";
            // cycle type cannot split the two classes of 5-cycles; their
            // densities 1/5 + 1/5 merge to 2/5
            e.densities = {{"1+1+1+1+1", frac(1, 60)},
                           {"2+2+1", frac(1, 4)},
                           {"3+1+1", frac(1, 3)},
                           {"5", frac(2, 5)}};
            e.densities_source = "literature";
            v.push_back(std::move(e));
        }
        return v;
    }();
    return entries;
}

const CatalogEntry& catalog_lookup(const std::string& name) {
    for (const CatalogEntry& e : catalog_entries())
        if (e.name == name) return e;
    std::string known;
    for (const CatalogEntry& e : catalog_entries()) {
        if (!known.empty()) known += ", ";
        known += e.name;
    }
    throw DomainError("unknown catalog entry '" + name + "' (available: " + known + ")");
}

} // namespace artin
