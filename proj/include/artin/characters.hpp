#pragma once

#include <vector>

#include "artin/cyclotomic.hpp"
#include "artin/group.hpp"

namespace artin {

// Class function: one exact cyclotomic value per conjugacy class. group_order
// tags the group it belongs to so mismatched operands are caught early.
struct ClassFunction {
    long group_order = 0;
    std::vector<CycNum> values;

    size_t size() const { return values.size(); }
    ClassFunction lifted_to(int order) const {
        ClassFunction out{group_order, {}};
        out.values.reserve(values.size());
        for (const CycNum& v : values) out.values.push_back(v.lifted_to(order));
        return out;
    }
};

ClassFunction cf_add(const ClassFunction& a, const ClassFunction& b);
bool cf_equal(const ClassFunction& a, const ClassFunction& b); // lifts to a common order

// The x simple characters, trivial character first, the rest ordered by
// degree then lexicographically on the exact value sequences.
struct CharacterTable {
    std::vector<ClassFunction> simple;
    std::vector<long> degrees;
    int value_order = 1; // all values live in Q(zeta_value_order)

    size_t count() const { return simple.size(); }
    int trivial_index() const { return 0; }
};

// Exact character table by the modular (Dixon) method: diagonalize the class
// algebra over F_l for a prime l = 1 mod exponent(G), l > |G|, then lift the
// eigenvalue data to Q(zeta_exponent) through root-of-unity multiplicities.
CharacterTable character_table(const Group& g, const ClassData& cd);

// (1/|G|) sum_sigma phi(sigma) psi(sigma^{-1}), exact.
CycNum inner_product(const Group& g, const ClassData& cd, const ClassFunction& phi,
                     const ClassFunction& psi);

ClassFunction trivial_character(const Group& g, const ClassData& cd);

// chi_psi(s) = (1/|H|) sum over t in G with t s t^{-1} in H of psi(t s t^{-1}).
ClassFunction induce_character(const Group& g, const ClassData& cd, const SubgroupContext& h,
                               const ClassFunction& psi_on_h);

ClassFunction restrict_character(const Group& g, const ClassData& cd, const SubgroupContext& h,
                                 const ClassFunction& chi_on_g);

// Multiplicities r with phi = sum r_i chi^i; throws NotACharacterError when
// any inner product is non-integral or negative.
std::vector<long> decompose(const Group& g, const ClassData& cd, const CharacterTable& table,
                            const ClassFunction& phi);

// Number of right cosets of H fixed by each class representative; equals the
// induced trivial character.
ClassFunction permutation_character(const Group& g, const ClassData& cd, const Subgroup& h);

} // namespace artin
