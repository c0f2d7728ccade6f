#pragma once

#include <string>
#include <vector>

#include "artin/characters.hpp"

namespace artin {

// Matrix of zeta decompositions: one row per simple character, one column per
// chosen subgroup, entries the multiplicities of the permutation character.
struct ExponentMatrix {
    std::vector<std::string> col_names;
    std::vector<std::vector<long>> entries; // entries[row][col], x rows
};

ExponentMatrix decomposition_matrix(const Group& g, const ClassData& cd,
                                    const CharacterTable& table,
                                    const std::vector<SubgroupContext>& subgroups,
                                    const std::vector<std::string>& names);

// Basis of { v in Z^cols : M v = 0 }, via a Hermite-normal-form reduction of
// the transpose with a unimodular transform. Basis vectors are primitive;
// order and signs are deterministic.
std::vector<std::vector<Int>> integer_kernel(const std::vector<std::vector<Int>>& m);

long integer_rank(const std::vector<std::vector<Int>>& m); // fraction-free elimination

// One row of the E24-style system: a cyclic subgroup (up to conjugacy), one
// nontrivial character of it, and the decomposition of the induced character.
struct CyclicRow {
    std::vector<int> subgroup_members; // parent element indices
    long subgroup_order = 0;
    int char_index = 0;          // index within the cyclic subgroup's table
    std::vector<long> r;         // multiplicities over the x simple characters
};

struct E24System {
    int target = 0;                 // k (0-based index into the table), >= 1
    std::vector<CyclicRow> rows;
    std::vector<Rat> solution;      // one rational per row
    Int denominator = 1;            // lcm of solution denominators
};

// Builds the system for target character k (0-based, k >= 1), checks the
// coefficient rank is x-1, and returns the deterministic solution (reduced
// row echelon over Q, free variables zero).
E24System solve_e24(const Group& g, const ClassData& cd, const CharacterTable& table, int k);

// sum over rows of x_row * (|G| / m(sigma)); equals the degree f_k.
Rat gamma_exponent(const E24System& sys, const Group& g);

// True when the only integral vector with sum x_i chi^i = 0 everywhere is
// zero, i.e. the character table matrix is nonsingular (exact determinant).
bool satz5_check(const CharacterTable& table);

} // namespace artin
