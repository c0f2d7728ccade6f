#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "artin/permutation.hpp"

namespace artin {

// Fully enumerated permutation group. Elements are kept in lexicographic
// order on image vectors, which makes every downstream artifact (class
// lists, tables, matrices) byte-reproducible; the identity is element 0.
// Immutable after construction; all queries are const.
class Group {
public:
    static constexpr size_t kDefaultCap = 10000;

    static Group from_generators(int degree, const std::vector<Perm>& gens,
                                 size_t size_cap = kDefaultCap);
    // Closure of an explicit element set (validates it is already closed).
    static Group from_elements(int degree, std::vector<Perm> elems);

    int degree() const { return degree_; }
    long order() const { return static_cast<long>(elems_.size()); }
    const Perm& elem(int i) const { return elems_[i]; }
    const std::vector<Perm>& elements() const { return elems_; }

    int index_of(const Perm& p) const; // -1 if absent
    int mul(int a, int b) const;
    int inv(int a) const { return inv_[a]; }
    int identity() const { return id_; }
    long elem_order(int a) const;

    const std::vector<Perm>& generators() const { return gens_; }

private:
    int degree_ = 0;
    int id_ = 0;
    std::vector<Perm> elems_;
    std::vector<int> inv_;
    std::vector<Perm> gens_;
    std::unordered_map<std::string, int> index_; // packed image bytes -> index
    std::vector<int32_t> mul_table_;             // built when order <= 2048

    void finalize();
    static std::string pack(const Perm& p);
};

// Conjugacy data: partition of element indices into classes, identity class
// first, plus the power map on classes filled up to the group exponent.
struct ClassData {
    std::vector<std::vector<int>> members; // per class, ascending element indices
    std::vector<int> class_of;             // element index -> class index
    std::vector<int> reps;                 // smallest element index per class
    std::vector<long> sizes;
    std::vector<long> rep_orders;
    long exponent = 1;
    std::vector<std::vector<int>> power_map; // [class][nu], nu = 0..exponent

    size_t count() const { return members.size(); }
    // Class of sigma^nu for sigma in class i; well defined, any nu >= 0.
    int power_class(int i, long nu) const;
    int inverse_class(int i) const { return power_class(i, rep_orders[i] - 1); }
};

ClassData conjugacy_classes(const Group& g);

// Subgroup of a parent group: member indices (closed set) plus right-coset
// representatives S_i with S_0 the identity; the cosets H*S_i partition G.
struct Subgroup {
    std::vector<int> members;    // ascending parent element indices
    std::vector<int> coset_reps; // parent element indices, identity first
    std::vector<int> coset_of;   // parent element index -> coset index
    std::vector<char> is_member; // indicator over parent indices

    long order() const { return static_cast<long>(members.size()); }
    long index() const { return static_cast<long>(coset_reps.size()); }
};

Subgroup subgroup_cosets(const Group& g, const std::vector<int>& member_indices);

// A subgroup together with its own re-enumerated Group and class data, and
// the index translation in both directions.
struct SubgroupContext {
    Subgroup sub;
    Group group;      // H as a group in its own right (same degree)
    ClassData classes;
    std::vector<int> to_parent;   // H element index -> parent element index
    std::vector<int> from_parent; // parent element index -> H index or -1
};

SubgroupContext make_subgroup(const Group& g, const std::vector<int>& member_indices);
SubgroupContext subgroup_from_generators(const Group& g, const std::vector<Perm>& gens);
SubgroupContext whole_group_subgroup(const Group& g);

} // namespace artin
