#pragma once

#include <string>
#include <vector>

#include "artin/errors.hpp"

namespace artin {

// Permutation of {0..n-1}, stored as the image of each point. The product
// p*q applies q first, then p.
class Perm {
public:
    explicit Perm(int n = 0) : img_(n) {
        for (int i = 0; i < n; ++i) img_[i] = i;
    }

    static Perm from_images(std::vector<int> images);
    // Disjoint-cycle input with 1-based points, e.g. "(1 2 3)(4 5)"; the
    // identity is "()". Points beyond the cycles are fixed.
    static Perm parse_cycles(const std::string& text, int degree);

    int degree() const { return static_cast<int>(img_.size()); }
    int operator[](int i) const { return img_[i]; }
    const std::vector<int>& images() const { return img_; }

    bool is_identity() const;
    Perm inverse() const;
    long order() const;

    friend Perm operator*(const Perm& p, const Perm& q);

    // Cycle lengths, descending: the partition of n this element realizes.
    std::vector<int> cycle_type() const;
    std::string cycle_string() const;

    bool operator==(const Perm&) const = default;
    bool operator<(const Perm& o) const { return img_ < o.img_; }

private:
    std::vector<int> img_;
};

} // namespace artin
