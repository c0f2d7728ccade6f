#include "artin/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace artin {

Perm Perm::from_images(std::vector<int> images) {
    const int n = static_cast<int>(images.size());
    std::vector<char> seen(n, 0);
    for (int v : images) {
        if (v < 0 || v >= n || seen[v]) throw DomainError("image vector is not a bijection");
        seen[v] = 1;
    }
    Perm p;
    p.img_ = std::move(images);
    return p;
}

Perm Perm::parse_cycles(const std::string& text, int degree) {
    Perm p(degree);
    size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
            ++i;
    };
    skip();
    if (i == text.size()) throw DomainError("empty permutation");
    while (i < text.size()) {
        skip();
        if (i == text.size()) break;
        if (text[i] != '(') throw DomainError("expected '(' in cycle notation: " + text);
        ++i;
        std::vector<int> cyc;
        while (true) {
            skip();
            if (i < text.size() && text[i] == ')') {
                ++i;
                break;
            }
            std::string d;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) d += text[i++];
            if (d.empty()) throw DomainError("expected point in cycle notation: " + text);
            int pt = std::stoi(d) - 1;
            if (pt < 0 || pt >= degree)
                throw DomainError("cycle point out of range 1.." + std::to_string(degree) + ": " + text);
            cyc.push_back(pt);
        }
        for (size_t k = 0; k < cyc.size(); ++k) {
            int from = cyc[k], to = cyc[(k + 1) % cyc.size()];
            if (p.img_[from] != from) throw DomainError("cycles are not disjoint: " + text);
            p.img_[from] = to;
        }
        if (!cyc.empty()) {
            // disjointness double-check happens above via the fixed-point test
        }
        skip();
    }
    // validate bijection (duplicate targets across cycles)
    return from_images(p.img_);
}

bool Perm::is_identity() const {
    for (int i = 0; i < degree(); ++i)
        if (img_[i] != i) return false;
    return true;
}

Perm Perm::inverse() const {
    std::vector<int> inv(img_.size());
    for (int i = 0; i < degree(); ++i) inv[img_[i]] = i;
    Perm p;
    p.img_ = std::move(inv);
    return p;
}

long Perm::order() const {
    long o = 1;
    for (int len : cycle_type()) o = std::lcm(o, static_cast<long>(len));
    return o;
}

Perm operator*(const Perm& p, const Perm& q) {
    if (p.degree() != q.degree()) throw DomainError("permutation degrees differ");
    std::vector<int> img(p.degree());
    for (int i = 0; i < p.degree(); ++i) img[i] = p.img_[q.img_[i]];
    Perm r;
    r.img_ = std::move(img);
    return r;
}

std::vector<int> Perm::cycle_type() const {
    std::vector<char> seen(img_.size(), 0);
    std::vector<int> type;
    for (int i = 0; i < degree(); ++i) {
        if (seen[i]) continue;
        int len = 0, j = i;
        while (!seen[j]) {
            seen[j] = 1;
            j = img_[j];
            ++len;
        }
        type.push_back(len);
    }
    std::sort(type.rbegin(), type.rend());
    return type;
}

std::string Perm::cycle_string() const {
    std::vector<char> seen(img_.size(), 0);
    std::ostringstream os;
    bool any = false;
    for (int i = 0; i < degree(); ++i) {
        if (seen[i] || img_[i] == i) {
            seen[i] = 1;
            continue;
        }
        os << '(';
        int j = i;
        bool first = true;
        while (!seen[j]) {
            if (!first) os << ' ';
            os << (j + 1);
            seen[j] = 1;
            j = img_[j];
            first = false;
        }
        os << ')';
        any = true;
    }
    return any ? os.str() : "()";
}

} // namespace artin
