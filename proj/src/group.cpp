#include "artin/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace artin {

std::string Group::pack(const Perm& p) {
    std::string s;
    s.reserve(p.degree() * sizeof(int));
    for (int i = 0; i < p.degree(); ++i) {
        int v = p[i];
        s.append(reinterpret_cast<const char*>(&v), sizeof(int));
    }
    return s;
}

Group Group::from_generators(int degree, const std::vector<Perm>& gens, size_t size_cap) {
    for (const Perm& g : gens)
        if (g.degree() != degree) throw GroupError("generator degree mismatch");
    std::set<Perm> seen;
    seen.insert(Perm(degree));
    std::deque<Perm> queue{Perm(degree)};
    while (!queue.empty()) {
        Perm cur = queue.front();
        queue.pop_front();
        for (const Perm& g : gens) {
            Perm next = cur * g;
            if (seen.insert(next).second) {
                if (seen.size() > size_cap)
                    throw GroupError("closure exceeds size cap of " + std::to_string(size_cap));
                queue.push_back(next);
            }
        }
    }
    Group grp;
    grp.degree_ = degree;
    grp.elems_.assign(seen.begin(), seen.end()); // std::set iterates in lex order
    grp.gens_ = gens;
    grp.finalize();
    return grp;
}

Group Group::from_elements(int degree, std::vector<Perm> elems) {
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    Group grp;
    grp.degree_ = degree;
    grp.elems_ = std::move(elems);
    grp.finalize();
    // closure check
    for (size_t a = 0; a < grp.elems_.size(); ++a)
        for (size_t b = 0; b < grp.elems_.size(); ++b)
            if (grp.index_of(grp.elems_[a] * grp.elems_[b]) < 0)
                throw GroupError("element set is not closed under products");
    return grp;
}

void Group::finalize() {
    index_.reserve(elems_.size() * 2);
    for (size_t i = 0; i < elems_.size(); ++i) index_.emplace(pack(elems_[i]), static_cast<int>(i));
    id_ = index_of(Perm(degree_));
    if (id_ != 0) throw GroupError("identity missing or element order broken");
    inv_.resize(elems_.size());
    for (size_t i = 0; i < elems_.size(); ++i) {
        int j = index_of(elems_[i].inverse());
        if (j < 0) throw GroupError("element set is not closed under inverses");
        inv_[i] = j;
    }
    if (elems_.size() <= 2048) {
        const int n = static_cast<int>(elems_.size());
        mul_table_.assign(static_cast<size_t>(n) * n, -1);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                mul_table_[static_cast<size_t>(a) * n + b] = index_of(elems_[a] * elems_[b]);
    }
}

int Group::index_of(const Perm& p) const {
    auto it = index_.find(pack(p));
    return it == index_.end() ? -1 : it->second;
}

int Group::mul(int a, int b) const {
    if (!mul_table_.empty()) return mul_table_[static_cast<size_t>(a) * elems_.size() + b];
    return index_of(elems_[a] * elems_[b]);
}

long Group::elem_order(int a) const {
    long o = 1;
    int cur = a;
    while (cur != id_) {
        cur = mul(cur, a);
        ++o;
    }
    return o;
}

ClassData conjugacy_classes(const Group& g) {
    const long n = g.order();
    ClassData cd;
    cd.class_of.assign(n, -1);
    for (int e = 0; e < n; ++e) {
        if (cd.class_of[e] >= 0) continue;
        const int cls = static_cast<int>(cd.members.size());
        std::vector<int> orbit;
        for (int t = 0; t < n; ++t) {
            int conj = g.mul(g.mul(t, e), g.inv(t));
            if (cd.class_of[conj] < 0) {
                cd.class_of[conj] = cls;
                orbit.push_back(conj);
            }
        }
        std::sort(orbit.begin(), orbit.end());
        cd.reps.push_back(orbit.front());
        cd.sizes.push_back(static_cast<long>(orbit.size()));
        cd.members.push_back(std::move(orbit));
    }
    for (int c = 0; c < static_cast<int>(cd.count()); ++c) {
        cd.rep_orders.push_back(g.elem_order(cd.reps[c]));
        cd.exponent = std::lcm(cd.exponent, cd.rep_orders[c]);
    }
    cd.power_map.resize(cd.count());
    for (int c = 0; c < static_cast<int>(cd.count()); ++c) {
        cd.power_map[c].resize(cd.exponent + 1);
        int cur = g.identity();
        for (long nu = 0; nu <= cd.exponent; ++nu) {
            cd.power_map[c][nu] = cd.class_of[cur];
            cur = g.mul(cur, cd.reps[c]);
        }
    }
    return cd;
}

int ClassData::power_class(int i, long nu) const {
    if (nu < 0) throw DomainError("power_class exponent must be >= 0");
    long e = rep_orders[i];
    return power_map[i][nu % e];
}

Subgroup subgroup_cosets(const Group& g, const std::vector<int>& member_indices) {
    const long n = g.order();
    Subgroup h;
    h.members = member_indices;
    std::sort(h.members.begin(), h.members.end());
    h.members.erase(std::unique(h.members.begin(), h.members.end()), h.members.end());
    if (h.members.empty()) throw GroupError("subgroup member set is empty");
    h.is_member.assign(n, 0);
    for (int m : h.members) {
        if (m < 0 || m >= n) throw GroupError("subgroup member index out of range");
        h.is_member[m] = 1;
    }
    for (int a : h.members)
        for (int b : h.members)
            if (!h.is_member[g.mul(a, b)]) throw GroupError("member set is not closed under products");
    if (!h.is_member[g.identity()]) throw GroupError("member set misses the identity");
    for (int a : h.members)
        if (!h.is_member[g.inv(a)]) throw GroupError("member set is not closed under inverses");
    if (n % h.order() != 0) throw GroupError("subgroup order does not divide the group order");

    // Right cosets H*s: scan elements in canonical order, so S_0 = identity.
    h.coset_of.assign(n, -1);
    for (int e = 0; e < n; ++e) {
        if (h.coset_of[e] >= 0) continue;
        int idx = static_cast<int>(h.coset_reps.size());
        h.coset_reps.push_back(e);
        for (int m : h.members) h.coset_of[g.mul(m, e)] = idx;
    }
    return h;
}

SubgroupContext make_subgroup(const Group& g, const std::vector<int>& member_indices) {
    SubgroupContext ctx;
    ctx.sub = subgroup_cosets(g, member_indices);
    std::vector<Perm> elems;
    elems.reserve(ctx.sub.members.size());
    for (int m : ctx.sub.members) elems.push_back(g.elem(m));
    ctx.group = Group::from_elements(g.degree(), std::move(elems));
    ctx.classes = conjugacy_classes(ctx.group);
    ctx.to_parent.resize(ctx.group.order());
    ctx.from_parent.assign(g.order(), -1);
    for (int i = 0; i < ctx.group.order(); ++i) {
        int parent = g.index_of(ctx.group.elem(i));
        ctx.to_parent[i] = parent;
        ctx.from_parent[parent] = i;
    }
    return ctx;
}

SubgroupContext subgroup_from_generators(const Group& g, const std::vector<Perm>& gens) {
    std::set<int> seen;
    seen.insert(g.identity());
    std::deque<int> queue{g.identity()};
    std::vector<int> gen_idx;
    for (const Perm& p : gens) {
        int i = g.index_of(p);
        if (i < 0) throw GroupError("subgroup generator is not an element of the parent group");
        gen_idx.push_back(i);
    }
    while (!queue.empty()) {
        int cur = queue.front();
        queue.pop_front();
        for (int gi : gen_idx) {
            int next = g.mul(cur, gi);
            if (seen.insert(next).second) queue.push_back(next);
        }
    }
    return make_subgroup(g, std::vector<int>(seen.begin(), seen.end()));
}

SubgroupContext whole_group_subgroup(const Group& g) {
    std::vector<int> all(g.order());
    std::iota(all.begin(), all.end(), 0);
    return make_subgroup(g, all);
}

} // namespace artin
