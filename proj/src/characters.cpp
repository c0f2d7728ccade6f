#include "artin/characters.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "artin/errors.hpp"

namespace artin {

namespace {

// ---- small prime-field helpers (l fits comfortably in 63 bits) ----

uint64_t add_mod(uint64_t a, uint64_t b, uint64_t l) { return (a + b) % l; }
uint64_t sub_mod(uint64_t a, uint64_t b, uint64_t l) { return (a + l - b % l) % l; }
uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t l) {
    return static_cast<uint64_t>((static_cast<__uint128_t>(a) * b) % l);
}
uint64_t pow_mod(uint64_t a, uint64_t e, uint64_t l) {
    uint64_t r = 1 % l;
    a %= l;
    while (e) {
        if (e & 1) r = mul_mod(r, a, l);
        a = mul_mod(a, a, l);
        e >>= 1;
    }
    return r;
}
uint64_t inv_mod(uint64_t a, uint64_t l) { return pow_mod(a % l, l - 2, l); }

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

uint64_t find_modulus(long exponent, long order) {
    // l = 1 mod exponent and l > |G| (so degrees, class sizes and the
    // multiplicity lifts are all determined by their residues).
    for (uint64_t l = static_cast<uint64_t>(exponent) + 1;; l += exponent) {
        if (l <= static_cast<uint64_t>(order)) continue;
        if (is_prime_u64(l)) return l;
        if (l > 100000000ULL)
            throw Error("modular prime search failed; retry with a larger bound");
    }
}

uint64_t primitive_root(uint64_t l) {
    // factor l-1 by trial division, then test candidates
    std::vector<uint64_t> fac;
    uint64_t m = l - 1;
    for (uint64_t d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            fac.push_back(d);
            while (m % d == 0) m /= d;
        }
    }
    if (m > 1) fac.push_back(m);
    for (uint64_t g = 2; g < l; ++g) {
        bool ok = true;
        for (uint64_t q : fac)
            if (pow_mod(g, (l - 1) / q, l) == 1) {
                ok = false;
                break;
            }
        if (ok) return g;
    }
    throw Error("no primitive root found");
}

using FVec = std::vector<uint64_t>;
using FMat = std::vector<FVec>;

// Nullspace basis of m (rows x cols) over F_l; vectors of length cols.
std::vector<FVec> nullspace(FMat m, uint64_t l) {
    if (m.empty()) return {};
    const size_t rows = m.size(), cols = m[0].size();
    std::vector<int> pivot_col_of_row;
    size_t r = 0;
    std::vector<char> is_pivot(cols, 0);
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t pr = r;
        while (pr < rows && m[pr][c] == 0) ++pr;
        if (pr == rows) continue;
        std::swap(m[r], m[pr]);
        uint64_t inv = inv_mod(m[r][c], l);
        for (size_t j = c; j < cols; ++j) m[r][j] = mul_mod(m[r][j], inv, l);
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            uint64_t f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] = sub_mod(m[i][j], mul_mod(f, m[r][j], l), l);
        }
        pivot_col_of_row.push_back(static_cast<int>(c));
        is_pivot[c] = 1;
        ++r;
    }
    std::vector<FVec> basis;
    for (size_t c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        FVec v(cols, 0);
        v[c] = 1;
        for (size_t i = 0; i < pivot_col_of_row.size(); ++i)
            v[pivot_col_of_row[i]] = sub_mod(0, m[i][c], l);
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace

CharacterTable character_table(const Group& g, const ClassData& cd) {
    const long n = g.order();
    if (n > 10000) throw GroupError("group too large for exact table computation");
    const int x = static_cast<int>(cd.count());
    const long e = cd.exponent;
    const uint64_t l = find_modulus(e, n);
    const uint64_t z = (e == 1) ? 1 : pow_mod(primitive_root(l), (l - 1) / e, l); // primitive e-th root

    // Class algebra matrices: M_i[j][k] = #{(u,v) in C_i x C_j : uv = rep_k}.
    // The joint eigenvectors are (h_k chi(g_k)/chi(1))_k, one per character.
    std::vector<FMat> class_mats(x, FMat(x, FVec(x, 0)));
    for (int i = 0; i < x; ++i) {
        for (int u : cd.members[i]) {
            for (int k = 0; k < x; ++k) {
                int v = g.mul(g.inv(u), cd.reps[k]);
                int j = cd.class_of[v];
                class_mats[i][j][k] = add_mod(class_mats[i][j][k], 1, l);
            }
        }
    }

    // Split F_l^x into joint eigenspaces, one class matrix at a time.
    // Subspaces are kept as RREF row bases so coordinates read off pivots.
    struct Space {
        FMat basis;              // rows span the subspace
        std::vector<int> pivots; // pivot column per row
    };
    auto to_rref = [&](FMat rows) {
        Space s;
        size_t r = 0;
        const size_t cols = rows[0].size();
        for (size_t c = 0; c < cols && r < rows.size(); ++c) {
            size_t pr = r;
            while (pr < rows.size() && rows[pr][c] == 0) ++pr;
            if (pr == rows.size()) continue;
            std::swap(rows[r], rows[pr]);
            uint64_t inv = inv_mod(rows[r][c], l);
            for (size_t j = 0; j < cols; ++j) rows[r][j] = mul_mod(rows[r][j], inv, l);
            for (size_t i = 0; i < rows.size(); ++i) {
                if (i == r || rows[i][c] == 0) continue;
                uint64_t f = rows[i][c];
                for (size_t j = 0; j < cols; ++j)
                    rows[i][j] = sub_mod(rows[i][j], mul_mod(f, rows[r][j], l), l);
            }
            s.pivots.push_back(static_cast<int>(c));
            ++r;
        }
        rows.resize(r);
        s.basis = std::move(rows);
        return s;
    };

    FMat id(x, FVec(x, 0));
    for (int i = 0; i < x; ++i) id[i][i] = 1;
    std::vector<Space> spaces{to_rref(std::move(id))};

    for (int i = 1; i < x; ++i) {
        bool all_one = true;
        for (const Space& s : spaces)
            if (s.basis.size() > 1) all_one = false;
        if (all_one) break;

        std::vector<Space> next;
        for (Space& sp : spaces) {
            const size_t d = sp.basis.size();
            if (d == 1) {
                next.push_back(std::move(sp));
                continue;
            }
            // R[r][s]: M_i . w_r = sum_s R[r][s] w_s, coordinates via pivots.
            FMat big(d, FVec(x, 0));
            for (size_t r = 0; r < d; ++r)
                for (int row = 0; row < x; ++row) {
                    uint64_t acc = 0;
                    for (int col = 0; col < x; ++col)
                        acc = add_mod(acc, mul_mod(class_mats[i][row][col], sp.basis[r][col], l), l);
                    big[r][row] = acc;
                }
            FMat R(d, FVec(d, 0));
            for (size_t r = 0; r < d; ++r)
                for (size_t s = 0; s < d; ++s) R[r][s] = big[r][sp.pivots[s]];

            size_t found = 0;
            for (uint64_t lambda = 0; lambda < l && found < d; ++lambda) {
                // left eigenvectors: nullspace of R^T - lambda I
                FMat rt(d, FVec(d, 0));
                for (size_t a = 0; a < d; ++a)
                    for (size_t b = 0; b < d; ++b) rt[a][b] = R[b][a];
                for (size_t a = 0; a < d; ++a) rt[a][a] = sub_mod(rt[a][a], lambda, l);
                auto null = nullspace(std::move(rt), l);
                if (null.empty()) continue;
                found += null.size();
                FMat rows;
                for (const FVec& y : null) {
                    FVec v(x, 0);
                    for (size_t r = 0; r < d; ++r) {
                        if (y[r] == 0) continue;
                        for (int c = 0; c < x; ++c)
                            v[c] = add_mod(v[c], mul_mod(y[r], sp.basis[r][c], l), l);
                    }
                    rows.push_back(std::move(v));
                }
                next.push_back(to_rref(std::move(rows)));
            }
            if (found != d) throw Error("class algebra did not split over the chosen prime");
        }
        spaces = std::move(next);
    }
    for (const Space& s : spaces)
        if (s.basis.size() != 1) throw Error("joint eigenspaces failed to separate");

    // Recover each character from its eigenvalue vector.
    const long isqrt_n = static_cast<long>(std::sqrt(static_cast<double>(n))) + 1;
    std::vector<ClassFunction> rows;
    std::vector<long> degrees;
    for (const Space& sp : spaces) {
        FVec omega = sp.basis[0];
        // normalize so the identity-class entry is 1
        uint64_t s0 = omega[0];
        if (s0 == 0) throw Error("eigenvector vanishes on the identity class");
        uint64_t inv0 = inv_mod(s0, l);
        for (auto& v : omega) v = mul_mod(v, inv0, l);

        // f^2 = n / sum_k omega_k omega_{k*} / h_k  (mod l), f <= sqrt(n) < l
        uint64_t s = 0;
        for (int k = 0; k < x; ++k) {
            int kinv = cd.inverse_class(k);
            uint64_t term = mul_mod(omega[k], omega[kinv], l);
            term = mul_mod(term, inv_mod(static_cast<uint64_t>(cd.sizes[k]) % l, l), l);
            s = add_mod(s, term, l);
        }
        uint64_t f2 = mul_mod(static_cast<uint64_t>(n) % l, inv_mod(s, l), l);
        long f = -1;
        for (long c = 1; c <= isqrt_n; ++c)
            if (static_cast<uint64_t>(c) * c == f2) {
                f = c;
                break;
            }
        if (f < 0) throw Error("degree recovery failed");

        // char value mod l per class
        FVec theta(x);
        for (int k = 0; k < x; ++k) {
            uint64_t t = mul_mod(omega[k], static_cast<uint64_t>(f) % l, l);
            theta[k] = mul_mod(t, inv_mod(static_cast<uint64_t>(cd.sizes[k]) % l, l), l);
        }

        // Lift: m_j = (1/e) sum_nu theta(class of g^nu) z^{-j nu} counts the
        // eigenvalues equal to zeta_e^j; each m_j lies in [0, f] so its
        // residue determines it.
        const uint64_t inv_e = inv_mod(static_cast<uint64_t>(e) % l, l);
        const uint64_t zinv = inv_mod(z, l);
        ClassFunction cf{n, {}};
        cf.values.reserve(x);
        for (int k = 0; k < x; ++k) {
            std::vector<Rat> poly(static_cast<size_t>(e), Rat(0));
            for (long j = 0; j < e; ++j) {
                uint64_t acc = 0;
                uint64_t zj = pow_mod(zinv, static_cast<uint64_t>(j), l);
                uint64_t cur = 1;
                for (long nu = 0; nu < e; ++nu) {
                    acc = add_mod(acc, mul_mod(theta[cd.power_class(k, nu)], cur, l), l);
                    cur = mul_mod(cur, zj, l);
                }
                acc = mul_mod(acc, inv_e, l);
                if (acc > static_cast<uint64_t>(f))
                    throw Error("multiplicity lift out of range; table computation failed");
                poly[static_cast<size_t>(j)] = Rat(static_cast<long>(acc));
            }
            cf.values.push_back(CycNum::from_poly(static_cast<int>(e), std::move(poly)));
        }
        rows.push_back(std::move(cf));
        degrees.push_back(f);
    }

    // Deterministic order: trivial first, then by degree, then value-lex.
    std::vector<int> order_idx(rows.size());
    for (size_t i = 0; i < rows.size(); ++i) order_idx[i] = static_cast<int>(i);
    auto is_trivial = [&](int i) {
        const CycNum one = CycNum::one(static_cast<int>(e));
        for (const CycNum& v : rows[i].values)
            if (!(v == one)) return false;
        return true;
    };
    std::sort(order_idx.begin(), order_idx.end(), [&](int a, int b) {
        bool ta = is_trivial(a), tb = is_trivial(b);
        if (ta != tb) return ta;
        if (degrees[a] != degrees[b]) return degrees[a] < degrees[b];
        for (size_t k = 0; k < rows[a].values.size(); ++k) {
            int c = CycNum::compare(rows[a].values[k], rows[b].values[k]);
            if (c != 0) return c < 0;
        }
        return false;
    });

    CharacterTable table;
    table.value_order = static_cast<int>(e);
    for (int i : order_idx) {
        table.simple.push_back(std::move(rows[i]));
        table.degrees.push_back(degrees[i]);
    }

    // Exactness gate: row orthogonality and sum of squared degrees.
    long deg_sq = 0;
    for (long f : table.degrees) deg_sq += f * f;
    if (deg_sq != n) throw Error("degree check failed: sum of squares != |G|");
    for (size_t i = 0; i < table.count(); ++i)
        for (size_t k = i; k < table.count(); ++k) {
            CycNum ip = inner_product(g, cd, table.simple[i], table.simple[k]);
            CycNum expect = (i == k) ? CycNum::one(ip.order()) : CycNum::zero(ip.order());
            if (!(ip == expect)) throw Error("orthogonality check failed");
        }
    return table;
}

CycNum inner_product(const Group&, const ClassData& cd, const ClassFunction& phi,
                     const ClassFunction& psi) {
    if (phi.group_order != psi.group_order || phi.size() != psi.size() ||
        phi.size() != cd.count())
        throw GroupError("inner product operands belong to different groups");
    int ord = 1;
    for (const CycNum& v : phi.values) ord = common_order(ord, v.order());
    for (const CycNum& v : psi.values) ord = common_order(ord, v.order());
    CycNum acc = CycNum::zero(ord);
    for (int c = 0; c < static_cast<int>(cd.count()); ++c) {
        CycNum term = phi.values[c].lifted_to(ord) *
                      psi.values[cd.inverse_class(c)].lifted_to(ord);
        acc += term.scaled(Rat(cd.sizes[c]));
    }
    return acc.scaled(frac(1, phi.group_order));
}

ClassFunction trivial_character(const Group& g, const ClassData& cd) {
    ClassFunction cf{g.order(), std::vector<CycNum>(cd.count(), CycNum::one(1))};
    return cf;
}

ClassFunction induce_character(const Group& g, const ClassData& cd, const SubgroupContext& h,
                               const ClassFunction& psi_on_h) {
    if (psi_on_h.group_order != h.group.order() || psi_on_h.size() != h.classes.count())
        throw GroupError("character does not live on the given subgroup");
    int ord = 1;
    for (const CycNum& v : psi_on_h.values) ord = common_order(ord, v.order());
    ClassFunction out{g.order(), {}};
    out.values.reserve(cd.count());
    const long hsize = h.group.order();
    for (int c = 0; c < static_cast<int>(cd.count()); ++c) {
        int rep = cd.reps[c];
        CycNum acc = CycNum::zero(ord);
        for (int t = 0; t < g.order(); ++t) {
            int conj = g.mul(g.mul(t, rep), g.inv(t));
            int hi = h.from_parent[conj];
            if (hi < 0) continue;
            acc += psi_on_h.values[h.classes.class_of[hi]].lifted_to(ord);
        }
        out.values.push_back(acc.scaled(frac(1, hsize)));
    }
    return out;
}

ClassFunction restrict_character(const Group& g, const ClassData& cd, const SubgroupContext& h,
                                 const ClassFunction& chi_on_g) {
    if (chi_on_g.group_order != g.order() || chi_on_g.size() != cd.count())
        throw GroupError("character does not live on the given group");
    ClassFunction out{h.group.order(), {}};
    out.values.reserve(h.classes.count());
    for (int c = 0; c < static_cast<int>(h.classes.count()); ++c) {
        int parent_elem = h.to_parent[h.classes.reps[c]];
        out.values.push_back(chi_on_g.values[cd.class_of[parent_elem]]);
    }
    return out;
}

std::vector<long> decompose(const Group& g, const ClassData& cd, const CharacterTable& table,
                            const ClassFunction& phi) {
    std::vector<long> r;
    r.reserve(table.count());
    for (size_t i = 0; i < table.count(); ++i) {
        CycNum ip = inner_product(g, cd, phi, table.simple[i]);
        if (!ip.is_rational()) throw NotACharacterError("not a character: non-rational multiplicity");
        Rat v = ip.rational_value();
        if (!is_integer(v)) throw NotACharacterError("not a character: non-integral multiplicity");
        if (v < 0) throw NotACharacterError("not a character: negative multiplicity");
        r.push_back(to_long(v.get_num()));
    }
    return r;
}

ClassFunction permutation_character(const Group& g, const ClassData& cd, const Subgroup& h) {
    ClassFunction out{g.order(), {}};
    out.values.reserve(cd.count());
    for (int c = 0; c < static_cast<int>(cd.count()); ++c) {
        int rep = cd.reps[c];
        long fixed = 0;
        for (int s : h.coset_reps) {
            int moved = g.mul(g.mul(s, rep), g.inv(s));
            if (h.is_member[moved]) ++fixed;
        }
        out.values.push_back(CycNum::from_rat(Rat(fixed), 1));
    }
    return out;
}

ClassFunction cf_add(const ClassFunction& a, const ClassFunction& b) {
    if (a.group_order != b.group_order || a.size() != b.size())
        throw GroupError("class functions belong to different groups");
    int ord = 1;
    for (const CycNum& v : a.values) ord = common_order(ord, v.order());
    for (const CycNum& v : b.values) ord = common_order(ord, v.order());
    ClassFunction out{a.group_order, {}};
    for (size_t i = 0; i < a.size(); ++i)
        out.values.push_back(a.values[i].lifted_to(ord) + b.values[i].lifted_to(ord));
    return out;
}

bool cf_equal(const ClassFunction& a, const ClassFunction& b) {
    if (a.group_order != b.group_order || a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i) {
        auto [x, y] = lifted_pair(a.values[i], b.values[i]);
        if (!(x == y)) return false;
    }
    return true;
}

} // namespace artin
