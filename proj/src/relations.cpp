#include "artin/relations.hpp"

#include <algorithm>
#include <set>

#include "artin/errors.hpp"

namespace artin {

ExponentMatrix decomposition_matrix(const Group& g, const ClassData& cd,
                                    const CharacterTable& table,
                                    const std::vector<SubgroupContext>& subgroups,
                                    const std::vector<std::string>& names) {
    ExponentMatrix m;
    m.col_names = names;
    m.entries.assign(table.count(), std::vector<long>(subgroups.size(), 0));
    for (size_t j = 0; j < subgroups.size(); ++j) {
        ClassFunction perm = permutation_character(g, cd, subgroups[j].sub);
        std::vector<long> col = decompose(g, cd, table, perm);
        for (size_t i = 0; i < table.count(); ++i) m.entries[i][j] = col[i];
    }
    return m;
}

namespace {

// Row Hermite reduction of a with a unimodular transform u (u*a = h).
void hermite_rows(std::vector<std::vector<Int>>& a, std::vector<std::vector<Int>>& u) {
    const size_t rows = a.size();
    const size_t cols = rows ? a[0].size() : 0;
    u.assign(rows, std::vector<Int>(rows, Int(0)));
    for (size_t i = 0; i < rows; ++i) u[i][i] = 1;

    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        // clear column c below row r by repeated remainder steps
        while (true) {
            size_t best = rows;
            for (size_t i = r; i < rows; ++i) {
                if (a[i][c] == 0) continue;
                if (best == rows || abs(a[i][c]) < abs(a[best][c])) best = i;
            }
            if (best == rows) break; // column all zero from r down
            std::swap(a[r], a[best]);
            std::swap(u[r], u[best]);
            bool cleared = true;
            for (size_t i = r + 1; i < rows; ++i) {
                if (a[i][c] == 0) continue;
                Int q = a[i][c] / a[r][c]; // truncated; remainder loop converges
                if (q != 0) {
                    for (size_t j = 0; j < cols; ++j) a[i][j] -= q * a[r][j];
                    for (size_t j = 0; j < rows; ++j) u[i][j] -= q * u[r][j];
                }
                if (a[i][c] != 0) cleared = false;
            }
            if (cleared) break;
        }
        if (a[r][c] != 0) {
            if (a[r][c] < 0) {
                for (size_t j = 0; j < cols; ++j) a[r][j] = -a[r][j];
                for (size_t j = 0; j < rows; ++j) u[r][j] = -u[r][j];
            }
            ++r;
        }
    }
}

} // namespace

std::vector<std::vector<Int>> integer_kernel(const std::vector<std::vector<Int>>& m) {
    if (m.empty()) return {};
    const size_t rows = m.size(), cols = m[0].size();
    // transpose: kernel vectors of m are left-kernel rows of m^T
    std::vector<std::vector<Int>> a(cols, std::vector<Int>(rows, Int(0)));
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) a[j][i] = m[i][j];
    std::vector<std::vector<Int>> u;
    hermite_rows(a, u);
    std::vector<std::vector<Int>> basis;
    for (size_t i = 0; i < a.size(); ++i) {
        bool zero = true;
        for (const Int& v : a[i])
            if (v != 0) {
                zero = false;
                break;
            }
        if (!zero) continue;
        std::vector<Int> vec = u[i];
        for (Int& v : vec)
            if (v != 0) {
                if (v < 0)
                    for (Int& w : vec) w = -w;
                break;
            }
        basis.push_back(std::move(vec));
    }
    std::sort(basis.begin(), basis.end());
    return basis;
}

long integer_rank(const std::vector<std::vector<Int>>& m) {
    if (m.empty()) return 0;
    std::vector<std::vector<Int>> a = m;
    const size_t rows = a.size(), cols = a[0].size();
    long rank = 0;
    Int prev = 1;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t pr = r;
        while (pr < rows && a[pr][c] == 0) ++pr;
        if (pr == rows) continue;
        std::swap(a[r], a[pr]);
        for (size_t i = r + 1; i < rows; ++i) {
            for (size_t j = c + 1; j < cols; ++j)
                a[i][j] = (a[i][j] * a[r][c] - a[i][c] * a[r][j]) / prev;
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++rank;
        ++r;
    }
    return rank;
}

E24System solve_e24(const Group& g, const ClassData& cd, const CharacterTable& table, int k) {
    const int x = static_cast<int>(table.count());
    if (k < 1 || k >= x)
        throw DomainError("target index must name a nontrivial simple character");

    // Cyclic subgroups generated by non-identity class representatives,
    // deduplicated up to conjugacy. Two generators of the same or conjugate
    // subgroups contribute identical equation sets.
    std::set<std::vector<int>> seen; // canonical member sets
    std::vector<std::vector<int>> cyclics;
    for (int c = 1; c < static_cast<int>(cd.count()); ++c) {
        int rep = cd.reps[c];
        std::vector<int> members;
        int cur = g.identity();
        do {
            members.push_back(cur);
            cur = g.mul(cur, rep);
        } while (cur != g.identity());
        std::sort(members.begin(), members.end());
        std::vector<int> canon = members;
        for (int t = 0; t < g.order(); ++t) {
            std::vector<int> conj;
            conj.reserve(members.size());
            for (int mbr : members) conj.push_back(g.mul(g.mul(t, mbr), g.inv(t)));
            std::sort(conj.begin(), conj.end());
            if (conj < canon) canon = std::move(conj);
        }
        if (seen.insert(canon).second) cyclics.push_back(std::move(canon));
    }
    std::sort(cyclics.begin(), cyclics.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                  if (a.size() != b.size()) return a.size() < b.size();
                  return a < b;
              });

    E24System sys;
    sys.target = k;
    for (const std::vector<int>& members : cyclics) {
        SubgroupContext h = make_subgroup(g, members);
        CharacterTable sub_table = character_table(h.group, h.classes);
        for (int i = 1; i < static_cast<int>(sub_table.count()); ++i) {
            CyclicRow row;
            row.subgroup_members = members;
            row.subgroup_order = h.group.order();
            row.char_index = i;
            row.r = decompose(g, cd, table, induce_character(g, cd, h, sub_table.simple[i]));
            if (row.r[0] != 0)
                throw Error("nontrivial induced character contains the trivial one");
            sys.rows.push_back(std::move(row));
        }
    }

    // Solve sum_rows r_row[nu] x_row = delta_{k nu} for nu = 1..x-1 over Q.
    const size_t nrows = sys.rows.size();
    std::vector<std::vector<Rat>> m(x - 1, std::vector<Rat>(nrows + 1, Rat(0)));
    for (int nu = 1; nu < x; ++nu) {
        for (size_t j = 0; j < nrows; ++j) m[nu - 1][j] = Rat(sys.rows[j].r[nu]);
        m[nu - 1][nrows] = (nu == k) ? Rat(1) : Rat(0);
    }
    // reduced row echelon
    size_t r = 0;
    std::vector<long> pivot_col;
    for (size_t c = 0; c < nrows && r < m.size(); ++c) {
        size_t pr = r;
        while (pr < m.size() && m[pr][c] == 0) ++pr;
        if (pr == m.size()) continue;
        std::swap(m[r], m[pr]);
        Rat inv = Rat(1) / m[r][c];
        for (size_t j = c; j <= nrows; ++j) m[r][j] *= inv;
        for (size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (size_t j = c; j <= nrows; ++j) m[i][j] -= f * m[r][j];
        }
        pivot_col.push_back(static_cast<long>(c));
        ++r;
    }
    if (r != static_cast<size_t>(x - 1))
        throw DomainError(
            "induced-character system rank is below x-1; this should be impossible for a "
            "finite group table — report as a bug");

    sys.solution.assign(nrows, Rat(0));
    for (size_t i = 0; i < pivot_col.size(); ++i) sys.solution[pivot_col[i]] = m[i][nrows];
    Int den = 1;
    for (const Rat& v : sys.solution) den = lcm(den, v.get_den());
    sys.denominator = den;
    return sys;
}

Rat gamma_exponent(const E24System& sys, const Group& g) {
    Rat acc(0);
    for (size_t i = 0; i < sys.rows.size(); ++i)
        acc += sys.solution[i] * frac(g.order(), sys.rows[i].subgroup_order);
    return acc;
}

bool satz5_check(const CharacterTable& table) {
    const int x = static_cast<int>(table.count());
    int ord = table.value_order;
    std::vector<std::vector<CycNum>> m(x, std::vector<CycNum>(x, CycNum::zero(ord)));
    for (int i = 0; i < x; ++i)
        for (int c = 0; c < x; ++c) m[i][c] = table.simple[i].values[c].lifted_to(ord);
    // Gaussian elimination over the cyclotomic field; nonzero determinant
    // exactly when elimination finds a pivot in every column.
    for (int c = 0; c < x; ++c) {
        int pr = c;
        while (pr < x && m[pr][c].is_zero()) ++pr;
        if (pr == x) return false;
        std::swap(m[c], m[pr]);
        CycNum inv = m[c][c].inverse();
        for (int j = c; j < x; ++j) m[c][j] = m[c][j] * inv;
        for (int i = c + 1; i < x; ++i) {
            if (m[i][c].is_zero()) continue;
            CycNum f = m[i][c];
            for (int j = c; j < x; ++j) m[i][j] -= f * m[c][j];
        }
    }
    return true;
}

} // namespace artin
