#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <deque>
#include <random>
#include <set>

#include "artin/catalog.hpp"
#include "artin/characters.hpp"
#include "artin/errors.hpp"

using namespace artin;

namespace {

struct Ctx {
    Group g;
    ClassData cd;
    CharacterTable table;
    explicit Ctx(const std::string& name)
        : g(parse_group(name)), cd(conjugacy_classes(g)), table(character_table(g, cd)) {}
};

ClassFunction cf_from_ints(const Group& g, const std::vector<long>& vals) {
    ClassFunction cf{g.order(), {}};
    for (long v : vals) cf.values.push_back(CycNum::from_int(v));
    return cf;
}

long rat_value(const CycNum& v) {
    REQUIRE(v.is_rational());
    REQUIRE(is_integer(v.rational_value()));
    return to_long(v.rational_value().get_num());
}

// random 2-generated subgroup, closed inside the parent
std::vector<int> random_subgroup_members(const Group& g, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> pick(0, static_cast<int>(g.order()) - 1);
    std::set<int> members{g.identity()};
    std::deque<int> queue{g.identity()};
    int g1 = pick(rng), g2 = pick(rng);
    while (!queue.empty()) {
        int cur = queue.front();
        queue.pop_front();
        for (int gen : {g1, g2}) {
            int nxt = g.mul(cur, gen);
            if (members.insert(nxt).second) queue.push_back(nxt);
        }
    }
    return {members.begin(), members.end()};
}

} // namespace

TEST_CASE("C2 table") {
    Ctx c2("C2");
    REQUIRE(c2.table.count() == 2);
    CHECK(cf_equal(c2.table.simple[0], cf_from_ints(c2.g, {1, 1})));
    CHECK(cf_equal(c2.table.simple[1], cf_from_ints(c2.g, {1, -1})));
}

TEST_CASE("S3 table matches the natural-action oracle") {
    Ctx s3("S3");
    REQUIRE(s3.table.count() == 3);
    CHECK(s3.table.degrees == std::vector<long>{1, 1, 2});
    // classes come out as (e, transpositions, 3-cycles)
    CHECK(s3.cd.sizes == std::vector<long>{1, 3, 2});
    CHECK(cf_equal(s3.table.simple[0], cf_from_ints(s3.g, {1, 1, 1})));
    CHECK(cf_equal(s3.table.simple[1], cf_from_ints(s3.g, {1, -1, 1})));
    CHECK(cf_equal(s3.table.simple[2], cf_from_ints(s3.g, {2, 0, -1})));

    // oracle: the permutation character of the natural action minus the
    // trivial character has norm 1, i.e. is simple, and equals the row
    ClassFunction nat = cf_from_ints(s3.g, {3, 1, 0});
    ClassFunction reduced{s3.g.order(), {}};
    for (size_t c = 0; c < nat.size(); ++c)
        reduced.values.push_back(nat.values[c] - CycNum::one(1));
    CycNum norm = inner_product(s3.g, s3.cd, reduced, reduced);
    CHECK(norm == CycNum::one(norm.order()));
    CHECK(cf_equal(reduced, s3.table.simple[2]));
}

TEST_CASE("A5 degrees") {
    Ctx a5("A5");
    CHECK(a5.table.degrees == std::vector<long>{1, 3, 3, 4, 5});
    CHECK(a5.table.value_order == 30);
}

TEST_CASE("orthogonality holds exactly on every computed table") {
    for (const char* name :
         {"C1", "C2", "C3", "C4", "C5", "C6", "V4", "S3", "A4", "D4", "D5", "A5"}) {
        Ctx ctx(name);
        const int x = static_cast<int>(ctx.table.count());
        long sumsq = 0;
        for (long f : ctx.table.degrees) sumsq += f * f;
        CHECK(sumsq == ctx.g.order());
        for (int i = 0; i < x; ++i)
            for (int k = 0; k < x; ++k) {
                CycNum ip = inner_product(ctx.g, ctx.cd, ctx.table.simple[i], ctx.table.simple[k]);
                CHECK(ip == (i == k ? CycNum::one(ip.order()) : CycNum::zero(ip.order())));
            }
        // columns: sum_i chi^i(sigma) chi^i(tau^-1) = delta * |G| / h_r
        const int ord = ctx.table.value_order;
        for (int a = 0; a < x; ++a)
            for (int b = 0; b < x; ++b) {
                CycNum acc = CycNum::zero(ord);
                for (int i = 0; i < x; ++i)
                    acc += ctx.table.simple[i].values[a].lifted_to(ord) *
                           ctx.table.simple[i].values[ctx.cd.inverse_class(b)].lifted_to(ord);
                CycNum expect = (a == b)
                                    ? CycNum::from_rat(frac(ctx.g.order(), ctx.cd.sizes[a]), ord)
                                    : CycNum::zero(ord);
                CHECK(acc == expect);
            }
    }
}

TEST_CASE("inner product rejects group mismatch") {
    Ctx s3("S3");
    Ctx c2("C2");
    CHECK_THROWS_AS(inner_product(s3.g, s3.cd, s3.table.simple[0], c2.table.simple[0]),
                    GroupError);
}

TEST_CASE("permutation character of the natural A5 action") {
    Ctx a5("A5");
    SubgroupContext a4 =
        subgroup_from_generators(a5.g, parse_generators("(1 2 3),(1 2)(3 4)", 5));
    ClassFunction perm = permutation_character(a5.g, a5.cd, a4.sub);
    // the action is 2-transitive: orbit-count oracle gives norm 2
    CycNum norm = inner_product(a5.g, a5.cd, perm, perm);
    CHECK(norm == CycNum::from_int(2, norm.order()));
    // fixed-coset counts match fixed points of the 5-point action per class
    for (size_t c = 0; c < a5.cd.count(); ++c) {
        std::vector<int> type = a5.g.elem(a5.cd.reps[c]).cycle_type();
        long fixed = static_cast<long>(std::count(type.begin(), type.end(), 1));
        CHECK(rat_value(perm.values[c]) == fixed);
    }
}

TEST_CASE("induction examples") {
    Ctx s3("S3");
    SubgroupContext whole = whole_group_subgroup(s3.g);
    for (const ClassFunction& chi : s3.table.simple)
        CHECK(cf_equal(induce_character(s3.g, s3.cd, whole, chi), chi));

    // trivial character of the trivial subgroup induces the regular character
    SubgroupContext triv = make_subgroup(s3.g, {s3.g.identity()});
    ClassFunction reg =
        induce_character(s3.g, s3.cd, triv, trivial_character(triv.group, triv.classes));
    CHECK(cf_equal(reg, cf_from_ints(s3.g, {6, 0, 0})));

    // hand oracle: a nontrivial character of C3 sums psi(rho)+psi(rho^2) = -1
    // on 3-cycles, giving the degree-2 simple character (2, 0, -1)
    SubgroupContext c3 = subgroup_from_generators(s3.g, {Perm::parse_cycles("(1 2 3)", 3)});
    CharacterTable c3_table = character_table(c3.group, c3.classes);
    ClassFunction ind = induce_character(s3.g, s3.cd, c3, c3_table.simple[1]);
    CHECK(cf_equal(ind, s3.table.simple[2]));
}

TEST_CASE("restriction examples") {
    Ctx s3("S3");
    SubgroupContext c3 = subgroup_from_generators(s3.g, {Perm::parse_cycles("(1 2 3)", 3)});
    CharacterTable c3_table = character_table(c3.group, c3.classes);

    ClassFunction r = restrict_character(s3.g, s3.cd, c3, s3.table.simple[0]);
    CHECK(cf_equal(r, trivial_character(c3.group, c3.classes)));

    // the degree-2 character restricts to the sum of both nontrivial
    // characters of C3 (inner products against the C3 table)
    ClassFunction r2 = restrict_character(s3.g, s3.cd, c3, s3.table.simple[2]);
    CHECK(decompose(c3.group, c3.classes, c3_table, r2) == std::vector<long>{0, 1, 1});

    SubgroupContext whole = whole_group_subgroup(s3.g);
    for (const ClassFunction& chi : s3.table.simple)
        CHECK(cf_equal(restrict_character(s3.g, s3.cd, whole, chi), chi));
}

TEST_CASE("decomposition") {
    Ctx a5("A5");
    for (size_t k = 0; k < a5.table.count(); ++k) {
        std::vector<long> r = decompose(a5.g, a5.cd, a5.table, a5.table.simple[k]);
        for (size_t i = 0; i < r.size(); ++i) CHECK(r[i] == (i == k ? 1 : 0));
    }
    ClassFunction reg = cf_from_ints(a5.g, {60, 0, 0, 0, 0});
    CHECK(decompose(a5.g, a5.cd, a5.table, reg) == std::vector<long>{1, 3, 3, 4, 5});

    SubgroupContext a4 =
        subgroup_from_generators(a5.g, parse_generators("(1 2 3),(1 2)(3 4)", 5));
    ClassFunction perm = permutation_character(a5.g, a5.cd, a4.sub);
    CHECK(decompose(a5.g, a5.cd, a5.table, perm) == std::vector<long>{1, 0, 0, 1, 0});

    ClassFunction bogus = cf_from_ints(a5.g, {1, 1, 1, 1, -1});
    CHECK_THROWS_AS(decompose(a5.g, a5.cd, a5.table, bogus), NotACharacterError);
}

TEST_CASE("permutation character equals the induced trivial character") {
    std::mt19937_64 rng(4242);
    for (const char* name : {"S3", "A4", "D4", "A5"}) {
        Ctx ctx(name);
        for (int rep = 0; rep < 6; ++rep) {
            SubgroupContext h = make_subgroup(ctx.g, random_subgroup_members(ctx.g, rng));
            ClassFunction lhs = permutation_character(ctx.g, ctx.cd, h.sub);
            ClassFunction rhs =
                induce_character(ctx.g, ctx.cd, h, trivial_character(h.group, h.classes));
            CHECK(cf_equal(lhs, rhs));
        }
    }
    Ctx s3("S3");
    SubgroupContext whole = whole_group_subgroup(s3.g);
    CHECK(cf_equal(permutation_character(s3.g, s3.cd, whole.sub),
                   trivial_character(s3.g, s3.cd)));
}

TEST_CASE("Frobenius reciprocity on 100 random samples") {
    std::vector<std::string> names{"S3", "A4", "D4", "C6", "A5", "D5"};
    std::mt19937_64 rng(20231115);
    for (int samples = 0; samples < 100; ++samples) {
        Ctx ctx(names[rng() % names.size()]);
        SubgroupContext h = make_subgroup(ctx.g, random_subgroup_members(ctx.g, rng));
        CharacterTable sub_table = character_table(h.group, h.classes);
        const ClassFunction& psi = sub_table.simple[rng() % sub_table.count()];
        const ClassFunction& chi = ctx.table.simple[rng() % ctx.table.count()];

        CycNum lhs = inner_product(ctx.g, ctx.cd, induce_character(ctx.g, ctx.cd, h, psi), chi);
        CycNum rhs = inner_product(h.group, h.classes, psi,
                                   restrict_character(ctx.g, ctx.cd, h, chi));
        auto [a, b] = lifted_pair(lhs, rhs);
        CHECK(a == b);
    }
}

TEST_CASE("decompose is a left inverse of recombination") {
    Ctx a4("A4");
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> mult(0, 3);
    for (int rep = 0; rep < 20; ++rep) {
        std::vector<long> r(a4.table.count());
        for (auto& v : r) v = mult(rng);
        ClassFunction combo{
            a4.g.order(),
            std::vector<CycNum>(a4.cd.count(), CycNum::zero(a4.table.value_order))};
        for (size_t i = 0; i < r.size(); ++i)
            for (size_t c = 0; c < a4.cd.count(); ++c)
                combo.values[c] += a4.table.simple[i]
                                       .values[c]
                                       .lifted_to(a4.table.value_order)
                                       .scaled(Rat(r[i]));
        CHECK(decompose(a4.g, a4.cd, a4.table, combo) == r);
    }
}
