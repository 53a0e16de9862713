#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "qfano/representation.hpp"

using namespace qfano;
using namespace qfano::testing;

TEST_CASE("rep2 of 2-subspaces of F_q^4") {
    Field f(2, 1);
    Parallelism p = table1_parallelism(f);
    SUBCASE("first spread member matches the published columns") {
        Mat m = rep2(f, p[0][0]);
        CHECK(m.col(0) == Vec(4, {0, 0, 0, 1}));
        CHECK(m.col(1) == Vec(4, {0, 1, 1, 0}));
        CHECK(m.col(2) == Vec(4, {0, 1, 1, 1}));
    }
    SUBCASE("columns are the normalized vectors, recurrence holds") {
        for (int q : {2, 3, 4}) {
            Field fq = field_from_q(q);
            for (const Subspace& s : enumerate_subspaces(fq, 4, 2)) {
                Mat m = rep2(fq, s);
                auto nv = normalized_vectors(fq, s);
                std::set<Vec> cols;
                for (int c = 0; c < m.cols; ++c) cols.insert(m.col(c));
                CHECK(cols == std::set<Vec>(nv.begin(), nv.end()));
                CHECK(m.col(2) == vec_add(fq, m.col(0), m.col(1)));
                CHECK(m.col(0) == nv[0]);
                CHECK(m.col(1) == nv[1]);
            }
        }
    }
    SUBCASE("unrepresentable subspaces raise the dedicated error") {
        Subspace s0 = canonicalize(f, {Vec(6, {0, 0, 0, 0, 1, 0}), Vec(6, {0, 0, 0, 0, 0, 1})});
        CHECK_THROWS_AS(rep2(f, s0), UnrepresentableError);
        Subspace mixed =
            canonicalize(f, {Vec(6, {1, 0, 0, 0, 0, 0}), Vec(6, {0, 0, 0, 0, 0, 1})});
        CHECK_THROWS_AS(rep2(f, mixed), UnrepresentableError);
    }
}

TEST_CASE("unique spread member in each 3-subspace") {
    Field f(2, 1);
    Spread A = table1_parallelism(f)[0];
    std::map<Subspace, int> hits;
    auto g43 = enumerate_subspaces(f, 4, 3);
    CHECK(g43.size() == 15);
    for (const Subspace& y : g43) {
        Subspace x = a_member(f, y, A);
        CHECK(is_subspace(f, x, y));
        ++hits[x];
    }
    // each of the 5 spread members is hit q+1 = 3 times
    CHECK(hits.size() == 5);
    for (const auto& [x, c] : hits) CHECK(c == 3);
    // counting identity behind the uniqueness
    CHECK((2 * 2 + 1) * (2 + 1) == (16 - 1) / (2 - 1));
}

TEST_CASE("expansions of a 2-subspace") {
    Field f(2, 1);
    Spread A = table1_parallelism(f)[0];
    auto exps = expansions_of(f, A[0]);
    REQUIRE(exps.size() == 3);
    CHECK(exps[0].u == Vec(4, {0, 0, 1, 0}));
    CHECK(exps[1].u == Vec(4, {1, 0, 0, 0}));
    CHECK(exps[2].u == Vec(4, {1, 0, 1, 0}));
    for (const auto& e : exps) {
        CHECK(is_subspace(f, A[0], e.y));
        CHECK(contains(f, e.y, e.u));
        CHECK_FALSE(contains(f, A[0], e.u));
    }
    // all q+1 3-subspaces over X are distinct and u values increase
    std::set<Subspace> ys;
    for (const auto& e : exps) ys.insert(e.y);
    CHECK(ys.size() == exps.size());
    for (size_t i = 1; i < exps.size(); ++i) CHECK(exps[i - 1].u < exps[i].u);
}

TEST_CASE("rep3 matches the published representation matrices") {
    Field f(2, 1);
    Spread A = table1_parallelism(f)[0];
    auto exps = expansions_of(f, A[0]);
    auto fixture = load_fixture("table_rep_q2.txt");
    REQUIRE(fixture.size() == 3);
    for (int j = 0; j < 3; ++j) {
        CHECK(fixture[j].group == "Y" + std::to_string(j + 1));
        CHECK(rep3(f, exps[j].y, A) == fixture[j].mat);
    }
}

TEST_CASE("rep3 structure: expand of the inner representation") {
    for (int q : {2, 3}) {
        Field fq = field_from_q(q);
        Spread A = partition_abc(fq, q == 2 ? table1_parallelism(fq) : find_parallelism(fq)).A;
        for (const Subspace& y : enumerate_subspaces(fq, 4, 3)) {
            Mat m = rep3(fq, y, A);
            CHECK(m.cols == q * q + q + 1);
            Subspace x = a_member(fq, y, A);
            Mat inner = rep2(fq, x);
            for (int c = 0; c <= q; ++c) CHECK(m.col(c) == inner.col(c));
            // column q+2 is the least normalized vector outside x
            for (const Vec& w : normalized_vectors(fq, y))
                if (!contains(fq, x, w)) {
                    CHECK(m.col(q + 1) == w);
                    break;
                }
            // columns 1, 2, q+2 are linearly independent
            Subspace t = canonicalize(fq, {m.col(0), m.col(1), m.col(q + 1)});
            CHECK(t.k == 3);
        }
    }
}

TEST_CASE("column support family") {
    for (int q : {2, 3}) {
        Field fq = field_from_q(q);
        auto P = column_support(fq);
        CHECK((int)P.size() == q * q + q + 1);
        for (const auto& idx : P) CHECK((int)idx.size() == q + 1);
        // the leading block {0..q} is a member
        std::vector<int> lead;
        for (int i = 0; i <= q; ++i) lead.push_back(i);
        CHECK(std::count(P.begin(), P.end(), lead) == 1);

        // validated against all rep3 matrices: the columns at each member of
        // P span exactly one 2-subspace of the represented 3-subspace, and
        // every 2-subspace arises once
        Spread A = partition_abc(fq, q == 2 ? table1_parallelism(fq) : find_parallelism(fq)).A;
        for (const Subspace& y : enumerate_subspaces(fq, 4, 3)) {
            Mat m = rep3(fq, y, A);
            std::set<Subspace> found;
            for (const auto& idx : P) {
                std::vector<Vec> gens;
                for (int i : idx) gens.push_back(m.col(i));
                Subspace w = canonicalize(fq, gens);
                CHECK(w.k == 2);
                CHECK(is_subspace(fq, w, y));
                CHECK(found.insert(w).second);
            }
            CHECK((long long)found.size() == gaussian_binomial(3, 2, q));
        }
    }
}

TEST_CASE("2-subspaces of a represented 3-subspace meet the leading block in 1 or q+1 columns") {
    Field f(2, 1);
    Spread A = table1_parallelism(f)[0];
    for (const Subspace& y : enumerate_subspaces(f, 4, 3)) {
        Mat m = rep3(f, y, A);
        for (const auto& idx : column_support(f)) {
            std::vector<Vec> gens;
            for (int i : idx) gens.push_back(m.col(i));
            Subspace w = canonicalize(f, gens);
            int in_lead = 0;
            for (int c = 0; c <= 2; ++c)
                if (contains(f, w, m.col(c))) ++in_lead;
            CHECK((in_lead == 1 || in_lead == 3));
        }
    }
}

TEST_CASE("rep3 on 6-row lifts agrees with the published type-D matrices") {
    Field f(2, 1);
    Spread A = table1_parallelism(f)[0];
    auto fixture = load_fixture("table_d_q2.txt");
    for (const auto& fl : fixture) {
        Subspace y = col_span(f, fl.mat);
        REQUIRE(y.k == 3);
        CHECK(rep3(f, y, A) == fl.mat);
    }
}
