/*
   Copyright 2026 The gammalg authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gammalg/plucker.hpp"

using namespace gammalg;

namespace {

std::vector<IndexPair> random_pairs(int n, int max_degree, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<int> idx(1, n);
    std::vector<IndexPair> out;
    const int d = deg(rng);
    for (int k = 0; k < d; ++k) {
        int i = idx(rng), j = idx(rng);
        out.push_back({i, j});  // unnormalized on purpose: i > j and i = j occur
    }
    return out;
}

}  // namespace

TEST_CASE("expand") {
    const FieldSpec q = FieldSpec::rationals();
    Polynomial a12 = expand_pairs(q, 4, {{1, 2}});
    VarsPtr vars = an_variables(4);
    Polynomial expected(q, vars);
    Exponents e(8, 0);
    e[0] = 1;
    e[5] = 1;  // x1 y2
    expected.add_term(e, Scalar::one(q));
    Exponents e2(8, 0);
    e2[1] = 1;
    e2[4] = 1;  // x2 y1
    expected.add_term(e2, -Scalar::one(q));
    CHECK(a12 == expected);

    CHECK(expand_pairs(q, 4, {}) == Polynomial::constant(q, vars, Scalar::one(q)));
    CHECK(expand_pairs(q, 4, {{1, 2}, {1, 2}}) == a12 * a12);
    CHECK(expand_pairs(q, 4, {{2, 1}}) == -a12);
    CHECK(expand_pairs(q, 4, {{3, 3}}).is_zero());
    CHECK_THROWS_AS(expand_pairs(q, 4, {{1, 5}}), ParseError);
}

TEST_CASE("straightening the spec examples") {
    const FieldSpec q = FieldSpec::rationals();

    SElement s = straighten(q, 4, {{1, 2}, {3, 4}});
    REQUIRE(s.terms().size() == 1);
    CHECK(s.terms().begin()->first == StandardMonomial({{1, 2}, {3, 4}}));
    CHECK(s.terms().begin()->second.is_one());

    // a(1,4)a(2,3) = a(1,3)a(2,4) - a(1,2)a(3,4)
    SElement t = straighten(q, 4, {{1, 4}, {2, 3}});
    SElement expected(q, 4);
    expected.add_term(StandardMonomial({{1, 3}, {2, 4}}), Scalar::one(q));
    expected.add_term(StandardMonomial({{1, 2}, {3, 4}}), -Scalar::one(q));
    CHECK(t == expected);
    CHECK(expand(t) == expand_pairs(q, 4, {{1, 4}, {2, 3}}));

    // unsorted input normalizes first
    CHECK(straighten(q, 4, {{2, 3}, {1, 4}}) == expected);
    // and a flipped pair brings a sign
    CHECK(straighten(q, 4, {{3, 2}, {1, 4}}) == -expected);
}

TEST_CASE("straightening is sound and idempotent on random monomials") {
    std::mt19937_64 rng(99);
    for (const FieldSpec f : {FieldSpec::rationals(), FieldSpec::prime_field(5)}) {
        for (int trial = 0; trial < 120; ++trial) {
            const int n = 2 + static_cast<int>(rng() % 4);  // 2..5
            auto pairs = random_pairs(n, 4, rng);
            SElement s = straighten(f, n, pairs);
            CHECK(expand(s) == expand_pairs(f, n, pairs));
            for (const auto& [mon, coeff] : s.terms()) {
                CHECK(StandardMonomial::is_standard(mon.pairs()));
                SElement again = straighten(f, n, mon.pairs());
                REQUIRE(again.terms().size() == 1);
                CHECK(again.terms().begin()->first == mon);
                CHECK(again.terms().begin()->second.is_one());
            }
        }
    }
}

TEST_CASE("standard monomial bases") {
    CHECK(enumerate_basis(4, 1).size() == 6);
    CHECK(enumerate_basis(4, 2).size() == 20);
    auto b23 = enumerate_basis(2, 3);
    REQUIRE(b23.size() == 1);
    CHECK(b23[0] == StandardMonomial({{1, 2}, {1, 2}, {1, 2}}));
    CHECK(enumerate_basis(3, 0).size() == 1);

    // linear independence and spanning for a small window (Lemma 1)
    const FieldSpec q = FieldSpec::rationals();
    for (int n = 2; n <= 4; ++n) {
        for (int r = 1; r <= 2; ++r) {
            auto basis = enumerate_basis(n, r);
            std::vector<Polynomial> images;
            for (const auto& u : basis) images.push_back(expand_pairs(q, n, u.pairs()));
            CHECK(rank_of_span(images) == basis.size());
            // all degree-r products of the generators span the same space
            std::vector<std::vector<IndexPair>> gens;
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j) gens.push_back({{i, j}});
            std::vector<Polynomial> all;
            std::vector<std::size_t> pick(static_cast<std::size_t>(r), 0);
            for (;;) {
                std::vector<IndexPair> pairs;
                bool sorted = true;
                for (std::size_t k = 0; k + 1 < pick.size(); ++k)
                    if (pick[k] > pick[k + 1]) sorted = false;
                if (sorted) {
                    for (auto k : pick) pairs.push_back(gens[k][0]);
                    all.push_back(expand_pairs(q, n, pairs));
                }
                std::size_t pos = pick.size();
                while (pos-- > 0) {
                    if (++pick[pos] < gens.size()) break;
                    pick[pos] = 0;
                    if (pos == 0) goto done;
                }
                if (pick.empty()) break;
            }
        done:
            CHECK(rank_of_span(all) == basis.size());
        }
    }
}

TEST_CASE("filtered bases and the Lemma-2 oracle") {
    auto b331 = enumerate_basis_filtered(3, 3, 1);
    REQUIRE(b331.size() == 2);
    CHECK(b331[0] == StandardMonomial({{1, 3}}));
    CHECK(b331[1] == StandardMonomial({{2, 3}}));
    CHECK(enumerate_basis_filtered(3, 2, 1).size() == 3);

    const FieldSpec q = FieldSpec::rationals();
    CHECK(lemma2_oracle(q, 4, 2, 2) == 20);
    CHECK(lemma2_oracle(q, 3, 3, 1) == 2);
    CHECK(lemma2_oracle(q, 2, 2, 5) == 1);
    // the filtered count always matches the oracle rank (independence mod I_m)
    for (int n = 3; n <= 4; ++n)
        for (int m = 2; m <= n; ++m)
            for (int r = 0; r <= 2; ++r) {
                CAPTURE(n);
                CAPTURE(m);
                CAPTURE(r);
                CHECK(enumerate_basis_filtered(n, m, r).size() == lemma2_oracle(q, n, m, r));
            }
}

TEST_CASE("the Lemma-2 leading terms under the substitution") {
    // For i < m <= j the image of a(i,j) is t y_i y_j - x_j y_i with leading
    // term -x_j y_i, so products of such a(i,j) lead with
    // (-1)^s x_{j_1}..x_{j_s} y_{i_1}..y_{i_s}.
    const FieldSpec q = FieldSpec::rationals();
    const int n = 4, m = 3;
    VarsPtr evars = enm_variables(n, m);
    MonomialOrder ord = enm_deglex_order(n, m);

    auto phi_image = [&](const std::vector<IndexPair>& pairs) {
        Polynomial img = Polynomial::constant(q, evars, Scalar::one(q));
        for (const auto& p : pairs) {
            // t y_i y_j - x_j y_i, for i < m <= j
            Polynomial factor(q, evars);
            Exponents e1(evars->size(), 0);
            e1[*evars->index_of("t")] = 1;
            e1[*evars->index_of("y" + std::to_string(p.i))] += 1;
            e1[*evars->index_of("y" + std::to_string(p.j))] += 1;
            factor.add_term(e1, Scalar::one(q));
            Exponents e2(evars->size(), 0);
            e2[*evars->index_of("x" + std::to_string(p.j))] = 1;
            e2[*evars->index_of("y" + std::to_string(p.i))] = 1;
            factor.add_term(e2, -Scalar::one(q));
            img = img * factor;
        }
        return img;
    };

    for (const std::vector<IndexPair>& pairs :
         {std::vector<IndexPair>{{1, 3}}, {{1, 3}, {2, 4}}, {{1, 3}, {1, 4}, {2, 4}}}) {
        auto [lead, coeff] = leading_term(phi_image(pairs), ord);
        Exponents expect(evars->size(), 0);
        for (const auto& p : pairs) {
            expect[*evars->index_of("x" + std::to_string(p.j))] += 1;
            expect[*evars->index_of("y" + std::to_string(p.i))] += 1;
        }
        CHECK(lead == expect);
        CHECK(coeff == Scalar::of(pairs.size() % 2 == 0 ? 1 : -1, q));
    }
}

TEST_CASE("the I_m bases of eq. (10)") {
    CHECK(enumerate_Im_basis(4, 3, 1).empty());
    auto i432 = enumerate_Im_basis(4, 3, 2);
    REQUIRE(i432.size() == 1);
    CHECK(i432[0] == StandardMonomial({{1, 2}, {3, 4}}));
    CHECK_THROWS_AS(enumerate_Im_basis(4, 2, 2), ParseError);

    // |B_{n,m}(r)| + |Im basis(r)| = dim of the degree-r part of S_{n,m}
    const FieldSpec q = FieldSpec::rationals();
    for (int n = 4; n <= 5; ++n)
        for (int m = 3; m <= n; ++m)
            for (int r = 1; r <= 2; ++r) {
                CAPTURE(n);
                CAPTURE(m);
                CAPTURE(r);
                // span of all degree-r products of the a(i,j) with j >= m
                std::vector<IndexPair> gens;
                for (int i = 1; i < n; ++i)
                    for (int j = std::max(i + 1, m); j <= n; ++j) gens.push_back({i, j});
                std::vector<Polynomial> prods;
                std::vector<std::size_t> pick(static_cast<std::size_t>(r), 0);
                for (;;) {
                    bool sorted = true;
                    for (std::size_t k = 0; k + 1 < pick.size(); ++k)
                        if (pick[k] > pick[k + 1]) sorted = false;
                    if (sorted) {
                        std::vector<IndexPair> pairs;
                        for (auto k : pick) pairs.push_back(gens[k]);
                        prods.push_back(expand_pairs(q, n, pairs));
                    }
                    std::size_t pos = pick.size();
                    bool done = true;
                    while (pos-- > 0) {
                        if (++pick[pos] < gens.size()) {
                            done = false;
                            break;
                        }
                        pick[pos] = 0;
                    }
                    if (done) break;
                }
                const std::size_t snm_dim = rank_of_span(prods);
                CHECK(enumerate_basis_filtered(n, m, r).size() + enumerate_Im_basis(n, m, r).size() ==
                      snm_dim);
            }
}

TEST_CASE("eq. (6) holds identically under the polynomial embedding") {
    const FieldSpec q = FieldSpec::rationals();
    for (int n = 3; n <= 5; ++n) {
        VarsPtr vars = an_variables(n);
        auto xvar = [&](int k) {
            return Polynomial::variable(q, vars, static_cast<std::size_t>(k - 1));
        };
        auto yvar = [&](int k) {
            return Polynomial::variable(q, vars, static_cast<std::size_t>(n + k - 1));
        };
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                for (int k = 1; k <= n; ++k) {
                    Polynomial px = expand_pairs(q, n, {{i, j}}) * xvar(k) +
                                    expand_pairs(q, n, {{j, k}}) * xvar(i) +
                                    expand_pairs(q, n, {{k, i}}) * xvar(j);
                    Polynomial py = expand_pairs(q, n, {{i, j}}) * yvar(k) +
                                    expand_pairs(q, n, {{j, k}}) * yvar(i) +
                                    expand_pairs(q, n, {{k, i}}) * yvar(j);
                    CHECK(px.is_zero());
                    CHECK(py.is_zero());
                }
    }
}

TEST_CASE("reduce_odd examples and the embedding equality") {
    const FieldSpec q = FieldSpec::rationals();

    SElement a12 = straighten(q, 3, {{1, 2}});
    OddElement r = reduce_odd(a12, 3);
    OddElement expected(q, 3);
    expected.add_term(StandardMonomial({{2, 3}}), 1, -Scalar::one(q));
    expected.add_term(StandardMonomial({{1, 3}}), 2, Scalar::one(q));
    CHECK(r == expected);

    SElement a23 = straighten(q, 3, {{2, 3}});
    OddElement kept = reduce_odd(a23, 1);
    OddElement kept_expected(q, 3);
    kept_expected.add_term(StandardMonomial({{2, 3}}), 1, Scalar::one(q));
    CHECK(kept == kept_expected);

    // a(1,2)^2 v3 reduces with the same polynomial image
    SElement sq = straighten(q, 3, {{1, 2}, {1, 2}});
    OddElement rsq = reduce_odd(sq, 3);
    VarsPtr vars = an_variables(3);
    auto [px, py] = expand_odd(rsq);
    CHECK(px == expand(sq) * Polynomial::variable(q, vars, 2));
    CHECK(py == expand(sq) * Polynomial::variable(q, vars, 5));

    std::mt19937_64 rng(1312);
    for (int trial = 0; trial < 80; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 4);
        auto pairs = random_pairs(n, 3, rng);
        SElement u = straighten(q, n, pairs);
        const int j = 1 + static_cast<int>(rng() % n);
        OddElement red = reduce_odd(u, j);
        for (const auto& [key, coeff] : red.terms()) CHECK(key.first.in_filtered(key.second));
        auto [ox, oy] = expand_odd(red);
        VarsPtr nv = an_variables(n);
        CHECK(ox == expand(u) * Polynomial::variable(q, nv, static_cast<std::size_t>(j - 1)));
        CHECK(oy == expand(u) * Polynomial::variable(q, nv, static_cast<std::size_t>(n + j - 1)));
    }
}

TEST_CASE("Lemma 4: I_m-part products fold away from the v_m slot") {
    const FieldSpec q = FieldSpec::rationals();
    for (int n = 4; n <= 5; ++n)
        for (int m = 3; m <= n; ++m)
            for (int r = 2; r <= 3; ++r)
                for (const auto& u : enumerate_Im_basis(n, m, r)) {
                    SElement s(q, n);
                    s.add_term(u, Scalar::one(q));
                    OddElement red = reduce_odd(s, m);
                    for (const auto& [key, coeff] : red.terms()) CHECK(key.second != m);
                }
}

TEST_CASE("odd dimensions certified by the rank oracle") {
    const FieldSpec q = FieldSpec::rationals();
    CHECK(odd_dimension(q, 3, 1) == 3);
    CHECK(odd_dimension(q, 3, 3) == 8);
    CHECK(odd_dimension(q, 2, 3) == 2);
    CHECK(odd_dimension(FieldSpec::prime_field(5), 3, 3) == 8);
    CHECK_THROWS_AS(odd_dimension(q, 3, 2), CheckError);
    // the B_{n,j} filtered counts behind the 8 at n = 3, weight 3
    CHECK(enumerate_basis_filtered(3, 1, 1).size() == 3);
    CHECK(enumerate_basis_filtered(3, 2, 1).size() == 3);
    CHECK(enumerate_basis_filtered(3, 3, 1).size() == 2);
}

TEST_CASE("odd keys outside B_{n,j} are rejected") {
    const FieldSpec q = FieldSpec::rationals();
    OddElement o(q, 3);
    CHECK_THROWS_AS(o.add_term(StandardMonomial({{1, 2}}), 3, Scalar::one(q)), CheckError);
}
