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

#include "gammalg/builtins.hpp"
#include "gammalg/serialize.hpp"

using namespace gammalg;

namespace {

// Gamma(A_n) realized directly on polynomial triples; the independent oracle
// for the normal-form arithmetic.
struct GPoly {
    Polynomial even, px, py;
};

GPoly gp_zero(const FieldSpec& f, int n) {
    VarsPtr vars = an_variables(n);
    return {Polynomial::zero(f, vars), Polynomial::zero(f, vars), Polynomial::zero(f, vars)};
}

GPoly gp_generator(const FieldSpec& f, int n, int j) {
    GPoly g = gp_zero(f, n);
    g.px = Polynomial::variable(f, g.px.vars(), static_cast<std::size_t>(j - 1));
    g.py = Polynomial::variable(f, g.py.vars(), static_cast<std::size_t>(n + j - 1));
    return g;
}

GPoly gp_mul(const GPoly& a, const GPoly& b) {
    GPoly out{a.even * b.even + (a.px * b.py - a.py * b.px),
              a.even * b.px + b.even * a.px,
              a.even * b.py + b.even * a.py};
    return out;
}

GPoly gp_add(const GPoly& a, const GPoly& b) { return {a.even + b.even, a.px + b.px, a.py + b.py}; }

GPoly eval_tree_gp(const ExprPtr& e, const FieldSpec& f, int n) {
    switch (e->kind) {
        case Expr::Kind::Constant: {
            GPoly g = gp_zero(f, n);
            g.even = Polynomial::constant(f, g.even.vars(), Scalar::from_string(e->literal, f));
            return g;
        }
        case Expr::Kind::OddGen:
            return gp_generator(f, n, e->index);
        case Expr::Kind::EvenGen:
            throw CheckError("oracle handles m = 0 only");
        case Expr::Kind::Add:
            return gp_add(eval_tree_gp(e->lhs, f, n), eval_tree_gp(e->rhs, f, n));
        case Expr::Kind::Sub: {
            GPoly r = eval_tree_gp(e->rhs, f, n);
            return gp_add(eval_tree_gp(e->lhs, f, n), {-r.even, -r.px, -r.py});
        }
        case Expr::Kind::Mul:
            return gp_mul(eval_tree_gp(e->lhs, f, n), eval_tree_gp(e->rhs, f, n));
        case Expr::Kind::Neg: {
            GPoly r = eval_tree_gp(e->lhs, f, n);
            return {-r.even, -r.px, -r.py};
        }
    }
    throw CheckError("bad node");
}

ExprPtr random_product_tree(int n, int leaves, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> gen(1, n);
    if (leaves == 1) return expr_odd_gen(gen(rng));
    std::uniform_int_distribution<int> split(1, leaves - 1);
    const int left = split(rng);
    return expr_mul(random_product_tree(n, left, rng),
                    random_product_tree(n, leaves - left, rng));
}

ExprPtr random_expr(int n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> leaves(1, 5);
    std::uniform_int_distribution<int> pieces(1, 3);
    std::uniform_int_distribution<int> coin(0, 1);
    ExprPtr e = random_product_tree(n, leaves(rng), rng);
    const int extra = pieces(rng) - 1;
    for (int k = 0; k < extra; ++k) {
        ExprPtr t = random_product_tree(n, leaves(rng), rng);
        e = coin(rng) ? expr_add(e, t) : expr_sub(e, t);
    }
    return e;
}

AlgebraElement by_label(const StructureAlgebra& a, std::string_view label) {
    auto idx = a.index_of(label);
    REQUIRE(idx);
    return a.basis_element(*idx);
}

}  // namespace

TEST_CASE("free even generators do not commute, but act commutatively on the ideal") {
    const FieldSpec q = FieldSpec::rationals();
    const FgSignature sig{2, 2, q};
    FreeGammaElement t1 = FreeGammaElement::even_generator(sig, 1);
    FreeGammaElement t2 = FreeGammaElement::even_generator(sig, 2);
    FreeGammaElement v1 = FreeGammaElement::odd_generator(sig, 1);
    FreeGammaElement v2 = FreeGammaElement::odd_generator(sig, 2);

    FreeGammaElement comm = fg_multiply(t1, t2) - fg_multiply(t2, t1);
    CHECK_FALSE(comm.is_zero());
    CHECK(comm.even_ideal_part().empty());
    CHECK(comm.odd_part().empty());

    CHECK(fg_multiply(comm, v1).is_zero());

    FreeGammaElement a12 = fg_multiply(v1, v2);
    CHECK(a12.nc_part().is_zero());
    REQUIRE(a12.even_ideal_part().size() == 1);
    const auto& key = a12.even_ideal_part().begin()->first;
    CHECK(key.second == StandardMonomial({{1, 2}}));
    CHECK(a12.even_ideal_part().begin()->second.is_one());
    CHECK(fg_multiply(v2, v1) == -a12);
    CHECK(fg_multiply(v1, v1).is_zero());

    // t1 (v1 v2) = (v1 v2) t1 inside the ideal
    CHECK(fg_multiply(t1, a12) == fg_multiply(a12, t1));
}

TEST_CASE("normal form of (v1 v2) v3") {
    const FieldSpec q = FieldSpec::rationals();
    const FgSignature sig{0, 3, q};
    int m = 0, n = 0;
    FreeGammaElement nf = fg_normal_form(parse_expression("(v1*v2)*v3", m, n), sig);
    FreeGammaElement expected(sig);
    expected.add_odd(TExps{}, StandardMonomial({{2, 3}}), 1, -Scalar::one(q));
    expected.add_odd(TExps{}, StandardMonomial({{1, 3}}), 2, Scalar::one(q));
    CHECK(nf == expected);
}

TEST_CASE("embedding oracle basics") {
    const FieldSpec q = FieldSpec::rationals();
    const FgSignature sig{0, 2, q};
    auto [e1, o1] = embedding_oracle(FreeGammaElement::odd_generator(sig, 1));
    CHECK(e1.is_zero());
    CHECK(o1.first == Polynomial::variable(q, an_variables(2), 0));
    CHECK(o1.second == Polynomial::variable(q, an_variables(2), 2));

    FreeGammaElement a12 = fg_multiply(FreeGammaElement::odd_generator(sig, 1),
                                       FreeGammaElement::odd_generator(sig, 2));
    auto [e2, o2] = embedding_oracle(a12);
    CHECK(e2 == expand_pairs(q, 2, {{1, 2}}));
    CHECK(o2.first.is_zero());
    CHECK(o2.second.is_zero());

    const FgSignature with_even{1, 2, q};
    CHECK_THROWS_AS(embedding_oracle(FreeGammaElement::even_generator(with_even, 1)), CheckError);
}

TEST_CASE("soundness: normal forms and direct evaluation agree in Gamma(A_n)") {
    std::mt19937_64 rng(20260810);
    for (const FieldSpec f : {FieldSpec::rationals(), FieldSpec::prime_field(3)}) {
        for (int trial = 0; trial < 60; ++trial) {
            const int n = 2 + static_cast<int>(rng() % 3);  // 2..4
            ExprPtr tree = random_expr(n, rng);
            const FgSignature sig{0, n, f};
            FreeGammaElement nf = fg_normal_form(tree, sig);
            auto [even, odd] = embedding_oracle(nf);
            GPoly direct = eval_tree_gp(tree, f, n);
            CHECK(even == direct.even);
            CHECK(odd.first == direct.px);
            CHECK(odd.second == direct.py);
        }
    }
}

TEST_CASE("small faithfulness window: basis images are independent and spanning") {
    const FieldSpec q = FieldSpec::rationals();
    for (int n = 2; n <= 3; ++n) {
        for (int weight = 1; weight <= 4; ++weight) {
            const FgSignature sig{0, n, q};
            auto basis = fg_basis(sig, weight);
            CHECK(basis.size() == fg_dimensions(0, n, weight));
            std::vector<std::vector<Polynomial>> images;
            for (const auto& b : basis) {
                auto [e, o] = embedding_oracle(b);
                images.push_back({e, o.first, o.second});
            }
            CHECK(rank_of_span_tuples(images) == basis.size());
        }
    }
}

TEST_CASE("gamma conditions hold formally for normal forms") {
    std::mt19937_64 rng(777);
    const FieldSpec q = FieldSpec::rationals();
    const FgSignature sig{1, 3, q};
    auto random_odd_element = [&] {
        // random linear combination of products reducing to odd parity
        FreeGammaElement acc(sig);
        std::uniform_int_distribution<int> gen(1, 3);
        std::uniform_int_distribution<long long> coeff(-2, 2);
        for (int k = 0; k < 3; ++k) {
            FreeGammaElement term = FreeGammaElement::odd_generator(sig, gen(rng));
            if (k % 2 == 0) {
                FreeGammaElement pair = fg_multiply(FreeGammaElement::odd_generator(sig, gen(rng)),
                                                    FreeGammaElement::odd_generator(sig, gen(rng)));
                term = fg_multiply(pair, term);
            }
            acc += term.scaled(Scalar::of(coeff(rng), q));
        }
        return acc;
    };
    FreeGammaElement t1 = FreeGammaElement::even_generator(sig, 1);
    for (int trial = 0; trial < 20; ++trial) {
        FreeGammaElement x = random_odd_element();
        FreeGammaElement y = random_odd_element();
        FreeGammaElement z = random_odd_element();
        // (iii) and (iv)
        CHECK((fg_multiply(x, y) + fg_multiply(y, x)).is_zero());
        FreeGammaElement cyc = fg_multiply(fg_multiply(x, y), z) +
                               fg_multiply(fg_multiply(y, z), x) +
                               fg_multiply(fg_multiply(z, x), y);
        CHECK(cyc.is_zero());
        // [even, odd] = 0 for the nc generator against odd elements
        CHECK((fg_multiply(t1, x) - fg_multiply(x, t1)).is_zero());
        // (ii): odd*odd commutes with the even generator
        FreeGammaElement xy = fg_multiply(x, y);
        CHECK((fg_multiply(t1, xy) - fg_multiply(xy, t1)).is_zero());
    }
}

TEST_CASE("evaluation: the universal property on targets") {
    const FieldSpec q = FieldSpec::rationals();
    GammaAlgebra b12 = GammaAlgebra::analyze(make_b12(q));
    const FgSignature sig{0, 2, q};
    FreeGammaElement v1v2 = fg_multiply(FreeGammaElement::odd_generator(sig, 1),
                                        FreeGammaElement::odd_generator(sig, 2));
    std::vector<AlgebraElement> odd_images = {by_label(b12.carrier(), "x"),
                                              by_label(b12.carrier(), "y")};
    AlgebraElement val = fg_evaluate(v1v2, b12, {}, odd_images);
    CHECK(val == b12.carrier().unit());

    // sending a generator to zero kills every word containing it
    std::vector<AlgebraElement> with_zero = {b12.carrier().zero(), by_label(b12.carrier(), "y")};
    CHECK(fg_evaluate(v1v2, b12, {}, with_zero).is_zero());

    // parity violations are rejected
    std::vector<AlgebraElement> bad = {b12.carrier().unit(), by_label(b12.carrier(), "y")};
    CHECK_THROWS_AS(fg_evaluate(v1v2, b12, {}, bad), CheckError);
}

TEST_CASE("evaluation agrees with direct target-side evaluation") {
    const FieldSpec f5 = FieldSpec::prime_field(5);
    GammaAlgebra target = gamma_of_commutative(make_truncated_poly_algebra(f5, 2));
    const StructureAlgebra& A = target.carrier();
    std::vector<AlgebraElement> odd_images = {by_label(A, "x:1"), by_label(A, "y:s"),
                                              by_label(A, "y:1")};
    std::mt19937_64 rng(31415);
    for (int trial = 0; trial < 40; ++trial) {
        ExprPtr tree = random_expr(3, rng);
        const FgSignature sig{0, 3, f5};
        FreeGammaElement nf = fg_normal_form(tree, sig);
        // direct recursive evaluation of the tree in the target
        auto direct = [&](auto&& self, const ExprPtr& e) -> AlgebraElement {
            switch (e->kind) {
                case Expr::Kind::Constant:
                    return A.unit().scaled(Scalar::from_string(e->literal, f5));
                case Expr::Kind::OddGen:
                    return odd_images[static_cast<std::size_t>(e->index - 1)];
                case Expr::Kind::Add:
                    return self(self, e->lhs) + self(self, e->rhs);
                case Expr::Kind::Sub:
                    return self(self, e->lhs) - self(self, e->rhs);
                case Expr::Kind::Mul:
                    return self(self, e->lhs) * self(self, e->rhs);
                case Expr::Kind::Neg:
                    return -self(self, e->lhs);
                default:
                    throw CheckError("unexpected node");
            }
        };
        CHECK(fg_evaluate(nf, target, {}, odd_images) == direct(direct, tree));
    }
}

TEST_CASE("evaluation is multiplicative on random pairs") {
    std::mt19937_64 rng(6174);
    const FieldSpec q = FieldSpec::rationals();
    GammaAlgebra b12 = GammaAlgebra::analyze(make_b12(q));
    std::vector<AlgebraElement> odd_images = {by_label(b12.carrier(), "x"),
                                              by_label(b12.carrier(), "y"),
                                              by_label(b12.carrier(), "x")};
    for (int trial = 0; trial < 40; ++trial) {
        const FgSignature sig{0, 3, q};
        FreeGammaElement a = fg_normal_form(random_expr(3, rng), sig);
        FreeGammaElement b = fg_normal_form(random_expr(3, rng), sig);
        AlgebraElement lhs = fg_evaluate(fg_multiply(a, b), b12, {}, odd_images);
        AlgebraElement rhs =
            fg_evaluate(a, b12, {}, odd_images) * fg_evaluate(b, b12, {}, odd_images);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("graded dimensions of the free algebras") {
    CHECK(fg_dimensions(0, 3, 3) == 8);
    CHECK(fg_dimensions(0, 4, 4) == 20);
    for (int k = 0; k <= 4; ++k) CHECK(fg_dimensions(1, 0, 2 * k) == 1);
    CHECK(fg_dimensions(1, 0, 3) == 0);
    // even components count standard monomials plus the nc words
    for (int n = 2; n <= 4; ++n)
        for (int r = 1; r <= 3; ++r)
            CHECK(fg_dimensions(0, n, 2 * r) == enumerate_basis(n, r).size());
    CHECK(fg_dimensions(0, 3, 0) == 1);
    // mixed signature: weight 4 with m = n = 1 has t^2, t a(..)? no alphas at
    // n = 1, so only the nc word t1 t1
    CHECK(fg_dimensions(1, 1, 4) == 1);
    CHECK(fg_dimensions(2, 1, 2) == 2);  // t1, t2
    CHECK(fg_dimensions(1, 1, 3) == 1);  // t-bar v1
    // weight 4 at (m,n) = (2,2): words t_i t_j (4), t-bar_k (x) a(1,2) (2),
    // and a(1,2)^2 (1)
    CHECK(fg_dimensions(2, 2, 4) == 7);
}

TEST_CASE("corollary 1: the envelope of the truncated free algebra") {
    const FieldSpec q = FieldSpec::rationals();

    // (m, n, cap) = (0, 1, 2): the split null extension on the nose
    Corollary1Envelope env = corollary1_envelope(q, 0, 1, 2);
    REQUIRE(env.alg->dim() == 6);
    CHECK(env.graded_dims == std::vector<std::pair<int, std::size_t>>{{0, 4}, {1, 2}, {2, 0}});
    auto sn = std::make_shared<const StructureAlgebra>(make_split_null(q));
    Mat matrix(6, Vec(6, Scalar::zero(q)));
    auto set = [&](std::string_view to, std::string_view from) {
        matrix[*sn->index_of(to)][*env.alg->index_of(from)] = Scalar::one(q);
    };
    set("e11", "1⊗e11");
    set("e12", "1⊗e12");
    set("e21", "1⊗e21");
    set("e22", "1⊗e22");
    set("m1", "v1⊗m1");
    set("m2", "v1⊗m2");
    AlgebraMorphism iso = make_morphism(env.alg, sn, std::move(matrix));
    CHECK(iso.check_homomorphism().empty());
    CHECK(iso.is_bijective());

    // (0, 2, 2): the weight-2 even part is spanned by a(1,2)
    Corollary1Envelope env2 = corollary1_envelope(q, 0, 2, 2);
    CHECK(env2.graded_dims == std::vector<std::pair<int, std::size_t>>{{0, 4}, {1, 4}, {2, 4}});
    CHECK(env2.alg->dim() == 12);

    // (1, 0, 2): the M2(F[t]) truncation
    Corollary1Envelope envt = corollary1_envelope(q, 1, 0, 2);
    CHECK(envt.alg->dim() == 8);
    CHECK(envt.graded_dims == std::vector<std::pair<int, std::size_t>>{{0, 4}, {1, 0}, {2, 4}});
    const StructureAlgebra& T = *envt.alg;
    AlgebraElement te11 = by_label(T, "t1⊗e11");
    CHECK(by_label(T, "1⊗e11") * te11 == te11);
    CHECK((te11 * te11).is_zero());  // weight 4 exceeds the cap
    CHECK(by_label(T, "t1⊗e12") * by_label(T, "1⊗e21") == te11);
}

TEST_CASE("normal-form JSON round trip") {
    std::mt19937_64 rng(2718);
    const FieldSpec q = FieldSpec::rationals();
    const FgSignature sig{0, 3, q};
    for (int trial = 0; trial < 20; ++trial) {
        FreeGammaElement nf = fg_normal_form(random_expr(3, rng), sig);
        Json j = free_element_to_json(nf);
        FreeGammaElement back = free_element_from_json(j, q);
        CHECK(back == nf);
    }
    // and one with even generators
    const FgSignature sig2{2, 2, q};
    int m = 0, n = 0;
    FreeGammaElement nf =
        fg_normal_form(parse_expression("t1*t2 - t2*t1 + t1*(v1*v2) + 2*v1", m, n), sig2);
    CHECK(free_element_from_json(free_element_to_json(nf), q) == nf);
}
