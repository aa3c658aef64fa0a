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

#include "gammalg/builtins.hpp"
#include "gammalg/identities.hpp"

using namespace gammalg;

namespace {

AlgebraElement by_label(const StructureAlgebra& a, std::string_view label) {
    auto idx = a.index_of(label);
    REQUIRE(idx);
    return a.basis_element(*idx);
}

}  // namespace

TEST_CASE("builtin tables are well-formed") {
    for (const FieldSpec f : {FieldSpec::rationals(), FieldSpec::prime_field(3),
                              FieldSpec::prime_field(5)}) {
        for (const char* name : {"M2", "B42", "B12", "Cay-split-null", "octonion-split"}) {
            StructureAlgebra a = make_builtin(name, f);
            CAPTURE(name);
            CHECK(a.validate().empty());
        }
        CHECK(make_grassmann(f, 3).validate().empty());
    }
    CHECK_THROWS_AS(make_builtin("nonsense", FieldSpec::rationals()), ParseError);
    CHECK_THROWS_AS(
        make_builtin("octonion-split", FieldSpec::rationals(), Scalar::zero(FieldSpec::rationals())),
        ParseError);
}

TEST_CASE("B(4,2) products from the table") {
    const FieldSpec q = FieldSpec::rationals();
    StructureAlgebra b = make_b42(q);
    CHECK(b.dim() == 6);
    AlgebraElement m1 = by_label(b, "m1"), m2 = by_label(b, "m2");
    CHECK(m1 * m2 == -by_label(b, "e11"));
    CHECK(m2 * m1 == by_label(b, "e22"));
    CHECK(m1 * m1 == by_label(b, "e21"));
    CHECK(m2 * m2 == -by_label(b, "e12"));
    CHECK(by_label(b, "e12") * m1 == m2);
    CHECK(b.unit() * m1 == m1);
    CHECK(m1 * b.unit() == m1);
}

TEST_CASE("eq. (3): e_ij m_k = delta_ik m_j and m a = abar m in B(4,2)") {
    const FieldSpec q = FieldSpec::rationals();
    StructureAlgebra b = make_b42(q);
    const char* e[2][2] = {{"e11", "e12"}, {"e21", "e22"}};
    const char* m[2] = {"m1", "m2"};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) {
                AlgebraElement lhs = by_label(b, e[i][j]) * by_label(b, m[k]);
                AlgebraElement rhs = i == k ? by_label(b, m[j]) : b.zero();
                CHECK(lhs == rhs);
            }
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) {
                AlgebraElement a = by_label(b, e[i][j]);
                AlgebraElement abar = symplectic_involution(a);
                CHECK(by_label(b, m[k]) * a == abar * by_label(b, m[k]));
            }
}

TEST_CASE("B(1,2) per the catalog") {
    StructureAlgebra b = make_b12(FieldSpec::rationals());
    CHECK(b.dim() == 3);
    CHECK(b.odd_indices().size() == 2);
    AlgebraElement x = by_label(b, "x"), y = by_label(b, "y");
    CHECK(x * y == b.unit());
    CHECK(y * x == -b.unit());
    CHECK((x * x).is_zero());
    CHECK((y * y).is_zero());
}

TEST_CASE("split octonions reproduce a*vb = v(abar b) on all basis pairs") {
    const FieldSpec q = FieldSpec::rationals();
    StructureAlgebra o = make_split_octonions(q, Scalar::one(q));
    CHECK(o.dim() == 8);
    const char* e[4] = {"e11", "e12", "e21", "e22"};
    const char* ve[4] = {"ve11", "ve12", "ve21", "ve22"};
    StructureAlgebra m2 = make_m2(q);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            // lift abar*b computed inside M2 to the v-block of the octonions
            AlgebraElement prod_m2 =
                symplectic_involution(by_label(m2, e[a])) * by_label(m2, e[b]);
            Vec lifted(8, Scalar::zero(q));
            for (int k = 0; k < 4; ++k)
                lifted[static_cast<std::size_t>(4 + k)] = prod_m2[static_cast<std::size_t>(k)];
            CHECK(by_label(o, e[a]) * by_label(o, ve[b]) == o.element(lifted));
        }
}

TEST_CASE("grassmann(2) over F3") {
    StructureAlgebra g = make_grassmann(FieldSpec::prime_field(3), 2);
    CHECK(g.dim() == 4);
    CHECK(g.even_indices().size() == 2);
    CHECK(g.odd_indices().size() == 2);
    CHECK(by_label(g, "g1") * by_label(g, "g2") == by_label(g, "g1g2"));
    CHECK(by_label(g, "g2") * by_label(g, "g1") == -by_label(g, "g1g2"));
    CHECK((by_label(g, "g1") * by_label(g, "g1")).is_zero());
}

TEST_CASE("associator examples") {
    const FieldSpec q = FieldSpec::rationals();
    StructureAlgebra m2 = make_m2(q);
    CHECK(associator(by_label(m2, "e11"), by_label(m2, "e12"), by_label(m2, "e22")).is_zero());

    StructureAlgebra o = make_split_octonions(q, Scalar::one(q));
    bool found_nonzero = false;
    for (std::size_t i = 0; i < o.dim() && !found_nonzero; ++i)
        for (std::size_t j = 0; j < o.dim() && !found_nonzero; ++j)
            for (std::size_t k = 0; k < o.dim() && !found_nonzero; ++k)
                if (!associator(o.basis_element(i), o.basis_element(j), o.basis_element(k))
                         .is_zero())
                    found_nonzero = true;
    CHECK(found_nonzero);

    for (std::size_t i = 0; i < o.dim(); ++i)
        for (std::size_t j = 0; j < o.dim(); ++j)
            CHECK(associator(o.basis_element(i), o.basis_element(i), o.basis_element(j)).is_zero());

    // super mode rejects non-homogeneous inputs
    StructureAlgebra b42 = make_b42(q);
    AlgebraElement mixed = by_label(b42, "e11") + by_label(b42, "m1");
    CHECK_THROWS_AS(associator(mixed, mixed, mixed, true), CheckError);
}

TEST_CASE("alternativity of the split octonions over several fields") {
    for (const FieldSpec f : {FieldSpec::rationals(), FieldSpec::prime_field(3),
                              FieldSpec::prime_field(5)}) {
        StructureAlgebra o = make_split_octonions(f, Scalar::one(f));
        CHECK(check_identity(o, IdentityKind::LeftAlternative).pass());
        CHECK(check_identity(o, IdentityKind::RightAlternative).pass());
        CHECK(check_identity(o, IdentityKind::Flexible).pass());
        CHECK_FALSE(check_identity(o, IdentityKind::Associative).pass());
    }
}

TEST_CASE("the characteristic-3 dichotomy for B(4,2)") {
    StructureAlgebra b3 = make_b42(FieldSpec::prime_field(3));
    CHECK(check_identity(b3, IdentityKind::SuperLeftAlternative).pass());
    CHECK(check_identity(b3, IdentityKind::SuperRightAlternative).pass());

    StructureAlgebra bq = make_b42(FieldSpec::rationals());
    IdentityReport rep = check_identity(bq, IdentityKind::SuperLeftAlternative);
    REQUIRE_FALSE(rep.pass());
    const CheckResult* fail = rep.first_failure();
    REQUIRE(fail);
    REQUIRE(fail->witness.size() == 3);
    for (const auto& w : fail->witness) {
        auto idx = bq.index_of(w);
        REQUIRE(idx);
        CHECK(bq.basis(*idx).parity == 1);  // odd-odd-odd witness
    }
}

TEST_CASE("cayley bimodule law holds in B(4,2) and the octonions") {
    const FieldSpec q = FieldSpec::rationals();
    CHECK(check_identity(make_b42(q), IdentityKind::CayleyBimoduleLaw).pass());
    CHECK(check_identity(make_split_octonions(q, Scalar::one(q)), IdentityKind::CayleyBimoduleLaw)
              .pass());
    CHECK_THROWS_AS(check_identity(make_b12(q), IdentityKind::CayleyBimoduleLaw), CheckError);
}

TEST_CASE("symplectic involution") {
    const FieldSpec q = FieldSpec::rationals();
    StructureAlgebra m2 = make_m2(q);
    CHECK(symplectic_involution(by_label(m2, "e11")) == by_label(m2, "e22"));
    CHECK(symplectic_involution(m2.unit()) == m2.unit());
    CHECK(symplectic_involution(by_label(m2, "e12")) == -by_label(m2, "e12"));
    // involutive, anti-multiplicative, and trace recovery a + abar = t(a) 1
    for (std::size_t i = 0; i < 4; ++i) {
        AlgebraElement a = m2.basis_element(i);
        CHECK(symplectic_involution(symplectic_involution(a)) == a);
        for (std::size_t j = 0; j < 4; ++j) {
            AlgebraElement b = m2.basis_element(j);
            CHECK(symplectic_involution(a * b) ==
                  symplectic_involution(b) * symplectic_involution(a));
        }
        AlgebraElement trace = a + symplectic_involution(a);
        const Scalar t = trace[0];
        CHECK(trace == m2.unit().scaled(t));
    }
    StructureAlgebra b42 = make_b42(q);
    CHECK_THROWS_AS(symplectic_involution(by_label(b42, "m1")), CheckError);
}

TEST_CASE("M2-bimodule decomposition of the builtins") {
    const FieldSpec q = FieldSpec::rationals();
    auto standard_units = [&](const StructureAlgebra& a) {
        std::array<Vec, 4> units;
        const char* labels[4] = {"e11", "e12", "e21", "e22"};
        for (int k = 0; k < 4; ++k) {
            Vec v(a.dim(), Scalar::zero(q));
            v[*a.index_of(labels[k])] = Scalar::one(q);
            units[static_cast<std::size_t>(k)] = std::move(v);
        }
        return units;
    };

    StructureAlgebra o = make_split_octonions(q, Scalar::one(q));
    M2Decomposition od = decompose_m2_bimodule(o, standard_units(o));
    CHECK(od.va_basis.size() == 4);
    CHECK(od.vc_basis.size() == 4);
    CHECK(od.complementary);
    // V_a is exactly the M2 span, V_c the v-block
    for (const auto& v : od.va_basis)
        for (std::size_t k = 4; k < 8; ++k) CHECK(v[k].is_zero());
    for (const auto& v : od.vc_basis)
        for (std::size_t k = 0; k < 4; ++k) CHECK(v[k].is_zero());

    StructureAlgebra b42 = make_b42(q);
    M2Decomposition bd = decompose_m2_bimodule(b42, standard_units(b42));
    CHECK(bd.va_basis.size() == 4);
    CHECK(bd.vc_basis.size() == 2);
    CHECK(bd.complementary);

    StructureAlgebra m2 = make_m2(q);
    M2Decomposition md = decompose_m2_bimodule(m2, standard_units(m2));
    CHECK(md.va_basis.size() == 4);
    CHECK(md.vc_basis.size() == 0);
    CHECK(md.complementary);

    StructureAlgebra sn = make_split_null(q);
    M2Decomposition sd = decompose_m2_bimodule(sn, standard_units(sn));
    CHECK(sd.va_basis.size() == 4);
    CHECK(sd.vc_basis.size() == 2);
    CHECK(sd.complementary);

    // violated matrix-unit relations are rejected
    auto bad = standard_units(b42);
    bad[1][*b42.index_of("e12")] = Scalar::of(2, q);
    CHECK_THROWS_AS(decompose_m2_bimodule(b42, bad), CheckError);
}

TEST_CASE("legacy B(4,2) presentation flips the odd products") {
    const FieldSpec q = FieldSpec::rationals();
    StructureAlgebra b = make_b42(q);
    StructureAlgebra legacy = b42_legacy_presentation(b);
    CHECK(legacy.validate().empty());
    AlgebraElement m1 = by_label(legacy, "m1"), m2 = by_label(legacy, "m2");
    CHECK(m1 * m1 == -by_label(legacy, "e21"));
    CHECK(m2 * m2 == by_label(legacy, "e12"));
    CHECK(m1 * m2 == by_label(legacy, "e11"));
    CHECK(m2 * m1 == -by_label(legacy, "e22"));
    // applying the basis change twice restores the original table
    StructureAlgebra twice = b42_legacy_presentation(legacy);
    for (std::size_t i = 0; i < b.dim(); ++i)
        for (std::size_t j = 0; j < b.dim(); ++j) CHECK(twice.table(i, j) == b.table(i, j));
    // both presentations are super-alternative exactly in characteristic 3
    CHECK(check_identity(b42_legacy_presentation(make_b42(FieldSpec::prime_field(3))),
                         IdentityKind::SuperAlternative)
              .pass());
    CHECK_FALSE(check_identity(legacy, IdentityKind::SuperAlternative).pass());
}

TEST_CASE("element operations validate the algebra") {
    const FieldSpec q = FieldSpec::rationals();
    StructureAlgebra a = make_m2(q);
    StructureAlgebra b = make_m2(q);
    CHECK_THROWS_AS(a.basis_element(0) * b.basis_element(0), MismatchError);
    CHECK_THROWS_AS(a.element(Vec(3, Scalar::zero(q))), MismatchError);
}
