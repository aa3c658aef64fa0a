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

#pragma once

#include <tuple>

#include "gammalg/expr.hpp"
#include "gammalg/gamma.hpp"
#include "gammalg/ncpoly.hpp"
#include "gammalg/plucker.hpp"

namespace gammalg {

/// Signature of a free object: m even generators t1..tm, n odd v1..vn.
struct FgSignature {
    int m = 0;
    int n = 0;
    FieldSpec field;

    friend bool operator==(const FgSignature&, const FgSignature&) = default;
};

using TExps = std::vector<std::uint32_t>;  // exponent vector over t-bar_1..t-bar_m

/// Normal-form element of the free algebra on (m, n) generators:
///   even = F<t>  +  S_n' (x) F[t-bar]   (nc words; ideal terms with a-degree >= 1)
///   odd  = F[t-bar] (x) (+_j B_{n,j} V_j)
/// Weights: t and a count 2, v counts 1.
class FreeGammaElement {
public:
    explicit FreeGammaElement(FgSignature sig);

    static FreeGammaElement scalar(const FgSignature& sig, const Scalar& c);
    static FreeGammaElement even_generator(const FgSignature& sig, int k);  // t_k
    static FreeGammaElement odd_generator(const FgSignature& sig, int j);   // v_j

    const FgSignature& signature() const { return sig_; }
    const NcPolynomial& nc_part() const { return nc_; }
    const std::map<std::pair<TExps, StandardMonomial>, Scalar>& even_ideal_part() const {
        return even_ideal_;
    }
    const std::map<std::tuple<TExps, StandardMonomial, int>, Scalar>& odd_part() const {
        return odd_;
    }

    bool is_zero() const;

    void add_nc(const Word& w, const Scalar& c) { nc_.add_term(w, c); }
    void add_even(const TExps& t, const StandardMonomial& u, const Scalar& c);
    void add_odd(const TExps& t, const StandardMonomial& u, int j, const Scalar& c);

    FreeGammaElement operator-() const;
    FreeGammaElement& operator+=(const FreeGammaElement& o);
    FreeGammaElement& operator-=(const FreeGammaElement& o);
    friend FreeGammaElement operator+(FreeGammaElement a, const FreeGammaElement& b) {
        return a += b;
    }
    friend FreeGammaElement operator-(FreeGammaElement a, const FreeGammaElement& b) {
        return a -= b;
    }
    FreeGammaElement scaled(const Scalar& c) const;

    bool operator==(const FreeGammaElement& o) const;

    /// Drops every component of weight above the cap (the graded quotient).
    FreeGammaElement truncated(int weight_cap) const;

    std::string str() const;

private:
    FgSignature sig_;
    NcPolynomial nc_;
    std::map<std::pair<TExps, StandardMonomial>, Scalar> even_ideal_;
    std::map<std::tuple<TExps, StandardMonomial, int>, Scalar> odd_;
};

/// Product in normal form: nc x nc stays free associative; anything meeting
/// the ideal passes through the abelianization; ideal parts multiply via
/// straightening and the odd reduction; odd x odd returns to the even ideal
/// through v_i v_j = a(i,j).
FreeGammaElement fg_multiply(const FreeGammaElement& a, const FreeGammaElement& b);

/// Evaluates a product/sum tree over the generators into normal form.
FreeGammaElement fg_normal_form(const ExprPtr& expr, const FgSignature& sig);

/// Value of the unique homomorphism extending the generator assignment
/// (even generators to even elements, odd to odd) into a verified target.
AlgebraElement fg_evaluate(const FreeGammaElement& a, const GammaAlgebra& target,
                           const std::vector<AlgebraElement>& even_images,
                           const std::vector<AlgebraElement>& odd_images);

/// Faithful image in Gamma(A_n) under v_i -> (x_i, y_i); m = 0 only.
/// Returns (even polynomial, (odd x-component, odd y-component)).
std::pair<Polynomial, std::pair<Polynomial, Polynomial>> embedding_oracle(
    const FreeGammaElement& a);

/// Dimension of the weight-homogeneous component of the free algebra.
std::size_t fg_dimensions(int m, int n, int weight);

/// The normal-form basis of one weight component (the concrete elements).
std::vector<FreeGammaElement> fg_basis(const FgSignature& sig, int weight);

/// The envelope of the weight-truncated free algebra: basis elements
/// (even nf)⊗e_ij and (odd nf)⊗m_k, products computed degree by degree.
struct Corollary1Envelope {
    std::shared_ptr<const StructureAlgebra> alg;
    std::vector<std::pair<int, std::size_t>> graded_dims;  // (weight, 4*dim even + 2*dim odd)
};
Corollary1Envelope corollary1_envelope(const FieldSpec& f, int m, int n, int weight_cap);

}  // namespace gammalg
