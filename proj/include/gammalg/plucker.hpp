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

#include <compare>

#include "gammalg/linalg.hpp"

namespace gammalg {

/// A Plücker index pair; only i < j pairs are stored in normal forms,
/// a(j,i) entering as -a(i,j) and a(i,i) as 0.
struct IndexPair {
    int i = 0;
    int j = 0;
    friend auto operator<=>(const IndexPair&, const IndexPair&) = default;
};

/// A standard monomial a(i1,j1)...a(ir,jr): both index rows weakly
/// increasing, i_s < j_s.
class StandardMonomial {
public:
    StandardMonomial() = default;  // the empty monomial (the constant 1)
    explicit StandardMonomial(std::vector<IndexPair> pairs);

    static bool is_standard(const std::vector<IndexPair>& pairs);

    const std::vector<IndexPair>& pairs() const { return pairs_; }
    std::size_t degree() const { return pairs_.size(); }

    /// The B_{n,m} membership test j_1 >= m (vacuous in degree 0).
    bool in_filtered(int m) const { return pairs_.empty() || pairs_.front().j >= m; }

    friend auto operator<=>(const StandardMonomial&, const StandardMonomial&) = default;

    std::string str() const;  // "a(1,2)a(3,4)", "1" for the empty monomial

private:
    std::vector<IndexPair> pairs_;
};

/// Element of S_n = F[Gr(2,n)] in the standard-monomial basis.
class SElement {
public:
    SElement(FieldSpec field, int n) : field_(field), n_(n) {}

    const FieldSpec& field() const { return field_; }
    int n() const { return n_; }
    const std::map<StandardMonomial, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const StandardMonomial& m, const Scalar& c);

    SElement operator-() const;
    SElement& operator+=(const SElement& o);
    SElement& operator-=(const SElement& o);
    friend SElement operator+(SElement a, const SElement& b) { return a += b; }
    friend SElement operator-(SElement a, const SElement& b) { return a -= b; }
    friend SElement operator*(const SElement& a, const SElement& b);
    SElement scaled(const Scalar& c) const;
    bool operator==(const SElement& o) const;

    std::string str() const;

private:
    void check_compatible(const SElement& o) const;
    FieldSpec field_;
    int n_ = 0;
    std::map<StandardMonomial, Scalar> terms_;
};

/// Element of the odd normal form +B_{n,j}V_j: keys (u, j) with u in B_{n,j}.
class OddElement {
public:
    OddElement(FieldSpec field, int n) : field_(field), n_(n) {}

    const FieldSpec& field() const { return field_; }
    int n() const { return n_; }
    const std::map<std::pair<StandardMonomial, int>, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const StandardMonomial& u, int j, const Scalar& c);

    OddElement& operator+=(const OddElement& o);
    friend OddElement operator+(OddElement a, const OddElement& b) { return a += b; }
    OddElement scaled(const Scalar& c) const;
    bool operator==(const OddElement& o) const;

    std::string str() const;

private:
    FieldSpec field_;
    int n_ = 0;
    std::map<std::pair<StandardMonomial, int>, Scalar> terms_;
};

/// A_n = F[x_1..x_n; y_1..y_n]; variables x1..xn then y1..yn.
VarsPtr an_variables(int n);
/// E_{n,m} = F[x_m..x_n; t; y_1..y_n].
VarsPtr enm_variables(int n, int m);
/// Deg-lex preset x_n > ... > x_1 > y_1 > ... > y_n on A_n.
MonomialOrder an_deglex_order(int n);
/// Deg-lex preset x_n > ... > x_m > y_1 > ... > y_n > t on E_{n,m}.
MonomialOrder enm_deglex_order(int n, int m);

/// a(i,j) as the 2x2 minor x_i y_j - x_j y_i (zero when i = j), and products
/// of such; the faithful polynomial picture of S_n inside A_n.
Polynomial expand_pairs(const FieldSpec& f, int n, const std::vector<IndexPair>& pairs);
Polynomial expand(const SElement& s);
/// Image of an odd element under u*v_j -> expand(u)*(x_j, y_j).
std::pair<Polynomial, Polynomial> expand_odd(const OddElement& o);

/// Straightening: the unique standard-monomial expression of an arbitrary
/// a-monomial, by repeated Plücker rewrites
///   a(i,j)a(k,l) -> -a(i,k)a(l,j) - a(i,l)a(j,k)
/// at the leftmost non-standard adjacent pair. expand(straighten(m)) =
/// expand(m) exactly.
SElement straighten(const FieldSpec& f, int n, const std::vector<IndexPair>& pairs);
SElement straighten(const FieldSpec& f, int n, const std::vector<IndexPair>& pairs,
                    const Scalar& coeff);

/// All degree-r standard monomials for indices in 1..n, lexicographic.
std::vector<StandardMonomial> enumerate_basis(int n, int r);

/// The B_{n,m} filter j_1 >= m applied to enumerate_basis.
std::vector<StandardMonomial> enumerate_basis_filtered(int n, int m, int r);

/// Rank of the images of B_{n,m} degree-r monomials under the substitution
/// x_k -> t y_k (k < m) into E_{n,m}; certifies linear independence mod I_m.
std::size_t lemma2_oracle(const FieldSpec& f, int n, int m, int r);

/// Degree-r standard monomials with split indices l >= 1 and r - p >= l
/// (j_l < m <= j_{l+1}, i_p < m <= i_{p+1}): a basis of I_m ∩ S_{n,m}.
std::vector<StandardMonomial> enumerate_Im_basis(int n, int m, int r);

/// u * v_j rewritten into the odd normal form via
/// a(i1,j1) v_j = a(i1,j) v_{j1} - a(j1,j) v_{i1}; the polynomial images
/// agree componentwise.
OddElement reduce_odd(const SElement& u, int j);

/// Dimension of the weight-homogeneous odd component, weight(a) = 2,
/// weight(v) = 1; with certify, cross-checked against the rank of all
/// a-monomial * v_k images in A_n^2.
std::size_t odd_dimension(const FieldSpec& f, int n, int weight, bool certify = true);

}  // namespace gammalg
