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

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gammalg/field.hpp"

namespace gammalg {

using Exponents = std::vector<std::uint32_t>;

/// Ordered universe of named indeterminates, declared up front per
/// computation. Shared between all polynomials of one computation.
class VariableSet {
public:
    explicit VariableSet(std::vector<std::string> names);

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_[i]; }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<std::size_t> index_of(std::string_view name) const;

    bool operator==(const VariableSet& o) const { return names_ == o.names_; }

private:
    std::vector<std::string> names_;
};

using VarsPtr = std::shared_ptr<const VariableSet>;

inline VarsPtr make_variables(std::vector<std::string> names) {
    return std::make_shared<const VariableSet>(std::move(names));
}

/// Degree-lexicographic order: (weighted) total degree first, ties broken
/// lexicographically along a declared ranking of the variables
/// (most significant first). Compatible with multiplication.
class MonomialOrder {
public:
    /// `ranking` lists variable names from biggest to smallest and must be a
    /// permutation of the universe.
    static MonomialOrder deglex(const VarsPtr& vars, const std::vector<std::string>& ranking);

    /// Same, with per-variable degree weights (indexed like the universe).
    /// A weight-0 variable counts as a parameter for the degree comparison
    /// and only takes part in the lexicographic tie-break.
    static MonomialOrder deglex_weighted(const VarsPtr& vars,
                                         const std::vector<std::string>& ranking,
                                         std::vector<std::uint32_t> weights);

    /// -1 if a < b, 0 if equal, +1 if a > b.
    int compare(const Exponents& a, const Exponents& b) const;

    const VarsPtr& vars() const { return vars_; }

private:
    VarsPtr vars_;
    std::vector<std::size_t> significance_;  // variable indices, biggest first
    std::vector<std::uint32_t> weights_;
};

/// Sparse exact multivariate commutative polynomial. Zero coefficients are
/// never stored; all arithmetic validates the field and variable universe.
class Polynomial {
public:
    Polynomial(FieldSpec field, VarsPtr vars) : field_(field), vars_(std::move(vars)) {}

    static Polynomial zero(FieldSpec f, VarsPtr vars) { return Polynomial(f, std::move(vars)); }
    static Polynomial constant(FieldSpec f, VarsPtr vars, const Scalar& c);
    static Polynomial variable(FieldSpec f, VarsPtr vars, std::size_t index);
    static Polynomial monomial(FieldSpec f, VarsPtr vars, Exponents e, const Scalar& c);

    const FieldSpec& field() const { return field_; }
    const VarsPtr& vars() const { return vars_; }
    const std::map<Exponents, Scalar>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    std::uint64_t total_degree() const;

    void add_term(const Exponents& e, const Scalar& c);

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial scaled(const Scalar& c) const;

    bool operator==(const Polynomial& o) const;

    std::string str() const;

private:
    void check_compatible(const Polynomial& o) const;

    FieldSpec field_;
    VarsPtr vars_;
    std::map<Exponents, Scalar> terms_;
};

/// Exact product (alias of operator*, named per the CLI surface).
Polynomial poly_mul(const Polynomial& a, const Polynomial& b);

/// Maximal term of a nonzero polynomial under the given order.
std::pair<Exponents, Scalar> leading_term(const Polynomial& p, const MonomialOrder& ord);

}  // namespace gammalg
