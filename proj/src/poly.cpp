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

#include "gammalg/poly.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace gammalg {

VariableSet::VariableSet(std::vector<std::string> names) : names_(std::move(names)) {
    for (std::size_t i = 0; i < names_.size(); ++i)
        for (std::size_t j = i + 1; j < names_.size(); ++j)
            if (names_[i] == names_[j]) throw ParseError("duplicate variable '" + names_[i] + "'");
}

std::optional<std::size_t> VariableSet::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    return std::nullopt;
}

MonomialOrder MonomialOrder::deglex(const VarsPtr& vars, const std::vector<std::string>& ranking) {
    return deglex_weighted(vars, ranking, std::vector<std::uint32_t>(vars->size(), 1));
}

MonomialOrder MonomialOrder::deglex_weighted(const VarsPtr& vars,
                                             const std::vector<std::string>& ranking,
                                             std::vector<std::uint32_t> weights) {
    if (ranking.size() != vars->size()) throw ParseError("ranking must cover every variable");
    if (weights.size() != vars->size()) throw ParseError("weights must cover every variable");
    MonomialOrder ord;
    ord.vars_ = vars;
    ord.weights_ = std::move(weights);
    std::vector<bool> seen(vars->size(), false);
    for (const auto& name : ranking) {
        auto idx = vars->index_of(name);
        if (!idx) throw ParseError("unknown variable '" + name + "' in ranking");
        if (seen[*idx]) throw ParseError("variable '" + name + "' ranked twice");
        seen[*idx] = true;
        ord.significance_.push_back(*idx);
    }
    return ord;
}

int MonomialOrder::compare(const Exponents& a, const Exponents& b) const {
    std::uint64_t da = 0, db = 0;
    for (std::size_t v = 0; v < weights_.size(); ++v) {
        da += std::uint64_t{weights_[v]} * a[v];
        db += std::uint64_t{weights_[v]} * b[v];
    }
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t v : significance_) {
        if (a[v] != b[v]) return a[v] < b[v] ? -1 : 1;
    }
    return 0;
}

Polynomial Polynomial::constant(FieldSpec f, VarsPtr vars, const Scalar& c) {
    Polynomial p(f, std::move(vars));
    p.add_term(Exponents(p.vars_->size(), 0), c);
    return p;
}

Polynomial Polynomial::variable(FieldSpec f, VarsPtr vars, std::size_t index) {
    if (index >= vars->size()) throw ParseError("variable index out of range");
    Polynomial p(f, std::move(vars));
    Exponents e(p.vars_->size(), 0);
    e[index] = 1;
    p.add_term(e, Scalar::one(f));
    return p;
}

Polynomial Polynomial::monomial(FieldSpec f, VarsPtr vars, Exponents e, const Scalar& c) {
    if (e.size() != vars->size()) throw ParseError("exponent vector has wrong length");
    Polynomial p(f, std::move(vars));
    p.add_term(e, c);
    return p;
}

std::uint64_t Polynomial::total_degree() const {
    std::uint64_t d = 0;
    for (const auto& [e, c] : terms_)
        d = std::max(d, std::accumulate(e.begin(), e.end(), std::uint64_t{0}));
    return d;
}

void Polynomial::add_term(const Exponents& e, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void Polynomial::check_compatible(const Polynomial& o) const {
    if (!(field_ == o.field_)) throw MismatchError("polynomials over different fields");
    if (vars_ != o.vars_ && !(*vars_ == *o.vars_))
        throw MismatchError("polynomials over different variable universes");
}

Polynomial Polynomial::operator-() const {
    Polynomial r(field_, vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_compatible(b);
    Polynomial r(a.field_, a.vars_);
    Exponents e(a.vars_->size());
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
    Polynomial r(field_, vars_);
    if (c.is_zero()) return r;
    for (const auto& [e, coeff] : terms_) r.add_term(e, coeff * c);
    return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
    check_compatible(o);
    return terms_ == o.terms_;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    // Print descending so leading-looking terms come first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string cs = c.str();
        bool neg = !cs.empty() && cs[0] == '-';
        if (first) {
            out += neg ? "-" : "";
        } else {
            out += neg ? " - " : " + ";
        }
        if (neg) cs.erase(cs.begin());
        first = false;
        std::string mono;
        for (std::size_t v = 0; v < e.size(); ++v) {
            if (e[v] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += vars_->name(v);
            if (e[v] > 1) mono += "^" + std::to_string(e[v]);
        }
        if (mono.empty()) {
            out += cs;
        } else if (cs == "1") {
            out += mono;
        } else {
            out += cs + "*" + mono;
        }
    }
    return out;
}

Polynomial poly_mul(const Polynomial& a, const Polynomial& b) { return a * b; }

std::pair<Exponents, Scalar> leading_term(const Polynomial& p, const MonomialOrder& ord) {
    if (p.is_zero()) throw CheckError("leading term of the zero polynomial");
    if (ord.vars() != p.vars() && !(*ord.vars() == *p.vars()))
        throw MismatchError("order defined over a different variable universe");
    auto best = p.terms().begin();
    for (auto it = std::next(p.terms().begin()); it != p.terms().end(); ++it)
        if (ord.compare(it->first, best->first) > 0) best = it;
    return {best->first, best->second};
}

}  // namespace gammalg
