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

#include "gammalg/ncpoly.hpp"

namespace gammalg {

NcPolynomial NcPolynomial::constant(FieldSpec f, VarsPtr a, const Scalar& c) {
    NcPolynomial p(f, std::move(a));
    p.add_term(Word{}, c);
    return p;
}

NcPolynomial NcPolynomial::generator(FieldSpec f, VarsPtr a, std::size_t index) {
    if (index >= a->size()) throw ParseError("generator index out of range");
    NcPolynomial p(f, std::move(a));
    p.add_term(Word{static_cast<std::uint32_t>(index)}, Scalar::one(f));
    return p;
}

void NcPolynomial::add_term(const Word& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void NcPolynomial::check_compatible(const NcPolynomial& o) const {
    if (!(field_ == o.field_)) throw MismatchError("nc-polynomials over different fields");
    if (alphabet_ != o.alphabet_ && !(*alphabet_ == *o.alphabet_))
        throw MismatchError("nc-polynomials over different alphabets");
}

NcPolynomial NcPolynomial::operator-() const {
    NcPolynomial r(field_, alphabet_);
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
}

NcPolynomial& NcPolynomial::operator+=(const NcPolynomial& o) {
    check_compatible(o);
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

NcPolynomial& NcPolynomial::operator-=(const NcPolynomial& o) {
    check_compatible(o);
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

NcPolynomial operator*(const NcPolynomial& a, const NcPolynomial& b) {
    a.check_compatible(b);
    NcPolynomial r(a.field_, a.alphabet_);
    for (const auto& [wa, ca] : a.terms_) {
        for (const auto& [wb, cb] : b.terms_) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            r.add_term(w, ca * cb);
        }
    }
    return r;
}

NcPolynomial NcPolynomial::scaled(const Scalar& c) const {
    NcPolynomial r(field_, alphabet_);
    if (c.is_zero()) return r;
    for (const auto& [w, coeff] : terms_) r.add_term(w, coeff * c);
    return r;
}

bool NcPolynomial::operator==(const NcPolynomial& o) const {
    check_compatible(o);
    return terms_ == o.terms_;
}

std::string NcPolynomial::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        std::string cs = c.str();
        bool neg = !cs.empty() && cs[0] == '-';
        if (neg) cs.erase(cs.begin());
        out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
        first = false;
        std::string mono;
        for (auto g : w) {
            if (!mono.empty()) mono += "*";
            mono += alphabet_->name(g);
        }
        if (mono.empty())
            out += cs;
        else
            out += (cs == "1" ? mono : cs + "*" + mono);
    }
    return out;
}

Polynomial abelianize(const NcPolynomial& f, const VarsPtr& target_vars) {
    if (target_vars->size() != f.alphabet()->size())
        throw MismatchError("abelianize: alphabet and target variables are not in bijection");
    Polynomial r(f.field(), target_vars);
    for (const auto& [w, c] : f.terms()) {
        Exponents e(target_vars->size(), 0);
        for (auto g : w) {
            if (g >= target_vars->size()) throw ParseError("unknown generator in word");
            ++e[g];
        }
        r.add_term(e, c);
    }
    return r;
}

}  // namespace gammalg
