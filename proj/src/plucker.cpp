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

#include "gammalg/plucker.hpp"

#include <algorithm>

namespace gammalg {

StandardMonomial::StandardMonomial(std::vector<IndexPair> pairs) : pairs_(std::move(pairs)) {
    if (!is_standard(pairs_)) throw CheckError("monomial is not standard: " + str());
}

bool StandardMonomial::is_standard(const std::vector<IndexPair>& pairs) {
    for (std::size_t s = 0; s < pairs.size(); ++s) {
        if (pairs[s].i >= pairs[s].j) return false;
        if (s > 0 && (pairs[s - 1].i > pairs[s].i || pairs[s - 1].j > pairs[s].j)) return false;
    }
    return true;
}

std::string StandardMonomial::str() const {
    if (pairs_.empty()) return "1";
    std::string out;
    for (const auto& p : pairs_)
        out += "a(" + std::to_string(p.i) + "," + std::to_string(p.j) + ")";
    return out;
}

void SElement::add_term(const StandardMonomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void SElement::check_compatible(const SElement& o) const {
    if (!(field_ == o.field_) || n_ != o.n_)
        throw MismatchError("S-elements with different field or ambient size");
}

SElement SElement::operator-() const {
    SElement r(field_, n_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

SElement& SElement::operator+=(const SElement& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

SElement& SElement::operator-=(const SElement& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

SElement operator*(const SElement& a, const SElement& b) {
    a.check_compatible(b);
    SElement r(a.field(), a.n());
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            std::vector<IndexPair> pairs = ma.pairs();
            pairs.insert(pairs.end(), mb.pairs().begin(), mb.pairs().end());
            r += straighten(a.field(), a.n(), pairs, ca * cb);
        }
    }
    return r;
}

SElement SElement::scaled(const Scalar& c) const {
    SElement r(field_, n_);
    if (c.is_zero()) return r;
    for (const auto& [m, coeff] : terms_) r.add_term(m, coeff * c);
    return r;
}

bool SElement::operator==(const SElement& o) const {
    check_compatible(o);
    return terms_ == o.terms_;
}

std::string SElement::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        std::string cs = it->second.str();
        bool neg = !cs.empty() && cs[0] == '-';
        if (neg) cs.erase(cs.begin());
        out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
        first = false;
        const std::string ms = it->first.str();
        if (it->first.degree() == 0)
            out += cs;
        else
            out += (cs == "1" ? ms : cs + " " + ms);
    }
    return out;
}

void OddElement::add_term(const StandardMonomial& u, int j, const Scalar& c) {
    if (c.is_zero()) return;
    if (!u.in_filtered(j)) throw CheckError("odd key violates the B_{n,j} condition");
    auto key = std::make_pair(u, j);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

OddElement& OddElement::operator+=(const OddElement& o) {
    if (!(field_ == o.field_) || n_ != o.n_)
        throw MismatchError("odd elements with different field or ambient size");
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
    return *this;
}

OddElement OddElement::scaled(const Scalar& c) const {
    OddElement r(field_, n_);
    if (c.is_zero()) return r;
    for (const auto& [k, coeff] : terms_) r.add_term(k.first, k.second, coeff * c);
    return r;
}

bool OddElement::operator==(const OddElement& o) const {
    return field_ == o.field_ && n_ == o.n_ && terms_ == o.terms_;
}

std::string OddElement::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        std::string cs = it->second.str();
        bool neg = !cs.empty() && cs[0] == '-';
        if (neg) cs.erase(cs.begin());
        out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
        first = false;
        std::string ms = it->first.first.degree() == 0 ? "" : it->first.first.str() + " ";
        ms += "v" + std::to_string(it->first.second);
        out += (cs == "1" ? ms : cs + " " + ms);
    }
    return out;
}

VarsPtr an_variables(int n) {
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    for (int i = 1; i <= n; ++i) names.push_back("y" + std::to_string(i));
    return make_variables(std::move(names));
}

VarsPtr enm_variables(int n, int m) {
    std::vector<std::string> names;
    for (int i = m; i <= n; ++i) names.push_back("x" + std::to_string(i));
    names.push_back("t");
    for (int i = 1; i <= n; ++i) names.push_back("y" + std::to_string(i));
    return make_variables(std::move(names));
}

MonomialOrder an_deglex_order(int n) {
    std::vector<std::string> ranking;
    for (int i = n; i >= 1; --i) ranking.push_back("x" + std::to_string(i));
    for (int i = 1; i <= n; ++i) ranking.push_back("y" + std::to_string(i));
    return MonomialOrder::deglex(an_variables(n), ranking);
}

MonomialOrder enm_deglex_order(int n, int m) {
    std::vector<std::string> ranking;
    for (int i = n; i >= m; --i) ranking.push_back("x" + std::to_string(i));
    for (int i = 1; i <= n; ++i) ranking.push_back("y" + std::to_string(i));
    ranking.push_back("t");
    // t carries degree 0: the leading term of t y_i y_j - x_j y_i must be
    // -x_j y_i for the independence argument to read off x/y monomials.
    VarsPtr vars = enm_variables(n, m);
    std::vector<std::uint32_t> weights(vars->size(), 1);
    weights[*vars->index_of("t")] = 0;
    return MonomialOrder::deglex_weighted(vars, ranking, std::move(weights));
}

Polynomial expand_pairs(const FieldSpec& f, int n, const std::vector<IndexPair>& pairs) {
    VarsPtr vars = an_variables(n);
    Polynomial out = Polynomial::constant(f, vars, Scalar::one(f));
    for (const auto& p : pairs) {
        if (p.i < 1 || p.i > n || p.j < 1 || p.j > n)
            throw ParseError("index pair out of range 1.." + std::to_string(n));
        Polynomial minor(f, vars);
        Exponents e(vars->size(), 0);
        e[static_cast<std::size_t>(p.i - 1)] = 1;                       // x_i
        e[static_cast<std::size_t>(n + p.j - 1)] = 1;                   // y_j
        minor.add_term(e, Scalar::one(f));
        Exponents e2(vars->size(), 0);
        e2[static_cast<std::size_t>(p.j - 1)] = 1;                      // x_j
        e2[static_cast<std::size_t>(n + p.i - 1)] = 1;                  // y_i
        minor.add_term(e2, -Scalar::one(f));
        out = out * minor;
    }
    return out;
}

Polynomial expand(const SElement& s) {
    Polynomial out(s.field(), an_variables(s.n()));
    for (const auto& [m, c] : s.terms()) out += expand_pairs(s.field(), s.n(), m.pairs()).scaled(c);
    return out;
}

std::pair<Polynomial, Polynomial> expand_odd(const OddElement& o) {
    const int n = o.n();
    VarsPtr vars = an_variables(n);
    Polynomial px(o.field(), vars), py(o.field(), vars);
    for (const auto& [key, c] : o.terms()) {
        Polynomial u = expand_pairs(o.field(), n, key.first.pairs()).scaled(c);
        const int j = key.second;
        px += u * Polynomial::variable(o.field(), vars, static_cast<std::size_t>(j - 1));
        py += u * Polynomial::variable(o.field(), vars, static_cast<std::size_t>(n + j - 1));
    }
    return {std::move(px), std::move(py)};
}

SElement straighten(const FieldSpec& f, int n, const std::vector<IndexPair>& pairs) {
    return straighten(f, n, pairs, Scalar::one(f));
}

SElement straighten(const FieldSpec& f, int n, const std::vector<IndexPair>& raw,
                    const Scalar& coeff) {
    SElement out(f, n);
    if (coeff.is_zero()) return out;
    // Normalize: i < j with sign flips; a repeated index kills the monomial.
    std::vector<IndexPair> pairs;
    Scalar sign = coeff;
    for (const auto& p : raw) {
        if (p.i < 1 || p.i > n || p.j < 1 || p.j > n)
            throw ParseError("index pair out of range 1.." + std::to_string(n));
        if (p.i == p.j) return out;
        if (p.i < p.j) {
            pairs.push_back(p);
        } else {
            pairs.push_back({p.j, p.i});
            sign = -sign;
        }
    }
    std::sort(pairs.begin(), pairs.end());

    std::map<std::vector<IndexPair>, Scalar> pending;
    pending.emplace(std::move(pairs), sign);
    std::size_t steps = 0;
    while (!pending.empty()) {
        if (++steps > 1000000) throw CheckError("straightening did not terminate");
        auto node = pending.extract(pending.begin());
        const std::vector<IndexPair>& ps = node.key();
        const Scalar c = node.mapped();
        if (c.is_zero()) continue;
        // Leftmost adjacent column violation; none means standard.
        std::size_t s = 0;
        for (; s + 1 < ps.size(); ++s)
            if (ps[s].j > ps[s + 1].j) break;
        if (s + 1 >= ps.size()) {
            out.add_term(StandardMonomial(ps), c);
            continue;
        }
        // a < c0 < d < b here, and a(a,b)a(c0,d) = -a(a,c0)a(d,b) + a(a,d)a(c0,b).
        const int a = ps[s].i, b = ps[s].j, c0 = ps[s + 1].i, d = ps[s + 1].j;
        auto emit = [&](IndexPair p1, IndexPair p2, const Scalar& cc) {
            std::vector<IndexPair> next;
            next.reserve(ps.size());
            for (std::size_t k = 0; k < ps.size(); ++k) {
                if (k == s) {
                    next.push_back(p1);
                    next.push_back(p2);
                    ++k;  // skip the second window slot
                } else {
                    next.push_back(ps[k]);
                }
            }
            std::sort(next.begin(), next.end());
            auto it = pending.find(next);
            if (it == pending.end()) {
                pending.emplace(std::move(next), cc);
            } else {
                it->second += cc;
                if (it->second.is_zero()) pending.erase(it);
            }
        };
        emit({a, c0}, {d, b}, -c);
        emit({a, d}, {c0, b}, c);
    }
    return out;
}

std::vector<StandardMonomial> enumerate_basis(int n, int r) {
    if (n < 2 && r > 0) return {};
    std::vector<StandardMonomial> out;
    std::vector<IndexPair> current;
    auto recurse = [&](auto&& self, int depth, IndexPair prev) -> void {
        if (depth == r) {
            out.emplace_back(current);
            return;
        }
        for (int i = prev.i; i <= n; ++i) {
            for (int j = std::max(i + 1, prev.j); j <= n; ++j) {
                current.push_back({i, j});
                self(self, depth + 1, {i, j});
                current.pop_back();
            }
        }
    };
    if (r == 0) return {StandardMonomial{}};
    recurse(recurse, 0, {1, 1});
    return out;
}

std::vector<StandardMonomial> enumerate_basis_filtered(int n, int m, int r) {
    std::vector<StandardMonomial> out;
    for (auto& u : enumerate_basis(n, r))
        if (u.in_filtered(m)) out.push_back(std::move(u));
    return out;
}

namespace {

// x_k -> t y_k for k < m, identity on the other generators.
Polynomial lemma2_substitute(const Polynomial& p, int n, int m) {
    VarsPtr evars = enm_variables(n, m);
    Polynomial out(p.field(), evars);
    const std::size_t xcount = static_cast<std::size_t>(n - m + 1);
    for (const auto& [e, c] : p.terms()) {
        Exponents img(evars->size(), 0);
        std::uint32_t texp = 0;
        for (int k = 1; k <= n; ++k) {
            const std::uint32_t ex = e[static_cast<std::size_t>(k - 1)];
            const std::uint32_t ey = e[static_cast<std::size_t>(n + k - 1)];
            std::uint32_t y_total = ey;
            if (k >= m) {
                img[static_cast<std::size_t>(k - m)] = ex;
            } else {
                texp += ex;
                y_total += ex;
            }
            img[xcount + 1 + static_cast<std::size_t>(k - 1)] = y_total;
        }
        img[xcount] = texp;
        out.add_term(img, c);
    }
    return out;
}

}  // namespace

std::size_t lemma2_oracle(const FieldSpec& f, int n, int m, int r) {
    std::vector<Polynomial> images;
    for (const auto& u : enumerate_basis_filtered(n, m, r))
        images.push_back(lemma2_substitute(expand_pairs(f, n, u.pairs()), n, m));
    return rank_of_span(images);
}

std::vector<StandardMonomial> enumerate_Im_basis(int n, int m, int r) {
    if (m < 3 || m > n) throw ParseError("need 3 <= m <= n");
    std::vector<StandardMonomial> out;
    for (auto& u : enumerate_basis(n, r)) {
        int l = 0, p = 0;
        for (const auto& pr : u.pairs()) {
            if (pr.j < m) ++l;
            if (pr.i < m) ++p;
        }
        if (l >= 1 && r - p >= l) out.push_back(std::move(u));
    }
    return out;
}

namespace {

void reduce_term(OddElement& out, const FieldSpec& f, int n, const StandardMonomial& u, int j,
                 const Scalar& c) {
    if (u.in_filtered(j)) {
        out.add_term(u, j, c);
        return;
    }
    // j1 < j here; rewrite a(i1,j1) v_j = a(i1,j) v_{j1} - a(j1,j) v_{i1}.
    const IndexPair head = u.pairs().front();
    std::vector<IndexPair> rest(u.pairs().begin() + 1, u.pairs().end());
    std::vector<IndexPair> with_ij = rest;
    with_ij.push_back({head.i, j});
    const SElement s1 = straighten(f, n, with_ij, c);
    for (const auto& [w, cw] : s1.terms()) reduce_term(out, f, n, w, head.j, cw);
    std::vector<IndexPair> with_jj = rest;
    with_jj.push_back({head.j, j});
    const SElement s2 = straighten(f, n, with_jj, -c);
    for (const auto& [w, cw] : s2.terms()) reduce_term(out, f, n, w, head.i, cw);
}

}  // namespace

OddElement reduce_odd(const SElement& u, int j) {
    if (j < 1 || j > u.n()) throw ParseError("generator index out of range");
    OddElement out(u.field(), u.n());
    for (const auto& [mon, c] : u.terms()) reduce_term(out, u.field(), u.n(), mon, j, c);
    return out;
}

std::size_t odd_dimension(const FieldSpec& f, int n, int weight, bool certify) {
    if (weight < 0 || weight % 2 == 0) throw CheckError("odd component needs odd weight");
    const int r = (weight - 1) / 2;
    std::size_t count = 0;
    for (int j = 1; j <= n; ++j) count += enumerate_basis_filtered(n, j, r).size();
    if (certify) {
        VarsPtr vars = an_variables(n);
        std::vector<std::vector<Polynomial>> images;
        for (const auto& u : enumerate_basis(n, r)) {
            Polynomial pu = expand_pairs(f, n, u.pairs());
            for (int k = 1; k <= n; ++k) {
                images.push_back(
                    {pu * Polynomial::variable(f, vars, static_cast<std::size_t>(k - 1)),
                     pu * Polynomial::variable(f, vars, static_cast<std::size_t>(n + k - 1))});
            }
        }
        if (rank_of_span_tuples(images) != count)
            throw CheckError("odd dimension count disagrees with the rank oracle");
    }
    return count;
}

}  // namespace gammalg
