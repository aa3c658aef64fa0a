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

#include "gammalg/free_gamma.hpp"

#include "gammalg/builtins.hpp"

#include <numeric>

namespace gammalg {

namespace {

VarsPtr t_alphabet(int m) {
    std::vector<std::string> names;
    for (int k = 1; k <= m; ++k) names.push_back("t" + std::to_string(k));
    return make_variables(std::move(names));
}

int texps_degree(const TExps& t) {
    return static_cast<int>(std::accumulate(t.begin(), t.end(), std::uint32_t{0}));
}

TExps texps_add(const TExps& a, const TExps& b) {
    TExps out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

std::uint64_t count_commutative_monomials(int m, int degree) {
    if (degree == 0) return 1;
    if (m == 0) return 0;
    // C(degree + m - 1, m - 1)
    std::uint64_t num = 1, den = 1;
    for (int i = 1; i < m; ++i) {
        num *= static_cast<std::uint64_t>(degree + i);
        den *= static_cast<std::uint64_t>(i);
    }
    return num / den;
}

std::vector<TExps> enumerate_texps(int m, int degree) {
    std::vector<TExps> out;
    TExps current(static_cast<std::size_t>(m), 0);
    auto recurse = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == m - 1 || m == 0) {
            if (m == 0) {
                if (remaining == 0) out.push_back(current);
                return;
            }
            current[static_cast<std::size_t>(pos)] = static_cast<std::uint32_t>(remaining);
            out.push_back(current);
            current[static_cast<std::size_t>(pos)] = 0;
            return;
        }
        for (int d = remaining; d >= 0; --d) {
            current[static_cast<std::size_t>(pos)] = static_cast<std::uint32_t>(d);
            self(self, pos + 1, remaining - d);
        }
        current[static_cast<std::size_t>(pos)] = 0;
    };
    if (m == 0) {
        if (degree == 0) out.push_back(current);
        return out;
    }
    recurse(recurse, 0, degree);
    return out;
}

std::vector<Word> enumerate_words(int m, int length) {
    std::vector<Word> out;
    if (length == 0) {
        out.push_back({});
        return out;
    }
    if (m == 0) return out;
    Word current(static_cast<std::size_t>(length), 0);
    auto recurse = [&](auto&& self, int pos) -> void {
        if (pos == length) {
            out.push_back(current);
            return;
        }
        for (int g = 0; g < m; ++g) {
            current[static_cast<std::size_t>(pos)] = static_cast<std::uint32_t>(g);
            self(self, pos + 1);
        }
    };
    recurse(recurse, 0);
    return out;
}

std::string texps_label(const TExps& t) {
    std::string out;
    for (std::size_t k = 0; k < t.size(); ++k) {
        if (t[k] == 0) continue;
        if (!out.empty()) out += "*";
        out += "t" + std::to_string(k + 1);
        if (t[k] > 1) out += "^" + std::to_string(t[k]);
    }
    return out;
}

}  // namespace

FreeGammaElement::FreeGammaElement(FgSignature sig)
    : sig_(sig), nc_(sig.field, t_alphabet(sig.m)) {}

FreeGammaElement FreeGammaElement::scalar(const FgSignature& sig, const Scalar& c) {
    FreeGammaElement e(sig);
    e.nc_.add_term(Word{}, c);
    return e;
}

FreeGammaElement FreeGammaElement::even_generator(const FgSignature& sig, int k) {
    if (k < 1 || k > sig.m) throw ParseError("unknown even generator t" + std::to_string(k));
    FreeGammaElement e(sig);
    e.nc_.add_term(Word{static_cast<std::uint32_t>(k - 1)}, Scalar::one(sig.field));
    return e;
}

FreeGammaElement FreeGammaElement::odd_generator(const FgSignature& sig, int j) {
    if (j < 1 || j > sig.n) throw ParseError("unknown odd generator v" + std::to_string(j));
    FreeGammaElement e(sig);
    e.add_odd(TExps(static_cast<std::size_t>(sig.m), 0), StandardMonomial{}, j,
              Scalar::one(sig.field));
    return e;
}

bool FreeGammaElement::is_zero() const {
    return nc_.is_zero() && even_ideal_.empty() && odd_.empty();
}

void FreeGammaElement::add_even(const TExps& t, const StandardMonomial& u, const Scalar& c) {
    if (c.is_zero()) return;
    if (t.size() != static_cast<std::size_t>(sig_.m)) throw MismatchError("t-exponents length");
    if (u.degree() == 0) throw CheckError("even ideal terms need a-degree >= 1");
    auto key = std::make_pair(t, u);
    auto it = even_ideal_.find(key);
    if (it == even_ideal_.end()) {
        even_ideal_.emplace(std::move(key), c);
    } else {
        it->second += c;
        if (it->second.is_zero()) even_ideal_.erase(it);
    }
}

void FreeGammaElement::add_odd(const TExps& t, const StandardMonomial& u, int j, const Scalar& c) {
    if (c.is_zero()) return;
    if (t.size() != static_cast<std::size_t>(sig_.m)) throw MismatchError("t-exponents length");
    if (j < 1 || j > sig_.n) throw ParseError("odd generator index out of range");
    if (!u.in_filtered(j)) throw CheckError("odd key violates the B_{n,j} condition");
    auto key = std::make_tuple(t, u, j);
    auto it = odd_.find(key);
    if (it == odd_.end()) {
        odd_.emplace(std::move(key), c);
    } else {
        it->second += c;
        if (it->second.is_zero()) odd_.erase(it);
    }
}

FreeGammaElement FreeGammaElement::operator-() const {
    FreeGammaElement r(sig_);
    r.nc_ = -nc_;
    for (const auto& [k, c] : even_ideal_) r.even_ideal_.emplace(k, -c);
    for (const auto& [k, c] : odd_) r.odd_.emplace(k, -c);
    return r;
}

FreeGammaElement& FreeGammaElement::operator+=(const FreeGammaElement& o) {
    if (!(sig_ == o.sig_)) throw MismatchError("free elements with different signatures");
    nc_ += o.nc_;
    for (const auto& [k, c] : o.even_ideal_) add_even(k.first, k.second, c);
    for (const auto& [k, c] : o.odd_) add_odd(std::get<0>(k), std::get<1>(k), std::get<2>(k), c);
    return *this;
}

FreeGammaElement& FreeGammaElement::operator-=(const FreeGammaElement& o) {
    return *this += -o;
}

FreeGammaElement FreeGammaElement::scaled(const Scalar& c) const {
    FreeGammaElement r(sig_);
    if (c.is_zero()) return r;
    r.nc_ = nc_.scaled(c);
    for (const auto& [k, coeff] : even_ideal_) r.even_ideal_.emplace(k, coeff * c);
    for (const auto& [k, coeff] : odd_) r.odd_.emplace(k, coeff * c);
    return r;
}

bool FreeGammaElement::operator==(const FreeGammaElement& o) const {
    if (!(sig_ == o.sig_)) throw MismatchError("free elements with different signatures");
    return nc_ == o.nc_ && even_ideal_ == o.even_ideal_ && odd_ == o.odd_;
}

FreeGammaElement FreeGammaElement::truncated(int weight_cap) const {
    FreeGammaElement r(sig_);
    for (const auto& [w, c] : nc_.terms())
        if (2 * static_cast<int>(w.size()) <= weight_cap) r.nc_.add_term(w, c);
    for (const auto& [k, c] : even_ideal_)
        if (2 * texps_degree(k.first) + 2 * static_cast<int>(k.second.degree()) <= weight_cap)
            r.even_ideal_.emplace(k, c);
    for (const auto& [k, c] : odd_)
        if (2 * texps_degree(std::get<0>(k)) + 2 * static_cast<int>(std::get<1>(k).degree()) + 1 <=
            weight_cap)
            r.odd_.emplace(k, c);
    return r;
}

std::string FreeGammaElement::str() const {
    std::string out;
    auto append = [&](const std::string& piece) {
        if (piece.empty()) return;
        if (!out.empty()) out += " + ";
        out += piece;
    };
    if (!nc_.is_zero()) append(nc_.str());
    for (const auto& [k, c] : even_ideal_) {
        std::string label = texps_label(k.first);
        std::string term = (label.empty() ? "" : label + " ") + k.second.str();
        append("(" + c.str() + ") " + term);
    }
    for (const auto& [k, c] : odd_) {
        std::string label = texps_label(std::get<0>(k));
        std::string term = (label.empty() ? "" : label + " ");
        if (std::get<1>(k).degree() > 0) term += std::get<1>(k).str() + " ";
        term += "v" + std::to_string(std::get<2>(k));
        append("(" + c.str() + ") " + term);
    }
    return out.empty() ? "0" : out;
}

FreeGammaElement fg_multiply(const FreeGammaElement& a, const FreeGammaElement& b) {
    if (!(a.signature() == b.signature()))
        throw MismatchError("free elements with different signatures");
    const FgSignature& sig = a.signature();
    const FieldSpec& f = sig.field;
    FreeGammaElement r(sig);

    // nc x nc stays in the free associative part.
    const NcPolynomial nc_prod = a.nc_part() * b.nc_part();
    for (const auto& [w, c] : nc_prod.terms()) r.add_nc(w, c);

    // The abelianized images act on the ideal from either side.
    VarsPtr tvars = t_alphabet(sig.m);
    const Polynomial abar = abelianize(a.nc_part(), tvars);
    const Polynomial bbar = abelianize(b.nc_part(), tvars);

    for (const auto& [te, tc] : abar.terms()) {
        for (const auto& [k, c] : b.even_ideal_part())
            r.add_even(texps_add(te, k.first), k.second, tc * c);
        for (const auto& [k, c] : b.odd_part())
            r.add_odd(texps_add(te, std::get<0>(k)), std::get<1>(k), std::get<2>(k), tc * c);
    }
    for (const auto& [te, tc] : bbar.terms()) {
        for (const auto& [k, c] : a.even_ideal_part())
            r.add_even(texps_add(k.first, te), k.second, c * tc);
        for (const auto& [k, c] : a.odd_part())
            r.add_odd(texps_add(std::get<0>(k), te), std::get<1>(k), std::get<2>(k), c * tc);
    }

    // ideal x ideal inside F[t-bar] (x) Gamma[empty; V].
    for (const auto& [ka, ca] : a.even_ideal_part()) {
        for (const auto& [kb, cb] : b.even_ideal_part()) {
            std::vector<IndexPair> pairs = ka.second.pairs();
            pairs.insert(pairs.end(), kb.second.pairs().begin(), kb.second.pairs().end());
            const TExps te = texps_add(ka.first, kb.first);
            const SElement prod = straighten(f, sig.n, pairs, ca * cb);
            for (const auto& [u, c] : prod.terms()) r.add_even(te, u, c);
        }
        for (const auto& [kb, cb] : b.odd_part()) {
            std::vector<IndexPair> pairs = ka.second.pairs();
            pairs.insert(pairs.end(), std::get<1>(kb).pairs().begin(), std::get<1>(kb).pairs().end());
            const TExps te = texps_add(ka.first, std::get<0>(kb));
            const SElement uw = straighten(f, sig.n, pairs, ca * cb);
            const OddElement reduced = reduce_odd(uw, std::get<2>(kb));
            for (const auto& [key, c] : reduced.terms())
                r.add_odd(te, key.first, key.second, c);
        }
    }
    for (const auto& [ka, ca] : a.odd_part()) {
        for (const auto& [kb, cb] : b.even_ideal_part()) {
            std::vector<IndexPair> pairs = std::get<1>(ka).pairs();
            pairs.insert(pairs.end(), kb.second.pairs().begin(), kb.second.pairs().end());
            const TExps te = texps_add(std::get<0>(ka), kb.first);
            const SElement uw = straighten(f, sig.n, pairs, ca * cb);
            const OddElement reduced = reduce_odd(uw, std::get<2>(ka));
            for (const auto& [key, c] : reduced.terms())
                r.add_odd(te, key.first, key.second, c);
        }
        // odd x odd lands in the even ideal via v_i v_j = a(i,j).
        for (const auto& [kb, cb] : b.odd_part()) {
            const int i = std::get<2>(ka), j = std::get<2>(kb);
            if (i == j) continue;
            std::vector<IndexPair> pairs = std::get<1>(ka).pairs();
            pairs.insert(pairs.end(), std::get<1>(kb).pairs().begin(), std::get<1>(kb).pairs().end());
            pairs.push_back({i, j});
            const TExps te = texps_add(std::get<0>(ka), std::get<0>(kb));
            const SElement prod = straighten(f, sig.n, pairs, ca * cb);
            for (const auto& [u, c] : prod.terms()) r.add_even(te, u, c);
        }
    }
    return r;
}

FreeGammaElement fg_normal_form(const ExprPtr& expr, const FgSignature& sig) {
    if (!expr) throw ParseError("empty expression");
    switch (expr->kind) {
        case Expr::Kind::Constant:
            return FreeGammaElement::scalar(sig, Scalar::from_string(expr->literal, sig.field));
        case Expr::Kind::EvenGen:
            return FreeGammaElement::even_generator(sig, expr->index);
        case Expr::Kind::OddGen:
            return FreeGammaElement::odd_generator(sig, expr->index);
        case Expr::Kind::Add:
            return fg_normal_form(expr->lhs, sig) + fg_normal_form(expr->rhs, sig);
        case Expr::Kind::Sub:
            return fg_normal_form(expr->lhs, sig) - fg_normal_form(expr->rhs, sig);
        case Expr::Kind::Mul:
            return fg_multiply(fg_normal_form(expr->lhs, sig), fg_normal_form(expr->rhs, sig));
        case Expr::Kind::Neg:
            return -fg_normal_form(expr->lhs, sig);
    }
    throw ParseError("bad expression node");
}

AlgebraElement fg_evaluate(const FreeGammaElement& a, const GammaAlgebra& target,
                           const std::vector<AlgebraElement>& even_images,
                           const std::vector<AlgebraElement>& odd_images) {
    target.require_verified();
    const FgSignature& sig = a.signature();
    if (!(sig.field == target.carrier().field()))
        throw MismatchError("target over a different field");
    if (even_images.size() != static_cast<std::size_t>(sig.m) ||
        odd_images.size() != static_cast<std::size_t>(sig.n))
        throw MismatchError("generator assignment has the wrong arity");
    for (const auto& img : even_images) {
        if (&img.algebra() != &target.carrier()) throw MismatchError("image in the wrong algebra");
        if (img.homogeneous_parity() == 1)
            throw CheckError("even generator assigned an odd image");
    }
    for (const auto& img : odd_images) {
        if (&img.algebra() != &target.carrier()) throw MismatchError("image in the wrong algebra");
        if (img.homogeneous_parity() == 0)
            throw CheckError("odd generator assigned an even image");
    }

    const StructureAlgebra& A = target.carrier();
    AlgebraElement out = A.zero();
    for (const auto& [w, c] : a.nc_part().terms()) {
        AlgebraElement acc = A.unit();
        for (auto g : w) acc = acc * even_images[g];
        out += acc.scaled(c);
    }
    auto eval_standard = [&](const StandardMonomial& u) {
        AlgebraElement acc = A.unit();
        for (const auto& p : u.pairs())
            acc = acc * (odd_images[static_cast<std::size_t>(p.i - 1)] *
                         odd_images[static_cast<std::size_t>(p.j - 1)]);
        return acc;
    };
    auto apply_texps = [&](AlgebraElement val, const TExps& te) {
        for (std::size_t k = 0; k < te.size(); ++k)
            for (std::uint32_t e = 0; e < te[k]; ++e) val = even_images[k] * val;
        return val;
    };
    for (const auto& [key, c] : a.even_ideal_part())
        out += apply_texps(eval_standard(key.second), key.first).scaled(c);
    for (const auto& [key, c] : a.odd_part()) {
        AlgebraElement val =
            eval_standard(std::get<1>(key)) * odd_images[static_cast<std::size_t>(std::get<2>(key) - 1)];
        out += apply_texps(std::move(val), std::get<0>(key)).scaled(c);
    }
    return out;
}

std::pair<Polynomial, std::pair<Polynomial, Polynomial>> embedding_oracle(
    const FreeGammaElement& a) {
    const FgSignature& sig = a.signature();
    if (sig.m != 0) throw CheckError("embedding oracle needs m = 0 (no even generators)");
    const FieldSpec& f = sig.field;
    const int n = sig.n;
    VarsPtr vars = an_variables(n);
    Polynomial even(f, vars);
    for (const auto& [w, c] : a.nc_part().terms()) {
        if (!w.empty()) throw CheckError("nonempty word without even generators");
        even += Polynomial::constant(f, vars, c);
    }
    for (const auto& [key, c] : a.even_ideal_part())
        even += expand_pairs(f, n, key.second.pairs()).scaled(c);
    Polynomial ox(f, vars), oy(f, vars);
    for (const auto& [key, c] : a.odd_part()) {
        const int j = std::get<2>(key);
        Polynomial u = expand_pairs(f, n, std::get<1>(key).pairs()).scaled(c);
        ox += u * Polynomial::variable(f, vars, static_cast<std::size_t>(j - 1));
        oy += u * Polynomial::variable(f, vars, static_cast<std::size_t>(n + j - 1));
    }
    return {std::move(even), {std::move(ox), std::move(oy)}};
}

std::size_t fg_dimensions(int m, int n, int weight) {
    if (weight < 0) return 0;
    std::size_t total = 0;
    if (weight % 2 == 0) {
        const int w2 = weight / 2;
        std::uint64_t words = 1;
        for (int i = 0; i < w2; ++i) words *= static_cast<std::uint64_t>(m);
        total += static_cast<std::size_t>(words);
        for (int r = 1; r <= w2; ++r)
            total += static_cast<std::size_t>(count_commutative_monomials(m, w2 - r)) *
                     enumerate_basis(n, r).size();
    } else {
        const int rmax = (weight - 1) / 2;
        for (int r = 0; r <= rmax; ++r) {
            std::size_t odd_count = 0;
            for (int j = 1; j <= n; ++j) odd_count += enumerate_basis_filtered(n, j, r).size();
            total += static_cast<std::size_t>(count_commutative_monomials(m, rmax - r)) * odd_count;
        }
    }
    return total;
}

std::vector<FreeGammaElement> fg_basis(const FgSignature& sig, int weight) {
    std::vector<FreeGammaElement> out;
    const Scalar one = Scalar::one(sig.field);
    if (weight < 0) return out;
    if (weight % 2 == 0) {
        const int w2 = weight / 2;
        for (const auto& w : enumerate_words(sig.m, w2)) {
            FreeGammaElement e(sig);
            e.add_nc(w, one);
            out.push_back(std::move(e));
        }
        for (int r = 1; r <= w2; ++r)
            for (const auto& te : enumerate_texps(sig.m, w2 - r))
                for (const auto& u : enumerate_basis(sig.n, r)) {
                    FreeGammaElement e(sig);
                    e.add_even(te, u, one);
                    out.push_back(std::move(e));
                }
    } else {
        const int rmax = (weight - 1) / 2;
        for (int r = 0; r <= rmax; ++r)
            for (const auto& te : enumerate_texps(sig.m, rmax - r))
                for (int j = 1; j <= sig.n; ++j)
                    for (const auto& u : enumerate_basis_filtered(sig.n, j, r)) {
                        FreeGammaElement e(sig);
                        e.add_odd(te, u, j, one);
                        out.push_back(std::move(e));
                    }
    }
    return out;
}

Corollary1Envelope corollary1_envelope(const FieldSpec& f, int m, int n, int weight_cap) {
    if (weight_cap < 0) throw ParseError("weight cap must be nonnegative");
    const FgSignature sig{m, n, f};

    struct Entry {
        FreeGammaElement elem;
        int weight;
        std::string label;
    };
    std::vector<Entry> evens, odds;
    auto term_label = [&](const FreeGammaElement& e) -> std::string {
        if (!e.nc_part().is_zero()) {
            const Word& w = e.nc_part().terms().begin()->first;
            if (w.empty()) return "1";
            std::string out;
            for (auto g : w) {
                if (!out.empty()) out += "*";
                out += "t" + std::to_string(g + 1);
            }
            return out;
        }
        if (!e.even_ideal_part().empty()) {
            const auto& key = e.even_ideal_part().begin()->first;
            std::string t = texps_label(key.first);
            return t.empty() ? key.second.str() : t + " " + key.second.str();
        }
        const auto& key = e.odd_part().begin()->first;
        std::string t = texps_label(std::get<0>(key));
        std::string u = std::get<1>(key).degree() > 0 ? std::get<1>(key).str() + " " : "";
        return (t.empty() ? "" : t + " ") + u + "v" + std::to_string(std::get<2>(key));
    };
    for (int w = 0; w <= weight_cap; ++w) {
        for (auto& e : fg_basis(sig, w)) {
            std::string label = term_label(e);
            if (w % 2 == 0)
                evens.push_back({std::move(e), w, std::move(label)});
            else
                odds.push_back({std::move(e), w, std::move(label)});
        }
    }

    Corollary1Envelope out;
    for (int w = 0; w <= weight_cap; ++w) {
        std::size_t de = 0, d1 = 0;
        for (const auto& e : evens)
            if (e.weight == w) ++de;
        for (const auto& o : odds)
            if (o.weight == w) ++d1;
        out.graded_dims.emplace_back(w, 4 * de + 2 * d1);
    }

    // Envelope basis: even blocks (4 slots each) then odd blocks (2 slots).
    const char* slots[6] = {"e11", "e12", "e21", "e22", "m1", "m2"};
    std::vector<BasisVector> basis;
    for (const auto& e : evens)
        for (int s = 0; s < 4; ++s) basis.push_back({e.label + "⊗" + slots[s], 0});
    for (const auto& o : odds)
        for (int s = 4; s < 6; ++s) basis.push_back({o.label + "⊗" + slots[s], 1});
    const std::size_t dim = basis.size();

    // Coordinate lookup for truncated normal forms.
    std::map<Word, std::size_t> nc_pos;
    std::map<std::pair<TExps, StandardMonomial>, std::size_t> ideal_pos;
    std::map<std::tuple<TExps, StandardMonomial, int>, std::size_t> odd_pos;
    for (std::size_t i = 0; i < evens.size(); ++i) {
        const auto& e = evens[i].elem;
        if (!e.nc_part().is_zero())
            nc_pos[e.nc_part().terms().begin()->first] = i;
        else
            ideal_pos[e.even_ideal_part().begin()->first] = i;
    }
    for (std::size_t i = 0; i < odds.size(); ++i)
        odd_pos[odds[i].elem.odd_part().begin()->first] = i;

    const std::size_t even_block = 4 * evens.size();
    auto scatter = [&](const FreeGammaElement& prod, const Vec& b42_component, Vec& target) {
        // b42_component: coordinates over the six B(4,2) slots.
        for (const auto& [w, c] : prod.nc_part().terms()) {
            auto it = nc_pos.find(w);
            if (it == nc_pos.end()) throw CheckError("nc word missing from the truncated basis");
            for (int s = 0; s < 4; ++s)
                if (!b42_component[static_cast<std::size_t>(s)].is_zero())
                    target[4 * it->second + static_cast<std::size_t>(s)] +=
                        c * b42_component[static_cast<std::size_t>(s)];
        }
        for (const auto& [k, c] : prod.even_ideal_part()) {
            auto it = ideal_pos.find(k);
            if (it == ideal_pos.end()) throw CheckError("ideal term missing from the truncated basis");
            for (int s = 0; s < 4; ++s)
                if (!b42_component[static_cast<std::size_t>(s)].is_zero())
                    target[4 * it->second + static_cast<std::size_t>(s)] +=
                        c * b42_component[static_cast<std::size_t>(s)];
        }
        for (const auto& [k, c] : prod.odd_part()) {
            auto it = odd_pos.find(k);
            if (it == odd_pos.end()) throw CheckError("odd term missing from the truncated basis");
            for (int s = 0; s < 2; ++s)
                if (!b42_component[static_cast<std::size_t>(4 + s)].is_zero())
                    target[even_block + 2 * it->second + static_cast<std::size_t>(s)] +=
                        c * b42_component[static_cast<std::size_t>(4 + s)];
        }
    };

    const StructureAlgebra b42 = make_b42(f);
    auto entry_at = [&](std::size_t idx) -> std::pair<const FreeGammaElement*, int> {
        if (idx < even_block) return {&evens[idx / 4].elem, static_cast<int>(idx % 4)};
        const std::size_t o = idx - even_block;
        return {&odds[o / 2].elem, static_cast<int>(4 + o % 2)};
    };

    std::vector<std::vector<Vec>> table(dim, std::vector<Vec>(dim, Vec(dim, Scalar::zero(f))));
    for (std::size_t a = 0; a < dim; ++a) {
        const auto [ea, sa] = entry_at(a);
        for (std::size_t b = 0; b < dim; ++b) {
            const auto [eb, sb] = entry_at(b);
            const FreeGammaElement prod = fg_multiply(*ea, *eb).truncated(weight_cap);
            if (prod.is_zero()) continue;
            scatter(prod, b42.table(static_cast<std::size_t>(sa), static_cast<std::size_t>(sb)),
                    table[a][b]);
        }
    }
    Vec unit(dim, Scalar::zero(f));
    {
        // 1⊗(e11+e22): the weight-0 scalar element is the first even entry.
        auto it = nc_pos.find(Word{});
        if (it != nc_pos.end()) {
            unit[4 * it->second + 0] = Scalar::one(f);
            unit[4 * it->second + 3] = Scalar::one(f);
        }
    }
    out.alg = std::make_shared<const StructureAlgebra>(
        StructureAlgebra(f, std::move(basis), std::move(table), std::move(unit)));
    return out;
}

}  // namespace gammalg
