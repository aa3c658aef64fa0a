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

#include "gammalg/field.hpp"

#include <charconv>

namespace gammalg {

namespace {

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Modular inverse via extended Euclid; a must be nonzero mod p.
std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a);
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) throw CheckError("element not invertible mod p");
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

}  // namespace

FieldSpec FieldSpec::prime_field(std::uint64_t p) {
    if (!is_prime(p)) throw ParseError("characteristic must be prime, got " + std::to_string(p));
    if (p >= (1ull << 31)) throw ParseError("prime too large (need p < 2^31)");
    FieldSpec f;
    f.p_ = p;
    return f;
}

FieldSpec FieldSpec::parse(std::string_view s) {
    if (s == "q" || s == "Q") return rationals();
    if (s.rfind("fp:", 0) == 0) {
        std::uint64_t p = 0;
        auto body = s.substr(3);
        auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), p);
        if (ec != std::errc{} || ptr != body.data() + body.size())
            throw ParseError("bad field spec '" + std::string(s) + "'");
        return prime_field(p);
    }
    throw ParseError("bad field spec '" + std::string(s) + "' (expected \"q\" or \"fp:<p>\")");
}

std::string FieldSpec::str() const {
    return p_ == 0 ? std::string("q") : "fp:" + std::to_string(p_);
}

Scalar Scalar::of(long long value, const FieldSpec& f) {
    Scalar s;
    s.p_ = f.characteristic();
    if (s.p_ == 0) {
        s.rat_ = mpq_class(static_cast<long>(value));
    } else {
        long long r = value % static_cast<long long>(s.p_);
        if (r < 0) r += static_cast<long long>(s.p_);
        s.res_ = static_cast<std::uint64_t>(r);
    }
    return s;
}

Scalar Scalar::of_rational(const mpq_class& q, const FieldSpec& f) {
    if (f.is_rationals()) {
        Scalar s;
        s.p_ = 0;
        s.rat_ = q;
        s.rat_.canonicalize();
        return s;
    }
    // Reduce num/den mod p; denominator must be invertible.
    const std::uint64_t p = f.characteristic();
    mpz_class num = q.get_num(), den = q.get_den();
    mpz_class pz(static_cast<unsigned long>(p));
    mpz_class nr = num % pz;
    if (nr < 0) nr += pz;
    mpz_class dr = den % pz;
    if (dr < 0) dr += pz;
    std::uint64_t n = nr.get_ui(), d = dr.get_ui();
    if (d == 0) throw CheckError("denominator vanishes mod p");
    Scalar s;
    s.p_ = p;
    s.res_ = (n * mod_inverse(d, p)) % p;
    return s;
}

Scalar Scalar::from_string(std::string_view text, const FieldSpec& f) {
    std::string src(text);
    if (src.empty()) throw ParseError("empty scalar literal");
    mpq_class q;
    if (q.set_str(src, 10) != 0) throw ParseError("bad scalar literal '" + src + "'");
    if (q.get_den() == 0) throw ParseError("zero denominator in '" + src + "'");
    q.canonicalize();
    return of_rational(q, f);
}

FieldSpec Scalar::field() const {
    return p_ == 0 ? FieldSpec::rationals() : FieldSpec::prime_field(p_);
}

bool Scalar::is_zero() const { return p_ == 0 ? rat_ == 0 : res_ == 0; }
bool Scalar::is_one() const { return p_ == 0 ? rat_ == 1 : res_ == 1; }

void Scalar::check_same_field(const Scalar& o) const {
    if (p_ != o.p_) throw MismatchError("scalars over different fields");
}

Scalar Scalar::operator-() const {
    Scalar s(*this);
    if (p_ == 0)
        s.rat_ = -s.rat_;
    else if (s.res_ != 0)
        s.res_ = p_ - s.res_;
    return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    check_same_field(o);
    if (p_ == 0)
        rat_ += o.rat_;
    else
        res_ = (res_ + o.res_) % p_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    check_same_field(o);
    if (p_ == 0)
        rat_ -= o.rat_;
    else
        res_ = (res_ + p_ - o.res_) % p_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    check_same_field(o);
    if (p_ == 0)
        rat_ *= o.rat_;
    else
        res_ = (res_ * o.res_) % p_;  // p < 2^31, no overflow
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    check_same_field(o);
    if (o.is_zero()) throw CheckError("division by zero");
    if (p_ == 0)
        rat_ /= o.rat_;
    else
        res_ = (res_ * mod_inverse(o.res_, p_)) % p_;
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw CheckError("zero has no inverse");
    Scalar s = one(field());
    s /= *this;
    return s;
}

bool Scalar::operator==(const Scalar& o) const {
    check_same_field(o);
    return p_ == 0 ? rat_ == o.rat_ : res_ == o.res_;
}

std::string Scalar::str() const {
    return p_ == 0 ? rat_.get_str() : std::to_string(res_);
}

}  // namespace gammalg
