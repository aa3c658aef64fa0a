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

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace gammalg {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands live over different fields / algebras / signatures.
class MismatchError : public Error {
public:
    using Error::Error;
};

/// Malformed textual or JSON input, invalid construction parameters.
class ParseError : public Error {
public:
    using Error::Error;
};

/// A mathematical precondition does not hold (e.g. a verification failed).
class CheckError : public Error {
public:
    using Error::Error;
};

/// Ground field: the rationals (characteristic 0) or a prime field F_p.
class FieldSpec {
public:
    FieldSpec() = default;

    static FieldSpec rationals() { return FieldSpec{}; }
    static FieldSpec prime_field(std::uint64_t p);

    /// Accepts "q" or "fp:<p>".
    static FieldSpec parse(std::string_view s);

    std::uint64_t characteristic() const { return p_; }
    bool is_rationals() const { return p_ == 0; }
    std::string str() const;

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

private:
    std::uint64_t p_ = 0;
};

/// Exact field element. Rationals are arbitrary-precision (GMP); prime-field
/// values are canonical residues in [0, p). There is no floating point
/// anywhere in the library.
class Scalar {
public:
    Scalar() : p_(0), rat_(0) {}

    static Scalar zero(const FieldSpec& f) { return of(0, f); }
    static Scalar one(const FieldSpec& f) { return of(1, f); }
    static Scalar of(long long value, const FieldSpec& f);
    static Scalar of_rational(const mpq_class& q, const FieldSpec& f);

    /// "a", "-a/b" over the rationals; any integer string mod p.
    static Scalar from_string(std::string_view s, const FieldSpec& f);

    FieldSpec field() const;
    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    Scalar inverse() const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// Canonical string: "a" or "a/b" (rationals), decimal residue (F_p).
    std::string str() const;

    /// Rational payload; only meaningful over the rationals.
    const mpq_class& rational() const { return rat_; }
    std::uint64_t residue() const { return res_; }

private:
    void check_same_field(const Scalar& o) const;

    std::uint64_t p_ = 0;    // 0 = rationals
    mpq_class rat_;          // valid iff p_ == 0
    std::uint64_t res_ = 0;  // valid iff p_ != 0
};

}  // namespace gammalg
