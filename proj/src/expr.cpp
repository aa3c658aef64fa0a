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

#include "gammalg/expr.hpp"

#include <algorithm>
#include <cctype>

namespace gammalg {

ExprPtr expr_constant(std::string literal) {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Constant;
    e->literal = std::move(literal);
    return e;
}

ExprPtr expr_even_gen(int index) {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::EvenGen;
    e->index = index;
    return e;
}

ExprPtr expr_odd_gen(int index) {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::OddGen;
    e->index = index;
    return e;
}

namespace {

ExprPtr binary(Expr::Kind k, ExprPtr a, ExprPtr b) {
    auto e = std::make_shared<Expr>();
    e->kind = k;
    e->lhs = std::move(a);
    e->rhs = std::move(b);
    return e;
}

}  // namespace

ExprPtr expr_add(ExprPtr a, ExprPtr b) { return binary(Expr::Kind::Add, std::move(a), std::move(b)); }
ExprPtr expr_sub(ExprPtr a, ExprPtr b) { return binary(Expr::Kind::Sub, std::move(a), std::move(b)); }
ExprPtr expr_mul(ExprPtr a, ExprPtr b) { return binary(Expr::Kind::Mul, std::move(a), std::move(b)); }

ExprPtr expr_neg(ExprPtr a) {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Neg;
    e->lhs = std::move(a);
    return e;
}

namespace {

class Parser {
public:
    Parser(std::string_view src, int& max_even, int& max_odd)
        : src_(src), max_even_(max_even), max_odd_(max_odd) {}

    ExprPtr run() {
        ExprPtr e = sum();
        skip_ws();
        if (pos_ != src_.size()) throw ParseError("trailing input at offset " + std::to_string(pos_));
        return e;
    }

private:
    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < src_.size() ? src_[pos_] : '\0';
    }

    ExprPtr sum() {
        ExprPtr e = product();
        for (;;) {
            if (eat('+'))
                e = expr_add(std::move(e), product());
            else if (eat('-'))
                e = expr_sub(std::move(e), product());
            else
                return e;
        }
    }

    ExprPtr product() {
        ExprPtr e = factor();
        while (eat('*')) e = expr_mul(std::move(e), factor());
        return e;
    }

    ExprPtr factor() {
        if (eat('-')) return expr_neg(factor());
        if (eat('(')) {
            ExprPtr e = sum();
            if (!eat(')')) throw ParseError("missing ')'");
            return e;
        }
        const char c = peek();
        if (c == 't' || c == 'v') {
            ++pos_;
            int idx = parse_uint("generator index");
            if (idx < 1) throw ParseError("generator indices are 1-based");
            if (c == 't') {
                max_even_ = std::max(max_even_, idx);
                return expr_even_gen(idx);
            }
            max_odd_ = std::max(max_odd_, idx);
            return expr_odd_gen(idx);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string lit = std::to_string(parse_uint("number"));
            if (eat('/')) lit += "/" + std::to_string(parse_uint("denominator"));
            return expr_constant(std::move(lit));
        }
        throw ParseError(std::string("unexpected character '") + c + "' at offset " +
                         std::to_string(pos_));
    }

    int parse_uint(const char* what) {
        skip_ws();
        if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
            throw ParseError(std::string("expected ") + what);
        long v = 0;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
            v = v * 10 + (src_[pos_] - '0');
            if (v > 1000000000L) throw ParseError("number too large");
            ++pos_;
        }
        return static_cast<int>(v);
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    int& max_even_;
    int& max_odd_;
};

}  // namespace

ExprPtr parse_expression(std::string_view src, int& max_even, int& max_odd) {
    max_even = 0;
    max_odd = 0;
    return Parser(src, max_even, max_odd).run();
}

}  // namespace gammalg
