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

#include <memory>
#include <string>

#include "gammalg/field.hpp"

namespace gammalg {

/// Binary product/sum tree over the free generators t1..tm (even) and
/// v1..vn (odd), with scalar literals.
struct Expr {
    enum class Kind { Constant, EvenGen, OddGen, Add, Sub, Mul, Neg };

    Kind kind = Kind::Constant;
    std::string literal;  // Constant: "3", "-1/2"
    int index = 0;        // EvenGen / OddGen: 1-based generator index
    std::shared_ptr<const Expr> lhs, rhs;
};

using ExprPtr = std::shared_ptr<const Expr>;

ExprPtr expr_constant(std::string literal);
ExprPtr expr_even_gen(int index);
ExprPtr expr_odd_gen(int index);
ExprPtr expr_add(ExprPtr a, ExprPtr b);
ExprPtr expr_sub(ExprPtr a, ExprPtr b);
ExprPtr expr_mul(ExprPtr a, ExprPtr b);
ExprPtr expr_neg(ExprPtr a);

/// Grammar: identifiers t<k> and v<k>, integer or rational literals, '+',
/// '-', '*', unary minus, parentheses. Adjacency does not multiply; '*' is
/// required. Reports the largest generator indices seen.
ExprPtr parse_expression(std::string_view src, int& max_even, int& max_odd);

}  // namespace gammalg
