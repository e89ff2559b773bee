// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <string>

namespace svaeq::smtsolve {

// SMT-LIB 2 boolean-core interpreter backing the svaeq-smt tool: handles
// declare-const/declare-fun (0-ary Bool), define-fun macros, assert over
// not/and/or/xor/=>/=/ite/let, check-sat (Tseitin + DPLL) and get-model.
// Unknown commands answer an (error ...) s-expression like any conforming
// solver. Returns the process exit code.
int run(std::istream &in, std::ostream &out);

// One-shot convenience for tests.
std::string solve_script(const std::string &script);

} // namespace svaeq::smtsolve
