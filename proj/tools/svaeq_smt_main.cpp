// SPDX-License-Identifier: Apache-2.0
//
// svaeq-smt: SMT-LIB 2 boolean-core solver speaking sat/unsat/model over
// standard streams. The default solver process for the smt backend; any
// conforming external solver can replace it via --solver / env.
#include <iostream>

#include "svaeq/smtsolve.hpp"

int main() {
  std::ios::sync_with_stdio(false);
  return svaeq::smtsolve::run(std::cin, std::cout);
}
