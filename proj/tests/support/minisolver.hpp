#pragma once

// Small conflict-driven CNF solver, used only in tests as an independent
// check of the DIMACS exports. It never touches the library's search code.

#include <iosfwd>
#include <vector>

namespace minisolver {

struct Cnf {
    int vars = 0;
    std::vector<std::vector<int>> clauses;  // DIMACS literals, no zeros
};

Cnf parse_dimacs(std::istream& in);

enum class Result { Sat, Unsat };

struct Solution {
    Result result = Result::Unsat;
    std::vector<bool> model;  // 1-based in spirit: model[v-1] for variable v
};

Solution solve(const Cnf& cnf);

}  // namespace minisolver
