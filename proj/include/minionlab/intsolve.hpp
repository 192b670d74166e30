#pragma once

#include <optional>
#include <vector>

#include "minionlab/rational.hpp"

namespace minionlab {

/// Integer linear system rows * x = rhs with x ranging over all integers
/// (negative entries allowed).
struct IntSystem {
  std::vector<std::vector<Int>> rows;
  std::vector<Int> rhs;
  unsigned num_vars = 0;
};

/// Decides solvability over the integers by diagonalizing the matrix with
/// unimodular row/column operations (Smith-style reduction); returns a
/// particular solution when one exists.
std::optional<std::vector<Int>> solve_integer_system(const IntSystem& sys);

}  // namespace minionlab
