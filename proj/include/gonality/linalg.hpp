#pragma once

#include "gonality/rational.hpp"

#include <optional>
#include <vector>

namespace gonality {

using Vector = std::vector<Rational>;
using Matrix = std::vector<Vector>;  // row-major

int matrix_rank(Matrix m);

// General solution of A x = b: a particular solution and a nullspace basis.
struct AffineSolution {
  Vector particular;
  std::vector<Vector> kernel;
};
std::optional<AffineSolution> solve_linear(const Matrix& a, const Vector& b, int cols);

// a . x > b (strict) or a . x >= b.
struct Inequality {
  Vector a;
  Rational b;
  bool strict = true;
};

// Fourier-Motzkin feasibility over the rationals; fills a witness when found.
std::optional<Vector> feasible_point(const std::vector<Inequality>& system, int n);

// A solution of A x = b with every coordinate strictly positive, if any.
std::optional<Vector> positive_solution(const Matrix& a, const Vector& b, int cols);

}  // namespace gonality
