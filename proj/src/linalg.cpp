#include "gonality/linalg.hpp"

#include <algorithm>
#include <set>

namespace gonality {

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<int> rref(Matrix& m, int cols) {
  std::vector<int> pivots;
  int row = 0;
  for (int c = 0; c < cols && row < static_cast<int>(m.size()); ++c) {
    int p = -1;
    for (int r = row; r < static_cast<int>(m.size()); ++r)
      if (m[r][c] != 0) {
        p = r;
        break;
      }
    if (p < 0) continue;
    std::swap(m[row], m[p]);
    Rational inv = 1 / m[row][c];
    for (auto& x : m[row]) x *= inv;
    for (int r = 0; r < static_cast<int>(m.size()); ++r) {
      if (r == row || m[r][c] == 0) continue;
      Rational f = m[r][c];
      for (std::size_t k = 0; k < m[r].size(); ++k) m[r][k] -= f * m[row][k];
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

void normalize(Inequality& q) {
  Rational scale = 0;
  for (const auto& x : q.a)
    if (x != 0) {
      scale = abs(x);
      break;
    }
  if (scale == 0) return;
  for (auto& x : q.a) x /= scale;
  q.b /= scale;
}

struct Key {
  Vector a;
  Rational b;
  bool strict;
  bool operator<(const Key& o) const {
    if (a != o.a) return a < o.a;
    if (b != o.b) return b < o.b;
    return strict < o.strict;
  }
};

std::vector<Inequality> dedupe(std::vector<Inequality> sys) {
  std::set<Key> seen;
  std::vector<Inequality> out;
  for (auto& q : sys) {
    normalize(q);
    if (seen.insert({q.a, q.b, q.strict}).second) out.push_back(std::move(q));
  }
  return out;
}

}  // namespace

int matrix_rank(Matrix m) {
  if (m.empty()) return 0;
  return static_cast<int>(rref(m, static_cast<int>(m.front().size())).size());
}

std::optional<AffineSolution> solve_linear(const Matrix& a, const Vector& b, int cols) {
  Matrix aug = a;
  for (std::size_t r = 0; r < aug.size(); ++r) aug[r].push_back(b[r]);
  auto piv = rref(aug, cols + 1);
  if (!piv.empty() && piv.back() == cols) return std::nullopt;
  AffineSolution s;
  s.particular.assign(cols, 0);
  for (std::size_t r = 0; r < piv.size(); ++r) s.particular[piv[r]] = aug[r][cols];
  std::vector<char> is_piv(cols, 0);
  for (int c : piv) is_piv[c] = 1;
  for (int f = 0; f < cols; ++f) {
    if (is_piv[f]) continue;
    Vector v(cols, 0);
    v[f] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -aug[r][f];
    s.kernel.push_back(std::move(v));
  }
  return s;
}

std::optional<Vector> feasible_point(const std::vector<Inequality>& system, int n) {
  // levels[k] holds the system over variables 0..n-k-1 (later ones eliminated).
  std::vector<std::vector<Inequality>> levels;
  levels.push_back(dedupe(system));
  for (int var = n - 1; var >= 0; --var) {
    const auto& cur = levels.back();
    std::vector<Inequality> lower, upper, next;
    for (const auto& q : cur) {
      if (q.a[var] > 0)
        lower.push_back(q);
      else if (q.a[var] < 0)
        upper.push_back(q);
      else
        next.push_back(q);
    }
    for (const auto& lo : lower)
      for (const auto& up : upper) {
        // lo: c x_var + r >= .., up: -c' x_var + r' >= ..; combine to cancel x_var.
        Rational f = lo.a[var], g = -up.a[var];
        Inequality c;
        c.a.resize(n);
        for (int k = 0; k < n; ++k) c.a[k] = g * lo.a[k] + f * up.a[k];
        c.a[var] = 0;
        c.b = g * lo.b + f * up.b;
        c.strict = lo.strict || up.strict;
        next.push_back(std::move(c));
      }
    levels.push_back(dedupe(std::move(next)));
  }
  for (const auto& q : levels.back())
    if (q.strict ? !(0 > q.b) : !(0 >= q.b)) return std::nullopt;
  // Back substitution, variables 0..n-1 in order.
  Vector x(n, 0);
  for (int var = 0; var < n; ++var) {
    const auto& sys = levels[n - 1 - var];
    bool has_lo = false, has_up = false, lo_strict = false, up_strict = false;
    Rational lo, up;
    for (const auto& q : sys) {
      if (q.a[var] == 0) continue;
      Rational rest = q.b;
      for (int k = 0; k < var; ++k) rest -= q.a[k] * x[k];
      Rational bound = rest / q.a[var];
      if (q.a[var] > 0) {
        if (!has_lo || bound > lo || (bound == lo && q.strict)) {
          lo_strict = (has_lo && bound == lo) ? (lo_strict || q.strict) : q.strict;
          lo = bound;
        }
        has_lo = true;
      } else {
        if (!has_up || bound < up || (bound == up && q.strict)) {
          up_strict = (has_up && bound == up) ? (up_strict || q.strict) : q.strict;
          up = bound;
        }
        has_up = true;
      }
    }
    if (has_lo && has_up)
      x[var] = lo == up ? lo : (lo + up) / 2;
    else if (has_lo)
      x[var] = lo + 1;
    else if (has_up)
      x[var] = up - 1;
    (void)lo_strict;
    (void)up_strict;
  }
  for (const auto& q : system) {
    Rational s = 0;
    for (int k = 0; k < n; ++k) s += q.a[k] * x[k];
    if (q.strict ? !(s > q.b) : !(s >= q.b)) return std::nullopt;
  }
  return x;
}

std::optional<Vector> positive_solution(const Matrix& a, const Vector& b, int cols) {
  auto sol = solve_linear(a, b, cols);
  if (!sol) return std::nullopt;
  int k = static_cast<int>(sol->kernel.size());
  std::vector<Inequality> sys;
  for (int c = 0; c < cols; ++c) {
    Inequality q;
    q.a.resize(k);
    for (int j = 0; j < k; ++j) q.a[j] = sol->kernel[j][c];
    q.b = -sol->particular[c];
    q.strict = true;
    sys.push_back(std::move(q));
  }
  auto t = feasible_point(sys, k);
  if (!t) return std::nullopt;
  Vector x = sol->particular;
  for (int j = 0; j < k; ++j)
    for (int c = 0; c < cols; ++c) x[c] += (*t)[j] * sol->kernel[j][c];
  return x;
}

}  // namespace gonality
