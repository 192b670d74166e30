#include "minionlab/intsolve.hpp"

#include <cstdlib>
#include <stdexcept>

namespace minionlab {

namespace {

// Row ops act on rhs as well; column ops are mirrored into V so a solution
// of the diagonal system maps back through x = V y.
struct Reduction {
  std::vector<std::vector<Int>> a;
  std::vector<Int> b;
  std::vector<std::vector<Int>> v;  // num_vars x num_vars
  unsigned m, n;

  void swap_rows(unsigned i, unsigned j) {
    std::swap(a[i], a[j]);
    std::swap(b[i], b[j]);
  }
  void swap_cols(unsigned i, unsigned j) {
    for (unsigned r = 0; r < m; ++r) std::swap(a[r][i], a[r][j]);
    for (unsigned r = 0; r < n; ++r) std::swap(v[r][i], v[r][j]);
  }
  void add_row(unsigned dst, unsigned src, const Int& f) {
    for (unsigned c = 0; c < n; ++c) a[dst][c] += f * a[src][c];
    b[dst] += f * b[src];
  }
  void add_col(unsigned dst, unsigned src, const Int& f) {
    for (unsigned r = 0; r < m; ++r) a[r][dst] += f * a[r][src];
    for (unsigned r = 0; r < n; ++r) v[r][dst] += f * v[r][src];
  }
};

}  // namespace

std::optional<std::vector<Int>> solve_integer_system(const IntSystem& sys) {
  unsigned m = static_cast<unsigned>(sys.rows.size());
  unsigned n = sys.num_vars;
  for (const auto& r : sys.rows)
    if (r.size() != n) throw std::invalid_argument("row size mismatch");
  if (sys.rhs.size() != m) throw std::invalid_argument("rhs size mismatch");

  Reduction red;
  red.a = sys.rows;
  red.b = sys.rhs;
  red.m = m;
  red.n = n;
  red.v.assign(n, std::vector<Int>(n, 0));
  for (unsigned i = 0; i < n; ++i) red.v[i][i] = 1;

  unsigned rank = 0;
  unsigned limit = std::min(m, n);
  for (unsigned t = 0; t < limit; ++t) {
    // locate the smallest nonzero entry in the trailing submatrix
    for (;;) {
      unsigned pi = m, pj = n;
      for (unsigned i = t; i < m; ++i)
        for (unsigned j = t; j < n; ++j) {
          if (red.a[i][j] == 0) continue;
          if (pi == m || cmp(abs(red.a[i][j]), abs(red.a[pi][pj])) < 0) {
            pi = i;
            pj = j;
          }
        }
      if (pi == m) goto done;  // trailing submatrix is zero
      red.swap_rows(t, pi);
      red.swap_cols(t, pj);

      // clear the pivot's row and column by Euclidean steps
      bool clean = true;
      for (unsigned i = t + 1; i < m; ++i) {
        if (red.a[i][t] == 0) continue;
        Int q = red.a[i][t] / red.a[t][t];  // truncated division is fine here
        red.add_row(i, t, -q);
        if (red.a[i][t] != 0) clean = false;
      }
      for (unsigned j = t + 1; j < n; ++j) {
        if (red.a[t][j] == 0) continue;
        Int q = red.a[t][j] / red.a[t][t];
        red.add_col(j, t, -q);
        if (red.a[t][j] != 0) clean = false;
      }
      if (clean) break;
      // remainders are strictly smaller than the pivot; pick again
    }
    ++rank;
  }
done:
  // consistency on zero rows
  for (unsigned i = rank; i < m; ++i)
    if (red.b[i] != 0) return std::nullopt;
  // divisibility on the diagonal
  std::vector<Int> y(n, 0);
  for (unsigned t = 0; t < rank; ++t) {
    if (red.b[t] % red.a[t][t] != 0) return std::nullopt;
    y[t] = red.b[t] / red.a[t][t];
  }
  std::vector<Int> x(n, 0);
  for (unsigned r = 0; r < n; ++r)
    for (unsigned c = 0; c < n; ++c) x[r] += red.v[r][c] * y[c];
  return x;
}

}  // namespace minionlab
