#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

// Small dense tableau simplex used only as an independent oracle for the
// decomposition LP. Maximizes c.x subject to A x <= b, x >= 0, with b >= 0 so
// the slack basis is feasible. Bland's rule keeps the degenerate rows from
// cycling.
namespace testsupport {

inline double simplex_max(const std::vector<std::vector<double>>& A,
                          const std::vector<double>& b, const std::vector<double>& c) {
  const std::size_t m = A.size(), n = c.size();
  std::vector<std::vector<double>> T(m + 1, std::vector<double>(n + m + 1, 0.0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) T[i][j] = A[i][j];
    T[i][n + i] = 1.0;
    T[i].back() = b[i];
  }
  for (std::size_t j = 0; j < n; ++j) T[m][j] = -c[j];
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

  for (int iter = 0; iter < 50000; ++iter) {
    std::size_t enter = n + m;
    for (std::size_t j = 0; j < n + m; ++j)
      if (T[m][j] < -1e-11) {
        enter = j;
        break;
      }
    if (enter == n + m) return T[m].back();

    std::size_t leave = m;
    double best = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      if (T[i][enter] > 1e-11) {
        double ratio = T[i].back() / T[i][enter];
        if (leave == m || ratio < best - 1e-14 ||
            (std::abs(ratio - best) <= 1e-14 && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
    }
    if (leave == m) throw std::runtime_error("simplex oracle: unbounded");

    double piv = T[leave][enter];
    for (auto& v : T[leave]) v /= piv;
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == leave) continue;
      double factor = T[i][enter];
      if (factor == 0.0) continue;
      for (std::size_t j = 0; j < T[i].size(); ++j) T[i][j] -= factor * T[leave][j];
    }
    basis[leave] = enter;
  }
  throw std::runtime_error("simplex oracle: iteration cap");
}

/// Optimal value of the decomposition LP
///   min sum cost_i (ub_i - m_i) + t z,  0 <= m <= ub,
///   prefix(m)_j <= z pos_j   (or m_i <= z len_i when cellwise)
/// computed as total_cost - max(sum cost_i m_i - t z).
inline double decomposition_lp_value(const std::vector<double>& len,
                                     const std::vector<double>& ub,
                                     const std::vector<double>& cost,
                                     const std::vector<double>& pos, bool cellwise, double t) {
  const std::size_t n = ub.size();
  std::vector<std::vector<double>> A;
  std::vector<double> b;
  for (std::size_t j = 0; j < n; ++j) {  // coupling rows, rhs 0
    std::vector<double> row(n + 1, 0.0);
    if (cellwise) {
      row[j] = 1.0;
      row[n] = -len[j];
    } else {
      for (std::size_t i = 0; i <= j; ++i) row[i] = 1.0;
      row[n] = -pos[j];
    }
    A.push_back(std::move(row));
    b.push_back(0.0);
  }
  for (std::size_t i = 0; i < n; ++i) {  // box rows
    std::vector<double> row(n + 1, 0.0);
    row[i] = 1.0;
    A.push_back(std::move(row));
    b.push_back(ub[i]);
  }
  std::vector<double> c(n + 1, 0.0);
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    c[i] = cost[i];
    total += cost[i] * ub[i];
  }
  c[n] = -t;
  return total - simplex_max(A, b, c);
}

}  // namespace testsupport
