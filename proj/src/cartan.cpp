#include "gentle/cartan.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>

namespace gentle {

CartanMatrix cartan_matrix(BoundQuiver const& q) {
  if (!is_finite_dimensional(q)) {
    throw std::domain_error(
        "Cartan matrix requires a finite-dimensional bound quiver");
  }
  std::size_t const n = q.vertex_count();
  // from_arrow[a][y]: nonzero paths starting with a and ending at y.
  std::vector<std::optional<std::vector<long>>> from_arrow(q.arrow_count());
  auto count = [&](auto& self, ArrowId a) -> std::vector<long> const& {
    if (!from_arrow[a]) {
      std::vector<long> row(n, 0);
      row[q.target(a)] += 1;
      for (ArrowId b : q.free_successors(a)) {
        auto const& tail = self(self, b);
        for (std::size_t y = 0; y < n; ++y) {
          row[y] += tail[y];
        }
      }
      from_arrow[a] = std::move(row);
    }
    return *from_arrow[a];
  };

  CartanMatrix c;
  c.order = q.vertex_names();
  c.entries.assign(n, std::vector<long>(n, 0));
  for (VertexId x = 0; x < n; ++x) {
    c.entries[x][x] = 1;
    for (ArrowId a : q.out_arrows(x)) {
      auto const& row = count(count, a);
      for (std::size_t y = 0; y < n; ++y) {
        c.entries[x][y] += row[y];
      }
    }
  }
  return c;
}

IntMatrix to_int_matrix(std::vector<std::vector<long>> const& m) {
  IntMatrix result;
  for (auto const& row : m) {
    result.emplace_back(row.begin(), row.end());
  }
  return result;
}

SmithForm smith_normal_form(IntMatrix m) {
  std::size_t const rows = m.size();
  std::size_t const cols = rows == 0 ? 0 : m[0].size();
  for (auto const& row : m) {
    if (row.size() != cols) {
      throw std::invalid_argument("ragged matrix");
    }
  }
  std::size_t const diag = std::min(rows, cols);

  for (std::size_t k = 0; k < diag; ++k) {
    while (true) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::optional<std::pair<std::size_t, std::size_t>> pivot;
      for (std::size_t i = k; i < rows; ++i) {
        for (std::size_t j = k; j < cols; ++j) {
          if (m[i][j] != 0
              && (!pivot || abs(m[i][j]) < abs(m[pivot->first][pivot->second]))) {
            pivot = {i, j};
          }
        }
      }
      if (!pivot) {
        break;
      }
      std::swap(m[k], m[pivot->first]);
      for (auto& row : m) {
        std::swap(row[k], row[pivot->second]);
      }
      bool clean = true;
      for (std::size_t i = k + 1; i < rows; ++i) {
        BigInt q = m[i][k] / m[k][k];
        if (q != 0) {
          for (std::size_t j = k; j < cols; ++j) {
            m[i][j] -= q * m[k][j];
          }
        }
        clean = clean && m[i][k] == 0;
      }
      for (std::size_t j = k + 1; j < cols; ++j) {
        BigInt q = m[k][j] / m[k][k];
        if (q != 0) {
          for (std::size_t i = k; i < rows; ++i) {
            m[i][j] -= q * m[i][k];
          }
        }
        clean = clean && m[k][j] == 0;
      }
      if (!clean) {
        continue;
      }
      // Divisibility: fold an offending row into row k and go again.
      std::optional<std::size_t> offender;
      for (std::size_t i = k + 1; i < rows && !offender; ++i) {
        for (std::size_t j = k + 1; j < cols; ++j) {
          if (m[i][j] % m[k][k] != 0) {
            offender = i;
            break;
          }
        }
      }
      if (!offender) {
        break;
      }
      for (std::size_t j = k; j < cols; ++j) {
        m[k][j] += m[*offender][j];
      }
    }
  }

  SmithForm result;
  result.det_abs = rows == cols ? BigInt(1) : BigInt(0);
  for (std::size_t k = 0; k < diag; ++k) {
    result.divisors.push_back(abs(m[k][k]));
    result.det_abs *= result.divisors.back();
  }
  return result;
}

BigInt determinant(IntMatrix m) {
  std::size_t const n = m.size();
  for (auto const& row : m) {
    if (row.size() != n) {
      throw std::invalid_argument("determinant of a non-square matrix");
    }
  }
  if (n == 0) {
    return 1;
  }
  int    sign = 1;
  BigInt previous = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t i = k + 1;
      while (i < n && m[i][k] == 0) {
        ++i;
      }
      if (i == n) {
        return 0;
      }
      std::swap(m[k], m[i]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / previous;
      }
    }
    previous = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

std::size_t rank(IntMatrix m) {
  std::size_t const rows = m.size();
  std::size_t const cols = rows == 0 ? 0 : m[0].size();
  std::size_t       r    = 0;
  BigInt            previous = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) {
      ++p;
    }
    if (p == rows) {
      continue;
    }
    std::swap(m[r], m[p]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        m[i][j] = (m[i][j] * m[r][c] - m[i][c] * m[r][j]) / previous;
      }
      m[i][c] = 0;
    }
    previous = m[r][c];
    ++r;
  }
  return r;
}

}  // namespace gentle
