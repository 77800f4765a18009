// Copyright 2026 The zsmagic Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "zsmagic/modular_system.hpp"

#include <numeric>
#include <utility>

#include "zsmagic/errors.hpp"

namespace zsmagic {

Bezout extended_gcd(Residue a, Residue b) {
  Residue old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    const Residue q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
    old_t = std::exchange(t, old_t - q * t);
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

namespace {

class Diagonaliser {
 public:
  Diagonaliser(std::vector<std::vector<Residue>> m, int columns, Residue n)
      : m_(std::move(m)), rows_(static_cast<int>(m_.size())), cols_(columns), n_(n) {
    for (auto& row : m_) {
      if (static_cast<int>(row.size()) != cols_) throw PreconditionError("ragged matrix");
      for (Residue& x : row) x = mod(x, n_);
    }
    v_.assign(static_cast<std::size_t>(cols_), std::vector<Residue>(static_cast<std::size_t>(cols_), 0));
    for (int i = 0; i < cols_; ++i) v_[i][i] = 1;
  }

  KernelBasis run() {
    int p = 0;
    std::vector<Residue> diag;
    for (; p < rows_ && p < cols_; ++p) {
      if (!choose_pivot(p)) break;
      clear_cross(p);
      diag.push_back(m_[p][p]);
    }
    KernelBasis out;
    out.modulus = n_;
    for (int c = 0; c < cols_; ++c) {
      const Residue g = c < static_cast<int>(diag.size()) ? std::gcd(diag[c], n_) : n_;
      if (g == 1) continue;
      std::vector<Residue> w(static_cast<std::size_t>(cols_));
      for (int e = 0; e < cols_; ++e) w[e] = mulmod(n_ / g, v_[e][c], n_);
      out.generators.push_back(std::move(w));
      out.orders.push_back(g);
    }
    return out;
  }

 private:
  // Moves the entry generating the smallest ideal into (p, p).
  bool choose_pivot(int p) {
    int best_r = -1, best_c = -1;
    Residue best = 0;
    for (int r = p; r < rows_ && best != 1; ++r) {
      for (int c = p; c < cols_; ++c) {
        if (m_[r][c] == 0) continue;
        const Residue g = std::gcd(m_[r][c], n_);
        if (best_r == -1 || g < best) {
          best = g;
          best_r = r;
          best_c = c;
          if (g == 1) break;
        }
      }
    }
    if (best_r == -1) return false;
    std::swap(m_[p], m_[best_r]);
    swap_columns(p, best_c);
    return true;
  }

  void swap_columns(int a, int b) {
    if (a == b) return;
    for (auto& row : m_) std::swap(row[a], row[b]);
    for (auto& row : v_) std::swap(row[a], row[b]);
  }

  // [col_a, col_b] <- [x*col_a + y*col_b, z*col_a + w*col_b]
  void combine_columns(int a, int b, Residue x, Residue y, Residue z, Residue w) {
    auto apply = [&](std::vector<std::vector<Residue>>& mat) {
      for (auto& row : mat) {
        const Residue ra = row[a], rb = row[b];
        row[a] = mod(mulmod(x, ra, n_) + mulmod(y, rb, n_), n_);
        row[b] = mod(mulmod(z, ra, n_) + mulmod(w, rb, n_), n_);
      }
    };
    apply(m_);
    apply(v_);
  }

  void combine_rows(int a, int b, Residue x, Residue y, Residue z, Residue w) {
    auto& ra = m_[a];
    auto& rb = m_[b];
    for (int c = 0; c < cols_; ++c) {
      const Residue va = ra[c], vb = rb[c];
      ra[c] = mod(mulmod(x, va, n_) + mulmod(y, vb, n_), n_);
      rb[c] = mod(mulmod(z, va, n_) + mulmod(w, vb, n_), n_);
    }
  }

  // Zeroes row p and column p outside the pivot. Each Bezout step either
  // clears an entry outright or strictly lowers the pivot, so this ends.
  void clear_cross(int p) {
    while (true) {
      for (int c = p + 1; c < cols_; ++c) {
        const Residue b = m_[p][c];
        if (b == 0) continue;
        const Residue a = m_[p][p];
        const Bezout bz = b % a == 0 ? Bezout{a, 1, 0} : extended_gcd(a, b);
        combine_columns(p, c, bz.s, bz.t, -(b / bz.g), a / bz.g);
      }
      for (int r = p + 1; r < rows_; ++r) {
        const Residue b = m_[r][p];
        if (b == 0) continue;
        const Residue a = m_[p][p];
        const Bezout bz = b % a == 0 ? Bezout{a, 1, 0} : extended_gcd(a, b);
        combine_rows(p, r, bz.s, bz.t, -(b / bz.g), a / bz.g);
      }
      bool clean = true;
      for (int c = p + 1; c < cols_ && clean; ++c) clean = m_[p][c] == 0;
      if (clean) return;
    }
  }

  std::vector<std::vector<Residue>> m_;
  std::vector<std::vector<Residue>> v_;
  int rows_;
  int cols_;
  Residue n_;
};

}  // namespace

KernelBasis kernel_mod(std::vector<std::vector<Residue>> matrix, int columns, Residue n) {
  if (n < 2) throw PreconditionError("modulus must be at least 2");
  return Diagonaliser(std::move(matrix), columns, n).run();
}

std::vector<std::vector<Residue>> incidence_matrix(const Multigraph& g) {
  std::vector<std::vector<Residue>> m(static_cast<std::size_t>(g.order()),
                                      std::vector<Residue>(static_cast<std::size_t>(g.size()), 0));
  for (EdgeId e = 0; e < g.size(); ++e) {
    m[g.endpoints(e).u][e] += 1;
    m[g.endpoints(e).v][e] += 1;
  }
  return m;
}

KernelBasis zero_weight_kernel(const Multigraph& g, Residue n) {
  return kernel_mod(incidence_matrix(g), g.size(), n);
}

}  // namespace zsmagic
