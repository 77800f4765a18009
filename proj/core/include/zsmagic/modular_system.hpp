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


#ifndef ZSMAGIC_MODULAR_SYSTEM_HPP_
#define ZSMAGIC_MODULAR_SYSTEM_HPP_

#include <vector>

#include "zsmagic/groups.hpp"
#include "zsmagic/multigraph.hpp"

namespace zsmagic {

/// Solution set of a homogeneous linear system A x = 0 over Z_n, written as
/// x = sum_k t_k * generators[k] with t_k in [0, orders[k]). Every solution
/// has exactly one such representation.
struct KernelBasis {
  Residue modulus = 2;
  std::vector<std::vector<Residue>> generators;  // each of length `columns`
  std::vector<Residue> orders;
};

/// Kernel of `matrix` (rows of length `columns`) over Z_n. The matrix is
/// diagonalised with unimodular row and column operations, unit pivots
/// first; only the column transform is kept.
KernelBasis kernel_mod(std::vector<std::vector<Residue>> matrix, int columns, Residue n);

/// Vertex-by-edge incidence matrix: entry 1 where the vertex is an endpoint.
std::vector<std::vector<Residue>> incidence_matrix(const Multigraph& g);

/// Edge labelings over Z_n with every vertex weight zero (zero labels allowed).
KernelBasis zero_weight_kernel(const Multigraph& g, Residue n);

/// Greatest common divisor and Bezout coefficients: s*a + t*b = gcd(a, b) >= 0.
struct Bezout {
  Residue g = 0;
  Residue s = 0;
  Residue t = 0;
};
Bezout extended_gcd(Residue a, Residue b);

}  // namespace zsmagic

#endif  // ZSMAGIC_MODULAR_SYSTEM_HPP_
