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

#ifndef ZSMAGIC_GROUPS_HPP_
#define ZSMAGIC_GROUPS_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace zsmagic {

using Residue = std::int64_t;

/// Default bound on the group order for paths that enumerate elements.
inline constexpr std::int64_t kDefaultEnumerationCap = std::int64_t{1} << 20;

/// Element of a product of cyclic groups, one residue per factor.
struct GroupElem {
  std::vector<Residue> residues;

  std::size_t arity() const { return residues.size(); }
  friend bool operator==(const GroupElem&, const GroupElem&) = default;
  friend auto operator<=>(const GroupElem&, const GroupElem&) = default;
};

/// Finite abelian group given as Z_{n_1} x ... x Z_{n_m}, in the order the
/// caller wrote it. No normalisation to invariant factors is done.
class GroupSpec {
 public:
  // Throws PreconditionError for an empty list, a modulus below 2, or an
  // order that does not fit in 63 bits.
  explicit GroupSpec(std::vector<Residue> moduli);

  /// `Z<n>^k`
  static GroupSpec cyclic_power(Residue n, int k);

  /// Parses `Z4`, `Z2^3`, `Z2^3xZ4`, ...
  static GroupSpec parse(std::string_view text);

  const std::vector<Residue>& moduli() const { return moduli_; }
  std::size_t arity() const { return moduli_.size(); }
  Residue modulus(std::size_t i) const { return moduli_[i]; }
  std::int64_t order() const { return order_; }
  bool all_moduli_even() const;

  /// Canonical text form that `parse` accepts; runs of equal moduli are
  /// written with a power.
  std::string to_string() const;

  GroupElem zero() const { return GroupElem{std::vector<Residue>(arity(), 0)}; }

  /// Reduces every coordinate into [0, n_i). Throws on arity mismatch.
  GroupElem make(std::vector<Residue> residues) const;

  bool conforms(const GroupElem& a) const;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;

 private:
  std::vector<Residue> moduli_;
  std::int64_t order_ = 1;
};

GroupElem add(const GroupSpec& spec, const GroupElem& a, const GroupElem& b);
GroupElem negate(const GroupSpec& spec, const GroupElem& a);
GroupElem scalar_mul(const GroupSpec& spec, std::int64_t k, const GroupElem& a);
bool is_zero(const GroupElem& a);

/// All |A|-1 nonzero elements in lexicographic order of residues.
/// Throws PreconditionError when the order exceeds `cap`.
std::vector<GroupElem> enumerate_nonzero(const GroupSpec& spec,
                                         std::int64_t cap = kDefaultEnumerationCap);

/// `(r1,r2,...)`, or just `r1` for a one-factor group.
std::string to_string(const GroupElem& a);

/// Mathematical residue in [0, n).
inline Residue mod(Residue a, Residue n) {
  const Residue r = a % n;
  return r < 0 ? r + n : r;
}

/// (a * b) mod n without intermediate overflow.
inline Residue mulmod(Residue a, Residue b, Residue n) {
  __extension__ using Wide = __int128;
  return static_cast<Residue>(mod(static_cast<Residue>((static_cast<Wide>(mod(a, n)) * mod(b, n)) % n), n));
}

}  // namespace zsmagic

#endif  // ZSMAGIC_GROUPS_HPP_
