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

#include "zsmagic/groups.hpp"

#include <charconv>
#include <limits>

#include "zsmagic/errors.hpp"

namespace zsmagic {

GroupSpec::GroupSpec(std::vector<Residue> moduli) : moduli_(std::move(moduli)) {
  if (moduli_.empty()) throw PreconditionError("group needs at least one cyclic factor");
  for (Residue n : moduli_) {
    if (n < 2) throw PreconditionError("cyclic factor Z" + std::to_string(n) + " is trivial");
    if (order_ > std::numeric_limits<std::int64_t>::max() / n) {
      throw PreconditionError("group order does not fit in a machine word");
    }
    order_ *= n;
  }
}

GroupSpec GroupSpec::cyclic_power(Residue n, int k) {
  if (k <= 0) throw PreconditionError("group power must be positive");
  return GroupSpec(std::vector<Residue>(static_cast<std::size_t>(k), n));
}

namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc() || ptr != last) {
    throw ParseError("bad group syntax '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

GroupSpec GroupSpec::parse(std::string_view text) {
  std::vector<Residue> moduli;
  std::size_t pos = 0;
  while (true) {
    const std::size_t end = text.find('x', pos);
    const std::string_view term = text.substr(pos, end == std::string_view::npos ? end : end - pos);
    if (term.size() < 2 || term.front() != 'Z') {
      throw ParseError("bad group syntax '" + std::string(text) + "'");
    }
    const std::size_t caret = term.find('^');
    const Residue n = parse_int(term.substr(1, caret == std::string_view::npos ? caret : caret - 1), text);
    std::int64_t k = 1;
    if (caret != std::string_view::npos) k = parse_int(term.substr(caret + 1), text);
    if (n <= 1) throw ParseError("cyclic factor must have order at least 2 in '" + std::string(text) + "'");
    if (k <= 0) throw ParseError("power must be positive in '" + std::string(text) + "'");
    if (k > 64) throw ParseError("power too large in '" + std::string(text) + "'");
    moduli.insert(moduli.end(), static_cast<std::size_t>(k), n);
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  try {
    return GroupSpec(std::move(moduli));
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

bool GroupSpec::all_moduli_even() const {
  for (Residue n : moduli_) {
    if (n % 2 != 0) return false;
  }
  return true;
}

std::string GroupSpec::to_string() const {
  std::string out;
  std::size_t i = 0;
  while (i < moduli_.size()) {
    std::size_t j = i;
    while (j < moduli_.size() && moduli_[j] == moduli_[i]) ++j;
    if (!out.empty()) out += 'x';
    out += 'Z' + std::to_string(moduli_[i]);
    if (j - i > 1) out += '^' + std::to_string(j - i);
    i = j;
  }
  return out;
}

GroupElem GroupSpec::make(std::vector<Residue> residues) const {
  if (residues.size() != arity()) throw PreconditionError("element arity does not match group");
  for (std::size_t i = 0; i < residues.size(); ++i) residues[i] = mod(residues[i], moduli_[i]);
  return GroupElem{std::move(residues)};
}

bool GroupSpec::conforms(const GroupElem& a) const {
  if (a.arity() != arity()) return false;
  for (std::size_t i = 0; i < arity(); ++i) {
    if (a.residues[i] < 0 || a.residues[i] >= moduli_[i]) return false;
  }
  return true;
}

namespace {

void require_conforming(const GroupSpec& spec, const GroupElem& a) {
  if (a.arity() != spec.arity()) throw PreconditionError("element arity does not match group");
}

}  // namespace

GroupElem add(const GroupSpec& spec, const GroupElem& a, const GroupElem& b) {
  require_conforming(spec, a);
  require_conforming(spec, b);
  GroupElem out = a;
  for (std::size_t i = 0; i < spec.arity(); ++i) {
    out.residues[i] = mod(a.residues[i] + b.residues[i], spec.modulus(i));
  }
  return out;
}

GroupElem negate(const GroupSpec& spec, const GroupElem& a) {
  require_conforming(spec, a);
  GroupElem out = a;
  for (std::size_t i = 0; i < spec.arity(); ++i) out.residues[i] = mod(-a.residues[i], spec.modulus(i));
  return out;
}

GroupElem scalar_mul(const GroupSpec& spec, std::int64_t k, const GroupElem& a) {
  require_conforming(spec, a);
  GroupElem out = a;
  for (std::size_t i = 0; i < spec.arity(); ++i) {
    const Residue n = spec.modulus(i);
    out.residues[i] = mulmod(k, a.residues[i], n);
  }
  return out;
}

bool is_zero(const GroupElem& a) {
  for (Residue r : a.residues) {
    if (r != 0) return false;
  }
  return true;
}

std::vector<GroupElem> enumerate_nonzero(const GroupSpec& spec, std::int64_t cap) {
  if (spec.order() > cap) {
    throw PreconditionError("group order " + std::to_string(spec.order()) +
                            " exceeds the enumeration cap " + std::to_string(cap));
  }
  std::vector<GroupElem> out;
  out.reserve(static_cast<std::size_t>(spec.order() - 1));
  GroupElem cur = spec.zero();
  while (true) {
    // Odometer increment, last coordinate fastest.
    std::size_t i = spec.arity();
    while (i > 0) {
      --i;
      if (++cur.residues[i] < spec.modulus(i)) break;
      cur.residues[i] = 0;
      if (i == 0) return out;
    }
    out.push_back(cur);
  }
}

std::string to_string(const GroupElem& a) {
  if (a.arity() == 1) return std::to_string(a.residues[0]);
  std::string out = "(";
  for (std::size_t i = 0; i < a.arity(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(a.residues[i]);
  }
  return out + ")";
}

}  // namespace zsmagic
