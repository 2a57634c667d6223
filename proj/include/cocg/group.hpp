// Copyright 2026 The cocg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace cocg {

enum class Family { Q4N, D2M, QD2N, M2MN, PSL2 };

std::string_view family_name(Family family) noexcept;
std::optional<Family> parse_family(std::string_view text) noexcept;

/// Family tag plus its parameters. Only the parameters relevant to the family
/// are meaningful; the others stay zero. Use the named constructors, which
/// enforce the parameter bounds.
class GroupSpec {
 public:
  static GroupSpec q4n(int n);        // n >= 2
  static GroupSpec d2m(int m);        // m >= 3
  static GroupSpec qd2n(int n);       // n >= 4
  static GroupSpec m2mn(int m, int n);  // m > 2, n >= 1
  static GroupSpec psl2(int k);       // k >= 1 for construction

  /// Dispatches to the named constructor for `family`.
  static GroupSpec make(Family family, int m, int n, int k);

  Family family() const noexcept { return family_; }
  int m() const noexcept { return m_; }
  int n() const noexcept { return n_; }
  int k() const noexcept { return k_; }

  std::uint64_t expected_order() const;
  /// e.g. "q4n(n=3)", "m2mn(m=6,n=2)".
  std::string label() const;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;

 private:
  GroupSpec(Family family, int m, int n, int k) : family_(family), m_(m), n_(n), k_(k) {}

  Family family_;
  int m_;
  int n_;
  int k_;
};

/// Sorted, duplicate-free element indices.
class ElementSet {
 public:
  ElementSet() = default;
  /// Sorts and deduplicates.
  explicit ElementSet(std::vector<std::size_t> members);

  std::size_t size() const noexcept { return members_.size(); }
  bool contains(std::size_t element) const noexcept;
  std::span<const std::size_t> members() const noexcept { return members_; }
  bool is_subset_of(const ElementSet& other) const noexcept;

  friend bool operator==(const ElementSet&, const ElementSet&) = default;
  friend auto operator<=>(const ElementSet&, const ElementSet&) = default;

 private:
  std::vector<std::size_t> members_;
};

namespace detail {

// Product of packed element codes for one family.
class ElementArithmetic {
 public:
  virtual ~ElementArithmetic() = default;
  virtual std::uint64_t product(std::uint64_t a, std::uint64_t b) const = 0;
  virtual std::string label(std::uint64_t code) const = 0;
};

}  // namespace detail

/// A finite group given by its element codes and a multiplication oracle.
///
/// Presentation families use the normal form a^i b^j; PSL(2,2^k) uses the
/// determinant-one matrices themselves. Groups up to kCayleyTableLimit
/// elements carry a materialized Cayley table, larger ones multiply on demand.
class FiniteGroup {
 public:
  static constexpr std::size_t kCayleyTableLimit = 2000;

  FiniteGroup(GroupSpec spec, std::shared_ptr<const detail::ElementArithmetic> arithmetic,
              std::vector<std::uint64_t> codes, std::uint64_t identity_code);

  const GroupSpec& spec() const noexcept { return spec_; }
  std::size_t order() const noexcept { return codes_.size(); }
  std::size_t identity() const noexcept { return identity_; }
  bool has_cayley_table() const noexcept { return !table_.empty(); }

  std::size_t multiply(std::size_t a, std::size_t b) const;
  bool commute(std::size_t a, std::size_t b) const;
  std::size_t inverse(std::size_t a) const;
  std::size_t power(std::size_t a, std::uint64_t e) const;
  std::size_t element_order(std::size_t a) const;

  /// Index of a packed element code; nullopt if the code is not an element.
  std::optional<std::size_t> index_of(std::uint64_t code) const;
  std::uint64_t code(std::size_t a) const { return codes_.at(a); }
  std::string label(std::size_t a) const;

 private:
  GroupSpec spec_;
  std::shared_ptr<const detail::ElementArithmetic> arithmetic_;
  std::vector<std::uint64_t> codes_;
  std::unordered_map<std::uint64_t, std::uint32_t> index_;
  std::vector<std::uint32_t> table_;
  std::size_t identity_ = 0;
};

/// The distinct proper centralizers C_G(g), g non-central.
///
/// Entries are grouped by descending cardinality; within a cardinality class
/// they keep the order of their smallest witness element.
struct CentralizerFamily {
  std::vector<ElementSet> centralizers;
  std::vector<std::size_t> cardinalities;
  std::vector<std::size_t> representatives;

  std::size_t size() const noexcept { return centralizers.size(); }
};

/// Package-level builders for the presentation families. Exposed for tests
/// that check the defining relations on packed codes.
struct CyclicExtensionParams {
  // Elements a^i b^j with 0 <= i < a_order, 0 <= j < b_exponent;
  // b^b_exponent = a^b_power and b a b^-1 = a^twist.
  std::uint64_t a_order;
  std::uint64_t b_exponent;
  std::uint64_t b_power;
  std::int64_t twist;
  char a_name;
  char b_name;
};

CyclicExtensionParams presentation_of(const GroupSpec& spec);

/// Throws InvalidParameter for out-of-range parameters.
FiniteGroup build_group(const GroupSpec& spec);

ElementSet center(const FiniteGroup& group);
ElementSet centralizer(const FiniteGroup& group, std::size_t element);

/// Throws NoProperCentralizers for abelian groups.
CentralizerFamily proper_centralizer_family(const FiniteGroup& group);

}  // namespace cocg
