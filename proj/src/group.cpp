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

#include "cocg/group.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "cocg/errors.hpp"
#include "cocg/gf2k.hpp"

namespace cocg {

std::string_view family_name(Family family) noexcept {
  switch (family) {
    case Family::Q4N: return "q4n";
    case Family::D2M: return "d2m";
    case Family::QD2N: return "qd2n";
    case Family::M2MN: return "m2mn";
    case Family::PSL2: return "psl2";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view text) noexcept {
  for (const auto family : {Family::Q4N, Family::D2M, Family::QD2N, Family::M2MN, Family::PSL2}) {
    if (family_name(family) == text) return family;
  }
  return std::nullopt;
}

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw InvalidParameter(message);
}

}  // namespace

GroupSpec GroupSpec::q4n(int n) {
  require(n >= 2, "q4n requires n >= 2, got n=" + std::to_string(n));
  require(n <= (1 << 24), "q4n parameter too large");
  return GroupSpec(Family::Q4N, 0, n, 0);
}

GroupSpec GroupSpec::d2m(int m) {
  require(m >= 3, "d2m requires m >= 3, got m=" + std::to_string(m));
  require(m <= (1 << 24), "d2m parameter too large");
  return GroupSpec(Family::D2M, m, 0, 0);
}

GroupSpec GroupSpec::qd2n(int n) {
  require(n >= 4, "qd2n requires n >= 4, got n=" + std::to_string(n));
  require(n <= 30, "qd2n requires n <= 30");
  return GroupSpec(Family::QD2N, 0, n, 0);
}

GroupSpec GroupSpec::m2mn(int m, int n) {
  require(m > 2, "m2mn requires m > 2, got m=" + std::to_string(m));
  require(n >= 1, "m2mn requires n >= 1, got n=" + std::to_string(n));
  require(m <= (1 << 20) && n <= (1 << 20), "m2mn parameters too large");
  return GroupSpec(Family::M2MN, m, n, 0);
}

GroupSpec GroupSpec::psl2(int k) {
  require(k >= 1 && k <= 6, "psl2 requires 1 <= k <= 6, got k=" + std::to_string(k));
  return GroupSpec(Family::PSL2, 0, 0, k);
}

GroupSpec GroupSpec::make(Family family, int m, int n, int k) {
  switch (family) {
    case Family::Q4N: return q4n(n);
    case Family::D2M: return d2m(m);
    case Family::QD2N: return qd2n(n);
    case Family::M2MN: return m2mn(m, n);
    case Family::PSL2: return psl2(k);
  }
  throw InvalidParameter("unknown family");
}

std::uint64_t GroupSpec::expected_order() const {
  switch (family_) {
    case Family::Q4N: return 4ull * n_;
    case Family::D2M: return 2ull * m_;
    case Family::QD2N: return 1ull << n_;
    case Family::M2MN: return 2ull * m_ * n_;
    case Family::PSL2: {
      const std::uint64_t q = 1ull << k_;
      return q * (q * q - 1);
    }
  }
  return 0;
}

std::string GroupSpec::label() const {
  std::ostringstream out;
  out << family_name(family_) << '(';
  switch (family_) {
    case Family::Q4N:
    case Family::QD2N: out << "n=" << n_; break;
    case Family::D2M: out << "m=" << m_; break;
    case Family::M2MN: out << "m=" << m_ << ",n=" << n_; break;
    case Family::PSL2: out << "k=" << k_; break;
  }
  out << ')';
  return out.str();
}

ElementSet::ElementSet(std::vector<std::size_t> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool ElementSet::contains(std::size_t element) const noexcept {
  return std::binary_search(members_.begin(), members_.end(), element);
}

bool ElementSet::is_subset_of(const ElementSet& other) const noexcept {
  return std::includes(other.members_.begin(), other.members_.end(), members_.begin(), members_.end());
}

namespace {

constexpr std::uint64_t pack_normal_form(std::uint64_t i, std::uint64_t j) { return (i << 32) | j; }

// a^i b^j with b a = a^twist b and b^B = a^s.
class CyclicExtension final : public detail::ElementArithmetic {
 public:
  explicit CyclicExtension(const CyclicExtensionParams& params) : params_(params) {
    const auto a = static_cast<std::int64_t>(params.a_order);
    const std::uint64_t twist = static_cast<std::uint64_t>(((params.twist % a) + a) % a);
    twist_powers_.resize(params.b_exponent);
    std::uint64_t value = 1 % params.a_order;
    for (auto& entry : twist_powers_) {
      entry = value;
      value = (value * twist) % params.a_order;
    }
  }

  std::uint64_t product(std::uint64_t x, std::uint64_t y) const override {
    const std::uint64_t A = params_.a_order;
    const std::uint64_t i = x >> 32, j = x & 0xffffffffu;
    const std::uint64_t k = y >> 32, l = y & 0xffffffffu;
    std::uint64_t a_exp = (i + (k * twist_powers_[j]) % A) % A;
    std::uint64_t b_exp = j + l;
    if (b_exp >= params_.b_exponent) {
      b_exp -= params_.b_exponent;
      a_exp = (a_exp + (params_.b_power * twist_powers_[b_exp]) % A) % A;
    }
    return pack_normal_form(a_exp, b_exp);
  }

  std::string label(std::uint64_t code) const override {
    const std::uint64_t i = code >> 32, j = code & 0xffffffffu;
    if (i == 0 && j == 0) return "1";
    std::string out;
    auto append = [&out](char name, std::uint64_t e) {
      if (e == 0) return;
      if (!out.empty()) out += ' ';
      out += name;
      if (e > 1) out += '^' + std::to_string(e);
    };
    append(params_.a_name, i);
    append(params_.b_name, j);
    return out;
  }

  std::vector<std::uint64_t> elements() const {
    std::vector<std::uint64_t> codes;
    codes.reserve(params_.a_order * params_.b_exponent);
    for (std::uint64_t i = 0; i < params_.a_order; ++i) {
      for (std::uint64_t j = 0; j < params_.b_exponent; ++j) codes.push_back(pack_normal_form(i, j));
    }
    return codes;
  }

 private:
  CyclicExtensionParams params_;
  std::vector<std::uint64_t> twist_powers_;
};

// 2x2 matrices over GF(2^k), one 16-bit field element per entry.
class SpecialLinear2 final : public detail::ElementArithmetic {
 public:
  explicit SpecialLinear2(int k) : field_(k) {}

  static std::uint64_t pack(std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t d) {
    return a | (b << 16) | (c << 32) | (d << 48);
  }
  static std::uint32_t entry(std::uint64_t code, int slot) {
    return static_cast<std::uint32_t>((code >> (16 * slot)) & 0xffffu);
  }

  std::uint64_t product(std::uint64_t x, std::uint64_t y) const override {
    const auto a = entry(x, 0), b = entry(x, 1), c = entry(x, 2), d = entry(x, 3);
    const auto e = entry(y, 0), f = entry(y, 1), g = entry(y, 2), h = entry(y, 3);
    const auto& F = field_;
    return pack(F.mul(a, e) ^ F.mul(b, g), F.mul(a, f) ^ F.mul(b, h), F.mul(c, e) ^ F.mul(d, g),
                F.mul(c, f) ^ F.mul(d, h));
  }

  std::string label(std::uint64_t code) const override {
    std::ostringstream out;
    out << "[[" << entry(code, 0) << ',' << entry(code, 1) << "],[" << entry(code, 2) << ','
        << entry(code, 3) << "]]";
    return out.str();
  }

  // Lexicographic in (a, b, c, d). In characteristic 2 the determinant is ad + bc.
  std::vector<std::uint64_t> elements() const {
    std::vector<std::uint64_t> codes;
    const std::uint32_t q = field_.size();
    for (std::uint32_t a = 0; a < q; ++a)
      for (std::uint32_t b = 0; b < q; ++b)
        for (std::uint32_t c = 0; c < q; ++c)
          for (std::uint32_t d = 0; d < q; ++d)
            if ((field_.mul(a, d) ^ field_.mul(b, c)) == 1) codes.push_back(pack(a, b, c, d));
    return codes;
  }

  static std::uint64_t identity() { return pack(1, 0, 0, 1); }

 private:
  FieldGF2k field_;
};

}  // namespace

CyclicExtensionParams presentation_of(const GroupSpec& spec) {
  switch (spec.family()) {
    case Family::Q4N: {
      const auto n = static_cast<std::uint64_t>(spec.n());
      return {2 * n, 2, n, -1, 'x', 'y'};
    }
    case Family::D2M: return {static_cast<std::uint64_t>(spec.m()), 2, 0, -1, 'a', 'b'};
    case Family::QD2N: {
      const std::uint64_t half = 1ull << (spec.n() - 2);
      return {2 * half, 2, 0, static_cast<std::int64_t>(half) - 1, 'a', 'b'};
    }
    case Family::M2MN:
      return {static_cast<std::uint64_t>(spec.m()), 2ull * static_cast<std::uint64_t>(spec.n()), 0, -1, 'a', 'b'};
    case Family::PSL2: break;
  }
  throw InvalidParameter(spec.label() + " is not given by a cyclic-extension presentation");
}

FiniteGroup::FiniteGroup(GroupSpec spec, std::shared_ptr<const detail::ElementArithmetic> arithmetic,
                         std::vector<std::uint64_t> codes, std::uint64_t identity_code)
    : spec_(spec), arithmetic_(std::move(arithmetic)), codes_(std::move(codes)) {
  index_.reserve(codes_.size());
  for (std::size_t i = 0; i < codes_.size(); ++i) index_.emplace(codes_[i], static_cast<std::uint32_t>(i));
  const auto found = index_of(identity_code);
  if (!found) throw std::logic_error("identity is not an element of " + spec_.label());
  identity_ = *found;

  if (codes_.size() <= kCayleyTableLimit) {
    const std::size_t n = codes_.size();
    std::vector<std::uint32_t> table(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        const auto product = index_of(arithmetic_->product(codes_[a], codes_[b]));
        if (!product) throw std::logic_error("multiplication not closed in " + spec_.label());
        table[a * n + b] = static_cast<std::uint32_t>(*product);
      }
    }
    table_ = std::move(table);
  }
}

std::optional<std::size_t> FiniteGroup::index_of(std::uint64_t code) const {
  const auto it = index_.find(code);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t FiniteGroup::multiply(std::size_t a, std::size_t b) const {
  if (!table_.empty()) return table_[a * order() + b];
  const auto product = index_of(arithmetic_->product(codes_.at(a), codes_.at(b)));
  if (!product) throw std::logic_error("multiplication not closed in " + spec_.label());
  return *product;
}

bool FiniteGroup::commute(std::size_t a, std::size_t b) const {
  if (!table_.empty()) return table_[a * order() + b] == table_[b * order() + a];
  return arithmetic_->product(codes_[a], codes_[b]) == arithmetic_->product(codes_[b], codes_[a]);
}

std::size_t FiniteGroup::element_order(std::size_t a) const {
  std::size_t power = a;
  std::size_t result = 1;
  while (power != identity_) {
    power = multiply(power, a);
    ++result;
  }
  return result;
}

std::size_t FiniteGroup::power(std::size_t a, std::uint64_t e) const {
  std::size_t result = identity_;
  std::size_t base = a;
  for (; e != 0; e >>= 1) {
    if (e & 1u) result = multiply(result, base);
    base = multiply(base, base);
  }
  return result;
}

std::size_t FiniteGroup::inverse(std::size_t a) const { return power(a, element_order(a) - 1); }

std::string FiniteGroup::label(std::size_t a) const { return arithmetic_->label(codes_.at(a)); }

FiniteGroup build_group(const GroupSpec& spec) {
  // Re-run the bound checks; a GroupSpec can only come from a named constructor.
  const GroupSpec checked = GroupSpec::make(spec.family(), spec.m(), spec.n(), spec.k());
  if (checked.family() == Family::PSL2) {
    auto arithmetic = std::make_shared<const SpecialLinear2>(checked.k());
    auto codes = arithmetic->elements();
    return FiniteGroup(checked, std::move(arithmetic), std::move(codes), SpecialLinear2::identity());
  }
  auto arithmetic = std::make_shared<const CyclicExtension>(presentation_of(checked));
  auto codes = arithmetic->elements();
  return FiniteGroup(checked, std::move(arithmetic), std::move(codes), 0);
}

ElementSet center(const FiniteGroup& group) {
  std::vector<std::size_t> members;
  for (std::size_t e = 0; e < group.order(); ++e) {
    bool central = true;
    for (std::size_t h = 0; h < group.order() && central; ++h) central = group.commute(e, h);
    if (central) members.push_back(e);
  }
  return ElementSet(std::move(members));
}

ElementSet centralizer(const FiniteGroup& group, std::size_t element) {
  std::vector<std::size_t> members;
  for (std::size_t h = 0; h < group.order(); ++h) {
    if (group.commute(element, h)) members.push_back(h);
  }
  return ElementSet(std::move(members));
}

CentralizerFamily proper_centralizer_family(const FiniteGroup& group) {
  const ElementSet z = center(group);
  if (z.size() == group.order()) {
    throw NoProperCentralizers(group.spec().label() + " is abelian and has no proper centralizers");
  }

  std::map<ElementSet, std::size_t> seen;
  std::vector<std::pair<ElementSet, std::size_t>> discovered;
  for (std::size_t e = 0; e < group.order(); ++e) {
    if (z.contains(e)) continue;
    ElementSet c = centralizer(group, e);
    if (seen.contains(c)) continue;
    seen.emplace(c, e);
    discovered.emplace_back(std::move(c), e);
  }

  std::stable_sort(discovered.begin(), discovered.end(),
                   [](const auto& lhs, const auto& rhs) { return lhs.first.size() > rhs.first.size(); });

  CentralizerFamily family;
  for (auto& [set, witness] : discovered) {
    family.cardinalities.push_back(set.size());
    family.representatives.push_back(witness);
    family.centralizers.push_back(std::move(set));
  }
  return family;
}

}  // namespace cocg
