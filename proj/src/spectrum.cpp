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

#include "cocg/spectrum.hpp"

#include <sstream>

namespace cocg {

std::size_t root_count(const EigenvalueExpr& expr) {
  struct Visitor {
    std::size_t operator()(const BigInt&) const { return 1; }
    std::size_t operator()(const SurdValue&) const { return 2; }
    std::size_t operator()(const PolyRoots& r) const { return static_cast<std::size_t>(r.poly.degree()); }
  };
  return std::visit(Visitor{}, expr);
}

std::string to_string(const EigenvalueExpr& expr) {
  struct Visitor {
    std::string operator()(const BigInt& v) const { return v.get_str(); }
    std::string operator()(const SurdValue& s) const { return s.to_string(); }
    std::string operator()(const PolyRoots& r) const { return "roots(" + r.poly.to_string() + ")"; }
  };
  return std::visit(Visitor{}, expr);
}

std::size_t SpectrumSpec::root_count() const {
  std::size_t total = 0;
  for (const auto& e : entries) total += cocg::root_count(e.value) * e.multiplicity;
  return total;
}

BigRational SpectrumSpec::root_sum() const {
  BigRational sum = 0;
  for (const auto& e : entries) {
    BigRational one;
    if (const auto* v = std::get_if<BigInt>(&e.value)) {
      one = BigRational(*v);
    } else if (const auto* s = std::get_if<SurdValue>(&e.value)) {
      one = BigRational(2 * s->p(), s->q());
    } else {
      const auto& poly = std::get<PolyRoots>(e.value).poly;
      // Monic: the roots sum to minus the subleading coefficient.
      one = BigRational(-poly.coefficient(static_cast<std::size_t>(poly.degree() - 1)), poly.leading());
    }
    one.canonicalize();
    sum += one * BigRational(static_cast<unsigned long>(e.multiplicity));
  }
  sum.canonicalize();
  return sum;
}

bool SpectrumSpec::is_integral() const {
  for (const auto& e : entries) {
    if (const auto* s = std::get_if<SurdValue>(&e.value)) {
      if (!s->is_rational()) return false;
      // Rational pair: integral iff both (p ± r)/q are integers.
      const BigInt r = isqrt(s->d());
      if ((s->p() + r) % s->q() != 0 || (s->p() - r) % s->q() != 0) return false;
    } else if (std::holds_alternative<PolyRoots>(e.value)) {
      return false;
    }
  }
  return true;
}

std::string SpectrumSpec::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) out << ", ";
    const auto& e = entries[i];
    const bool compound = !std::holds_alternative<BigInt>(e.value);
    if (compound && e.multiplicity > 1) out << '[';
    out << cocg::to_string(e.value);
    if (compound && e.multiplicity > 1) out << ']';
    if (e.multiplicity > 1) out << "×" << e.multiplicity;
  }
  return out.str();
}

}  // namespace cocg
