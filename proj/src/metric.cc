// Copyright 2026 The strucres Authors
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

#include "strucres/metric.h"

#include <algorithm>
#include <cmath>
#include <limits>

namespace strucres {

namespace {

Term cut(const Term& t, std::uint32_t remaining) {
  if (remaining == 0) return Term::diamond();
  if (t.is_var() || t.arity() == 0) return t;
  std::vector<Term> args;
  args.reserve(t.arity());
  for (const Term& a : t.args()) args.push_back(cut(a, remaining - 1));
  return Term::app(t.symbol(), std::move(args));
}

bool same_label(const Term& s, const Term& t) {
  return s.is_var() == t.is_var() && s.symbol() == t.symbol() &&
         s.gen() == t.gen() && s.arity() == t.arity();
}

// Depth of the shallowest position where the labels differ, if any.
std::optional<std::uint32_t> first_difference(const Term& s, const Term& t,
                                              std::uint32_t depth,
                                              std::uint32_t bound) {
  if (depth >= bound) return std::nullopt;
  if (!same_label(s, t)) return depth;
  std::optional<std::uint32_t> best;
  for (std::size_t i = 0; i < s.arity(); ++i) {
    if (s.arg(i) == t.arg(i)) continue;
    auto d = first_difference(s.arg(i), t.arg(i), depth + 1,
                              best ? *best : bound);
    if (d && (!best || *d < *best)) best = d;
    if (best && *best == depth + 1) break;
  }
  return best;
}

}  // namespace

TruncatedTerm truncate(std::uint32_t n, const Term& t) {
  return TruncatedTerm(cut(t, n), n);
}

std::string Gamma::to_string() const {
  return value_ ? std::to_string(*value_) : "∞";
}

Gamma gamma(const Term& s, const Term& t) {
  if (s == t) return Gamma::infinite();
  auto d = first_difference(s, t, 0, std::numeric_limits<std::uint32_t>::max());
  // Truncations agree strictly above the first differing node and differ
  // once the cut lies below it.
  return Gamma::finite(d.value() + 1);
}

double Dyadic::to_double() const {
  return zero_ ? 0.0 : std::ldexp(1.0, -static_cast<int>(exponent_));
}

std::string Dyadic::to_string() const {
  if (zero_) return "0";
  if (exponent_ < 63) return "1/" + std::to_string(1ULL << exponent_);
  return "2^-" + std::to_string(exponent_);
}

std::strong_ordering Dyadic::operator<=>(const Dyadic& o) const {
  if (zero_ || o.zero_) return (!zero_) <=> (!o.zero_);
  // Larger exponent means a smaller value.
  return o.exponent_ <=> exponent_;
}

Dyadic distance(const Term& s, const Term& t) {
  Gamma g = gamma(s, t);
  if (g.is_infinite()) return Dyadic::zero();
  return Dyadic::inverse_power_of_two(g.value());
}

}  // namespace strucres
