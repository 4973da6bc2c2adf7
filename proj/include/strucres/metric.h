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

#ifndef STRUCRES_METRIC_H_
#define STRUCRES_METRIC_H_

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

#include "strucres/term.h"

namespace strucres {

// A term over the signature extended with ◇, produced by cutting a term at
// a fixed depth. Every ◇ sits exactly at the cut depth.
class TruncatedTerm {
 public:
  TruncatedTerm(Term term, std::uint32_t depth)
      : term_(std::move(term)), depth_(depth) {}

  const Term& term() const { return term_; }
  std::uint32_t depth() const { return depth_; }
  // No variables strictly above the cut.
  bool is_ground() const { return term_.is_ground(); }

  std::string to_string(const PrintOptions& opts = {}) const {
    return strucres::to_string(term_, opts);
  }

  bool operator==(const TruncatedTerm& o) const { return term_ == o.term_; }

 private:
  Term term_;
  std::uint32_t depth_;
};

// Keeps positions of depth <= n; nodes at depth n become ◇.
TruncatedTerm truncate(std::uint32_t n, const Term& t);

// Least depth at which two truncations differ, or infinity for equal terms.
class Gamma {
 public:
  static Gamma infinite() { return Gamma(std::nullopt); }
  static Gamma finite(std::uint32_t n) { return Gamma(n); }

  bool is_infinite() const { return !value_; }
  std::uint32_t value() const { return value_.value(); }
  std::string to_string() const;

  bool operator==(const Gamma&) const = default;

 private:
  explicit Gamma(std::optional<std::uint32_t> v) : value_(v) {}
  std::optional<std::uint32_t> value_;
};

Gamma gamma(const Term& s, const Term& t);

// Exact value 0 or 2^-k.
class Dyadic {
 public:
  static Dyadic zero() { return Dyadic(true, 0); }
  static Dyadic inverse_power_of_two(std::uint32_t k) { return Dyadic(false, k); }

  bool is_zero() const { return zero_; }
  std::uint32_t exponent() const { return exponent_; }
  double to_double() const;
  std::string to_string() const;

  bool operator==(const Dyadic&) const = default;
  std::strong_ordering operator<=>(const Dyadic& o) const;

 private:
  Dyadic(bool zero, std::uint32_t k) : zero_(zero), exponent_(k) {}
  bool zero_;
  std::uint32_t exponent_;
};

Dyadic distance(const Term& s, const Term& t);

}  // namespace strucres

#endif  // STRUCRES_METRIC_H_
