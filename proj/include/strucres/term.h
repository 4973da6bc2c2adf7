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

#ifndef STRUCRES_TERM_H_
#define STRUCRES_TERM_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <memory>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace strucres {

// A variable is a name plus a generation. Generation 0 is reserved for
// variables written by the user; renaming apart allocates higher ones.
struct Var {
  std::string name;
  std::uint32_t gen = 0;

  auto operator<=>(const Var&) const = default;
  bool operator==(const Var&) const = default;
};

std::string to_string(const Var& v);

// Immutable first-order term. Copies share structure; equality is
// structural.
class Term {
 public:
  static Term variable(std::string name, std::uint32_t gen = 0);
  static Term variable(const Var& v) { return variable(v.name, v.gen); }
  static Term app(std::string symbol, std::vector<Term> args = {});
  // The fresh nullary symbol that marks a cut point in a truncation.
  static Term diamond();

  bool is_var() const;
  bool is_diamond() const;
  // Function symbol, or the variable's name.
  const std::string& symbol() const;
  std::uint32_t gen() const;
  Var var() const;
  std::span<const Term> args() const;
  const Term& arg(std::size_t i) const;
  std::size_t arity() const;

  bool is_ground() const;
  // Length of the longest position; a constant or variable has depth 0.
  std::size_t depth() const;
  std::size_t size() const;
  std::size_t hash() const;
  std::uint32_t max_gen() const;

  bool same_node(const Term& other) const { return node_ == other.node_; }

  friend bool operator==(const Term& a, const Term& b);
  friend std::strong_ordering operator<=>(const Term& a, const Term& b);

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct TermHash {
  std::size_t operator()(const Term& t) const { return t.hash(); }
};

inline constexpr std::string_view kDiamondSymbol = "◇";
inline constexpr std::string_view kDiamondAscii = "?diamond?";

// Word over the naturals addressing a node of a tree. The empty word is the
// root.
class Position {
 public:
  Position() = default;
  Position(std::initializer_list<std::uint32_t> steps) : steps_(steps) {}
  explicit Position(std::vector<std::uint32_t> steps)
      : steps_(std::move(steps)) {}

  std::size_t depth() const { return steps_.size(); }
  bool is_root() const { return steps_.empty(); }
  std::span<const std::uint32_t> steps() const { return steps_; }
  std::uint32_t back() const { return steps_.back(); }

  Position child(std::uint32_t i) const;
  Position parent() const;
  bool is_prefix_of(const Position& other) const;

  std::string to_string() const;

  auto operator<=>(const Position&) const = default;
  bool operator==(const Position&) const = default;

 private:
  std::vector<std::uint32_t> steps_;
};

class PositionOutOfRange : public std::out_of_range {
 public:
  explicit PositionOutOfRange(const Position& w);
};

// Subterm rooted at w. Throws PositionOutOfRange when w is not a position
// of t.
Term subterm(const Term& t, const Position& w);
bool has_position(const Term& t, const Position& w);
// Every position of t in breadth-first order.
std::vector<Position> positions(const Term& t);

void collect_vars(const Term& t, std::set<Var>& out);
std::set<Var> vars_of(const Term& t);
std::set<Var> vars_of(std::span<const Term> ts);
bool occurs(const Var& v, const Term& t);

// Variable display names. Generations are dropped whenever that does not
// merge two distinct variables of the printed set.
class VarNaming {
 public:
  VarNaming() = default;
  static VarNaming for_vars(const std::set<Var>& vars);
  static VarNaming for_terms(std::span<const Term> ts);

  std::string name(const Var& v) const;

 private:
  std::map<Var, std::string> names_;
};

struct PrintOptions {
  bool ascii = false;
  const VarNaming* naming = nullptr;
};

std::string to_string(const Term& t, const PrintOptions& opts = {});
std::string to_string(std::span<const Term> ts, const PrintOptions& opts = {});

}  // namespace strucres

#endif  // STRUCRES_TERM_H_
