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

#include <unistd.h>

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "strucres/session.h"

int main(int argc, char** argv) {
  using namespace strucres;
  CLI::App app{"Structural resolution for Horn clause programs"};
  app.require_subcommand(1);

  std::string file;
  std::string query;
  std::string mode = "srew";
  std::optional<std::uint32_t> depth;
  std::size_t fuel = SessionConfig{}.fuel;
  std::optional<std::string> dot;
  bool json = false;

  CLI::App* run = app.add_subcommand("run", "Run one query against a program file");
  run->add_option("file", file, "Program file")->required();
  run->add_option("query", query, "Query, e.g. \"?- nats(X).\"")->required();
  run->add_option("--mode", mode, "sld, srew, colp, observe or implied")
      ->check(CLI::IsMember({"sld", "srew", "colp", "observe", "implied"}));
  run->add_option("--depth", depth, "Observation depth (observe, implied)")
      ->check(CLI::PositiveNumber);
  run->add_option("--fuel", fuel, "Search budget")->check(CLI::PositiveNumber);
  run->add_option("--dot", dot, "Write the final rewriting tree as DOT");
  run->add_flag("--json", json, "Print one JSON record");

  std::optional<std::string> repl_file;
  CLI::App* repl = app.add_subcommand("repl", "Interactive session");
  repl->add_option("file", repl_file, "Program file to load first");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  if (*run) {
    SessionConfig config;
    config.mode = *parse_mode(mode);
    config.depth = depth;
    config.fuel = fuel;
    config.dot_path = dot;
    config.json = json;
    return run_file(file, query, config, std::cout, std::cerr);
  }
  Repl session(SessionConfig{}, std::cout);
  if (repl_file && !session.load(*repl_file)) return kExitNoInput;
  session.run(std::cin, isatty(0) != 0);
  return kExitSuccess;
}
