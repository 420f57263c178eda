// Copyright 2026 The rrseq Authors
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

#ifndef RRSEQ_TOOLS_CLI_HPP
#define RRSEQ_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

#include "rrseq/rr_engine.hpp"

namespace rrseq::cli {

// One line per index: "<n> <b_n>", each newline-terminated, ASCII only.
void emit_bfile(const RRReport& report, std::ostream& os);

// Header "n,a_n,b_n" then one row per index.
void emit_csv(const RRReport& report, std::ostream& os);

// Right-aligned columns n, a_n, b_n, n-b_n plus a minimality footer.
void emit_table(const RRReport& report, std::ostream& os);

// Dispatches the subcommands; args exclude the program name.  Returns
// 0 on success, 1 on usage or flag errors, 2 when a capped search is
// exhausted, 3 when an engine rejects its input.  Data goes to `out`,
// diagnostics to `err`.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace rrseq::cli

#endif  // RRSEQ_TOOLS_CLI_HPP
