/*
   Copyright 2026 The gwcalc Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef GWCALC_CLI_HPP
#define GWCALC_CLI_HPP

#include <string>
#include <vector>

#include "json.hpp"

namespace gwcalc::cli {

enum class Status { Ok, DomainError, UsageError };

struct CommandResult {
    Status status = Status::Ok;
    int exit_code = 0;
    bool json_mode = false;
    std::string human;
    nlohmann::json json;

    /// What the executable prints: the JSON document in --json mode, the human text otherwise.
    std::string output() const;
};

/// args excludes the program name.
CommandResult run(const std::vector<std::string>& args);
CommandResult run(int argc, const char* const* argv);

/// The subcommand grammar, as printed on usage errors.
const std::string& grammar();

}  // namespace gwcalc::cli

#endif
