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

#include <iostream>

#include "gwcalc/cli.hpp"

int main(int argc, char** argv) {
    const auto r = gwcalc::cli::run(argc, argv);
    const std::string text = r.output();
    auto& stream = r.exit_code == 0 || r.json_mode ? std::cout : std::cerr;
    stream << text;
    if (!text.empty() && text.back() != '\n') stream << '\n';
    return r.exit_code;
}
