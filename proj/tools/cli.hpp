// Copyright 2026 The entmeter Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ENTMETER_TOOLS_CLI_HPP_
#define ENTMETER_TOOLS_CLI_HPP_

#include <ostream>

namespace entmeter::cli {

// Full command dispatch, separated from main() so tests can drive it.
// Exit codes: 0 success, 2 input/usage error, 3 certification failure.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace entmeter::cli

#endif  // ENTMETER_TOOLS_CLI_HPP_
