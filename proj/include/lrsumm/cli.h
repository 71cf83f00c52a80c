// Copyright 2026 The lrsumm Authors.
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

#ifndef LRSUMM_CLI_H_
#define LRSUMM_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace lrsumm {

// Runs the tool on `args` (without the program name). Returns the process
// exit code: 0 on success, 1 on an internal error, 2 on bad input or config.
int run_cli(const std::vector<std::string> &args, std::ostream &out,
            std::ostream &err);

}  // namespace lrsumm

#endif  // LRSUMM_CLI_H_
