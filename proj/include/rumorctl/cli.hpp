/*
 * Copyright (C) 2026 rumorctl contributors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#ifndef RUMORCTL_CLI_HPP
#define RUMORCTL_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace rumorctl {

/// Runs one CLI command (argv without the program name). Diagnostics go to
/// `diag`; result data goes to files only. Returns 0 on success, 1 on a
/// validation error, 2 on a solver failure.
int run_command(const std::vector<std::string>& args, std::ostream& diag);

} // namespace rumorctl

#endif // RUMORCTL_CLI_HPP
