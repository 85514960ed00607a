/*
 * Copyright 2026 The chord-euler Authors
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

#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "chord_euler/error.hpp"

namespace chord_euler {

enum ExitCode : int { kExitPass = 0, kExitFailure = 1, kExitInput = 2, kExitCap = 3, kExitGenerator = 4 };

int exit_code_for(ErrorKind kind);

// Worker count for campaigns: CHORD_EULER_THREADS if set and positive, else
// the hardware concurrency.
unsigned campaign_threads();

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chord_euler
