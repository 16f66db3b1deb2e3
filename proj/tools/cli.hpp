// Copyright 2026 The gsys Authors.
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

#pragma once

#include <exception>
#include <ostream>

namespace gsys::cli {

// Exit codes: 0 success, 2 invalid input, 3 a checked statement failed,
// 4 enumeration cap reached.
int exit_code(const std::exception& e);

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gsys::cli
