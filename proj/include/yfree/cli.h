// Copyright 2026 The yfree Authors
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


// The `yfree` command-line front end, callable in-process for testing.
//
// Exit codes: 0 success (and, for `check`, every component Y-free), 1 a
// negative answer (a Y was found, a certificate or decomposition failed, a
// lemma check failed), 2 bad usage or malformed input.

#ifndef YFREE_CLI_H_
#define YFREE_CLI_H_

#include <iosfwd>

namespace yfree::cli {

int Run(int argc, const char* const* argv, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace yfree::cli

#endif  // YFREE_CLI_H_
