//  Copyright 2026 The Lawvere Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.


// The command-line front end.  Exit status: 0 pass, 1 law violation or
// counterexample, 2 malformed input.

#ifndef LAWVERE_CLI_APP_HPP_
#define LAWVERE_CLI_APP_HPP_

#include <ostream>

namespace lawvere::cli {

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lawvere::cli

#endif  // LAWVERE_CLI_APP_HPP_
