/*
 * Copyright 2026 The sdfslam Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef SDFSLAM_IO_CLI_HPP
#define SDFSLAM_IO_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace sdfslam {

// Command-line front end. `args` excludes the program name.
//
//   simulate  scenario -> scan log (+ ground-truth trajectory)
//   slam      scan log -> merged map, trajectory, submap set
//   merge     submap set -> merged map
//   localize  merged map + scan log -> trajectory and timing statistics
//   eval      estimated + ground-truth trajectories -> RMSE report
//   export    map file -> PGM image
//
// Returns 0 on success (and for --help), 2 on usage errors and 1 on runtime
// errors; failures print a one-line diagnostic to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sdfslam

#endif  // SDFSLAM_IO_CLI_HPP
