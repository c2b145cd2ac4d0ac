/*
 * Copyright 2026 The BTL Authors
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

#ifndef BTL_TESTKIT_FIXTURES_HPP
#define BTL_TESTKIT_FIXTURES_HPP

// Worked examples shared by the suites, the tests and the benchmarks. The
// files under samples/ hold the same text.

namespace btl::testkit::fixtures {

inline constexpr const char* kInvestigationSpec =
    "set_target         : no_target -o has_target.\n"
    "move_to_target     : has_target -o has_target * at_target.\n"
    "investigate_target : has_target * at_target * heard_noise -o no_target.\n"
    "idle_smoke         : has_cigarette -o 1.\n"
    "idle_pace          : 1 -o 1.\n";

inline constexpr const char* kInvestigationTree =
    "Sel{?heard_noise. set_target() +\n"
    "    Seq{move_to_target(); investigate_target()} +\n"
    "    Sel{idle_smoke() + idle_pace()}}";

inline constexpr const char* kInvestigationBranch2 = "Seq{move_to_target(); investigate_target()}";

inline constexpr const char* kDoorsSpec =
    "walk_to_door : at_elsewhere -o at_door.\n"
    "pass_through : door_open * at_door -o door_open * through_door.\n"
    "open_door    : door_unlocked * at_door -o door_open * at_door.\n"
    "smash_door   : door_locked * at_door -o door_open * at_door.\n"
    "close_door   : door_open * through_door -o door_unlocked * through_door.\n";

inline constexpr const char* kDoorSequence = "Seq{walk_to_door; open_door; pass_through; close_door}";

inline constexpr const char* kBadOrder = "Seq{open_door(); walk_to_door()}";

inline constexpr const char* kSmokingSpec =
    "smoke : has_cigarette -o 1.\n"
    "pace  : 1 -o 1.\n";

inline constexpr const char* kShapesSpec =
    "sort shape_id = {a, b, c, d}.\n"
    "pred circle(shape_id).\n"
    "pred diamond(shape_id).\n"
    "r : X:shape_id. circle(X) * diamond(X) -o diamond(c) * diamond(d).\n";

}  // namespace btl::testkit::fixtures

#endif  // BTL_TESTKIT_FIXTURES_HPP
