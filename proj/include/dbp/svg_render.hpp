// Copyright 2026 The dbp Authors
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

#ifndef DBP_SVG_RENDER_HPP_
#define DBP_SVG_RENDER_HPP_

#include <string>

#include "dbp/model.hpp"

namespace dbp {

// One panel per bin, stacked vertically. Tasks have no vertical coordinate in
// the demand model, so rectangles are stacked skyline-style in placement
// order; the black step line on top of each panel is the actual load profile
// and the dashed line marks the capacity. Output is static SVG 1.1 and is
// byte-deterministic for a given instance and solution.
std::string render_svg(const Instance& instance, const Solution& solution);

}  // namespace dbp

#endif  // DBP_SVG_RENDER_HPP_
