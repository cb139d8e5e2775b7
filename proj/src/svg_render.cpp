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

#include "dbp/svg_render.hpp"

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include "dbp/profile.hpp"

namespace dbp {
namespace {

constexpr const char* kPalette[] = {
    "#4e79a7", "#f28e2b", "#e15759", "#76b7b4", "#59a14f", "#edc948",
    "#b07aa1", "#ff9da7", "#9c755f", "#bab0ac", "#86bcb6", "#d37295",
};
constexpr long long kPaletteSize = 12;

constexpr long long kLeft = 16;
constexpr long long kTop = 12;
constexpr long long kRight = 16;
constexpr long long kBottomPad = 16;
constexpr long long kCaption = 18;
constexpr long long kGap = 16;
constexpr Len kDetailSlotLimit = 64;  // grid lines and id labels below this

struct TaskRect {
  Len start = 0;
  Len width = 0;
  long long bottom = 0;
  Len height = 0;
  long long id = 0;
};

// Each rectangle sits on the highest previously stacked level over its span,
// so rectangles never overlap regardless of placement order. The skyline is
// kept run-length encoded; raising a span to a flat top needs a different
// increment per run underneath it.
std::vector<TaskRect> stack_rects(const Instance& instance, const Bin& bin) {
  LoadProfile sky(instance.slots);
  std::vector<TaskRect> rects;
  rects.reserve(bin.placements.size());
  for (const Placement& p : bin.placements) {
    Len from = p.start;
    Len to = p.start + p.task.width - 1;
    long long bottom = sky.max_in(from, to);
    long long target = bottom + p.task.height;
    Len s = from;
    while (s <= to) {
      long long level = sky.load_at(s);
      Len change = sky.next_change_after(s);
      Len seg_end = (change == 0 || change > to) ? to : change - 1;
      sky.add(s, seg_end, target - level);
      s = seg_end + 1;
    }
    rects.push_back({p.start, p.task.width, bottom, p.task.height, p.task.id});
  }
  return rects;
}

// Prints twice/2, keeping the ".5" when twice is odd. Centers of odd-width
// rectangles land on half-pixel coordinates.
std::string half(long long twice) {
  std::string out = std::to_string(twice / 2);
  if (twice % 2 != 0) out += ".5";
  return out;
}

}  // namespace

std::string render_svg(const Instance& instance, const Solution& solution) {
  std::ostringstream svg;
  const Len slots = instance.slots;
  const std::size_t bins = solution.bins.size();

  if (bins == 0) {
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"192\" "
           "height=\"28\" viewBox=\"0 0 192 28\">\n"
        << "<desc>empty solution</desc>\n"
        << "</svg>\n";
    return svg.str();
  }

  // Placement ranges are validated by load_profile before any drawing state
  // is built; stacking reuses the same bounds.
  std::vector<std::vector<TaskRect>> panel_rects;
  std::vector<LoadProfile> panel_profiles;
  long long peak_level = instance.capacity;
  for (const Bin& bin : solution.bins) {
    panel_profiles.push_back(load_profile(instance, bin));
    panel_rects.push_back(stack_rects(instance, bin));
    for (const TaskRect& r : panel_rects.back()) {
      peak_level = std::max(peak_level, r.bottom + r.height);
    }
  }

  const long long sx = std::clamp<long long>(720 / slots, 1, 32);
  const long long sy = std::clamp<long long>(360 / peak_level, 1, 32);
  const long long pw = slots * sx;
  const long long ph = peak_level * sy;
  const long long width = kLeft + pw + kRight;
  const long long height = kTop +
                           static_cast<long long>(bins) * (kCaption + ph) +
                           static_cast<long long>(bins - 1) * kGap + kBottomPad;
  const bool detail = slots <= kDetailSlotLimit;

  auto x_of = [&](Len slot) { return kLeft + (slot - 1) * sx; };

  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' ' << height
      << "\">\n"
      << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height
      << "\" fill=\"#ffffff\"/>\n";

  for (std::size_t b = 0; b < bins; ++b) {
    const long long block_top = kTop + static_cast<long long>(b) * (kCaption + ph + kGap);
    const long long plot_top = block_top + kCaption;
    const long long plot_bottom = plot_top + ph;
    auto y_of = [&](long long level) { return plot_bottom - level * sy; };

    svg << "<text x=\"" << kLeft << "\" y=\"" << block_top + kCaption - 5
        << "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"#333333\">bin " << b
        << " (" << panel_rects[b].size() << " tasks)</text>\n";

    if (detail) {
      for (Len s = 2; s <= slots; ++s) {
        svg << "<line x1=\"" << x_of(s) << "\" y1=\"" << plot_top << "\" x2=\"" << x_of(s)
            << "\" y2=\"" << plot_bottom << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
      }
    }

    for (const TaskRect& r : panel_rects[b]) {
      svg << "<rect x=\"" << x_of(r.start) << "\" y=\"" << y_of(r.bottom + r.height)
          << "\" width=\"" << r.width * sx << "\" height=\"" << r.height * sy
          << "\" fill=\"" << kPalette[((r.id % kPaletteSize) + kPaletteSize) % kPaletteSize]
          << "\" fill-opacity=\"0.85\" stroke=\"#1a1a1a\" stroke-width=\"1\">"
          << "<title>task " << r.id << ": " << r.width << "x" << r.height << " at "
          << r.start << "</title></rect>\n";
      if (detail) {
        svg << "<text x=\"" << half(2 * x_of(r.start) + r.width * sx) << "\" y=\""
            << half(2 * y_of(r.bottom) - r.height * sy)
            << "\" font-family=\"sans-serif\" font-size=\"11\" fill=\"#111111\" "
               "text-anchor=\"middle\" dy=\".35em\">"
            << r.id << "</text>\n";
      }
    }

    svg << "<line x1=\"" << kLeft << "\" y1=\"" << y_of(instance.capacity) << "\" x2=\""
        << kLeft + pw << "\" y2=\"" << y_of(instance.capacity)
        << "\" stroke=\"#c0392b\" stroke-width=\"1\" stroke-dasharray=\"6 4\"/>\n";

    svg << "<polyline fill=\"none\" stroke=\"#111111\" stroke-width=\"2\" points=\"";
    const auto& runs = panel_profiles[b].runs();
    for (std::size_t i = 0; i < runs.size(); ++i) {
      Len run_end = i + 1 < runs.size() ? runs[i + 1].start - 1 : slots;
      if (i > 0) svg << ' ';
      svg << x_of(runs[i].start) << ',' << y_of(runs[i].load) << ' '
          << x_of(run_end) + sx << ',' << y_of(runs[i].load);
    }
    svg << "\"/>\n";

    svg << "<rect x=\"" << kLeft << "\" y=\"" << plot_top << "\" width=\"" << pw
        << "\" height=\"" << ph
        << "\" fill=\"none\" stroke=\"#444444\" stroke-width=\"1\"/>\n";
  }

  svg << "</svg>\n";
  return svg.str();
}

}  // namespace dbp
