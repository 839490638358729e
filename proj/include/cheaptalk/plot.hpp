// Copyright 2026 The cheaptalk Authors.
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

#ifndef CHEAPTALK_PLOT_HPP
#define CHEAPTALK_PLOT_HPP

#include "cheaptalk/robustness.hpp"

namespace cheaptalk {

// Everything needed to draw the value correspondence, the quasiconcave
// envelope, and the robust payoff set as functions of the prior. Envelope
// and robust set are constant on each cell, so one sample per cell at its
// representative belief captures them exactly.
struct FigureSpec {
  ValueProfile profile;
  Belief mu0;                       // prior marked on the figure
  std::vector<Rat> envelope;        // per cell
  std::vector<IntervalSet> robust;  // per cell
};

FigureSpec make_figure(const Game& g);
FigureSpec make_figure(const ValueProfile& profile, const Belief& mu0);

// Deterministic SVG rendering: shaded robust region, solid value graph,
// dashed envelope, dotted prior marker.
std::string emit_svg(const FigureSpec& fig);

// One row per cell and robust component, exact rational entries:
// cell_lo,cell_hi,v_lo,v_hi,envelope,robust_lo,robust_hi
std::string emit_csv(const FigureSpec& fig);

}  // namespace cheaptalk

#endif  // CHEAPTALK_PLOT_HPP
