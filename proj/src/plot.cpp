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

#include "cheaptalk/plot.hpp"

#include <sstream>

namespace cheaptalk {

namespace {

// At a degenerate prior the only equilibrium is babbling, so the robust set
// and the envelope both collapse to the value interval there.
void endpoint_cell(FigureSpec& fig, std::size_t i) {
  const ValueInterval& v = fig.profile.values[i];
  fig.envelope.push_back(v.hi);
  IntervalSet s;
  s.add({v.lo, v.hi, true, true});
  fig.robust.push_back(std::move(s));
}

}  // namespace

FigureSpec make_figure(const Game& g) {
  FigureSpec fig;
  fig.profile = value_profile(g);
  fig.mu0 = g.prior;
  const auto& cells = fig.profile.partition.cells;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i == 0 || i + 1 == cells.size()) {
      endpoint_cell(fig, i);
      continue;
    }
    Game at_rep = g;
    at_rep.prior = cells[i].representative();
    fig.envelope.push_back(envelope_at(fig.profile, at_rep.prior));
    fig.robust.push_back(robust_payoff_set(at_rep));
  }
  return fig;
}

FigureSpec make_figure(const ValueProfile& profile, const Belief& mu0) {
  FigureSpec fig;
  fig.profile = profile;
  fig.mu0 = mu0;
  const auto& cells = profile.partition.cells;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i == 0 || i + 1 == cells.size()) {
      endpoint_cell(fig, i);
      continue;
    }
    const Belief rep = cells[i].representative();
    fig.envelope.push_back(envelope_at(profile, rep));
    fig.robust.push_back(generic_robust_set(profile, rep));
  }
  return fig;
}

namespace {

constexpr int kWidth = 640;
constexpr int kHeight = 480;
constexpr int kLeft = 64;
constexpr int kRight = 20;
constexpr int kTop = 20;
constexpr int kBottom = 44;

struct Frame {
  Rat ylo, yhi;

  std::string x(const Belief& mu) const {
    return decimal_string(Rat(kLeft) + mu * (kWidth - kLeft - kRight), 2);
  }
  std::string y(const Rat& v) const {
    const Rat t = (v - ylo) / (yhi - ylo);
    return decimal_string(Rat(kHeight - kBottom) -
                              t * (kHeight - kBottom - kTop),
                          2);
  }
};

Frame fit_frame(const FigureSpec& fig) {
  Rat lo = fig.profile.values[0].lo;
  Rat hi = fig.profile.values[0].hi;
  for (const auto& v : fig.profile.values) {
    lo = std::min(lo, v.lo);
    hi = std::max(hi, v.hi);
  }
  for (const auto& e : fig.envelope) {
    lo = std::min(lo, e);
    hi = std::max(hi, e);
  }
  Rat pad = (hi - lo) / 10;
  if (pad == 0) pad = 1;
  return Frame{lo - pad, hi + pad};
}

void line(std::ostringstream& out, const std::string& x1,
          const std::string& y1, const std::string& x2, const std::string& y2,
          const std::string& style) {
  out << "<line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2
      << "\" y2=\"" << y2 << "\" " << style << "/>\n";
}

}  // namespace

std::string emit_svg(const FigureSpec& fig) {
  const Frame fr = fit_frame(fig);
  const auto& cells = fig.profile.partition.cells;
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
      << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << " "
      << kHeight << "\">\n";
  out << "<rect width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" fill=\"white\"/>\n";

  // Robust payoff region, one shaded rectangle per cell and component.
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (cells[i].is_point()) continue;
    const std::string x1 = fr.x(cells[i].lo);
    const std::string x2 = fr.x(cells[i].hi);
    for (const auto& c : fig.robust[i].components) {
      if (c.is_point()) {
        line(out, x1, fr.y(c.lo), x2, fr.y(c.lo),
             "stroke=\"#9ec9e8\" stroke-width=\"2\"");
        continue;
      }
      out << "<rect x=\"" << x1 << "\" y=\"" << fr.y(c.hi) << "\" width=\""
          << decimal_string((cells[i].hi - cells[i].lo) *
                                (kWidth - kLeft - kRight),
                            2)
          << "\" height=\""
          << decimal_string((c.hi - c.lo) / (fr.yhi - fr.ylo) *
                                (kHeight - kBottom - kTop),
                            2)
          << "\" fill=\"#9ec9e8\"/>\n";
    }
  }

  // Axes.
  line(out, fr.x(0), fr.y(fr.ylo), fr.x(1), fr.y(fr.ylo),
       "stroke=\"black\" stroke-width=\"1\"");
  line(out, fr.x(0), fr.y(fr.ylo), fr.x(0), fr.y(fr.yhi),
       "stroke=\"black\" stroke-width=\"1\"");
  out << "<text x=\"" << fr.x(0) << "\" y=\"" << kHeight - 22
      << "\" font-size=\"12\" text-anchor=\"middle\">0</text>\n";
  out << "<text x=\"" << fr.x(1) << "\" y=\"" << kHeight - 22
      << "\" font-size=\"12\" text-anchor=\"middle\">1</text>\n";

  // Prior marker.
  line(out, fr.x(fig.mu0), fr.y(fr.ylo), fr.x(fig.mu0), fr.y(fr.yhi),
       "stroke=\"#888888\" stroke-width=\"1\" stroke-dasharray=\"2,3\"");
  out << "<text x=\"" << fr.x(fig.mu0) << "\" y=\"" << kHeight - 22
      << "\" font-size=\"12\" text-anchor=\"middle\" fill=\"#888888\">"
      << to_string(fig.mu0) << "</text>\n";

  // Envelope, dashed, drawn under the value graph.
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (cells[i].is_point()) continue;
    line(out, fr.x(cells[i].lo), fr.y(fig.envelope[i]), fr.x(cells[i].hi),
         fr.y(fig.envelope[i]),
         "stroke=\"#c0392b\" stroke-width=\"2\" stroke-dasharray=\"6,4\"");
  }

  // Value correspondence: horizontal segments on open cells, vertical
  // segments at breakpoints.
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const ValueInterval& v = fig.profile.values[i];
    if (cells[i].is_point()) {
      if (v.lo != v.hi)
        line(out, fr.x(cells[i].lo), fr.y(v.lo), fr.x(cells[i].lo), fr.y(v.hi),
             "stroke=\"black\" stroke-width=\"2\"");
      else
        out << "<circle cx=\"" << fr.x(cells[i].lo) << "\" cy=\""
            << fr.y(v.lo) << "\" r=\"2.5\" fill=\"black\"/>\n";
      continue;
    }
    line(out, fr.x(cells[i].lo), fr.y(v.lo), fr.x(cells[i].hi), fr.y(v.lo),
         "stroke=\"black\" stroke-width=\"2\"");
    if (v.lo != v.hi)
      line(out, fr.x(cells[i].lo), fr.y(v.hi), fr.x(cells[i].hi), fr.y(v.hi),
           "stroke=\"black\" stroke-width=\"2\"");
  }

  // Y-axis extremes.
  out << "<text x=\"" << kLeft - 6 << "\" y=\"" << fr.y(fr.ylo)
      << "\" font-size=\"12\" text-anchor=\"end\">" << to_string(fr.ylo)
      << "</text>\n";
  out << "<text x=\"" << kLeft - 6 << "\" y=\"" << fr.y(fr.yhi)
      << "\" font-size=\"12\" text-anchor=\"end\">" << to_string(fr.yhi)
      << "</text>\n";
  out << "</svg>\n";
  return out.str();
}

std::string emit_csv(const FigureSpec& fig) {
  std::ostringstream out;
  out << "cell_lo,cell_hi,v_lo,v_hi,envelope,robust_lo,robust_hi\n";
  const auto& cells = fig.profile.partition.cells;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const std::string prefix =
        to_string(cells[i].lo) + "," + to_string(cells[i].hi) + "," +
        to_string(fig.profile.values[i].lo) + "," +
        to_string(fig.profile.values[i].hi) + "," +
        to_string(fig.envelope[i]);
    if (fig.robust[i].empty()) {
      out << prefix << ",,\n";
      continue;
    }
    for (const auto& c : fig.robust[i].components)
      out << prefix << "," << to_string(c.lo) << "," << to_string(c.hi)
          << "\n";
  }
  return out.str();
}

}  // namespace cheaptalk
