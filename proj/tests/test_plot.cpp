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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "cheaptalk/plot.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace cheaptalk;

namespace {

int count_occurrences(const std::string& text, const std::string& needle) {
  int n = 0;
  for (std::size_t at = text.find(needle); at != std::string::npos;
       at = text.find(needle, at + needle.size()))
    ++n;
  return n;
}

}  // namespace

TEST_CASE("first example CSV is the frozen regression") {
  const FigureSpec fig = make_figure(testing::ex1());
  CHECK(emit_csv(fig) ==
        "cell_lo,cell_hi,v_lo,v_hi,envelope,robust_lo,robust_hi\n"
        "0,0,1,1,1,1,1\n"
        "0,1/4,1,1,1,1,1\n"
        "1/4,1/4,0,1,1,0,1\n"
        "1/4,3/4,0,0,1,0,0\n"
        "1/4,3/4,0,0,1,1,1\n"
        "3/4,3/4,0,2,2,0,2\n"
        "3/4,1,2,2,2,2,2\n"
        "1,1,2,2,2,2,2\n");
}

TEST_CASE("figure data stays inside the value range") {
  for (const char* name : {"ex1", "ex2", "ex3", "ex4a", "ex4b"}) {
    CAPTURE(name);
    const Fixture f = builtin_fixture(name);
    const FigureSpec fig = f.game ? make_figure(*f.game)
                                  : make_figure(*f.profile, f.prior);
    Rat lo = fig.profile.values[0].lo, hi = fig.profile.values[0].hi;
    for (const auto& v : fig.profile.values) {
      lo = std::min(lo, v.lo);
      hi = std::max(hi, v.hi);
    }
    REQUIRE(fig.envelope.size() == fig.profile.values.size());
    REQUIRE(fig.robust.size() == fig.profile.values.size());
    for (std::size_t i = 0; i < fig.envelope.size(); ++i) {
      CHECK(fig.envelope[i] >= fig.profile.values[i].hi);
      CHECK(fig.envelope[i] <= hi);
      for (const auto& comp : fig.robust[i].components) {
        CHECK(comp.lo >= lo);
        CHECK(comp.hi <= hi);
      }
    }
  }
}

TEST_CASE("SVG output is byte-deterministic and well-formed") {
  const FigureSpec fig = make_figure(testing::ex2());
  const std::string a = emit_svg(fig);
  const std::string b = emit_svg(fig);
  CHECK(a == b);
  CHECK(a.rfind("<svg", 0) == 0);
  CHECK(a.find("</svg>") != std::string::npos);
  CHECK(a.find("stroke-dasharray=\"6,4\"") != std::string::npos);  // envelope
  CHECK(a.find("stroke-dasharray=\"2,3\"") != std::string::npos);  // prior
  // Same figure from the same game twice: identical end to end.
  CHECK(emit_svg(make_figure(testing::ex2())) == a);
}

TEST_CASE("robust region rectangles appear only where the set is thick") {
  // Third abstract fixture: the interval [2,4] is robust on some cells, so
  // filled rectangles must exist; the background rect is the only other one.
  const Fixture f3 = builtin_fixture("ex3");
  const std::string svg3 = emit_svg(make_figure(*f3.profile, f3.prior));
  CHECK(count_occurrences(svg3, "<rect") > 1);

  // A profile with a single constant value has no robust area above the
  // babbling interval and therefore no filled rectangles beyond background.
  ValueProfile flat;
  flat.partition.cells = {{0, 0, {}}, {0, 1, {}}, {1, 1, {}}};
  flat.values = {{1, 1}, {1, 1}, {1, 1}};
  FigureSpec fig;
  fig.profile = flat;
  fig.mu0 = Rat(1, 2);
  fig.envelope = {1, 1, 1};
  IntervalSet pt;
  pt.add_point(1);
  fig.robust = {pt, pt, pt};
  const std::string svg = emit_svg(fig);
  CHECK(count_occurrences(svg, "<rect") == 1);
}

TEST_CASE("CSV rows: one per cell and robust component, exact rationals") {
  const Fixture f = builtin_fixture("ex4b");
  const FigureSpec fig = make_figure(*f.profile, f.prior);
  const std::string csv = emit_csv(fig);
  std::size_t rows = 0;
  for (char ch : csv)
    if (ch == '\n') ++rows;
  std::size_t want = 1;  // header
  for (const auto& set : fig.robust)
    want += set.empty() ? 1 : set.components.size();
  CHECK(rows == want);
  CHECK(csv.rfind("cell_lo,cell_hi,v_lo,v_hi,envelope,robust_lo,robust_hi\n",
                  0) == 0);
  CHECK(csv.find("5/2") != std::string::npos);
}
