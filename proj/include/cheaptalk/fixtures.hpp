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

#ifndef CHEAPTALK_FIXTURES_HPP
#define CHEAPTALK_FIXTURES_HPP

#include <optional>

#include "cheaptalk/best_reply.hpp"

namespace cheaptalk {

struct UnknownFixture : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Built-in demonstration inputs. ex1 and ex2 are concrete games; ex3, ex4a
// and ex4b are abstract value profiles whose numbers are stand-ins chosen to
// reproduce a specific ordinal structure (documented in the source), paired
// with a representative prior.
struct Fixture {
  std::string name;
  std::optional<Game> game;
  std::optional<ValueProfile> profile;
  Belief prior;
};

Fixture builtin_fixture(const std::string& name);
std::vector<std::string> fixture_names();

}  // namespace cheaptalk

#endif  // CHEAPTALK_FIXTURES_HPP
