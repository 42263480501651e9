// Copyright 2026 The rscale Authors
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


#pragma once

#include <cstdint>
#include <vector>

#include "rscale/rng.hpp"

namespace rscale::testing {

// n draws of fn(rng) from one stream.
template <class Fn>
std::vector<double> draws(std::uint64_t seed, std::size_t n, Fn&& fn) {
  RngStream rng(seed, 7);
  std::vector<double> out(n);
  for (double& x : out) x = fn(rng);
  return out;
}

}  // namespace rscale::testing
