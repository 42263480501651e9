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


#include <set>

#include <gtest/gtest.h>

#include "rscale/rng.hpp"

using rscale::RngStream;

TEST(Rng, SameSeedAndStreamReproduce) {
  RngStream a(42, 3);
  RngStream b(42, 3);
  for (int i = 0; i < 1000; ++i) EXPECT_EQ(a.next_u64(), b.next_u64());
}

TEST(Rng, StreamsDiffer) {
  RngStream a(42, 3);
  RngStream b(42, 4);
  RngStream c(43, 3);
  const auto x = a.next_u64();
  EXPECT_NE(x, b.next_u64());
  EXPECT_NE(x, c.next_u64());
}

TEST(Rng, UniformIsOpenInterval) {
  RngStream r(1);
  for (int i = 0; i < 100000; ++i) {
    const double u = r.uniform();
    ASSERT_GT(u, 0.0);
    ASSERT_LT(u, 1.0);
  }
}

TEST(Rng, SubstreamIsDeterministic) {
  RngStream parent(9, 1);
  RngStream s1 = parent.substream(5);
  RngStream s2 = parent.substream(5);
  EXPECT_EQ(s1.stream_id(), s2.stream_id());
  EXPECT_EQ(s1.next_u64(), s2.next_u64());
  EXPECT_NE(parent.substream(6).stream_id(), s1.stream_id());
}

TEST(Rng, DerivedStreamIdsDoNotCollide) {
  std::set<std::uint64_t> ids;
  for (std::uint64_t k = 0; k < 100000; ++k) ids.insert(RngStream::derive_stream_id(0x1001, k));
  EXPECT_EQ(ids.size(), 100000u);
}

TEST(Rng, UniformIndexInRange) {
  RngStream r(3);
  for (int i = 0; i < 10000; ++i) ASSERT_LT(r.uniform_index(7), 7u);
}

// Known-answer vectors published with the Random123 library.
TEST(Philox, KnownAnswers) {
  using B = std::array<std::uint32_t, 4>;
  EXPECT_EQ(rscale::philox4x32_10({0, 0, 0, 0}, {0, 0}), (B{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8}));
  EXPECT_EQ(rscale::philox4x32_10({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, {0xffffffff, 0xffffffff}),
            (B{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd}));
  EXPECT_EQ(rscale::philox4x32_10({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, {0xa4093822, 0x299f31d0}),
            (B{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1}));
}
