// Copyright 2026 The symtk Authors.
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

#include "symtk/permutation.h"

#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "symtk/error.h"
#include "test_util.h"

namespace symtk {
namespace {

using ::symtk::testing::RandomPermutation;

std::vector<Point> Images(const Permutation& p) {
  return {p.images().begin(), p.images().end()};
}

ErrorKind KindOf(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::kUnsupported;
}

TEST(PermutationTest, Identity) {
  EXPECT_EQ(Images(Permutation::Identity(3)), (std::vector<Point>{0, 1, 2}));
  EXPECT_EQ(Images(Permutation::Identity(1)), (std::vector<Point>{0}));
  EXPECT_EQ(KindOf([] { Permutation::Identity(0); }), ErrorKind::kInvalidDegree);
}

TEST(PermutationTest, FromImagesRejectsNonBijection) {
  EXPECT_EQ(KindOf([] { Permutation::FromImages({0, 0, 1}); }),
            ErrorKind::kOutOfRange);
  EXPECT_EQ(KindOf([] { Permutation::FromImages({0, 3, 1}); }),
            ErrorKind::kOutOfRange);
  EXPECT_EQ(KindOf([] { Permutation::FromImages({}); }),
            ErrorKind::kInvalidDegree);
}

TEST(PermutationTest, ComposeAppliesLeftOperandFirst) {
  const Permutation a = Permutation::FromCycles(3, {{1, 2}});
  const Permutation b = Permutation::FromCycles(3, {{2, 3}});
  // q(p(x)) by hand: 0 -> 1 -> 2, 1 -> 0 -> 0, 2 -> 2 -> 1.
  EXPECT_EQ(Images(Compose(a, b)), (std::vector<Point>{2, 0, 1}));
}

TEST(PermutationTest, ComposeDegreeMismatch) {
  EXPECT_EQ(KindOf([] {
              Compose(Permutation::Identity(3), Permutation::Identity(4));
            }),
            ErrorKind::kDegreeMismatch);
}

TEST(PermutationTest, IdentityLaws) {
  std::mt19937_64 rng(7);
  const Permutation p = RandomPermutation(rng, 5);
  EXPECT_EQ(Compose(Permutation::Identity(5), p), p);
  EXPECT_EQ(Compose(p, Permutation::Identity(5)), p);
  EXPECT_EQ(Compose(Permutation::Identity(4), Permutation::FromImages({3, 2, 1, 0})),
            Permutation::FromImages({3, 2, 1, 0}));
  EXPECT_EQ(Compose(p, p.Inverse()), Permutation::Identity(5));
}

TEST(PermutationTest, Inverse) {
  EXPECT_EQ(Permutation::Identity(5).Inverse(), Permutation::Identity(5));
  EXPECT_EQ(Images(Permutation::FromImages({1, 2, 0}).Inverse()),
            (std::vector<Point>{2, 0, 1}));
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const Permutation p = RandomPermutation(rng, 1 + trial % 12);
    EXPECT_TRUE(Compose(p.Inverse(), p).IsIdentity());
  }
}

TEST(PermutationTest, GroupAxiomsOnRandomTriples) {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 1 + trial % 12;
    const Permutation a = RandomPermutation(rng, n);
    const Permutation b = RandomPermutation(rng, n);
    const Permutation c = RandomPermutation(rng, n);
    ASSERT_EQ(Compose(Compose(a, b), c), Compose(a, Compose(b, c)));
    ASSERT_EQ(Compose(Permutation::Identity(n), a), a);
    ASSERT_EQ(Compose(a, a.Inverse()), Permutation::Identity(n));
    ASSERT_EQ(Compose(a.Inverse(), a), Permutation::Identity(n));
  }
}

TEST(PermutationTest, FromCycles) {
  EXPECT_EQ(Images(Permutation::FromCycles(5, {{1, 2}})),
            (std::vector<Point>{1, 0, 2, 3, 4}));
  EXPECT_EQ(Images(Permutation::FromCycles(5, {{1, 2, 3, 4, 5}})),
            (std::vector<Point>{1, 2, 3, 4, 0}));
  EXPECT_EQ(Permutation::FromCycles(5, {}), Permutation::Identity(5));
  EXPECT_EQ(Permutation::FromCycles(3, {{2}}), Permutation::Identity(3));
}

TEST(PermutationTest, FromCyclesErrors) {
  EXPECT_EQ(KindOf([] { Permutation::FromCycles(5, {{1, 6}}); }),
            ErrorKind::kMalformedCycles);
  EXPECT_EQ(KindOf([] { Permutation::FromCycles(5, {{0, 1}}); }),
            ErrorKind::kMalformedCycles);
  EXPECT_EQ(KindOf([] { Permutation::FromCycles(5, {{1, 2}, {2, 3}}); }),
            ErrorKind::kMalformedCycles);
  EXPECT_EQ(KindOf([] { Permutation::FromCycles(5, {{1, 2, 1}}); }),
            ErrorKind::kMalformedCycles);
}

TEST(PermutationTest, CycleStringFormat) {
  EXPECT_EQ(Permutation::Identity(4).ToCycleString(), "()");
  EXPECT_EQ(Permutation::FromCycles(5, {{4, 5}, {3, 1, 2}}).ToCycleString(),
            "(1 2 3)(4 5)");
  EXPECT_EQ(ParseCycles(5, "(1 2 3)(4 5)"),
            Permutation::FromCycles(5, {{1, 2, 3}, {4, 5}}));
  EXPECT_EQ(ParseCycles(5, " ( 1  2 ) ( 3 4 ) "),
            Permutation::FromCycles(5, {{1, 2}, {3, 4}}));
  EXPECT_EQ(ParseCycles(3, "()"), Permutation::Identity(3));
}

TEST(PermutationTest, ParseCyclesErrors) {
  for (const char* bad : {"", "(1 2", "1 2)", "(1 x)", "(1 6)", "(1 2)(2 3)",
                          "(0 1)", "(1 2)x"}) {
    EXPECT_EQ(KindOf([&] { ParseCycles(5, bad); }), ErrorKind::kMalformedCycles)
        << bad;
  }
}

TEST(PermutationTest, CycleStringRoundTrip) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 15;
    const Permutation p = RandomPermutation(rng, n);
    ASSERT_EQ(ParseCycles(n, p.ToCycleString()), p) << p.ToCycleString();
  }
}

TEST(PermutationTest, OrderingIsLexicographicOnImages) {
  EXPECT_LT(Permutation::FromImages({0, 2, 1}), Permutation::FromImages({1, 0, 2}));
  EXPECT_LT(Permutation::Identity(3), Permutation::FromImages({0, 2, 1}));
}

}  // namespace
}  // namespace symtk
