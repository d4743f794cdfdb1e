// Copyright 2026 The Authors.
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


#include <cstdlib>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "locrep/linear_code.hpp"
#include "locrep/square.hpp"
#include "oracles.hpp"

namespace locrep {
namespace {

using testing::random_code;
using testing::repetition_code;
using testing::single_parity_code;

TEST(LinearCodeTest, RejectsRankDeficientAndMalformedGenerators) {
  const FieldSpec f(4);
  EXPECT_THROW(LinearCode(f, 2, {{f.one(), f.zero()}, {f.one(), f.zero()}}), DomainError);
  EXPECT_THROW(LinearCode(f, 2, {{f.one()}, {f.one(), f.one()}}), UsageError);
  EXPECT_THROW(LinearCode(f, 3, {{f.one(), f.one(), f.one()}}), UsageError);  // M > n
  EXPECT_THROW(LinearCode(f, 1, {{FieldElement{0x10}}}), UsageError);
}

TEST(EntropyTest, Examples) {
  const SquareCode sc = build_square_code(2, 3);
  EXPECT_EQ(sc.code.entropy(CoordSet{}), 0);
  EXPECT_EQ(sc.code.entropy(sc.code.coords()), 3);
  EXPECT_EQ(sc.code.entropy(grid_row(2, 0)), 2);
  EXPECT_THROW(sc.code.entropy(CoordSet{9}), UsageError);
}

TEST(EntropyTest, MonotoneAndSubmodular) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 6);
    const LinearCode code = testing::random_sparse_code(rng, n, 1 + static_cast<int>(rng() % 4), 3);
    const std::uint64_t full = CoordSet::full(n).mask();
    for (int t = 0; t < 200; ++t) {
      const CoordSet a(rng() & full), b(rng() & full);
      const int ha = code.entropy(a), hb = code.entropy(b);
      EXPECT_LE(code.entropy(a & b), std::min(ha, hb));
      EXPECT_GE(code.entropy(a | b), std::max(ha, hb));
      EXPECT_GE(ha + hb, code.entropy(a | b) + code.entropy(a & b));
      EXPECT_LE(ha, std::min(a.size(), code.file_size()));
    }
  }
}

TEST(MinDistanceTest, Examples) {
  EXPECT_EQ(min_distance(repetition_code()), 3);
  EXPECT_EQ(min_distance(single_parity_code()), 2);
  EXPECT_EQ(min_distance(build_square_code(2, 3).code), 6);
  EXPECT_EQ(min_distance(build_square_code(2, 4).code), 4);
}

TEST(MinDistanceTest, SquareCodesAgreeWithCodewordEnumeration) {
  // GF(16), M = 3 and 4.
  for (int m : {3, 4}) {
    const SquareCode sc = build_square_code(2, m);
    EXPECT_EQ(min_distance(sc.code), testing::min_distance_by_codewords(sc.code)) << "M=" << m;
  }
}

TEST(MinDistanceTest, RandomCodesAgreeWithCodewordEnumeration) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    const int file_size = 1 + static_cast<int>(rng() % 3);
    const int n = file_size + static_cast<int>(rng() % 6);
    const int m = 1 + static_cast<int>(rng() % 4);
    const LinearCode code = trial % 2 ? testing::random_sparse_code(rng, n, file_size, m)
                                      : random_code(rng, n, file_size, m);
    EXPECT_EQ(min_distance(code), testing::min_distance_by_codewords(code))
        << "n=" << n << " M=" << file_size << " m=" << m;
  }
  const LinearCode big = random_code(rng, 7, 4, 2);
  EXPECT_EQ(min_distance(big), testing::min_distance_by_codewords(big));
}

TEST(MinDistanceTest, RefusesInstancesAboveCap) {
  const SquareCode sc = build_square_code(2, 3);
  SearchLimits limits;
  limits.subset_cap = 8;
  EXPECT_THROW(min_distance(sc.code, limits), TooLargeError);
  const SquareCode big = build_square_code(4, 5);  // n = 25
  EXPECT_THROW(min_distance(big.code), TooLargeError);
}

TEST(MinDistanceTest, WitnessHasDeficientRank) {
  const SquareCode sc = build_square_code(2, 4);
  const DistanceResult res = min_distance_witness(sc.code);
  EXPECT_EQ(res.deficient.size(), 9 - res.distance);
  EXPECT_LT(sc.code.entropy(res.deficient), 4);
}

TEST(SearchLimitsTest, EnvironmentOverride) {
  ::unsetenv("LOCREP_SEARCH_CAP");
  EXPECT_EQ(SearchLimits::from_env().subset_cap, 24);
  ::setenv("LOCREP_SEARCH_CAP", "12", 1);
  EXPECT_EQ(SearchLimits::from_env().subset_cap, 12);
  ::setenv("LOCREP_SEARCH_CAP", "abc", 1);
  EXPECT_THROW(SearchLimits::from_env(), UsageError);
  ::unsetenv("LOCREP_SEARCH_CAP");
}

TEST(ErasureDecodableTest, Examples) {
  EXPECT_TRUE(erasure_decodable(repetition_code(), CoordSet{}));
  EXPECT_TRUE(erasure_decodable(repetition_code(), CoordSet{0, 1}));
  EXPECT_FALSE(erasure_decodable(repetition_code(), CoordSet{0, 1, 2}));
  const SquareCode sc = build_square_code(2, 3);
  for (int k = 0; k <= 5; ++k) {
    for_each_subset_of_size(sc.code.coords(), k, [&](CoordSet f) {
      EXPECT_TRUE(erasure_decodable(sc.code, f));
      return true;
    });
  }
}

TEST(ErasureDecodableTest, ToleratesExactlyDistanceMinusOne) {
  std::mt19937_64 rng(13);
  std::vector<LinearCode> codes{repetition_code(), single_parity_code(),
                                build_square_code(2, 3).code, build_square_code(2, 4).code};
  for (int t = 0; t < 10; ++t) codes.push_back(testing::random_sparse_code(rng, 8, 3, 3));
  for (const LinearCode& code : codes) {
    const int d = min_distance(code);
    const CoordSet all = code.coords();
    for_each_subset_of_size(all, d - 1, [&](CoordSet f) {
      EXPECT_TRUE(erasure_decodable(code, f));
      return true;
    });
    bool some_fail = false;
    for_each_subset_of_size(all, d, [&](CoordSet f) {
      some_fail = some_fail || !erasure_decodable(code, f);
      return !some_fail;
    });
    EXPECT_TRUE(some_fail);
  }
}

TEST(EncodeTest, CodewordIsLinearInMessage) {
  std::mt19937_64 rng(14);
  const SquareCode sc = build_square_code(2, 3);
  const FieldSpec& f = sc.code.field();
  std::vector<FieldElement> a(3), b(3), ab(3);
  for (int k = 0; k < 3; ++k) {
    a[k] = testing::random_element(rng, f);
    b[k] = testing::random_element(rng, f);
    ab[k] = f.add(a[k], b[k]);
  }
  const auto ya = sc.code.encode(a), yb = sc.code.encode(b), yab = sc.code.encode(ab);
  for (int i = 0; i < 9; ++i) EXPECT_EQ(yab[i], f.add(ya[i], yb[i]));
  EXPECT_THROW(sc.code.encode(std::vector<FieldElement>(2)), UsageError);
}

}  // namespace
}  // namespace locrep
