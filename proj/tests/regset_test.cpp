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


#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "locrep/bounds.hpp"
#include "locrep/regset.hpp"
#include "locrep/square.hpp"
#include "oracles.hpp"

namespace locrep {
namespace {

using testing::repetition_code;
using testing::single_parity_code;

int coord(int r, int row, int col) { return GridIndex{row, col}.coordinate(r); }

TEST(IsRegeneratingTest, Examples) {
  const SquareCode sc = build_square_code(2, 3);
  for (int i = 0; i < 9; ++i) EXPECT_TRUE(is_regenerating(sc.code, i, sc.code.coords()));
  EXPECT_TRUE(is_regenerating(sc.code, 0, grid_row(2, 0)));
  EXPECT_FALSE(is_regenerating(single_parity_code(), 0, CoordSet{0, 1}));
  EXPECT_THROW(is_regenerating(sc.code, 0, CoordSet{1, 2}), UsageError);
  EXPECT_THROW(is_regenerating(sc.code, 9, CoordSet{9}), UsageError);
}

TEST(MinimalRegsetsTest, Examples) {
  const SquareCode sc = build_square_code(2, 3);
  const auto sets = minimal_regsets(sc.code, 0, 3);
  std::vector<CoordSet> members;
  for (const auto& s : sets) members.push_back(s.members);
  EXPECT_NE(std::find(members.begin(), members.end(), grid_row(2, 0)), members.end());
  EXPECT_NE(std::find(members.begin(), members.end(), grid_col(2, 0)), members.end());

  const auto rep = minimal_regsets(repetition_code(), 0, 2);
  ASSERT_EQ(rep.size(), 2u);
  EXPECT_EQ(rep[0].members, (CoordSet{0, 1}));
  EXPECT_EQ(rep[1].members, (CoordSet{0, 2}));

  EXPECT_TRUE(minimal_regsets(single_parity_code(), 0, 2).empty());
  const auto full = minimal_regsets(single_parity_code(), 0, 4);
  ASSERT_EQ(full.size(), 1u);
  EXPECT_EQ(full[0].members, (CoordSet{0, 1, 2, 3}));
}

TEST(MinimalRegsetsTest, OutputIsMinimalAndOrdered) {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 10; ++t) {
    const LinearCode code = testing::random_sparse_code(rng, 8, 3, 3);
    for (int i = 0; i < 8; ++i) {
      const auto sets = minimal_regsets(code, i, 8);
      for (std::size_t k = 0; k < sets.size(); ++k) {
        EXPECT_TRUE(is_regenerating(code, i, sets[k].members));
        for (int j : sets[k].members.members()) {
          if (j != i) {
            EXPECT_FALSE(is_regenerating(code, i, sets[k].members.without(j)));
          }
        }
        if (k > 0) {
          const CoordSet a = sets[k - 1].members, b = sets[k].members;
          EXPECT_TRUE(a.size() < b.size() || (a.size() == b.size() && lex_less(a, b)));
        }
      }
    }
  }
}

TEST(NontrivialUnionTest, Examples) {
  const SquareCode sc = build_square_code(2, 3);
  const RegeneratingSet row13{coord(2, 0, 2), grid_row(2, 0)};
  const RegeneratingSet col31{coord(2, 2, 0), grid_col(2, 0)};
  const RegeneratingSet row11{coord(2, 0, 0), grid_row(2, 0)};
  EXPECT_TRUE(is_nontrivial_union(sc.code, {row13}));
  EXPECT_TRUE(is_nontrivial_union(sc.code, {row13, col31}));
  EXPECT_FALSE(is_nontrivial_union(sc.code, {row13, row11}));
  EXPECT_TRUE(is_nontrivial_union(sc.code, {}));
  const RegeneratingSet bogus{0, CoordSet{0, 4}};
  EXPECT_THROW(is_nontrivial_union(sc.code, {bogus}), UsageError);
}

TEST(UnionEntropyTest, Examples) {
  const SquareCode sc = build_square_code(2, 3);
  const RegeneratingSet row13{coord(2, 0, 2), grid_row(2, 0)};
  const RegeneratingSet col31{coord(2, 2, 0), grid_col(2, 0)};
  EXPECT_TRUE(check_union_entropy(sc.code, {row13}));
  EXPECT_TRUE(check_union_entropy(sc.code, {row13, col31}));
  EXPECT_EQ(union_of({row13, col31}).size(), 5);
  EXPECT_LE(sc.code.entropy(union_of({row13, col31})), 3);
  EXPECT_TRUE(check_union_entropy(sc.code, {}));
  EXPECT_THROW(check_union_entropy(sc.code, {row13, RegeneratingSet{0, grid_row(2, 0)}}),
               UsageError);
}

TEST(UnionEntropyTest, HoldsOnRandomSequences) {
  std::mt19937_64 rng(22);
  int checked = 0;
  for (int t = 0; t < 12; ++t) {
    const LinearCode code = testing::random_sparse_code(rng, 6 + static_cast<int>(rng() % 4),
                                                        2 + static_cast<int>(rng() % 3), 3);
    const RegSetIndex index = RegSetIndex::build(code, code.length());
    for (int k = 0; k < 20; ++k) {
      const RegSetSequence seq = testing::random_nontrivial_union(rng, index, 4);
      ASSERT_TRUE(is_nontrivial_union(code, seq));
      EXPECT_TRUE(check_union_entropy(code, seq));
      ++checked;
    }
  }
  EXPECT_EQ(checked, 240);
}

TEST(PhiTest, Examples) {
  const SquareCode sc = build_square_code(2, 3);
  EXPECT_EQ(phi(sc.code, 0, 9), 0);
  EXPECT_EQ(phi(sc.code, 1, 9), 3);
  EXPECT_EQ(phi(sc.code, 2, 9), 5);
  EXPECT_EQ(phi(sc.code, 1, 3), 3);
  EXPECT_EQ(phi(sc.code, 2, 3), 5);
  EXPECT_THROW(phi(sc.code, -1, 9), UsageError);
}

TEST(PhiTest, UndefinedWhenCoordinatesRunOut) {
  // Repetition code: one set of size 2 covers a second target, so no
  // nontrivial union of 3 sets exists.
  EXPECT_EQ(phi(repetition_code(), 1, 3), 2);
  EXPECT_EQ(phi(repetition_code(), 2, 3), 3);
  EXPECT_EQ(phi(repetition_code(), 3, 3), std::nullopt);
}

TEST(PhiTest, MinimalSetsMatchUnrestrictedSearch) {
  std::mt19937_64 rng(23);
  std::vector<LinearCode> codes{build_square_code(2, 3).code, build_square_code(2, 4).code,
                                repetition_code(), single_parity_code()};
  for (int t = 0; t < 15; ++t) {
    const int n = 5 + static_cast<int>(rng() % 5);
    codes.push_back(testing::random_sparse_code(rng, n, 2 + static_cast<int>(rng() % 3), 3));
  }
  for (const LinearCode& code : codes) {
    const int n = code.length();
    const std::vector<int> oracle = testing::phi_unrestricted(code, n);
    const PhiProfile prof = phi_profile(code, n, n);
    for (std::size_t x = 0; x < oracle.size(); ++x) {
      if (oracle[x] < 0) {
        EXPECT_EQ(prof.phi.size(), x);
      } else {
        ASSERT_LT(x, prof.phi.size());
        EXPECT_EQ(prof.phi[x], oracle[x]) << "x=" << x;
      }
    }
  }
}

TEST(PhiTest, WitnessesAreValidMinimizers) {
  const SquareCode sc = build_square_code(2, 4);
  const PhiProfile prof = phi_profile(sc.code, 5, 9);
  ASSERT_EQ(prof.phi.size(), 6u);
  for (std::size_t x = 0; x < prof.phi.size(); ++x) {
    const RegSetSequence& w = prof.witnesses[x];
    EXPECT_EQ(w.size(), x);
    EXPECT_TRUE(is_nontrivial_union(sc.code, w));
    EXPECT_EQ(union_of(w).size(), prof.phi[x]);
  }
}

TEST(PhiTest, IncreasesByAtLeastOne) {
  std::mt19937_64 rng(24);
  std::vector<LinearCode> codes{build_square_code(2, 3).code, build_square_code(2, 4).code};
  for (int t = 0; t < 10; ++t) codes.push_back(testing::random_sparse_code(rng, 8, 3, 3));
  for (const LinearCode& code : codes) {
    const PhiProfile prof = phi_profile(code, code.length(), code.length());
    EXPECT_EQ(prof.phi[0], 0);
    for (std::size_t x = 1; x < prof.phi.size(); ++x) EXPECT_GE(prof.phi[x], prof.phi[x - 1] + 1);
  }
}

TEST(PhiTest, SquareCodeBelowGPlusX) {
  for (int m : {3, 4}) {
    const SquareCode sc = build_square_code(2, m);
    const PhiProfile prof = phi_profile(sc.code, 5, 9);
    ASSERT_EQ(prof.phi.size(), 6u);
    for (int x = 0; x <= 5; ++x) EXPECT_LE(prof.phi[x], g_function(x, 2) + x);
  }
}

TEST(RhoTest, Examples) {
  EXPECT_EQ(rho(build_square_code(2, 3).code), 1);
  EXPECT_EQ(rho(build_square_code(2, 4).code), 2);
  EXPECT_EQ(rho(repetition_code()), 0);
  EXPECT_EQ(rho_profile(build_square_code(2, 4).code, 9).rho, 2);
}

TEST(RhoTest, WitnessUnionsLeaveCoordinatesUncovered) {
  std::mt19937_64 rng(25);
  std::vector<LinearCode> codes{build_square_code(2, 3).code, build_square_code(2, 4).code};
  for (int t = 0; t < 10; ++t) codes.push_back(testing::random_sparse_code(rng, 8, 4, 3));
  for (const LinearCode& code : codes) {
    const PhiProfile prof = rho_profile(code, code.length());
    for (int x = 0; x <= prof.rho; ++x) {
      EXPECT_NE(union_of(prof.witnesses[x]), code.coords());
    }
    // The distance never exceeds the rho-based bound.
    EXPECT_LE(min_distance(code), bound_general(code.length(), code.file_size(), 1, prof.rho));
  }
}

TEST(RhoTest, DefaultCapUsesDeclaredLocality) {
  const SquareCode sc = build_square_code(2, 3);
  EXPECT_EQ(default_size_cap(sc.code), 3);
  EXPECT_EQ(default_size_cap(repetition_code()), 3);
}

TEST(VerifyLocalityTest, Examples) {
  EXPECT_TRUE(verify_locality(build_square_code(2, 3).code, 2, 3));
  EXPECT_TRUE(verify_locality(repetition_code(), 1, 3));
  EXPECT_FALSE(verify_locality(single_parity_code(), 2, 2));
  EXPECT_TRUE(verify_locality(single_parity_code(), 3, 2));
  EXPECT_FALSE(verify_locality(build_square_code(2, 3).code, 2, 4));
}

TEST(VerifyLocalityTest, ReportsViolation) {
  const auto v = find_locality_violation(single_parity_code(), 2, 2);
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(v->coordinate, 0);
  EXPECT_TRUE(v->other_erasures.empty());
}

TEST(VerifyLocalityTest, Guards) {
  const LinearCode code = build_square_code(2, 3).code;
  EXPECT_THROW(verify_locality(code, 2, 1), UsageError);
  EXPECT_THROW(verify_locality(code, 2, 5), TooLargeError);
  const LinearCode big = build_square_code(5, 6).code;  // n = 36
  EXPECT_THROW(verify_locality(big, 5, 3), TooLargeError);
}

TEST(VerifyLocalityTest, DeltaTwoMatchesSingleSmallSet) {
  std::mt19937_64 rng(26);
  for (int t = 0; t < 20; ++t) {
    const LinearCode code = testing::random_sparse_code(rng, 7, 3, 2);
    for (int r = 1; r <= 4; ++r) {
      bool every = true;
      for (int i = 0; i < code.length(); ++i) {
        every = every && !minimal_regsets(code, i, r + 1).empty();
      }
      EXPECT_EQ(verify_locality(code, r, 2), every);
    }
  }
}

}  // namespace
}  // namespace locrep
