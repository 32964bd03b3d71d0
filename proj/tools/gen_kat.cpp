// Copyright 2026 The gf2mul Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Writes known-answer vectors computed with the schoolbook multiplier.
//
//   gen_kat [count] [seed] > tests/data/kat_dense.txt

#include <cstdlib>
#include <iostream>
#include <random>
#include <vector>

#include "gf2mul/clmul.hpp"
#include "gf2mul/ring.hpp"

int main(int argc, char** argv) {
  using namespace gf2mul;
  const std::size_t count = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 64;
  const std::uint64_t seed = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 20260101;

  // Word counts; cycled through. Covers sub-kernel sizes, odd sizes and the
  // ring preset sizes.
  const std::vector<std::size_t> word_counts = {1,  2,  3,  4,  5,   7,   8,   9,   12,  16,
                                                17, 24, 31, 32, 40,  48,  63,  64,  96,  100,
                                                128, 160, 192, 255, 256, 282, 320, 570};
  std::mt19937_64 rng(seed);
  std::vector<KatVector> out;
  // (X + 1)(X^6 + X^5 + X^3 + X^2 + X) = X^7 + X^5 + X^4 + X
  out.push_back({PolyWords{0x3}, PolyWords{0x6E}, schoolbook_mul(PolyWords{0x3}, PolyWords{0x6E})});
  for (std::size_t i = 1; i < count; ++i) {
    const std::size_t t = word_counts[i % word_counts.size()];
    PolyWords a(t), b(t);
    for (std::size_t j = 0; j < t; ++j) {
      a[j] = rng();
      b[j] = rng();
    }
    out.push_back({a, b, schoolbook_mul(a, b)});
  }
  std::cout << "# Copyright 2026 The gf2mul Authors\n# SPDX-License-Identifier: Apache-2.0\n";
  std::cout << "# A B C with C = A * B over F2[X]; hex, most significant word first\n";
  write_kat(std::cout, out);
  return 0;
}
