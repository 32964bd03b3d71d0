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

#include "kernel_table.hpp"

namespace gf2mul::detail {
namespace {

// Same body as gf2mul::clmul64_portable, duplicated to keep this file free of
// the public headers.
struct PortablePolicy {
  static inline void mul(Word a, Word b, Word& lo, Word& hi) {
    Word l = 0;
    Word h = 0;
    for (unsigned i = 0; i < 64; ++i) {
      const Word mask = Word{0} - ((b >> i) & 1U);
      l ^= (a << i) & mask;
      h ^= ((a >> 1) >> (63 - i)) & mask;
    }
    lo = l;
    hi = h;
  }
};

#include "kernels_generic.inc"

}  // namespace

const KernelTable& portable_kernel_table() {
  static const KernelTable table = make_scalar_table<PortablePolicy>();
  return table;
}

}  // namespace gf2mul::detail
