// Copyright 2026 The qwsed Authors
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

#ifndef QWSED_LATTICE_HPP_
#define QWSED_LATTICE_HPP_

#include <vector>

namespace qwsed {

using IntMatrix = std::vector<std::vector<long long>>;  // row-major

// Basis of the integer kernel {x in Z^r : A x = 0} of a k x r integer matrix,
// computed with unimodular column operations. Throws NumericalError on 64-bit
// overflow.
std::vector<std::vector<long long>> integer_kernel_basis(const IntMatrix& a);

}  // namespace qwsed

#endif  // QWSED_LATTICE_HPP_
