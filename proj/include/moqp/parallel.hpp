// Copyright 2026 The moqp Authors
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

// OpenMP shim. Kernels use the MOQP_OMP_* macros so the library also builds
// (serially) without OpenMP; do not include <omp.h> elsewhere.

#ifndef MOQP_PARALLEL_HPP_
#define MOQP_PARALLEL_HPP_

#ifdef _OPENMP
#include <omp.h>
#define MOQP_PRAGMA(x) _Pragma(#x)
#define MOQP_OMP(directive) MOQP_PRAGMA(omp directive)
#else
#define MOQP_OMP(directive)
#endif

namespace moqp::parallel {

inline int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

inline int thread_id() {
#ifdef _OPENMP
  return omp_get_thread_num();
#else
  return 0;
#endif
}

inline constexpr bool enabled() {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

}  // namespace moqp::parallel

#endif  // MOQP_PARALLEL_HPP_
