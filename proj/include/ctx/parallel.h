// Copyright 2026 The ctx Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <functional>

namespace ctx {

/// Worker count used by the library's internal loops. Defaults to 1.
void set_num_threads(unsigned n);
unsigned num_threads();

/// Splits [0, n) into contiguous chunks, one per worker; chunk k gets index k.
/// Callers merge per-chunk results in chunk order, so output never depends on timing.
void parallel_chunks(size_t n, const std::function<void(size_t begin, size_t end, size_t chunk)> &fn);

}  // namespace ctx
