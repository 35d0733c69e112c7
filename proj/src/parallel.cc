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

#include "ctx/parallel.h"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>
#include <vector>

namespace ctx {

namespace {
std::atomic<unsigned> g_threads{1};
}

void set_num_threads(unsigned n) {
    g_threads = std::max(1u, n);
}

unsigned num_threads() {
    return g_threads;
}

void parallel_chunks(size_t n, const std::function<void(size_t, size_t, size_t)> &fn) {
    size_t workers = std::min<size_t>(g_threads, std::max<size_t>(n, 1));
    if (workers <= 1) {
        fn(0, n, 0);
        return;
    }
    size_t per = (n + workers - 1) / workers;
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (size_t k = 0; k < workers; ++k) {
        size_t b = std::min(n, k * per), e = std::min(n, b + per);
        pool.emplace_back([&, b, e, k] {
            try {
                fn(b, e, k);
            } catch (...) {
                errors[k] = std::current_exception();
            }
        });
    }
    for (auto &t : pool) {
        t.join();
    }
    for (auto &err : errors) {
        if (err) {
            std::rethrow_exception(err);
        }
    }
}

}  // namespace ctx
