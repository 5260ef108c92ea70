/*
   Copyright 2026 The hecke-fusion Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <algorithm>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace hecke {

/// f(0), ..., f(count-1) on up to `jobs` threads; results keep index order.
template <class R>
[[nodiscard]] std::vector<R> parallel_map(int count, int jobs, const std::function<R(int)>& f) {
    std::vector<R> out(static_cast<std::size_t>(std::max(count, 0)));
    jobs = std::clamp(jobs, 1, std::max(count, 1));
    if (jobs == 1) {
        for (int i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = f(i);
        return out;
    }
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(jobs));
    std::vector<std::thread> pool;
    for (int w = 0; w < jobs; ++w)
        pool.emplace_back([&, w] {
            try {
                for (int i = w; i < count; i += jobs) out[static_cast<std::size_t>(i)] = f(i);
            } catch (...) {
                errors[static_cast<std::size_t>(w)] = std::current_exception();
            }
        });
    for (auto& th : pool) th.join();
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

}  // namespace hecke
