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

#include <cstddef>
#include <string>
#include <vector>

namespace hecke {

/// One verified statement about one instance.
struct CheckRecord {
    std::string suite;
    std::string name;
    std::string instance;
    bool ok = true;
    /// Empty on success.
    std::string witness;
};

/// Ordered check records. Order is fixed by the configuration that produced it.
struct Report {
    std::vector<CheckRecord> records;

    void add(std::string suite, std::string name, std::string instance, bool ok, std::string witness = {}) {
        records.push_back({std::move(suite), std::move(name), std::move(instance), ok, ok ? std::string() : std::move(witness)});
    }
    void append(const Report& other) { records.insert(records.end(), other.records.begin(), other.records.end()); }

    [[nodiscard]] std::size_t passed() const {
        std::size_t k = 0;
        for (const auto& r : records) k += r.ok ? 1 : 0;
        return k;
    }
    [[nodiscard]] std::size_t failed() const { return records.size() - passed(); }
    [[nodiscard]] bool ok() const { return failed() == 0; }
};

}  // namespace hecke
