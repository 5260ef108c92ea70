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

#include "doctest.h"
#include "hecke/suites.hpp"

using namespace hecke;

namespace {

void require_clean(const Report& rep) {
    for (const auto& r : rep.records) {
        INFO(r.suite, " ", r.name, " ", r.instance, " ", r.witness);
        CHECK(r.ok);
    }
}

}  // namespace

TEST_CASE("suites pass on small instances") {
    SuiteOptions opt;
    opt.fuzz_instances = 50;
    for (int m = 1; m <= 2; ++m)
        for (int n = 1; n <= 3; ++n) {
            const auto p = default_parameters(m, n);
            require_clean(relations_suite(p, opt));
            require_clean(identities_suite(p, opt));
            require_clean(fusion_suite(p, opt));
        }
    const auto g = generic_parameters(2, 2);
    require_clean(fusion_suite(g, opt));
}

TEST_CASE("suite output is independent of the job count") {
    SuiteOptions one;
    SuiteOptions four;
    four.jobs = 4;
    const auto p = default_parameters(2, 3);
    const auto a = fusion_suite(p, one);
    const auto b = fusion_suite(p, four);
    REQUIRE(a.records.size() == b.records.size());
    for (std::size_t k = 0; k < a.records.size(); ++k) {
        CHECK(a.records[k].name == b.records[k].name);
        CHECK(a.records[k].instance == b.records[k].instance);
    }
}

TEST_CASE("instance labels") {
    CHECK(instance_label(default_parameters(2, 2)) == "m=2 n=2 q=(0,3)");
    CHECK(instance_label(generic_parameters(2, 2)) == "m=2 n=2 generic");
}
