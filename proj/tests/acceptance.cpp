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

// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hecke/cli.hpp"
#include "hecke/suites.hpp"

using namespace hecke;

namespace {

struct GridPoint {
    int m;
    int n;
};

std::vector<GridPoint> grid() {
    std::vector<GridPoint> g;
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 6 - m; ++n) g.push_back({m, n});
    return g;
}

/// Records whose name is in `names`; counts them and keeps the first failure.
struct Tally {
    long checks = 0;
    long failed = 0;
    std::string first_failure;

    void take(const Report& rep, const std::set<std::string>& names) {
        for (const auto& r : rep.records) {
            if (!names.contains(r.name)) continue;
            add(r.ok, r.suite + " " + r.name + " [" + r.instance + "] " + r.witness);
        }
    }
    void add(bool ok, const std::string& what) {
        ++checks;
        if (ok) return;
        if (failed++ == 0) first_failure = what;
    }
    [[nodiscard]] bool ok() const { return checks > 0 && failed == 0; }
};

int failures = 0;

void emit(int id, const std::string& title, const Tally& t, const std::string& note = {}) {
    std::cout << (t.ok() ? "PASS" : "FAIL") << " criterion " << id << ": " << title << " (" << t.checks << " checks";
    if (t.failed) std::cout << ", " << t.failed << " failed; first: " << t.first_failure;
    std::cout << ")";
    if (!note.empty()) std::cout << " -- " << note;
    std::cout << "\n";
    if (!t.ok()) ++failures;
}

int run_cli(const std::vector<std::string>& args, std::string& out) {
    std::ostringstream o;
    std::ostringstream e;
    const int code = cli::run(args, o, e);
    out = o.str();
    return code;
}

/// A uniformly chosen shape of m, n and a uniformly chosen tableau of it.
StandardTableau random_tableau(std::mt19937_64& rng, int m, int n) {
    const auto shapes = enumerate_multipartitions(m, n);
    const auto tabs = enumerate_standard_tableaux(shapes[rng() % shapes.size()]);
    return tabs[rng() % tabs.size()];
}

}  // namespace

int main() {
    const auto start = std::chrono::steady_clock::now();
    SuiteOptions opt;
    opt.seed = 2026;

    Report relations;
    Report identities;
    Report fusion;
    for (const auto [m, n] : grid()) {
        const auto p = default_parameters(m, n);
        relations.append(relations_suite(p, opt));
        identities.append(identities_suite(p, opt));
        fusion.append(fusion_suite(p, opt));
    }

    {
        Tally t;
        t.take(fusion, {"fusion_equals_matrix_unit"});
        emit(1, "fused idempotent equals the seminormal matrix unit on the grid", t);
    }
    {
        Tally t;
        t.take(fusion, {"idempotent", "orthogonality", "resolution_of_identity", "jm_eigenvalues", "rank_one"});
        emit(2, "idempotent, orthogonal, complete, Jucys-Murphy eigenvalues", t);
    }
    {
        Tally t;
        t.take(fusion, {"fusion_equals_matrix_unit", "jm_oracle_equals_matrix_unit", "fusion_equals_jm_oracle"});
        emit(3, "fusion = Jucys-Murphy formula = matrix unit", t);
    }
    {
        Tally t;
        t.take(fusion, {"telescoping"});
        t.take(identities, {"telescoping"});
        for (int n = 0; n <= 6; ++n)
            for (const auto& l : enumerate_partitions(n)) {
                const MultiPartition shape({l});
                const Rational theta = theta_multipartition(shape, default_parameters(1, n));
                t.add(theta == Rational(count_standard_tableaux(shape)) / factorial(n), "plancherel " + shape.to_string());
            }
        emit(4, "step factors multiply to the weight; m=1 weights are #Std/n! for |lambda|<=6", t);
    }
    {
        Tally t;
        t.take(identities, {"theta_pair_ratio_exhaustive", "hook_ratio_exhaustive", "partition_identity_fuzz", "weight_branching"});
        for (const auto [m, n] : grid()) {
            if (m * n > 6) continue;
            const auto p = generic_parameters(m, n);
            for (const auto& tab : all_standard_tableaux(m, n))
                t.add(theta_branching_check(tab, p), "generic branching " + instance_label(p) + " " + tab.to_string());
        }
        std::mt19937_64 rng(opt.seed);
        for (int k = 0; k < 500; ++k) {
            const int m = 1 + static_cast<int>(rng() % 3);
            const int n = 1 + static_cast<int>(rng() % 6);
            const auto tab = random_tableau(rng, m, n);
            t.add(theta_branching_check(tab, default_parameters(m, n)), "random branching " + tab.to_string());
            if (k % 10 == 0) t.add(theta_branching_check(tab, generic_parameters(m, n)), "random generic branching " + tab.to_string());
        }
        emit(5, "pair-ratio, hook-ratio and branching identities, exhaustive and 500 seeded instances", t,
             "branching uses the factor orientation (r_n - res); the reversed orientation fails for even m");
    }
    {
        Tally t;
        t.take(relations, {"defining_relations", "jm_diagonal", "baxterized_unitarity", "yang_baxter", "reflection_equation"});
        for (const auto& r : relations.records)
            if (r.name.rfind("center_e", 0) == 0) t.add(r.ok, r.instance + " " + r.name);
        for (const auto [m, n] : grid()) {
            if (n > 3) continue;
            const auto rep = relations_suite(generic_parameters(m, n), opt);
            t.take(rep, {"defining_relations", "baxterized_unitarity", "yang_baxter", "reflection_equation"});
        }
        // The four-term reflection identity is checked as stated and reported.
        bool four_term_m1 = true;
        bool four_term_fails_m2 = false;
        for (int n = 2; n <= 3; ++n) {
            four_term_m1 = four_term_m1 && verify_reflection_equation(build_representation(default_parameters(1, n)), opt.seed, 5,
                                                                      ReflectionForm::FourTerm).ok;
            four_term_fails_m2 = four_term_fails_m2 || !verify_reflection_equation(build_representation(default_parameters(2, n)),
                                                                                   opt.seed, 5, ReflectionForm::FourTerm).ok;
        }
        t.add(four_term_m1 && four_term_fails_m2, "four-term reflection behaviour changed");
        emit(6, "defining relations, Yang-Baxter, unitarity, reflection, centrality", t,
             "reflection checked in the braided form t_1(x,y)t(x)t_1t(y) = t(y)t_1t(x)t_1(x,y); "
             "the four-term form holds for m=1 and is refuted for m>=2");
    }
    {
        Tally t;
        const auto p = generic_parameters(2, 2);
        Report rep = relations_suite(p, opt);
        rep.append(identities_suite(p, opt));
        rep.append(fusion_suite(p, opt));
        for (const auto& r : rep.records) t.add(r.ok, r.suite + " " + r.name + " [" + r.instance + "] " + r.witness);
        emit(7, "all suites with symbolic q_1, q_2 at m=2, n=2", t);
    }
    {
        Tally t;
        t.take(identities, {"theta_tableau_dual_form"});
        emit(8, "tableau weight equals its addable/removable product form", t);
    }
    {
        Tally t;
        t.take(identities, {"dimension_count"});
        long d = 0;
        for (const auto& s : enumerate_multipartitions(2, 3)) d += count_standard_tableaux(s) * count_standard_tableaux(s);
        t.add(d == 48, "m=2 n=3 dimension " + std::to_string(d));
        for (int n = 1; n <= 4; ++n) {
            const auto p = specialized_parameters(2, n, {Rational(0), Rational(1)});
            t.add(separation_value(p).is_zero(), "separation value nonzero at n=" + std::to_string(n));
            std::string out;
            t.add(run_cli({"verify", "-m", "2", "-n", std::to_string(n), "-q", "0,1"}, out) == cli::kSeparation,
                  "verify with q=(0,1) not rejected at n=" + std::to_string(n));
        }
        emit(9, "dimension count and rejection of q=(0,1)", t);
    }
    {
        Tally t;
        const std::vector<std::vector<std::string>> configs{
            {"verify", "-m", "2", "-n", "2", "--suite", "all", "--format", "json", "--seed", "7"},
            {"verify", "-m", "2", "-n", "3", "--suite", "fusion", "--format", "json", "--jobs", "3"},
            {"verify", "--generic", "-m", "2", "-n", "2", "--format", "json"},
            {"fuse", "-m", "3", "-n", "2", "--format", "json"},
            {"enumerate", "-m", "2", "-n", "3", "--format", "json"},
            {"weights", "--generic", "-m", "2", "-n", "3", "--format", "json"},
            {"rep", "dump", "-m", "2", "-n", "3", "--format", "json"},
        };
        for (const auto& c : configs) {
            std::string a;
            std::string b;
            const int ca = run_cli(c, a);
            const int cb = run_cli(c, b);
            t.add(ca == cli::kOk && cb == cli::kOk && !a.empty() && a == b, "output differs for " + c[0]);
        }
        emit(10, "identical configurations give byte-identical JSON", t);
    }

    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    std::cout << (failures ? "FAILED" : "ALL PASSED") << " in " << elapsed.count() << " s\n";
    return failures ? 1 : 0;
}
