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

// Verification suites over one parameter set, producing ordered reports.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hecke/fusion.hpp"
#include "hecke/parallel.hpp"
#include "hecke/report.hpp"
#include "hecke/rep.hpp"
#include "hecke/weights.hpp"

namespace hecke {

struct SuiteOptions {
    std::uint64_t seed = 1;
    int jobs = 1;
    int fuzz_instances = 500;
    int fuzz_max_size = 6;
    int spectral_samples = 5;
};

/// "m=2 n=2 q=(0,3)" or "m=2 n=2 generic".
template <class S>
[[nodiscard]] std::string instance_label(const Parameters<S>& p) {
    std::string s = "m=" + std::to_string(p.m) + " n=" + std::to_string(p.n);
    if constexpr (is_generic_scalar_v<S>) {
        return s + " generic";
    } else {
        s += " q=(";
        for (std::size_t i = 0; i < p.q.size(); ++i) s += (i ? "," : "") + p.q[i].to_string();
        return s + ")";
    }
}

namespace detail {

inline std::string with_tableau(const std::string& inst, const StandardTableau& t) { return inst + " t=" + t.to_string(); }

inline CheckRecord record(const std::string& suite, const std::string& name, const std::string& inst, const CheckResult& r) {
    return {suite, name, inst, r.ok, r.failure};
}

}  // namespace detail

/// Defining relations, Jucys-Murphy diagonality, unitarity, Yang-Baxter,
/// reflection identity and centrality of e_k(J_1..J_n).
template <class S>
[[nodiscard]] Report relations_suite(const Parameters<S>& p, const SuiteOptions& opt) {
    const std::string suite = "relations";
    const std::string inst = instance_label(p);
    Report rep;
    const auto r = build_representation(p);
    for (const auto& b : r.blocks) {
        const auto res = verify_defining_relations(b);
        rep.add(suite, "defining_relations", inst + " block=" + b.shape.to_string(), res.ok, res.failure);
    }
    auto add = [&](const std::string& name, const CheckResult& res) { rep.add(suite, name, inst, res.ok, res.failure); };
    add("jm_diagonal", verify_jm_diagonal(r));
    add("baxterized_unitarity", verify_unitarity(r, opt.seed + 101, opt.spectral_samples));
    add("yang_baxter", verify_yang_baxter(r, opt.seed + 102, opt.spectral_samples));
    add("reflection_equation", verify_reflection_equation(r, opt.seed + 103, opt.spectral_samples));
    for (int k = 1; k <= p.n; ++k) add("center_e" + std::to_string(k), verify_center(r, k));
    return rep;
}

/// Pair-ratio and hook-ratio identities over every λ, μ up to the given size.
[[nodiscard]] inline std::pair<long, std::string> exhaustive_partition_identities(int max_size, bool pair) {
    long count = 0;
    for (int a = 1; a <= max_size; ++a)
        for (const auto& l : enumerate_partitions(a))
            for (const auto& alpha : l.removable()) {
                if (!pair) {
                    ++count;
                    if (!hook_ratio_check(l, alpha)) return {count, "lambda=" + l.to_string()};
                    continue;
                }
                for (int b = 0; b <= max_size; ++b)
                    for (const auto& mu : enumerate_partitions(b)) {
                        ++count;
                        if (!theta_pair_ratio_check(l, mu, alpha))
                            return {count, "lambda=" + l.to_string() + " mu=" + mu.to_string()};
                    }
            }
    return {count, {}};
}

/// Seeded random (λ, μ, α) with |λ|, |μ| <= max_size; empty witness on success.
[[nodiscard]] inline std::string fuzz_partition_identities(std::uint64_t seed, int instances, int max_size) {
    std::mt19937_64 rng(seed);
    std::vector<std::vector<Partition>> pool;
    for (int n = 0; n <= max_size; ++n) pool.push_back(enumerate_partitions(n));
    auto draw = [&](int lo) {
        const auto size = static_cast<std::size_t>(lo) + rng() % static_cast<std::size_t>(max_size + 1 - lo);
        return pool[size][rng() % pool[size].size()];
    };
    for (int k = 0; k < instances; ++k) {
        const Partition l = draw(1);
        const Partition mu = draw(0);
        const auto rem = l.removable();
        const Cell alpha = rem[rng() % rem.size()];
        if (!theta_pair_ratio_check(l, mu, alpha)) return "pair ratio: lambda=" + l.to_string() + " mu=" + mu.to_string();
        if (!hook_ratio_check(l, alpha)) return "hook ratio: lambda=" + l.to_string();
    }
    return {};
}

/// Weights, their two displays, tableau weights in both forms, telescoping,
/// branching, structural counts and residue separation.
template <class S>
[[nodiscard]] Report identities_suite(const Parameters<S>& p, const SuiteOptions& opt) {
    const std::string suite = "identities";
    const std::string inst = instance_label(p);
    Report rep;
    long dim_sum = 0;
    for (const auto& shape : enumerate_multipartitions(p.m, p.n)) {
        const std::string si = inst + " shape=" + shape.to_string();
        const S def = theta_multipartition_definition(shape, p);
        rep.add(suite, "theta_displays", si, def == theta_multipartition_reformulated(shape, p), "definition " + def.to_string());
        const long count = count_standard_tableaux(shape);
        dim_sum += count * count;
        if (p.m == 1) rep.add(suite, "plancherel", si, def == S(Rational(count) / factorial(p.n)), def.to_string());
    }
    for (const auto& t : all_standard_tableaux(p.m, p.n)) {
        const std::string ti = detail::with_tableau(inst, t);
        const auto theta = theta_tableau_definition(t, p);
        rep.add(suite, "theta_tableau_dual_form", ti, theta == theta_tableau_product(t, p), theta.to_string());
        S product(1);
        for (int k = 1; k <= p.n; ++k) {
            const auto sub = t.restrict(k);
            product *= theta_tableau_definition(sub, p).substitute(residue(t, k, p));
        }
        const S weight = theta_multipartition_definition(t.shape(), p);
        rep.add(suite, "telescoping", ti, product == weight, "product " + product.to_string() + " weight " + weight.to_string());
        rep.add(suite, "weight_branching", ti, theta_branching_check(t, p));
    }
    long expected = factorial(p.n).numerator().get_si();
    for (int i = 0; i < p.n; ++i) expected *= p.m;
    rep.add(suite, "dimension_count", inst, dim_sum == expected, std::to_string(dim_sum) + " != " + std::to_string(expected));
    rep.add(suite, "residue_separation", inst, residues_separate(p.m, p.n, p));

    const auto [pairs, pair_witness] = exhaustive_partition_identities(p.n, true);
    rep.add(suite, "theta_pair_ratio_exhaustive", "sizes<=" + std::to_string(p.n) + " cases=" + std::to_string(pairs),
            pair_witness.empty(), pair_witness);
    const auto [hooks, hook_witness] = exhaustive_partition_identities(p.n, false);
    rep.add(suite, "hook_ratio_exhaustive", "sizes<=" + std::to_string(p.n) + " cases=" + std::to_string(hooks),
            hook_witness.empty(), hook_witness);
    const std::string fuzz = fuzz_partition_identities(opt.seed, opt.fuzz_instances, opt.fuzz_max_size);
    rep.add(suite, "partition_identity_fuzz",
            "seed=" + std::to_string(opt.seed) + " instances=" + std::to_string(opt.fuzz_instances), fuzz.empty(), fuzz);
    return rep;
}

/// Per-tableau fusion checks plus the global orthogonality, resolution of
/// identity and branching statements.
template <class S>
[[nodiscard]] Report fusion_suite(const Parameters<S>& p, const SuiteOptions& opt) {
    const std::string suite = "fusion";
    const std::string inst = instance_label(p);
    const auto r = build_representation(p);
    const auto tabs = r.tableaux();
    struct Job {
        std::vector<CheckRecord> records;
        AlgebraElement<S> e;
    };
    const auto jobs = parallel_map<Job>(static_cast<int>(tabs.size()), opt.jobs, [&](int k) {
        const auto& t = tabs[static_cast<std::size_t>(k)];
        const std::string ti = detail::with_tableau(inst, t);
        Job job;
        auto add = [&](const std::string& name, bool ok, std::string witness = {}) {
            job.records.push_back({suite, name, ti, ok, ok ? std::string() : std::move(witness)});
        };
        const auto trace = fused_idempotent(t, r);
        job.e = trace.final;
        const auto unit = r.matrix_unit(t);
        const auto oracle = jm_idempotent(t, r);
        add("fusion_equals_matrix_unit", job.e == unit);
        add("jm_oracle_equals_matrix_unit", oracle == unit);
        add("fusion_equals_jm_oracle", job.e == oracle);
        add("idempotent", job.e * job.e == job.e);
        add("rank_one", rank(job.e) == 1);
        bool eig = true;
        std::string eig_witness;
        for (int i = 1; i <= p.n && eig; ++i) {
            const auto ji = jm_element(r, i);
            const auto scaled = job.e * residue(t, i, p);
            eig = ji * job.e == scaled && job.e * ji == scaled;
            if (!eig) eig_witness = "J_" + std::to_string(i);
        }
        add("jm_eigenvalues", eig, eig_witness);
        S product(1);
        for (const auto& step : trace.steps) product *= step.factor;
        add("telescoping", product == theta_multipartition(t.shape(), p), product.to_string());
        job.records.push_back(detail::record(suite, "key_identity", ti, verify_key_identity(t, r)));
        if (p.n <= 3) job.records.push_back(detail::record(suite, "raw_phi_product", ti, raw_phi_product_check(t, r)));
        return job;
    });

    Report rep;
    AlgebraElement<S> sum = r.zero();
    for (const auto& j : jobs) {
        rep.records.insert(rep.records.end(), j.records.begin(), j.records.end());
        sum += j.e;
    }
    std::string orth_witness;
    for (std::size_t a = 0; a < jobs.size() && orth_witness.empty(); ++a)
        for (std::size_t b = 0; b < jobs.size() && orth_witness.empty(); ++b)
            if (a != b && !(jobs[a].e * jobs[b].e).is_zero()) orth_witness = tabs[a].to_string() + " x " + tabs[b].to_string();
    rep.add(suite, "orthogonality", inst + " pairs=" + std::to_string(jobs.size() * (jobs.size() - 1)), orth_witness.empty(), orth_witness);
    rep.add(suite, "resolution_of_identity", inst, sum == r.identity());

    if (p.n >= 1) {
        for (const auto& u : all_standard_tableaux(p.m, p.n - 1)) {
            AlgebraElement<S> branch = r.zero();
            for (const auto& x : u.shape().addable()) {
                const auto t = u.extended(x);
                for (std::size_t k = 0; k < tabs.size(); ++k)
                    if (tabs[k] == t) branch += jobs[k].e;
            }
            rep.add(suite, "branching", detail::with_tableau(inst, u), branch == fused_idempotent(u, r).final);
        }
    }
    return rep;
}

}  // namespace hecke
