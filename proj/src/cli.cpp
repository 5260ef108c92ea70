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

#include "hecke/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hecke/fusion.hpp"
#include "hecke/serialize.hpp"
#include "hecke/suites.hpp"
#include "hecke/weights.hpp"

namespace hecke::cli {
namespace {

using json::Json;

struct Options {
    int m = 2;
    int n = 2;
    std::string q;
    bool generic = false;
    std::string format = "text";
    std::optional<int> tableau;
    std::string suite = "all";
    bool grid = false;
    std::uint64_t seed = 1;
    int jobs = 1;
};

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

bool as_json(const Options& o) { return o.format == "json"; }

Parameters<Rational> specialized(const Options& o) {
    if (o.q.empty()) return default_parameters(o.m, o.n);
    std::vector<Rational> q;
    std::stringstream ss(o.q);
    std::string item;
    while (std::getline(ss, item, ',')) q.push_back(Rational::parse(item));
    if (static_cast<int>(q.size()) != o.m)
        throw UsageError("-q needs " + std::to_string(o.m) + " values, got " + std::to_string(q.size()));
    return specialized_parameters(o.m, o.n, std::move(q));
}

template <class S>
Json encode_params(const Parameters<S>& p) {
    Json q = Json::array();
    for (const auto& v : p.q) q.push_back(json::encode(v));
    return Json{{"m", p.m}, {"n", p.n}, {"mode", p.generic() ? "generic" : "specialized"}, {"q", q}};
}

template <class S>
std::string residues_text(const StandardTableau& t, const Parameters<S>& p) {
    std::string s = "(";
    const auto res = residue_sequence(t, p);
    for (std::size_t i = 0; i < res.size(); ++i) s += (i ? ", " : "") + res[i].to_string();
    return s + ")";
}

template <class S>
void print_matrix(std::ostream& out, const Matrix<S>& a, const std::string& indent) {
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        out << indent << "[";
        for (Eigen::Index j = 0; j < a.cols(); ++j) out << (j ? ", " : "") << a(i, j).to_string();
        out << "]\n";
    }
}

template <class S>
int cmd_enumerate(const Parameters<S>& p, const Options& o, std::ostream& out) {
    require_separation(p);
    Json shapes = Json::array();
    int id = 0;
    long dimension = 0;
    if (!as_json(o)) out << "H(" << instance_label(p) << ")\n";
    for (const auto& shape : enumerate_multipartitions(p.m, p.n)) {
        const auto tabs = enumerate_standard_tableaux(shape);
        Json list = Json::array();
        dimension += static_cast<long>(tabs.size() * tabs.size());
        if (!as_json(o)) out << shape.to_string() << "  tableaux=" << tabs.size() << "\n";
        for (const auto& t : tabs) {
            ++id;
            Json res = Json::array();
            for (const auto& v : residue_sequence(t, p)) res.push_back(json::encode(v));
            list.push_back(Json{{"id", id}, {"tableau", json::encode(t)}, {"residues", res}});
            if (!as_json(o)) out << "  [" << id << "] " << t.to_string() << "  res=" << residues_text(t, p) << "\n";
        }
        shapes.push_back(Json{{"shape", json::encode(shape)}, {"tableaux", list}});
    }
    if (as_json(o)) out << json::dump(Json{{"parameters", encode_params(p)}, {"shapes", shapes}, {"tableaux", id}, {"dimension", dimension}});
    else out << "shapes: " << shapes.size() << "  tableaux: " << id << "  dimension: " << dimension << "\n";
    return kOk;
}

template <class S>
int cmd_weights(const Parameters<S>& p, const Options& o, std::ostream& out) {
    require_separation(p);
    Json shapes = Json::array();
    int id = 0;
    for (const auto& shape : enumerate_multipartitions(p.m, p.n)) {
        const S theta = theta_multipartition(shape, p);
        if (!as_json(o)) out << shape.to_string() << "  theta=" << theta.to_string() << "\n";
        Json list = Json::array();
        for (const auto& t : enumerate_standard_tableaux(shape)) {
            ++id;
            const auto f = theta_tableau(t, p);
            const S top = p.n ? theta_tableau_at_top(t, p) : S(1);
            list.push_back(Json{{"id", id}, {"tableau", json::encode(t)}, {"theta_z", f.to_string()}, {"theta_at_top", json::encode(top)}});
            if (!as_json(o)) out << "  [" << id << "] " << t.to_string() << "  theta_t(z)=" << f.to_string() << "  at r_n: " << top.to_string() << "\n";
        }
        shapes.push_back(Json{{"shape", json::encode(shape)}, {"theta", json::encode(theta)}, {"tableaux", list}});
    }
    if (as_json(o)) out << json::dump(Json{{"parameters", encode_params(p)}, {"shapes", shapes}});
    return kOk;
}

template <class S>
int cmd_rep_dump(const Parameters<S>& p, const Options& o, std::ostream& out) {
    const auto r = build_representation(p);
    Json blocks = Json::array();
    for (const auto& b : r.blocks) {
        Json basis = Json::array();
        for (const auto& t : b.basis) basis.push_back(json::encode(t));
        Json gens = Json::object();
        for (std::size_t i = 0; i < b.gens.size(); ++i) gens[i == 0 ? "t" : "t_" + std::to_string(i)] = json::encode(b.gens[i]);
        blocks.push_back(Json{{"shape", json::encode(b.shape)}, {"dim", b.dim()}, {"basis", basis}, {"generators", gens}});
        if (as_json(o)) continue;
        out << b.shape.to_string() << "  dim=" << b.dim() << "\n";
        for (const auto& t : b.basis) out << "  basis " << t.to_string() << "\n";
        for (std::size_t i = 0; i < b.gens.size(); ++i) {
            out << "  " << (i == 0 ? "t" : "t_" + std::to_string(i)) << ":\n";
            print_matrix(out, b.gens[i], "    ");
        }
    }
    if (as_json(o)) out << json::dump(Json{{"parameters", encode_params(p)}, {"blocks", blocks}});
    return kOk;
}

template <class S>
int cmd_fuse(const Parameters<S>& p, const Options& o, std::ostream& out, std::ostream& err) {
    const auto r = build_representation(p);
    const auto tabs = r.tableaux();
    std::vector<int> ids;
    if (o.tableau) {
        if (*o.tableau < 1 || *o.tableau > static_cast<int>(tabs.size())) {
            err << "tableau id " << *o.tableau << " out of range 1.." << tabs.size() << "\n";
            return kUsage;
        }
        ids.push_back(*o.tableau);
    } else {
        for (int k = 1; k <= static_cast<int>(tabs.size()); ++k) ids.push_back(k);
    }
    const auto traces = parallel_map<FusionTrace<S>>(static_cast<int>(ids.size()), o.jobs, [&](int k) {
        return fused_idempotent(tabs[static_cast<std::size_t>(ids[static_cast<std::size_t>(k)] - 1)], r);
    });
    Json list = Json::array();
    for (std::size_t k = 0; k < traces.size(); ++k) {
        const auto& tr = traces[k];
        Json steps = Json::array();
        for (const auto& s : tr.steps)
            steps.push_back(Json{{"k", s.k}, {"target", json::encode(s.target)}, {"factor", json::encode(s.factor)}, {"trace", json::encode(s.checksum)}});
        list.push_back(Json{{"id", ids[k]}, {"tableau", json::encode(tr.tableau)}, {"shape", json::encode(tr.tableau.shape())},
                            {"steps", steps}, {"element", json::encode(r, tr.final)}});
        if (as_json(o)) continue;
        out << "[" << ids[k] << "] " << tr.tableau.to_string() << "\n";
        for (const auto& s : tr.steps)
            out << "  step " << s.k << "  z=" << s.target.to_string() << "  factor=" << s.factor.to_string()
                << "  trace=" << s.checksum.to_string() << "\n";
        for (std::size_t b = 0; b < r.blocks.size(); ++b) {
            const auto& a = tr.final.block(b);
            for (Eigen::Index i = 0; i < a.rows(); ++i)
                for (Eigen::Index j = 0; j < a.cols(); ++j)
                    if (!a(i, j).is_zero())
                        out << "  E[" << r.blocks[b].shape.to_string() << "](" << i << "," << j << ") = " << a(i, j).to_string() << "\n";
        }
    }
    if (as_json(o)) out << json::dump(Json{{"parameters", encode_params(p)}, {"idempotents", list}});
    return kOk;
}

template <class S>
Report run_suites(const Parameters<S>& p, const Options& o) {
    SuiteOptions so;
    so.seed = o.seed;
    so.jobs = o.jobs;
    Report rep;
    if (o.suite == "relations" || o.suite == "all") rep.append(relations_suite(p, so));
    if (o.suite == "identities" || o.suite == "all") rep.append(identities_suite(p, so));
    if (o.suite == "fusion" || o.suite == "all") rep.append(fusion_suite(p, so));
    return rep;
}

int cmd_verify(const Options& o, std::ostream& out) {
    Report rep;
    if (o.grid) {
        for (int m = 1; m <= 3; ++m)
            for (int n = 1; n <= 6 - m; ++n) rep.append(run_suites(default_parameters(m, n), o));
    } else if (o.generic) {
        rep = run_suites(generic_parameters(o.m, o.n), o);
    } else {
        rep = run_suites(specialized(o), o);
    }
    if (as_json(o)) {
        out << json::dump(json::encode(rep));
    } else {
        for (const auto& r : rep.records) {
            out << (r.ok ? "PASS " : "FAIL ") << r.suite << " " << r.name << " [" << r.instance << "]";
            if (!r.ok) out << "  " << r.witness;
            out << "\n";
        }
        out << "checks: " << rep.records.size() << "  passed: " << rep.passed() << "  failed: " << rep.failed() << "\n";
    }
    return rep.ok() ? kOk : kVerificationFailed;
}

template <class F>
int dispatch(const Options& o, F&& f) {
    if (o.generic) return f(generic_parameters(o.m, o.n));
    return f(specialized(o));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Primitive idempotents of degenerate cyclotomic Hecke algebras by fusion", "hecke-fusion"};
    app.require_subcommand(1);
    app.add_option("-m", o.m, "number of cyclotomic parameters")->check(CLI::Range(1, 16));
    app.add_option("-n", o.n, "rank")->check(CLI::Range(0, 12));
    app.add_option("-q", o.q, "comma-separated rationals q_1,...,q_m");
    app.add_flag("--generic", o.generic, "treat q_1..q_m as formal symbols");
    app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--jobs", o.jobs, "worker threads")->check(CLI::Range(1, 256));

    auto* enumerate = app.add_subcommand("enumerate", "list multipartitions and standard tableaux")->fallthrough();
    auto* weights = app.add_subcommand("weights", "weights of shapes and tableaux")->fallthrough();
    auto* rep = app.add_subcommand("rep", "seminormal representation")->fallthrough();
    rep->require_subcommand(1);
    auto* dump = rep->add_subcommand("dump", "print generator matrices")->fallthrough();
    auto* fuse = app.add_subcommand("fuse", "fuse primitive idempotents")->fallthrough();
    fuse->add_option("--tableau", o.tableau, "tableau id from enumerate (default: all)");
    auto* verify = app.add_subcommand("verify", "run verification suites")->fallthrough();
    verify->add_option("--suite", o.suite, "suite to run")->check(CLI::IsMember({"relations", "identities", "fusion", "all"}));
    verify->add_flag("--grid", o.grid, "run over the default test grid");
    verify->add_option("--seed", o.seed, "seed for randomized checks");

    const auto start = std::chrono::steady_clock::now();
    int code = kOk;
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
        if (o.generic && !o.q.empty()) throw UsageError("-q and --generic are exclusive");
        if (o.grid && (o.generic || !o.q.empty())) throw UsageError("--grid uses the default parameters");
        if (*enumerate) code = dispatch(o, [&](const auto& p) { return cmd_enumerate(p, o, out); });
        else if (*weights) code = dispatch(o, [&](const auto& p) { return cmd_weights(p, o, out); });
        else if (*dump) code = dispatch(o, [&](const auto& p) { return cmd_rep_dump(p, o, out); });
        else if (*fuse) code = dispatch(o, [&](const auto& p) { return cmd_fuse(p, o, out, err); });
        else if (*verify) code = cmd_verify(o, out);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kUsage;
    } catch (const UsageError& e) {
        err << e.what() << "\n";
        return kUsage;
    } catch (const ParseError& e) {
        err << e.what() << "\n";
        return kUsage;
    } catch (const SeparationViolated& e) {
        err << e.what() << "\n";
        return kSeparation;
    } catch (const InvariantBreach& e) {
        err << e.what() << "\n";
        return kInvariant;
    } catch (const PoleAtEvaluationPoint& e) {
        err << e.what() << "\n";
        return kInvariant;
    } catch (const Error& e) {
        err << e.what() << "\n";
        return kUsage;
    }
    if (o.format == "text") {
        const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
        out << "elapsed: " << elapsed.count() << " s\n";
    }
    return code;
}

}  // namespace hecke::cli
