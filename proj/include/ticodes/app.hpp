// Copyright 2026 The ticodes Authors
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

// Command-line front end. Exit codes: 0 success, 1 domain error, 2 usage.

#ifndef TICODES_APP_HPP
#define TICODES_APP_HPP

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "ticodes/appendix.hpp"
#include "ticodes/barrier.hpp"
#include "ticodes/distance.hpp"
#include "ticodes/instantiate.hpp"
#include "ticodes/report.hpp"
#include "ticodes/spec_file.hpp"

#ifndef TICODES_DATA_DIR
#define TICODES_DATA_DIR "data"
#endif

namespace ticodes {

namespace cli {

struct GlobalOptions {
    uint64_t seed = 1;
    bool json = false;
    bool no_cache = false;
    unsigned threads = 1;

    unsigned workers() const {
        if (threads == 0) {
            return std::max(1u, std::thread::hardware_concurrency());
        }
        return threads;
    }
};

struct Options {
    std::string spec_path;
    // distance
    std::string method = "auto";
    size_t exact_cap = kDefaultExactCap;
    uint64_t trials = 10000;
    // barrier
    size_t cap = kDefaultBarrierCap;
    std::string sector = "auto";
    bool emit_path = false;
    // bounds
    std::optional<double> n;
    std::optional<size_t> k;
    std::optional<size_t> d;
    // compactify
    bool erratum = false;
    // reproduce-appendix
    std::string dir = std::string(TICODES_DATA_DIR) + "/fixtures";
    // export-matrix
    std::string which = "hx";
    std::string format = "mtx";
    std::string output;
};

inline Json monomial_map(const Substitution &s, const VarContext &from) {
    Json j = Json::object();
    for (size_t i = 0; i < s.images.size(); i++) {
        j[from.name(i)] = monomial_to_string(s.images[i], *s.target);
    }
    return j;
}

inline Json relation_list(const std::vector<std::vector<int64_t>> &rels, const VarContext &ctx) {
    Json j = Json::array();
    for (const auto &r : rels) {
        j.push_back(relation_to_string(r, ctx));
    }
    return j;
}

inline Json code_json(const TwoBlockCode &c) {
    return Json{{"f", c.f().to_string()}, {"g", c.g().to_string()}};
}

inline FiniteAbelianGroup spec_group(const CodeSpec &s) {
    auto q = quotient(s.presentation());
    if (auto *inf = std::get_if<InfiniteQuotient>(&q)) {
        throw InfiniteQuotientError("boundary conditions leave " + std::to_string(inf->free_rank) +
                                    " direction(s) uncompactified");
    }
    return std::get<FiniteAbelianGroup>(std::move(q));
}

inline Json group_json(const FiniteAbelianGroup &g) {
    return Json{{"order", g.order()}, {"invariant_factors", g.invariant_factors()}};
}

inline void require_two_block(const CodeSpec &s, const std::string &cmd) {
    if (s.is_classical()) {
        throw Error(cmd + " needs a two-block code; '" + s.name + "' has no g");
    }
}

inline Json cmd_check(const CodeSpec &s) {
    require_two_block(s, "check");
    TwoBlockCode c = s.code();
    const size_t d = s.context->dimension();
    auto vectors = monomial_group_vectors(c);
    auto index = monomial_lattice_index(c);
    bool ok = is_indecomposable(c);
    Json r;
    r["indecomposable"] = ok;
    r["verdict"] = ok ? "indecomposable" : "decomposable";
    r["lattice_index"] = index ? Json(*index) : Json(nullptr);
    r["lattice_rank"] = smith_normal_form(stack_vectors(vectors, d)).rank;
    if (s.boundary) {
        auto pres = s.presentation();
        auto group = spec_group(s);
        auto inst = instantiate(c, pres);
        bool fin = is_indecomposable_finite(c, pres);
        r["finite"] = Json{{"group", group_json(group)},
                           {"indecomposable", fin},
                           {"verdict", fin ? "indecomposable" : "decomposable"},
                           {"lattice_index", finite_lattice_index(c, pres)},
                           {"tanner_components", tanner_components(inst)}};
    } else {
        r["finite"] = nullptr;
    }
    return r;
}

inline Json cmd_classify(const CodeSpec &s) {
    require_two_block(s, "classify");
    TwoBlockCode c = s.code();
    auto tag = family_tree(c);
    return Json{{"family_tree", tag.to_string()},
                {"odd_count", tag.odd_count},
                {"weights", {{"f", c.f().weight()}, {"g", c.g().weight()}}},
                {"hypergraph_product", c.is_hypergraph_product()},
                {"indecomposable", is_indecomposable(c)}};
}

inline Json cmd_lift(const CodeSpec &s) {
    require_two_block(s, "lift");
    TwoBlockCode c = s.code();
    ParentLift lift = lift_to_parent(c);
    const auto &pctx = *lift.parent_context();
    Json independent = Json::array();
    for (size_t i : lift.independent) {
        independent.push_back(pctx.name(i));
    }
    TwoBlockCode back = compactify(lift.parent, lift.substitution, lift.twists);
    return Json{{"parent",
                 {{"variables", pctx.names()}, {"f", lift.parent.code().f().to_string()},
                  {"g", lift.parent.code().g().to_string()}}},
                {"substitution", monomial_map(lift.substitution, pctx)},
                {"twists", relation_list(lift.twists, pctx)},
                {"canonical_twists", lift.canonical_twists().to_rows()},
                {"independent", independent},
                {"round_trip", back.normalized() == c}};
}

inline Json cmd_compactify(const CodeSpec &s, const Options &o) {
    require_two_block(s, "compactify");
    if (!s.lift) {
        throw Error("compactify needs a [lift] section in '" + s.name + "'");
    }
    if (o.erratum && !s.erratum) {
        throw Error("--erratum given but '" + s.name + "' has no [erratum] section");
    }
    auto out = replay_lift(s, o.erratum);
    const auto &pctx = *s.lift->parent_context;
    TwoBlockCode parent(s.lift->parent_f, s.lift->parent_g);
    return Json{{"parent", code_json(parent)},
                {"child", code_json(out.child.normalized())},
                {"listed", code_json(s.code())},
                {"matches_listed", out.matches},
                {"erratum_applied", o.erratum},
                {"substitution", monomial_map(out.substitution, pctx)},
                {"twists", relation_list(out.twists, pctx)},
                {"f2_cancellation", out.child.weight() < parent.weight()}};
}

inline Json matrix_summary(const BinaryMatrix &m) {
    size_t nnz = 0, max_row = 0;
    for (size_t r = 0; r < m.rows(); r++) {
        size_t w = m.row_weight(r);
        nnz += w;
        max_row = std::max(max_row, w);
    }
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"nnz", nnz}, {"max_row_weight", max_row}};
}

inline Json cmd_instantiate(const CodeSpec &s) {
    auto group = spec_group(s);
    if (s.is_classical()) {
        auto H = instantiate_classical(s.f, group);
        return Json{{"group", group_json(group)}, {"n", H.cols()}, {"h", matrix_summary(H)}};
    }
    auto inst = instantiate(s.code(), s.presentation());
    return Json{{"group", group_json(group)},
                {"n", inst.num_qubits()},
                {"hx", matrix_summary(inst.hx)},
                {"hz", matrix_summary(inst.hz)},
                {"css_commutes", inst.hx.multiply_transpose(inst.hz).is_zero()}};
}

inline Json cmd_params(const CodeSpec &s) {
    auto group = spec_group(s);
    if (s.is_classical()) {
        auto H = instantiate_classical(s.f, group);
        size_t rank = H.rank();
        return Json{{"n", H.cols()}, {"k", H.cols() - rank}, {"rank_h", rank}};
    }
    auto p = params(instantiate(s.code(), s.presentation()));
    return Json{{"n", p.n}, {"k", p.k}, {"rank_hx", p.rank_hx}, {"rank_hz", p.rank_hz}};
}

inline Json cmd_distance(const CodeSpec &s, const Options &o, const GlobalOptions &g) {
    if (o.method != "auto" && o.method != "exact" && o.method != "random") {
        throw CLI::ValidationError("--method", "expected auto, exact or random");
    }
    auto group = spec_group(s);
    if (s.is_classical()) {
        auto H = instantiate_classical(s.f, group);
        auto d = classical_distance(H, o.exact_cap);
        return Json{{"method", method_name(DistanceMethod::ExactEnumeration)},
                    {"n", H.cols()},
                    {"d", d ? Json(*d) : Json(nullptr)}};
    }
    auto inst = instantiate(s.code(), s.presentation());
    auto p = params(inst);
    bool exact = o.method == "exact" || (o.method == "auto" && inst.num_qubits() <= o.exact_cap);
    DistanceResult r = exact ? exact_distance(inst, o.exact_cap)
                             : random_upper_bound(inst, o.trials, g.seed, RandomSearchOptions{g.workers(), true});
    Json sectors = Json::array();
    for (const auto &sd : r.sectors) {
        sectors.push_back(Json{{"sector", sector_name(sd.sector)}, {"distance", sd.distance}});
    }
    Json j{{"method", method_name(r.method)},
           {"n", p.n},
           {"k", p.k},
           {"d_upper", r.d_upper},
           {"d_lower", r.d_lower ? Json(*r.d_lower) : Json(nullptr)},
           {"sectors", sectors}};
    if (r.witness) {
        j["witness"] = Json{{"sector", sector_name(*r.witness_sector)},
                            {"weight", r.witness->weight()},
                            {"support", support_json(*r.witness)}};
    } else {
        j["witness"] = nullptr;
    }
    if (r.method == DistanceMethod::RandomInformationSet) {
        j["seed"] = r.seed;
        j["trials"] = r.trials;
    }
    return j;
}

inline Json barrier_json(const BarrierResult &r, bool emit_path) {
    Json j{{"barrier", r.barrier},
           {"sector", barrier_sector_name(r.sector)},
           {"target_support", support_json(r.target)},
           {"states_visited", r.states_visited}};
    if (emit_path) {
        j["path"] = r.path;
    }
    return j;
}

inline Json cmd_barrier(const CodeSpec &s, const Options &o, const GlobalOptions &g) {
    auto group = spec_group(s);
    Json j{{"cap", o.cap}};
    if (s.is_classical()) {
        if (o.sector != "auto" && o.sector != "classical") {
            throw Error("classical codes only support --sector classical");
        }
        auto H = instantiate_classical(s.f, group);
        auto r = classical_barrier(H, o.cap);
        j["result"] = r ? barrier_json(*r, o.emit_path) : Json(nullptr);
        j["barrier"] = r ? Json(r->barrier) : Json(nullptr);
        if (!r) {
            j["note"] = "no nonzero codeword";
        }
        return j;
    }
    auto inst = instantiate(s.code(), s.presentation());
    if (o.sector == "x" || o.sector == "z") {
        auto r = sector_barrier(inst, o.sector == "x" ? Sector::X : Sector::Z, o.cap);
        j["result"] = barrier_json(r, o.emit_path);
        j["barrier"] = r.barrier;
        return j;
    }
    if (o.sector != "auto" && o.sector != "both") {
        throw Error("quantum codes support --sector x, z or both");
    }
    auto r = code_barrier(inst, o.cap, g.workers() > 1);
    j["result"] = barrier_json(r.best, o.emit_path);
    j["barrier"] = r.best.barrier;
    Json sectors = Json::array();
    for (const auto &sr : r.sectors) {
        sectors.push_back(barrier_json(sr, o.emit_path));
    }
    j["sectors"] = sectors;
    return j;
}

template <class T>
Json optional_json(const std::optional<T> &v) {
    return v ? Json(*v) : Json(nullptr);
}

inline Json cmd_bounds(const CodeSpec &s, const Options &o) {
    require_two_block(s, "bounds");
    double n = 0;
    if (o.n) {
        n = *o.n;
    } else if (s.boundary) {
        n = static_cast<double>(2 * spec_group(s).order());
    } else {
        throw Error("bounds needs --n or a [boundary] section");
    }
    auto b = bound_report(s.code(), n, o.k, o.d);
    Json j{{"w", b.w},
           {"v", b.v},
           {"D", b.D},
           {"n", b.n},
           {"indecomposable", b.indecomposable},
           {"applicable", b.applicable},
           {"distance_upper_scale", optional_json(b.distance_upper_scale)},
           {"distance_lower_scale", optional_json(b.distance_lower_scale)},
           {"tradeoff_exponent", optional_json(b.tradeoff_exponent)},
           {"observed_k", optional_json(b.observed_k)},
           {"observed_d", optional_json(b.observed_d)},
           {"observed_tradeoff", optional_json(b.observed_tradeoff)},
           {"statements", b.statements},
           {"violations", b.violations}};
    if (b.observed_d && b.distance_upper_scale) {
        j["observed_d_within_scale"] = static_cast<double>(*b.observed_d) <= *b.distance_upper_scale;
    }
    return j;
}

inline Json cmd_reproduce_appendix(const Options &o) {
    auto rep = reproduce_appendix(o.dir);
    Json rows = Json::array();
    for (const auto &r : rep.rows) {
        Json row{{"order", r.order},
                 {"name", r.name},
                 {"file", r.file},
                 {"listed", {{"f", r.listed_f}, {"g", r.listed_g}}},
                 {"literal", {{"f", r.literal_f}, {"g", r.literal_g}}},
                 {"literal_status", r.literal_pass ? "PASS" : "FAIL"},
                 {"status", r.pass() ? "PASS" : "FAIL"},
                 {"f2_cancellation", r.f2_cancellation},
                 {"parent_weight", r.parent_weight},
                 {"child_weight", r.child_weight}};
        if (r.erratum_pass) {
            row["erratum_status"] = *r.erratum_pass ? "PASS" : "FAIL";
            row["erratum_note"] = r.erratum_note;
        }
        rows.push_back(row);
    }
    return Json{{"rows", rows},
                {"rows_total", rep.rows.size()},
                {"literal_passes", rep.literal_passes()},
                {"verdict", rep.verdict()}};
}

inline const BinaryMatrix &pick_matrix(const CodeInstance &inst, const std::string &which) {
    if (which == "hx") {
        return inst.hx;
    }
    if (which == "hz") {
        return inst.hz;
    }
    throw Error("--which must be hx or hz for a two-block code");
}

inline void write_matrix(std::ostream &os, const BinaryMatrix &m, const std::string &format) {
    if (format == "mtx") {
        write_matrix_market(os, m);
    } else if (format == "coo") {
        write_coordinate_list(os, m);
    } else {
        throw Error("--format must be mtx or coo");
    }
}

/// Returns the report, or nullopt when the matrix went to `out` directly.
inline std::optional<Json> cmd_export(const CodeSpec &s, const Options &o, std::ostream &out) {
    auto group = spec_group(s);
    BinaryMatrix H(0, 0);
    std::string which = o.which;
    if (s.is_classical()) {
        if (which != "h" && which != "hx") {
            throw Error("classical codes export a single matrix (--which h)");
        }
        which = "h";
        H = instantiate_classical(s.f, group);
    } else {
        H = pick_matrix(instantiate(s.code(), s.presentation()), which);
    }
    if (o.output.empty()) {
        write_matrix(out, H, o.format);
        return std::nullopt;
    }
    std::ofstream f(o.output);
    if (!f) {
        throw Error("cannot write '" + o.output + "'");
    }
    write_matrix(f, H, o.format);
    Json j = matrix_summary(H);
    j["which"] = which;
    j["format"] = o.format;
    j["path"] = o.output;
    return j;
}

}  // namespace cli

/// Entry point shared by the binary and the tests.
inline int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"ticodes: translation-invariant CSS codes from Laurent polynomials"};
    app.name("ticodes");
    app.require_subcommand(1);
    app.fallthrough();
    cli::GlobalOptions g;
    cli::Options o;
    app.add_option("--seed", g.seed, "seed for randomized searches")->capture_default_str();
    app.add_flag("--json", g.json, "emit the JSON report");
    app.add_flag("--no-cache", g.no_cache, "bypass the result cache");
    app.add_option("--threads", g.threads, "worker threads (0 = all cores)")->capture_default_str();

    auto with_spec = [&](const char *name, const char *help) {
        auto *sc = app.add_subcommand(name, help);
        sc->add_option("spec", o.spec_path, "code-spec file")->required();
        return sc;
    };
    with_spec("check", "indecomposability on Z^d and on the boundary group");
    with_spec("classify", "family-tree parity class");
    with_spec("lift", "find an HGP parent with substitution and twists");
    auto *compact = with_spec("compactify", "apply the [lift] section and compare with the child");
    compact->add_flag("--erratum", o.erratum, "apply [erratum] overrides");
    with_spec("instantiate", "build the parity-check matrices");
    with_spec("params", "n and k of the finite instance");
    auto *dist = with_spec("distance", "exact or randomized distance");
    dist->add_option("--method", o.method, "auto, exact or random")
        ->check(CLI::IsMember({"auto", "exact", "random"}))
        ->capture_default_str();
    dist->add_option("--exact-cap", o.exact_cap, "largest n for exact enumeration")->capture_default_str();
    dist->add_option("--trials", o.trials, "randomized search trials")->capture_default_str();
    auto *bar = with_spec("barrier", "exact energy barrier");
    bar->add_option("--cap", o.cap, "largest n searched")
        ->check(CLI::Range(size_t{1}, kMaxBarrierCap))
        ->capture_default_str();
    bar->add_option("--sector", o.sector, "x, z, both or classical")
        ->check(CLI::IsMember({"auto", "x", "z", "both", "classical"}))
        ->capture_default_str();
    bar->add_flag("--emit-path", o.emit_path, "include the optimal flip sequence");
    auto *bounds = with_spec("bounds", "locality dimension and distance scalings");
    bounds->add_option("--n", o.n, "number of qubits to evaluate at");
    bounds->add_option("--k", o.k, "observed k");
    bounds->add_option("--d", o.d, "observed distance");
    auto *appx = app.add_subcommand("reproduce-appendix", "replay every parent-to-child table row");
    appx->add_option("--dir", o.dir, "fixture directory")->capture_default_str();
    auto *exp = with_spec("export-matrix", "write HX, HZ or H");
    exp->add_option("--which", o.which, "hx, hz or h")->check(CLI::IsMember({"hx", "hz", "h"}))->capture_default_str();
    exp->add_option("--format", o.format, "mtx or coo")->check(CLI::IsMember({"mtx", "coo"}))->capture_default_str();
    exp->add_option("-o,--output", o.output, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        auto start = std::chrono::steady_clock::now();
        Report rep;
        rep.command = command;
        std::optional<CodeSpec> spec;
        std::string spec_text;
        if (command != "reproduce-appendix") {
            spec = load_spec(o.spec_path);
            spec_text = print_spec(*spec);
            rep.spec = spec_json(*spec);
        }
        Json params = Json::object();
        params["seed"] = g.seed;
        params["threads"] = g.threads;
        std::function<Json()> compute;
        bool cacheable = true;
        if (command == "check") {
            compute = [&] { return cli::cmd_check(*spec); };
        } else if (command == "classify") {
            compute = [&] { return cli::cmd_classify(*spec); };
        } else if (command == "lift") {
            compute = [&] { return cli::cmd_lift(*spec); };
        } else if (command == "compactify") {
            params["erratum"] = o.erratum;
            compute = [&] { return cli::cmd_compactify(*spec, o); };
        } else if (command == "instantiate") {
            compute = [&] { return cli::cmd_instantiate(*spec); };
        } else if (command == "params") {
            compute = [&] { return cli::cmd_params(*spec); };
        } else if (command == "distance") {
            params["method"] = o.method;
            params["exact_cap"] = o.exact_cap;
            params["trials"] = o.trials;
            compute = [&] { return cli::cmd_distance(*spec, o, g); };
        } else if (command == "barrier") {
            params["cap"] = o.cap;
            params["sector"] = o.sector;
            params["emit_path"] = o.emit_path;
            compute = [&] { return cli::cmd_barrier(*spec, o, g); };
        } else if (command == "bounds") {
            params["n"] = cli::optional_json(o.n);
            params["k"] = cli::optional_json(o.k);
            params["d"] = cli::optional_json(o.d);
            compute = [&] { return cli::cmd_bounds(*spec, o); };
        } else if (command == "reproduce-appendix") {
            params["dir"] = o.dir;
            cacheable = false;
            compute = [&] { return cli::cmd_reproduce_appendix(o); };
        } else {
            cacheable = false;
            params["which"] = o.which;
            params["format"] = o.format;
            auto j = cli::cmd_export(*spec, o, out);
            if (!j) {
                return 0;
            }
            compute = [j] { return *j; };
        }
        rep.parameters = params;

        ResultCache cache(g.no_cache || !cacheable ? std::nullopt : ResultCache::default_directory());
        const std::string key = ResultCache::key(command, spec_text, params);
        if (auto hit = cache.load(key)) {
            rep.result = *hit;
            rep.cache_hit = true;
        } else {
            rep.result = compute();
            cache.store(key, rep.result);
        }
        rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (g.json) {
            out << rep.to_json().dump(2) << "\n";
        } else {
            out << render_human(rep);
        }
        if (command == "reproduce-appendix" && rep.result.value("verdict", std::string()) == "FAIL") {
            return 1;
        }
        return 0;
    } catch (const CLI::ValidationError &e) {
        err << "ticodes " << command << ": " << e.what() << "\n";
        return 2;
    } catch (const ParseError &e) {
        err << "ticodes " << command << ": parse error: " << e.what() << "\n";
        return 1;
    } catch (const Error &e) {
        err << "ticodes " << command << ": " << e.what() << "\n";
        return 1;
    } catch (const std::exception &e) {
        err << "ticodes " << command << ": internal error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace ticodes

#endif
