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

// Parent-to-child compactification table: every fixture with a [lift]
// section and an `order` is replayed and compared with its listed child.

#ifndef TICODES_APPENDIX_HPP
#define TICODES_APPENDIX_HPP

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "ticodes/codes.hpp"
#include "ticodes/spec_file.hpp"

namespace ticodes {

struct CompactificationOutcome {
    TwoBlockCode child;
    std::vector<std::vector<int64_t>> twists;
    Substitution substitution;
    bool matches = false;
};

/// Applies the [lift] assignments (plus erratum overrides when asked) to the
/// parent and compares the normalized result with the listed child.
inline CompactificationOutcome replay_lift(const CodeSpec &s, bool apply_erratum) {
    if (!s.lift) {
        throw Error("spec '" + s.name + "' has no [lift] section");
    }
    const auto &l = *s.lift;
    auto resolved = resolve_lift(l.parent_context, s.context, lift_assignments(s, apply_erratum));
    TwoBlockCode child = compactify(HGPCode(TwoBlockCode(l.parent_f, l.parent_g)), resolved.substitution, resolved.twists);
    bool matches = child.normalized() == s.code();
    return CompactificationOutcome{std::move(child), std::move(resolved.twists), std::move(resolved.substitution),
                                   matches};
}

struct AppendixRow {
    int64_t order = 0;
    std::string name;
    std::string file;
    std::string listed_f, listed_g;
    std::string literal_f, literal_g;
    bool literal_pass = false;
    std::optional<bool> erratum_pass;  // set when the row carries an erratum
    std::string erratum_note;
    size_t parent_weight = 0;
    size_t child_weight = 0;
    bool f2_cancellation = false;  // terms collided and cancelled mod 2

    bool pass() const {
        return literal_pass || erratum_pass.value_or(false);
    }
};

struct AppendixReport {
    std::vector<AppendixRow> rows;
    double seconds = 0;

    size_t literal_passes() const {
        return static_cast<size_t>(std::count_if(rows.begin(), rows.end(), [](const auto &r) { return r.literal_pass; }));
    }
    bool all_literal() const {
        return literal_passes() == rows.size() && !rows.empty();
    }
    bool all_with_errata() const {
        return !rows.empty() && std::all_of(rows.begin(), rows.end(), [](const auto &r) { return r.pass(); });
    }
    /// PASS (as listed), PASS-WITH-ERRATA, or FAIL.
    std::string verdict() const {
        if (all_literal()) {
            return "PASS";
        }
        return all_with_errata() ? "PASS-WITH-ERRATA" : "FAIL";
    }
};

inline AppendixRow appendix_row(const CodeSpec &s, const std::string &file) {
    AppendixRow row;
    row.order = s.lift->order.value_or(0);
    row.name = s.name;
    row.file = file;
    TwoBlockCode listed = s.code();
    row.listed_f = listed.f().to_string();
    row.listed_g = listed.g().to_string();
    auto literal = replay_lift(s, false);
    TwoBlockCode lit = literal.child.normalized();
    row.literal_f = lit.f().to_string();
    row.literal_g = lit.g().to_string();
    row.literal_pass = literal.matches;
    if (s.erratum) {
        row.erratum_pass = replay_lift(s, true).matches;
        row.erratum_note = s.erratum->note;
    }
    row.parent_weight = s.lift->parent_f.weight() + s.lift->parent_g.weight();
    row.child_weight = listed.weight();
    row.f2_cancellation = row.child_weight < row.parent_weight;
    return row;
}

/// Every `*.code` file in `dir` whose [lift] carries an order, sorted by it.
inline AppendixReport reproduce_appendix(const std::filesystem::path &dir) {
    if (!std::filesystem::is_directory(dir)) {
        throw Error("fixture directory '" + dir.string() + "' not found");
    }
    auto start = std::chrono::steady_clock::now();
    std::vector<std::filesystem::path> files;
    for (const auto &e : std::filesystem::directory_iterator(dir)) {
        if (e.is_regular_file() && e.path().extension() == ".code") {
            files.push_back(e.path());
        }
    }
    std::sort(files.begin(), files.end());
    AppendixReport rep;
    for (const auto &f : files) {
        CodeSpec s = load_spec(f.string());
        if (!s.lift || !s.lift->order) {
            continue;
        }
        rep.rows.push_back(appendix_row(s, f.filename().string()));
    }
    if (rep.rows.empty()) {
        throw Error("no table rows found in '" + dir.string() + "'");
    }
    std::stable_sort(rep.rows.begin(), rep.rows.end(), [](const auto &a, const auto &b) { return a.order < b.order; });
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

}  // namespace ticodes

#endif
