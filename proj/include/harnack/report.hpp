#pragma once

#include <string>
#include <vector>

namespace harnack {

/// Comparison semantics for one check row.
enum class CheckKind {
    Value,      // |computed - expected| <= tolerance
    AtMost,     // computed <= expected + tolerance * (1 + |expected|)
    AtLeast,    // computed >= expected - tolerance * (1 + |expected|)
    StrictLess, // computed < expected (confirming a published violation)
    Flag,       // computed != 0 means true; expected likewise; must match
};

std::string to_string(CheckKind kind);

struct CheckResult {
    std::string name;
    CheckKind kind = CheckKind::Value;
    double computed = 0.0;
    double expected = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

/// Evaluates `kind` against computed/expected/tolerance.
bool evaluate_check(CheckKind kind, double computed, double expected, double tolerance);

CheckResult make_check(std::string name, CheckKind kind, double computed, double expected,
                       double tolerance);

/// One CLI run: the echoed command line, per-check rows, and the
/// conjunction verdict.
struct RunReport {
    std::string command;
    std::vector<CheckResult> checks;
    bool verdict = true;
    double duration_ms = 0.0;

    void add(CheckResult check) {
        verdict = verdict && check.pass;
        checks.push_back(std::move(check));
    }
};

} // namespace harnack
