#include "harnack/report.hpp"

#include <cmath>

#include "harnack/errors.hpp"

namespace harnack {

std::string to_string(CheckKind kind) {
    switch (kind) {
        case CheckKind::Value: return "value";
        case CheckKind::AtMost: return "at-most";
        case CheckKind::AtLeast: return "at-least";
        case CheckKind::StrictLess: return "strict-less";
        case CheckKind::Flag: return "flag";
    }
    throw Error("unknown check kind");
}

bool evaluate_check(CheckKind kind, double computed, double expected, double tolerance) {
    switch (kind) {
        case CheckKind::Value:
            return std::abs(computed - expected) <= tolerance;
        case CheckKind::AtMost:
            return computed <= expected + tolerance * (1.0 + std::abs(expected));
        case CheckKind::AtLeast:
            return computed >= expected - tolerance * (1.0 + std::abs(expected));
        case CheckKind::StrictLess:
            return computed < expected;
        case CheckKind::Flag:
            return (computed != 0.0) == (expected != 0.0);
    }
    throw Error("unknown check kind");
}

CheckResult make_check(std::string name, CheckKind kind, double computed, double expected,
                       double tolerance) {
    CheckResult c;
    c.name = std::move(name);
    c.kind = kind;
    c.computed = computed;
    c.expected = expected;
    c.tolerance = tolerance;
    c.pass = evaluate_check(kind, computed, expected, tolerance);
    return c;
}

} // namespace harnack
