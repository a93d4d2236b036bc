#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ratgeom/plane_geometry.hpp"

namespace ratgeom {

/// Outcome of one CLI command. status = error maps to exit code 1,
/// flagged (budget exhausted) to 2, ok to 0.
struct CommandResult {
    enum class Status { ok, flagged, error };
    Status status = Status::ok;
    Json payload;
    std::vector<std::string> diagnostics;

    int exit_code() const {
        switch (status) {
            case Status::ok: return 0;
            case Status::flagged: return 2;
            default: return 1;
        }
    }
    Json envelope() const;
};

/// kP1(m, n) for k = 1..kmax as exact (U, W) rows.
CommandResult cmd_multiples(const BigRat& m, const BigRat& n, int kmax);

/// shape: "triangle" | "parallelogram" | "quad". points_doc holds
/// {"points": [{"label", "x", "y"}, ...]} (or a bare array).
CommandResult cmd_approx(const std::string& shape, const Json& points_doc, const Real& eps,
                         const SearchBudget& budget);

/// Inclusive rational grid scan; payload {"csv": ...} with columns
/// m, n, singular, discriminant, torsion_order (blank if infinite),
/// oval_check. Row-major: m outer, n inner, both ascending.
CommandResult cmd_scan(const BigRat& m_min, const BigRat& m_max, int m_steps, const BigRat& n_min,
                       const BigRat& n_max, int n_steps);

CommandResult cmd_verify(const Json& certificate_doc);

/// direction: "q2c" (needs x, y) or "c2q" (needs U, W).
CommandResult cmd_transform(const std::string& direction, const BigRat& m, const BigRat& n,
                            const std::optional<BigRat>& x, const std::optional<BigRat>& y,
                            const std::optional<BigRat>& U, const std::optional<BigRat>& W);

PointSet parse_point_set(const Json& doc);

}  // namespace ratgeom
