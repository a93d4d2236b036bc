#include "ratgeom/cli_core.hpp"

#include <sstream>

#include "ratgeom/errors.hpp"

namespace ratgeom {

Json CommandResult::envelope() const {
    Json j;
    j["status"] = status == Status::ok ? "ok" : status == Status::flagged ? "flagged" : "error";
    j["payload"] = payload;
    j["diagnostics"] = diagnostics;
    return j;
}

static CommandResult fail(const std::string& what) {
    CommandResult r;
    r.status = CommandResult::Status::error;
    r.payload = Json::object();
    r.diagnostics.push_back(what);
    return r;
}

CommandResult cmd_multiples(const BigRat& m, const BigRat& n, int kmax) {
    try {
        FamilyParams params{m, n};
        if (params.is_singular()) throw SingularParams();
        if (kmax < 1) throw std::invalid_argument("kmax must be >= 1");
        CubicCurve curve = cubic_of(params);
        CurvePoint P1 = special_points(params).P1;
        CommandResult r;
        r.payload["m"] = m.str();
        r.payload["n"] = n.str();
        r.payload["curve"] = {{"A", curve.A.str()}, {"B", curve.B.str()}, {"C", curve.C.str()}};
        r.payload["points"] = Json::array();
        CurvePoint acc = CurvePoint::infinity();
        for (int k = 1; k <= kmax; ++k) {
            acc = add_unchecked(curve, acc, P1);
            Json row;
            row["k"] = k;
            if (acc.is_infinity())
                row["infinity"] = true;
            else {
                row["U"] = acc.U().str();
                row["W"] = acc.W().str();
            }
            r.payload["points"].push_back(row);
        }
        return r;
    } catch (const std::exception& e) {
        return fail(e.what());
    }
}

PointSet parse_point_set(const Json& doc) {
    const Json& arr = doc.is_array() ? doc : doc.at("points");
    PointSet pts;
    int idx = 0;
    for (const auto& e : arr) {
        ++idx;
        std::string label = e.contains("label") ? e["label"].get<std::string>()
                                                : "P" + std::to_string(idx);
        auto coord = [&](const char* key) -> BigRat {
            const Json& v = e.at(key);
            if (v.is_string()) return BigRat::parse_decimal(v.get<std::string>());
            if (v.is_number_integer()) return BigRat(v.get<long>());
            if (v.is_number_float()) {
                mpq_class q;
                mpq_set_d(q.get_mpq_t(), v.get<double>());
                return BigRat(BigInt(q.get_num()), BigInt(q.get_den()));
            }
            throw std::invalid_argument("point coordinate must be a string or number");
        };
        pts.push_back(make_input_point(std::move(label), coord("x"), coord("y")));
    }
    return pts;
}

CommandResult cmd_approx(const std::string& shape, const Json& points_doc, const Real& eps,
                         const SearchBudget& budget) {
    try {
        PointSet pts = parse_point_set(points_doc);
        ApproxResult res;
        if (shape == "triangle")
            res = approx_triangle(pts, eps);
        else if (shape == "parallelogram")
            res = approx_parallelogram(pts, eps, budget);
        else if (shape == "quad" || shape == "quadrilateral")
            res = approx_quadrilateral(pts, eps, budget);
        else
            throw std::invalid_argument("unknown shape '" + shape +
                                        "' (expected triangle|parallelogram|quad)");
        CommandResult r;
        r.payload = certificate_to_json(res.cert, res.gap, res.budget_exhausted);
        if (res.budget_exhausted) {
            r.status = CommandResult::Status::flagged;
            r.diagnostics.push_back("search budget exhausted; best-found certificate emitted");
        }
        return r;
    } catch (const std::exception& e) {
        return fail(e.what());
    }
}

CommandResult cmd_scan(const BigRat& m_min, const BigRat& m_max, int m_steps, const BigRat& n_min,
                       const BigRat& n_max, int n_steps) {
    try {
        if (m_steps < 1 || n_steps < 1) throw std::invalid_argument("step counts must be positive");
        auto grid = [](const BigRat& lo, const BigRat& hi, int steps) {
            std::vector<BigRat> v;
            BigRat step = steps > 1 ? (hi - lo) / BigRat(steps - 1) : BigRat(0);
            for (int i = 0; i < steps; ++i) v.push_back(lo + BigRat(i) * step);
            return v;
        };
        std::ostringstream csv;
        csv << "m,n,singular,discriminant,torsion_order,oval_check\n";
        for (const BigRat& m : grid(m_min, m_max, m_steps))
            for (const BigRat& n : grid(n_min, n_max, n_steps)) {
                FamilyParams params{m, n};
                bool sing = params.is_singular();
                csv << m.str() << ',' << n.str() << ',' << (sing ? 1 : 0) << ','
                    << family_discriminant(params).str() << ',';
                if (!sing) {
                    if (auto ord = torsion_scan(params)) csv << *ord;
                    csv << ',' << (oval_membership_check(params) ? 1 : 0) << '\n';
                } else {
                    csv << ",0\n";
                }
            }
        CommandResult r;
        r.payload["csv"] = csv.str();
        return r;
    } catch (const std::exception& e) {
        return fail(e.what());
    }
}

CommandResult cmd_verify(const Json& certificate_doc) {
    try {
        RationalCertificate cert = certificate_from_json(certificate_doc);
        VerifyResult v = certificate_verify(cert);
        CommandResult r;
        r.payload["valid"] = v.ok;
        r.payload["reasons"] = v.reasons;
        if (!v.ok) {
            r.status = CommandResult::Status::error;
            r.diagnostics = v.reasons;
        }
        return r;
    } catch (const std::exception& e) {
        return fail(e.what());
    }
}

CommandResult cmd_transform(const std::string& direction, const BigRat& m, const BigRat& n,
                            const std::optional<BigRat>& x, const std::optional<BigRat>& y,
                            const std::optional<BigRat>& U, const std::optional<BigRat>& W) {
    try {
        FamilyParams params{m, n};
        CommandResult r;
        if (direction == "q2c") {
            if (!x || !y) throw std::invalid_argument("q2c requires --x and --y");
            CurvePoint pt = quartic_to_cubic(params, *x, *y);
            r.payload = {{"U", pt.U().str()}, {"W", pt.W().str()}};
        } else if (direction == "c2q") {
            if (!U || !W) throw std::invalid_argument("c2q requires --U and --W");
            auto [qx, qy] = cubic_to_quartic(params, CurvePoint::affine(*U, *W));
            r.payload = {{"x", qx.str()}, {"y", qy.str()}};
        } else {
            throw std::invalid_argument("direction must be q2c or c2q");
        }
        return r;
    } catch (const std::exception& e) {
        return fail(e.what());
    }
}

}  // namespace ratgeom
