// Quadrilateral and parallelogram approximation pipelines.

#include <cmath>
#include <functional>

#include "geometry_internal.hpp"

namespace ratgeom {

using namespace detail;

namespace {

double dbl(const Real& x) { return x.convert_to<double>(); }

struct HubTriangle {
    BigRat h1;           // rational altitude from the hub vertex
    RationalAngle a1;    // split angle toward the first base vertex
    RationalAngle b1;    // split angle toward the second
    BigRat la, lb;       // hub->first and hub->second lengths
    RationalAngle omega; // apex angle a1 + b1
    BigRat base_len;     // h1 (tan a1 + tan b1)
};

// Rational shadow of a triangle with a preserved apex: altitude h and the
// two split angles alpha, beta at the apex, all angles landing in C_Q.
std::optional<HubTriangle> select_hub_triangle(const Real& h, const Real& alpha, const Real& beta,
                                               const Real& delta, bool need_nonzero_cos) {
    auto acute = [](const RationalAngle& a) { return a.cos.sign() > 0; };
    BigRat h1 = rational_near(h, delta / 2);
    if (h1.sign() <= 0) return std::nullopt;
    Real ad = delta / (2 * (1 + h));
    RationalAngle a1 = rational_angle_near_if(alpha, ad, acute);
    RationalAngle b1 = rational_angle_near_if(beta, ad, acute);
    RationalAngle omega = a1.compose(b1);
    if (omega.sin.sign() <= 0) return std::nullopt;
    if (need_nonzero_cos && omega.cos.is_zero()) return std::nullopt;
    BigRat base = h1 * (a1.tan() + b1.tan());
    return HubTriangle{h1, a1, b1, h1 / a1.cos, h1 / b1.cos, omega, base};
}

// Rational point on a line through P at `angle` from PQ (|PQ| = r), with
// signed position q near `target` and QR = p rational. `variant` shifts
// the rationalization to produce alternative candidates deterministically.
std::optional<LinePQPoint> select_line_point(const BigRat& r, const RationalAngle& angle,
                                             const Real& target, const Real& delta, int variant) {
    BigRat aq = r * r * angle.sin * angle.sin;
    Real aR = to_real(aq);
    Real sbar = target - to_real(r * angle.cos);
    Real ustar = sbar + sqrt(sbar * sbar + aR);
    if (!(ustar > 0)) return std::nullopt;
    Real deriv = (1 + aR / (ustar * ustar)) / 2;
    Real du = delta / (2 * deriv);
    for (int i = 0; i < variant; ++i) du /= 4;
    for (int i = 0; i < 60; ++i, du /= 2) {
        BigRat u = rational_near(ustar, du);
        if (u.sign() <= 0) continue;
        LinePQPoint lp = line_rational_distance_point(r, angle, u);
        if (lp.q.sign() > 0 && abs(to_real(lp.q) - target) < delta) return lp;
    }
    return std::nullopt;
}

// Streams the quartic images B = (X, Y) of {+-kP1, +-(kP1 +- P2),
// +-(kP1 + P3)} on the line through O at angleL, for the three-collinear-
// point configuration A = (-a, 0), O, C = (c, 0) (c may be negative).
// Stops when visit returns true; returns whether that happened.
bool search_line_points(const FamilyParams& params, const BigRat& a, const BigRat& c,
                        const RationalAngle& angleL, int kmax, const Deadline& deadline,
                        const std::function<bool(const BigRat&, const BigRat&)>& visit) {
    CubicCurve curve = cubic_of(params);
    SpecialPoints sp = special_points(params);
    const BigRat one(1);
    BigRat mn1 = (one + params.n) * params.m;
    BigRat shift = params.n * params.n * mn1;
    BigRat tanL = angleL.tan();
    CurvePoint Q = CurvePoint::infinity();
    for (int k = 1; k <= kmax; ++k) {
        Q = add_unchecked(curve, Q, sp.P1);
        const CurvePoint shifted[4] = {Q, add_unchecked(curve, Q, sp.P2),
                                       add_unchecked(curve, Q, sp.P2.negated()),
                                       add_unchecked(curve, Q, sp.P3)};
        for (const CurvePoint& base : shifted) {
            if (base.is_infinity()) continue;
            for (int s = 0; s < 2; ++s) {
                CurvePoint cand = s ? base.negated() : base;
                const BigRat& U = cand.U();
                if (U.is_zero()) continue;
                BigRat x = (cand.W() - mn1 * U + shift) / U;
                if (x.is_zero() || x == one || x == BigRat(-1)) continue;
                BigRat mC = (x + x) / (one - x * x);
                BigRat den = (a + c) * mC - a * tanL;
                if (den.is_zero()) continue;
                BigRat mA = c * mC * tanL / den;
                if (mC == mA) continue;
                BigRat X = (c * mC + a * mA) / (mC - mA);
                BigRat Y = (a + c) * mC * mA / (mC - mA);
                if (visit(X, Y)) return true;
            }
        }
        if (deadline.exceeded()) return false;
    }
    return false;
}

Real honest_gap(const Frame& frame, const std::vector<LabeledPoint>& canon,
                const PointSet& inputs) {
    Real g(0);
    for (const auto& cp : canon) {
        for (const auto& ip : inputs)
            if (ip.label == cp.label) {
                Vec2 img = frame_apply(frame, cp.x, cp.y);
                Vec2 d = img - vec(ip);
                g = std::max(g, norm(d));
                break;
            }
    }
    return g;
}

// ---- quadrilateral branches ------------------------------------------

// Simple-cycle reordering: if the given order self-intersects, switch to
// one that does not.
bool proper_cross(const InputPoint& a, const InputPoint& b, const InputPoint& c,
                  const InputPoint& d) {
    int o1 = orient(a, b, c), o2 = orient(a, b, d);
    int o3 = orient(c, d, a), o4 = orient(c, d, b);
    return o1 * o2 < 0 && o3 * o4 < 0;
}

bool is_simple_cycle(const PointSet& p) {
    return !proper_cross(p[0], p[1], p[2], p[3]) && !proper_cross(p[1], p[2], p[3], p[0]);
}

PointSet to_simple_cycle(const PointSet& pts) {
    if (is_simple_cycle(pts)) return pts;
    PointSet alt = {pts[0], pts[1], pts[3], pts[2]};
    if (is_simple_cycle(alt)) return alt;
    alt = {pts[0], pts[2], pts[1], pts[3]};
    if (is_simple_cycle(alt)) return alt;
    return pts;
}

struct QuadBest {
    bool valid = false;
    Real gap{0};
    RationalCertificate cert;
};

void consider(QuadBest& best, RationalCertificate cert, const Real& gap) {
    if (!best.valid || gap < best.gap) {
        best.valid = true;
        best.gap = gap;
        best.cert = std::move(cert);
    }
}

// Convex case: hub O at the diagonal intersection. Roles A, B, C, D in
// cycle order starting at `shift`, chosen so the angle AOB is right or
// obtuse (AB is then the largest side of the triangle AOB).
ApproxResult quad_convex(const PointSet& cyc, int shift, const BigRat& Oxq, const BigRat& Oyq,
                         const Real& eps, const SearchBudget& budget) {
    const InputPoint &A = cyc[shift % 4], &B = cyc[(shift + 1) % 4], &C = cyc[(shift + 2) % 4],
                     &D = cyc[(shift + 3) % 4];
    Vec2 O{to_real(Oxq), to_real(Oyq)};
    Vec2 u_ax = normalized(O - vec(A));
    Vec2 Bc = to_frame(vec(B), O, u_ax), Dc = to_frame(vec(D), O, u_ax);
    int sigma = Bc.y >= 0 ? 1 : -1;
    Frame frame = make_frame(u_ax, O);

    // Triangle AOB with apex O.
    Vec2 uAB = normalized(vec(B) - vec(A));
    Real ab_len = norm(vec(B) - vec(A));
    Real proj = dot(O - vec(A), uAB);
    Vec2 foot = vec(A) + proj * uAB;
    Real h = norm(O - foot);
    Real alpha = atan2(proj, h), beta = atan2(ab_len - proj, h);

    Deadline deadline(budget.time_seconds);
    QuadBest best;

    for (int round = 0; round < 4 && !deadline.exceeded(); ++round) {
        Real delta = eps / 6 / (1 << round);
        auto hub = select_hub_triangle(h, alpha, beta, delta, /*need_nonzero_cos=*/true);
        if (!hub) continue;
        const BigRat &cw = hub->omega.cos, &sw = hub->omega.sin;
        BigRat a_len = hub->la, b_len = hub->lb;
        RationalAngle angle2(-cw, sw);
        RationalAngle angleL(-cw, sigma > 0 ? sw : -sw);

        Real target_c = norm(vec(C) - O);
        FamilyParams params{angleL.cot(), BigRat(0)};
        std::optional<LinePQPoint> s2;
        for (int variant = 0; variant < 3; ++variant) {
            auto t2 = select_line_point(b_len, angle2, target_c, delta, variant);
            if (!t2) continue;
            params.n = t2->q / a_len;
            if (params.is_singular() || torsion_scan(params)) continue;
            s2 = t2;
            break;
        }
        if (!s2) continue;
        const BigRat& c_len = s2->q;

        BigRat Bx = -(b_len * cw), By = sigma > 0 ? b_len * sw : -(b_len * sw);
        std::vector<LabeledPoint> fixed = {{A.label, -a_len, BigRat(0)},
                                           {B.label, Bx, By},
                                           {C.label, c_len, BigRat(0)}};
        Real base_gap(0);
        {
            Vec2 gA = frame_apply(frame, fixed[0].x, fixed[0].y) - vec(A);
            Vec2 gB = frame_apply(frame, fixed[1].x, fixed[1].y) - vec(B);
            Vec2 gC = frame_apply(frame, fixed[2].x, fixed[2].y) - vec(C);
            base_gap = sqrt(std::max({dot(gA, gA), dot(gB, gB), dot(gC, gC)}));
        }
        if (base_gap >= eps * Real(0.875)) continue;

        const double eps_d = dbl(eps), base_d = dbl(base_gap);
        const double dx_t = dbl(Dc.x), dy_t = dbl(Dc.y);

        auto build_cert = [&](const BigRat& X, const BigRat& Y) {
            RationalCertificate cert;
            cert.points = {fixed[0], fixed[1], fixed[2], LabeledPoint{D.label, X, Y}};
            auto put = [&](const LabeledPoint& p, const LabeledPoint& q) {
                BigRat dxq = p.x - q.x, dyq = p.y - q.y;
                cert.distances[normalized_pair(p.label, q.label)] =
                    must_sqrt(dxq * dxq + dyq * dyq, "quadrilateral distance");
            };
            for (int i = 0; i < 4; ++i)
                for (int j = i + 1; j < 4; ++j) put(cert.points[i], cert.points[j]);
            cert.area = shoelace_area(cert.points);
            cert.frame = frame;
            return cert;
        };

        bool accepted = search_line_points(
            params, a_len, c_len, angleL, budget.kmax, deadline,
            [&](const BigRat& X, const BigRat& Y) {
                double dd = std::hypot(X.to_double() - dx_t, Y.to_double() - dy_t);
                double g = std::max(base_d, dd);
                if (best.valid && g > dbl(best.gap) * 1.0000001) return false;
                RationalCertificate cert = build_cert(X, Y);
                Real gap = honest_gap(frame, cert.points, cyc);
                consider(best, std::move(cert), gap);
                return best.valid && best.gap < guarded(eps);
            });
        if (accepted) return {best.cert, {best.gap}, false};
    }
    if (!best.valid) throw Error("approx_quadrilateral: search produced no candidate");
    return {best.cert, {best.gap}, true};
}

// Concave case: reflex vertex C preserved; hub O beyond C on the line AC.
ApproxResult quad_concave(const PointSet& cyc, int reflex, const Real& eps,
                          const SearchBudget& budget) {
    const InputPoint &Cv = cyc[reflex], &A = cyc[(reflex + 2) % 4];
    const InputPoint* Bn = &cyc[(reflex + 1) % 4];
    const InputPoint* Dn = &cyc[(reflex + 3) % 4];

    // O' = line(A, C) cut with line(Bn, Dn), exact.
    BigRat d1x = Cv.xq - A.xq, d1y = Cv.yq - A.yq;
    BigRat d2x = Dn->xq - Bn->xq, d2y = Dn->yq - Bn->yq;
    BigRat den = d1x * d2y - d1y * d2x;
    if (den.is_zero()) throw Error("approx_quadrilateral: degenerate concave configuration");
    BigRat t = ((Bn->xq - A.xq) * d2y - (Bn->yq - A.yq) * d2x) / den;
    BigRat Oxq = A.xq + t * d1x, Oyq = A.yq + t * d1y;

    // Ensure the angle A-O-B is right or obtuse; otherwise swap B and D.
    if (((A.xq - Oxq) * (Bn->xq - Oxq) + (A.yq - Oyq) * (Bn->yq - Oyq)).sign() > 0)
        std::swap(Bn, Dn);
    const InputPoint &B = *Bn, &D = *Dn;

    Vec2 O{to_real(Oxq), to_real(Oyq)};
    Vec2 u_ax = normalized(O - vec(A));
    Vec2 Bc = to_frame(vec(B), O, u_ax), Dc = to_frame(vec(D), O, u_ax);
    int sigma = Bc.y >= 0 ? 1 : -1;

    // Triangle A-C-B with apex C (angle at C is obtuse or right, so AB is
    // the largest side and the altitude foot falls inside it).
    Vec2 uAB = normalized(vec(B) - vec(A));
    Real ab_len = norm(vec(B) - vec(A));
    Real proj = dot(vec(Cv) - vec(A), uAB);
    Vec2 foot = vec(A) + proj * uAB;
    Real h = norm(vec(Cv) - foot);
    Real alpha = atan2(proj, h), beta = atan2(ab_len - proj, h);

    Deadline deadline(budget.time_seconds);
    QuadBest best;

    for (int round = 0; round < 4 && !deadline.exceeded(); ++round) {
        Real delta = eps / 6 / (1 << round);
        auto hub = select_hub_triangle(h, alpha, beta, delta, /*need_nonzero_cos=*/false);
        if (!hub) continue;
        const BigRat &cw = hub->omega.cos, &sw = hub->omega.sin;
        BigRat lA = hub->la, lB = hub->lb;

        Real target_c = norm(vec(Cv) - O);
        RationalAngle angle2(-cw, sw);  // at C, between the O-ray and the B'-ray
        std::optional<LinePQPoint> s2;
        BigRat c_len, a_len, Bx, By;
        RationalAngle phi(BigRat(1), BigRat(0));
        FamilyParams params{BigRat(0), BigRat(0)};
        for (int variant = 0; variant < 3; ++variant) {
            auto t2 = select_line_point(lB, angle2, target_c, delta, variant);
            if (!t2) continue;
            c_len = t2->q;
            a_len = lA + c_len;
            Bx = -c_len - lB * cw;
            By = sigma > 0 ? lB * sw : -(lB * sw);
            if (Bx.is_zero()) continue;  // L would be vertical; no cotangent
            phi = RationalAngle(Bx / t2->p, By / t2->p);
            params = FamilyParams{phi.cot(), -c_len / a_len};
            if (params.is_singular() || torsion_scan(params)) continue;
            s2 = t2;
            break;
        }
        if (!s2) continue;
        const BigRat& p3 = s2->p;  // |B'O|

        Frame frame = make_frame(u_ax, O);
        {  // anchor the preserved vertex C exactly
            Vec2 img = frame_apply(frame, -c_len, BigRat(0));
            frame.dx += Cv.x - img.x;
            frame.dy += Cv.y - img.y;
        }

        std::vector<LabeledPoint> fixed = {{A.label, -a_len, BigRat(0)},
                                           {B.label, Bx, By},
                                           {Cv.label, -c_len, BigRat(0)}};
        Real base_gap(0);
        {
            Vec2 gA = frame_apply(frame, fixed[0].x, fixed[0].y) - vec(A);
            Vec2 gB = frame_apply(frame, fixed[1].x, fixed[1].y) - vec(B);
            base_gap = sqrt(std::max(dot(gA, gA), dot(gB, gB)));
        }
        if (base_gap >= eps * Real(0.875)) continue;

        const double base_d = dbl(base_gap);
        const double dx_t = dbl(Dc.x), dy_t = dbl(Dc.y);

        auto build_cert = [&](const BigRat& X, const BigRat& Y) {
            RationalCertificate cert;
            // Points in the input cycle order starting at the reflex vertex.
            LabeledPoint dpt{D.label, X, Y};
            cert.points = {fixed[2], fixed[1], fixed[0], dpt};
            // cycle: C, B, A, D matches (reflex, reflex+1, reflex+2, reflex+3)
            // only when B is the +1 neighbor; restore the true cycle order.
            const InputPoint& plus1 = cyc[(reflex + 1) % 4];
            if (plus1.label != B.label) std::swap(cert.points[1], cert.points[3]);
            auto put = [&](const LabeledPoint& p, const LabeledPoint& q) {
                BigRat dxq = p.x - q.x, dyq = p.y - q.y;
                cert.distances[normalized_pair(p.label, q.label)] =
                    must_sqrt(dxq * dxq + dyq * dyq, "quadrilateral distance");
            };
            for (int i = 0; i < 4; ++i)
                for (int j = i + 1; j < 4; ++j) put(cert.points[i], cert.points[j]);
            cert.area = shoelace_area(cert.points);
            cert.frame = frame;
            return cert;
        };

        bool accepted = search_line_points(
            params, a_len, -c_len, phi, budget.kmax, deadline,
            [&](const BigRat& X, const BigRat& Y) {
                double dd = std::hypot(X.to_double() - dx_t, Y.to_double() - dy_t);
                double g = std::max(base_d, dd);
                if (best.valid && g > dbl(best.gap) * 1.0000001) return false;
                RationalCertificate cert = build_cert(X, Y);
                Real gap = honest_gap(frame, cert.points, cyc);
                consider(best, std::move(cert), gap);
                return best.valid && best.gap < guarded(eps);
            });
        if (accepted) return {best.cert, {best.gap}, false};
    }
    if (!best.valid) throw Error("approx_quadrilateral: search produced no candidate");
    return {best.cert, {best.gap}, true};
}

// Exactly three collinear points (E1, M, E2 with M between) plus F off
// the line: triangle F-M-E_far with apex M preserved, then the second
// endpoint re-placed on the line M-E' at rational distances from M and F'.
ApproxResult quad_three_collinear(const PointSet& cyc, int i_mid, int i_off, const Real& eps) {
    const InputPoint &M = cyc[i_mid], &F = cyc[i_off];
    int others[2], oi = 0;
    for (int i = 0; i < 4; ++i)
        if (i != i_mid && i != i_off) others[oi++] = i;
    // E_far: endpoint with angle(E, M, F) right or obtuse.
    auto dotq = [&](const InputPoint& e) {
        return (e.xq - M.xq) * (F.xq - M.xq) + (e.yq - M.yq) * (F.yq - M.yq);
    };
    int i_far = dotq(cyc[others[0]]).sign() <= 0 ? others[0] : others[1];
    int i_oth = i_far == others[0] ? others[1] : others[0];
    const InputPoint &Ef = cyc[i_far], &Eo = cyc[i_oth];

    // Triangle F-M-Ef with apex M; base F-Ef is its largest side.
    Vec2 uFE = normalized(vec(Ef) - vec(F));
    Real fe_len = norm(vec(Ef) - vec(F));
    Real proj = dot(vec(M) - vec(F), uFE);
    Vec2 foot = vec(F) + proj * uFE;
    Real h = norm(vec(M) - foot);
    Real alpha = atan2(proj, h);           // toward F
    Real beta = atan2(fe_len - proj, h);   // toward Ef

    Vec2 u_ax = normalized(vec(Ef) - vec(M));
    int sigma = cross(u_ax, vec(F) - vec(M)) >= 0 ? 1 : -1;
    Real target_other = norm(vec(Eo) - vec(M));

    Real delta = eps / 4;
    for (int iter = 0; iter < 60; ++iter, delta /= 2) {
        auto hub = select_hub_triangle(h, alpha, beta, delta, /*need_nonzero_cos=*/false);
        if (!hub) continue;
        BigRat lF = hub->la, lE = hub->lb;
        const BigRat &cwm = hub->omega.cos, &swm = hub->omega.sin;
        BigRat Fx = lF * cwm, Fy = sigma > 0 ? lF * swm : -(lF * swm);

        RationalAngle angO(-cwm, swm);  // at M, between the E''-ray (-x) and F'
        auto s2 = select_line_point(lF, angO, target_other, delta, 0);
        if (!s2) continue;
        const BigRat& qe = s2->q;

        Frame frame = make_frame(u_ax, vec(M));  // M preserved exactly

        std::vector<LabeledPoint> canon(4);
        canon[i_mid] = {M.label, BigRat(0), BigRat(0)};
        canon[i_off] = {F.label, Fx, Fy};
        canon[i_far] = {Ef.label, lE, BigRat(0)};
        canon[i_oth] = {Eo.label, -qe, BigRat(0)};

        Real gap = honest_gap(frame, canon, cyc);
        if (gap >= guarded(eps)) continue;

        RationalCertificate cert;
        cert.points = canon;
        cert.distances[normalized_pair(F.label, M.label)] = lF;
        cert.distances[normalized_pair(M.label, Ef.label)] = lE;
        cert.distances[normalized_pair(M.label, Eo.label)] = qe;
        cert.distances[normalized_pair(F.label, Eo.label)] = s2->p;
        cert.distances[normalized_pair(Ef.label, Eo.label)] = lE + qe;
        {
            BigRat dxq = Fx - lE, dyq = Fy;
            cert.distances[normalized_pair(F.label, Ef.label)] =
                must_sqrt(dxq * dxq + dyq * dyq, "triangle base");
        }
        cert.area = shoelace_area(cert.points);
        cert.frame = frame;
        return {std::move(cert), {gap}, false};
    }
    throw Error("approx_quadrilateral: collinear-triple construction did not converge");
}

}  // namespace

ApproxResult approx_quadrilateral(const PointSet& quad, const Real& eps,
                                  const SearchBudget& budget) {
    validate_point_set(quad, 4, eps);
    if (auto cert = already_rational_certificate(quad)) return {std::move(*cert), {Real(0)}, false};

    PointSet cyc = to_simple_cycle(quad);

    // Exact collinearity classification.
    int collinear_triples = 0, mid = -1, off = -1;
    for (int i = 0; i < 4 && collinear_triples < 2; ++i) {
        int a = (i + 1) % 4, b = (i + 2) % 4, c = (i + 3) % 4;
        if (orient(cyc[a], cyc[b], cyc[c]) == 0) {
            ++collinear_triples;
            off = i;
            // middle of the triple by position along the line
            const InputPoint &p = cyc[a], &q = cyc[b], &r = cyc[c];
            BigRat dx = r.xq - p.xq, dy = r.yq - p.yq;
            auto par = [&](const InputPoint& z) { return (z.xq - p.xq) * dx + (z.yq - p.yq) * dy; };
            BigRat tp(0), tq = par(q), tr = dx * dx + dy * dy;
            if ((tq - tp).sign() > 0 && (tr - tq).sign() > 0)
                mid = b;
            else if (tq.sign() < 0)
                mid = a;
            else
                mid = c;
        }
    }
    if (collinear_triples >= 2) return approx_collinear_set(cyc, eps);
    if (collinear_triples == 1) {
        // Re-identify the true middle of the collinear triple.
        return quad_three_collinear(cyc, mid, off, eps);
    }

    int s0 = orient(cyc[3], cyc[0], cyc[1]);
    int s1 = orient(cyc[0], cyc[1], cyc[2]);
    int s2 = orient(cyc[1], cyc[2], cyc[3]);
    int s3 = orient(cyc[2], cyc[3], cyc[0]);
    int pos = (s0 > 0) + (s1 > 0) + (s2 > 0) + (s3 > 0);

    if (pos == 4 || pos == 0) {
        // Convex: exact diagonal intersection of (0,2) x (1,3).
        BigRat d1x = cyc[2].xq - cyc[0].xq, d1y = cyc[2].yq - cyc[0].yq;
        BigRat d2x = cyc[3].xq - cyc[1].xq, d2y = cyc[3].yq - cyc[1].yq;
        BigRat den = d1x * d2y - d1y * d2x;
        BigRat t = ((cyc[1].xq - cyc[0].xq) * d2y - (cyc[1].yq - cyc[0].yq) * d2x) / den;
        BigRat Ox = cyc[0].xq + t * d1x, Oy = cyc[0].yq + t * d1y;
        // Roles: require angle(A O B) >= pi/2.
        BigRat dotq = (cyc[0].xq - Ox) * (cyc[1].xq - Ox) + (cyc[0].yq - Oy) * (cyc[1].yq - Oy);
        int shift = dotq.sign() <= 0 ? 0 : 1;
        return quad_convex(cyc, shift, Ox, Oy, eps, budget);
    }

    if (pos == 2) throw Error("approx_quadrilateral: input is not a simple quadrilateral");

    // Concave: the vertex whose orientation sign is in the minority.
    int signs[4] = {s1, s2, s3, s0};  // signs[i] is the turn at vertex i+1 mod 4
    int reflex = 0;
    for (int i = 0; i < 4; ++i) {
        int at = (i + 1) % 4;
        bool minority = pos == 1 ? signs[i] > 0 : signs[i] < 0;
        if (minority) {
            reflex = at;
            break;
        }
    }
    return quad_concave(cyc, reflex, eps, budget);
}

// ---- parallelogram ----------------------------------------------------

namespace {

struct PairHit {
    BigRat u, v;
};

// C_Q tangent pairs (u, v) near the targets with 4 + (u - v)^2 a rational
// square, searched over Pythagorean tangents of bounded height.
std::optional<PairHit> find_coupled_pair(double ulo, double uhi, double vlo, double vhi,
                                         long hyp_max, long hyp_prev, const Deadline& deadline) {
    auto us = cq_tangents_in(ulo, uhi, hyp_max);
    auto vs = cq_tangents_in(vlo, vhi, hyp_max);
    auto hyp2 = [](const BigRat& t) {
        return t.numerator() * t.numerator() + t.denominator() * t.denominator();
    };
    BigInt prev2 = BigInt(hyp_prev) * BigInt(hyp_prev);
    for (const BigRat& u : us) {
        bool u_old = hyp2(u) <= prev2;
        for (const BigRat& v : vs) {
            if (u_old && hyp2(v) <= prev2) continue;  // tested at the previous level
            BigRat tau = u - v;
            BigInt an = tau.numerator(), bd = tau.denominator();
            BigInt probe = an * an + 4 * bd * bd;
            if (mpz_perfect_square_p(probe.get_mpz_t())) return PairHit{u, v};
        }
        if (deadline.exceeded()) return std::nullopt;
    }
    return std::nullopt;
}

}  // namespace

ApproxResult approx_parallelogram(const PointSet& quad, const Real& eps,
                                  const SearchBudget& budget) {
    validate_point_set(quad, 4, eps);

    // Parallelogram within floating tolerance: diagonal midpoints coincide.
    Vec2 P0 = vec(quad[0]), P1 = vec(quad[1]), P2 = vec(quad[2]), P3 = vec(quad[3]);
    Real diam(0);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j)
            diam = std::max(diam, norm(vec(quad[i]) - vec(quad[j])));
    Vec2 mism = (P0 + P2) - (P1 + P3);
    if (norm(mism) > diam * Real(1e-6))
        throw NotAParallelogram("approx_parallelogram: diagonal midpoints do not coincide");

    if (auto cert = already_rational_certificate(quad)) return {std::move(*cert), {Real(0)}, false};

    Vec2 M = Real(0.25) * (P0 + P1 + P2 + P3);
    Real e0 = norm(P0 - M), f0 = norm(P1 - M);
    // Long diagonal on the x-axis; cycle shift keeps the labeling intact.
    int shift = e0 >= f0 ? 0 : 1;
    auto Q = [&](int i) -> const InputPoint& { return quad[(shift + i) % 4]; };
    Real e = std::max(e0, f0), f = std::min(e0, f0);
    Vec2 u_ax = normalized(vec(Q(2)) - M);
    // W: the upper of the two short-diagonal endpoints.
    Vec2 q1c = to_frame(vec(Q(1)), M, u_ax), q3c = to_frame(vec(Q(3)), M, u_ax);
    int iW = q3c.y >= 0 ? 3 : 1;
    Vec2 Wc = iW == 3 ? q3c : q1c;
    Real omega = atan2(Wc.y, Wc.x);
    Frame frame = make_frame(u_ax, M);

    Deadline deadline(budget.time_seconds);
    QuadBest best;

    auto assemble = [&](const BigRat& half_long, const BigRat& wx, const BigRat& wy) {
        RationalCertificate cert;
        std::vector<LabeledPoint> canon(4);
        canon[shift % 4] = {Q(0).label, -half_long, BigRat(0)};
        canon[(shift + 2) % 4] = {Q(2).label, half_long, BigRat(0)};
        canon[(shift + iW) % 4] = {Q(iW).label, wx, wy};
        canon[(shift + (iW == 3 ? 1 : 3)) % 4] = {Q(iW == 3 ? 1 : 3).label, -wx, -wy};
        cert.points = canon;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) {
                BigRat dxq = canon[i].x - canon[j].x, dyq = canon[i].y - canon[j].y;
                cert.distances[normalized_pair(canon[i].label, canon[j].label)] =
                    must_sqrt(dxq * dxq + dyq * dyq, "parallelogram distance");
            }
        cert.area = shoelace_area(cert.points);
        cert.frame = frame;
        return cert;
    };

    auto try_rectangle = [&]() {
        Real g = (e + f) / 2;
        auto pred = [](const RationalAngle& a) { return a.cos.sign() > 0 && a.sin.sign() > 0; };
        Real delta = eps / 4;
        for (int iter = 0; iter < 60; ++iter, delta /= 2) {
            BigRat ee = rational_near(g, delta / 2);
            if (ee.sign() <= 0) continue;
            RationalAngle psi = rational_angle_near_if(omega / 2, delta / (2 * (1 + g)), pred);
            RationalAngle two_psi = psi.compose(psi);
            RationalCertificate cert = assemble(ee, ee * two_psi.cos, ee * two_psi.sin);
            Real gap = honest_gap(frame, cert.points, quad);
            consider(best, std::move(cert), gap);
            if (gap < guarded(eps)) return true;
            if (gap > eps * 4 && iter > 10) return false;  // limited by |e - f|
        }
        return false;
    };

    // Rectangles (equal diagonals) have a guaranteed Pythagorean family.
    if (abs(e - f) < eps / 2 && try_rectangle())
        return {best.cert, {best.gap}, false};

    // General case: triangle over the long diagonal, apex W, doubled by
    // point reflection. Needs tan-angle pairs (u, v) with 1+u^2, 1+v^2 and
    // 4+(u-v)^2 all rational squares; the last makes the second diagonal
    // rational.
    Real h = f * sin(omega);
    Real ustar = (e + f * cos(omega)) / h;
    Real vstar = (e - f * cos(omega)) / h;
    double du = dbl(eps / (4 * h)), dv = du;
    double uc = dbl(ustar), vc = dbl(vstar);

    long levels[4] = {3000, 20000, 60000, 150000};
    long prev = 0;
    for (long level : levels) {
        if (deadline.exceeded()) break;
        auto hit = find_coupled_pair(uc - du, uc + du, vc - dv, vc + dv, level, prev, deadline);
        prev = level;
        if (!hit) continue;
        Real delta = eps / 4;
        for (int iter = 0; iter < 50; ++iter, delta /= 2) {
            BigRat h1 = rational_near(h, delta / 2);
            if (h1.sign() <= 0) continue;
            // Center frame: half long diagonal h1(u+v)/2, apex at
            // (h1(u-v)/2, h1).
            BigRat half_long = h1 * (hit->u + hit->v) / BigRat(2);
            BigRat wx = h1 * (hit->u - hit->v) / BigRat(2);
            RationalCertificate cert = assemble(half_long, wx, h1);
            Real gap = honest_gap(frame, cert.points, quad);
            consider(best, std::move(cert), gap);
            if (gap < guarded(eps)) return {best.cert, {best.gap}, false};
            if (iter > 6 && gap > eps * 2) break;  // limited by the pair, not h1
        }
    }

    // Budget exhausted: fall back to the best certificate seen, adding a
    // rectangle candidate if none was tried.
    if (!best.valid) try_rectangle();
    if (best.valid && best.gap < guarded(eps)) return {best.cert, {best.gap}, false};
    if (!best.valid) throw Error("approx_parallelogram: no candidate produced");
    return {best.cert, {best.gap}, true};
}

}  // namespace ratgeom
