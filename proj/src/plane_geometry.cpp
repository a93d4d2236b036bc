#include "ratgeom/plane_geometry.hpp"

#include <numeric>
#include <set>

#include "geometry_internal.hpp"

namespace ratgeom {

using detail::Vec2;

InputPoint make_input_point(std::string label, const BigRat& x, const BigRat& y) {
    return {std::move(label), x, y, to_real(x), to_real(y)};
}

InputPoint make_input_point(std::string label, const std::string& x, const std::string& y) {
    return make_input_point(std::move(label), BigRat::parse_decimal(x), BigRat::parse_decimal(y));
}

std::pair<BigRat, BigRat> hyperbola_point(const BigRat& a, const BigRat& u) {
    if (a.is_zero()) throw ZeroInput("hyperbola_point: a must be nonzero");
    if (u.is_zero()) throw ZeroInput("hyperbola_point: u must be nonzero");
    BigRat au = a / u;
    return {(u + au) / BigRat(2), (u - au) / BigRat(2)};
}

LinePQPoint line_rational_distance_point(const BigRat& r, const RationalAngle& angle,
                                         const BigRat& u) {
    if (r.sign() <= 0) throw std::invalid_argument("line_rational_distance_point: r must be positive");
    if (u.sign() <= 0) throw std::invalid_argument("line_rational_distance_point: u must be positive");
    BigRat a = r * r * angle.sin * angle.sin;
    BigRat au = a / u;
    BigRat p = (u + au) / BigRat(2);
    BigRat s = (u - au) / BigRat(2);
    return {r * angle.cos + s, p};
}

RationalCertificate quartic_point_to_B(const FamilyParams& params, const BigRat& a,
                                       const BigRat& c, const RationalAngle& angle,
                                       const BigRat& x, const BigRat& y) {
    if (a.sign() <= 0) throw std::invalid_argument("quartic_point_to_B: a must be positive");
    if (c.is_zero()) throw std::invalid_argument("quartic_point_to_B: c must be nonzero");
    if (angle.sin.is_zero() || angle.cos.is_zero())
        throw std::invalid_argument("quartic_point_to_B: angle must have nonzero sine and cosine");
    if (params.m != angle.cot() || params.n != c / a)
        throw std::invalid_argument("quartic_point_to_B: params must satisfy m = cot(angle), n = c/a");
    if (!quartic_of(params).contains(x, y)) throw NotOnQuartic();
    if (x.is_zero() || x == BigRat(1) || x == BigRat(-1))
        throw DegeneratePoint("quartic_point_to_B: trivial solution x in {0, +-1}");

    BigRat mC = (x + x) / (BigRat(1) - x * x);
    BigRat tan_theta = angle.sin / angle.cos;
    BigRat den = (a + c) * mC - a * tan_theta;
    if (den.is_zero())
        throw DegeneratePoint("quartic_point_to_B: the line through A is parallel to L");
    BigRat mA = c * mC * tan_theta / den;
    if (mC == mA)
        throw DegeneratePoint("quartic_point_to_B: the lines through A and C are parallel");

    BigRat X = (c * mC + a * mA) / (mC - mA);
    BigRat Y = (a + c) * mC * mA / (mC - mA);

    RationalCertificate cert;
    cert.points = {{"A", -a, BigRat(0)},
                   {"O", BigRat(0), BigRat(0)},
                   {"C", c, BigRat(0)},
                   {"B", X, Y}};
    auto put = [&](const char* f, const char* t, const BigRat& d) {
        cert.distances[normalized_pair(f, t)] = d;
    };
    put("A", "O", a);
    put("O", "C", abs(c));
    put("A", "C", abs(a + c));
    put("B", "O", detail::must_sqrt(X * X + Y * Y, "BO"));
    put("A", "B", detail::must_sqrt((X + a) * (X + a) + Y * Y, "BA"));
    put("B", "C", detail::must_sqrt((X - c) * (X - c) + Y * Y, "BC"));
    cert.area = shoelace_area(cert.points);
    return cert;
}

bool kummer_check(const BigRat& xi, const BigRat& nu, const BigRat& x, const BigRat& y,
                  const BigRat& c) {
    if (xi.is_zero() || nu.is_zero() || x.is_zero() || y.is_zero())
        throw ZeroDenominator("kummer_check: xi, nu, x, y must be nonzero");
    auto term = [](const BigRat& v, const BigRat& shift) {
        return ((v + shift) * (v + shift) - BigRat(1)) / (v + v);
    };
    return term(xi, c) * term(x, -c) == term(nu, -c) * term(y, c);
}

RationalCertificate euler_triangle(long p, long q, long r, long s, EulerSign sign) {
    if (!(p > q && q >= 1 && r >= s && s >= 1))
        throw std::invalid_argument("euler_triangle: require p > q >= 1 and r >= s >= 1");
    BigRat P(p), Q(q), R(r), S(s);
    BigRat side_a = (R * R + S * S) / (R * S);
    BigRat side_c = (P * P + Q * Q) / (P * Q);
    BigRat side_b = sign == EulerSign::upper
                        ? (P * S + R * Q) * (P * R - Q * S) / (P * Q * R * S)
                        : (P * S - R * Q) * (P * R + Q * S) / (P * Q * R * S);
    if (side_b.sign() <= 0) throw NotATriangle("euler_triangle: middle proportion not positive");

    // Scale to the smallest integer sides.
    BigInt l = side_a.denominator();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), side_b.denominator().get_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), side_c.denominator().get_mpz_t());
    BigInt na = side_a.numerator() * (l / side_a.denominator());
    BigInt nb = side_b.numerator() * (l / side_b.denominator());
    BigInt nc = side_c.numerator() * (l / side_c.denominator());
    BigInt g;
    mpz_gcd(g.get_mpz_t(), na.get_mpz_t(), nb.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), nc.get_mpz_t());
    BigRat A_len(na / g), B_len(nb / g), C_len(nc / g);  // BC, CA, AB

    if (A_len + B_len <= C_len || B_len + C_len <= A_len || C_len + A_len <= B_len)
        throw NotATriangle("euler_triangle: triangle inequality violated");

    BigRat a2 = A_len * A_len, b2 = B_len * B_len, c2 = C_len * C_len;
    BigRat heron = BigRat(2) * (a2 * b2 + b2 * c2 + c2 * a2) - a2 * a2 - b2 * b2 - c2 * c2;
    BigRat area = detail::must_sqrt(heron / BigRat(16), "euler triangle area");

    // B at the origin, C on the positive x-axis, A above.
    BigRat ax = (a2 + c2 - b2) / (BigRat(2) * A_len);
    BigRat ay = BigRat(2) * area / A_len;

    RationalCertificate cert;
    cert.points = {{"A", ax, ay}, {"B", BigRat(0), BigRat(0)}, {"C", A_len, BigRat(0)}};
    cert.distances[normalized_pair("A", "B")] = C_len;
    cert.distances[normalized_pair("B", "C")] = A_len;
    cert.distances[normalized_pair("A", "C")] = B_len;
    cert.area = area;
    return cert;
}

namespace detail {

Deadline::Deadline(double seconds) : limit_(seconds), start_(std::chrono::steady_clock::now()) {}

bool Deadline::exceeded() const {
    if (limit_ <= 0) return false;
    auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_);
    return elapsed.count() > limit_;
}

void validate_point_set(const PointSet& pts, std::size_t expected, const Real& eps) {
    if (pts.size() != expected)
        throw std::invalid_argument("expected " + std::to_string(expected) + " points, got " +
                                    std::to_string(pts.size()));
    if (eps <= 0) throw std::invalid_argument("eps must be positive");
    std::set<std::string> labels;
    for (const auto& p : pts)
        if (!labels.insert(p.label).second)
            throw std::invalid_argument("duplicate point label '" + p.label + "'");
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            if (pts[i].xq == pts[j].xq && pts[i].yq == pts[j].yq)
                throw std::invalid_argument("points must be pairwise distinct");
}

std::optional<RationalCertificate> already_rational_certificate(const PointSet& pts) {
    RationalCertificate cert;
    for (const auto& p : pts) cert.points.push_back({p.label, p.xq, p.yq});
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            auto d = exact_distance(cert.points[i], cert.points[j]);
            if (!d) return std::nullopt;
            cert.distances[normalized_pair(pts[i].label, pts[j].label)] = *d;
        }
    cert.area = shoelace_area(cert.points);
    return cert;
}

ApproxResult approx_collinear_set(const PointSet& pts, const Real& eps) {
    // Anchor at the first point, x-axis toward the farthest point.
    std::size_t far = 1;
    BigRat best(-1);
    for (std::size_t i = 1; i < pts.size(); ++i) {
        BigRat dx = pts[i].xq - pts[0].xq, dy = pts[i].yq - pts[0].yq;
        BigRat d2 = dx * dx + dy * dy;
        if (d2 > best) best = d2, far = i;
    }
    Vec2 anchor = vec(pts[0]);
    Vec2 u = normalized(vec(pts[far]) - anchor);

    std::vector<Real> t(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) t[i] = dot(vec(pts[i]) - anchor, u);

    Real delta = eps / 2;
    for (int iter = 0; iter < 80; ++iter, delta /= 2) {
        std::vector<BigRat> r(pts.size());
        Real gap(0);
        for (std::size_t i = 0; i < pts.size(); ++i) {
            r[i] = rational_near(t[i], delta / 2);
            gap = std::max(gap, abs(to_real(r[i]) - t[i]));
        }
        if (gap >= guarded(eps)) continue;
        RationalCertificate cert;
        for (std::size_t i = 0; i < pts.size(); ++i)
            cert.points.push_back({pts[i].label, r[i], BigRat(0)});
        for (std::size_t i = 0; i < pts.size(); ++i)
            for (std::size_t j = i + 1; j < pts.size(); ++j)
                cert.distances[normalized_pair(pts[i].label, pts[j].label)] = abs(r[i] - r[j]);
        cert.area = BigRat(0);
        cert.frame = make_frame(u, anchor);
        return {std::move(cert), {gap}, false};
    }
    throw Error("collinear approximation did not converge");
}

std::vector<BigRat> cq_tangents_in(double lo, double hi, long hyp_max) {
    std::vector<BigRat> out;
    if (hi <= 0 || hi <= lo) return out;
    long pmax = static_cast<long>(std::sqrt(static_cast<double>(hyp_max))) + 1;
    for (long p = 2; p <= pmax; ++p)
        for (long q = 1; q < p; ++q) {
            if ((p - q) % 2 == 0 || std::gcd(p, q) != 1) continue;
            long a = p * p - q * q, b = 2 * p * q;
            if (p * p + q * q > hyp_max) continue;
            for (auto [num, den] : {std::pair{a, b}, std::pair{b, a}}) {
                double v = static_cast<double>(num) / static_cast<double>(den);
                if (lo < v && v < hi) out.emplace_back(BigRat(num, den));
            }
        }
    std::sort(out.begin(), out.end(), [](const BigRat& x, const BigRat& y) {
        BigInt hx = std::max(x.numerator(), x.denominator());
        BigInt hy = std::max(y.numerator(), y.denominator());
        if (hx != hy) return hx < hy;
        return x < y;
    });
    return out;
}

}  // namespace detail

ApproxResult approx_triangle(const PointSet& tri, const Real& eps) {
    using namespace detail;
    validate_point_set(tri, 3, eps);

    if (auto cert = already_rational_certificate(tri)) return {std::move(*cert), {Real(0)}, false};

    if (orient(tri[0], tri[1], tri[2]) == 0) return approx_collinear_set(tri, eps);

    // Largest side by exact squared length; its endpoints become the base,
    // the opposite vertex is preserved.
    auto sq = [&](int i, int j) {
        BigRat dx = tri[i].xq - tri[j].xq, dy = tri[i].yq - tri[j].yq;
        return dx * dx + dy * dy;
    };
    int ia = 0;  // vertex opposite the largest side
    BigRat best(-1);
    for (int i = 0; i < 3; ++i) {
        BigRat d2 = sq((i + 1) % 3, (i + 2) % 3);
        if (d2 > best) best = d2, ia = i;
    }
    int ib = (ia + 1) % 3, ic = (ia + 2) % 3;
    // Keep the apex on the positive side of the base direction, so the
    // canonical frame maps back by a proper rotation.
    {
        const InputPoint &Bq = tri[ib], &Cq = tri[ic];
        BigRat side = (Cq.xq - Bq.xq) * (tri[ia].yq - Bq.yq) -
                      (tri[ia].xq - Bq.xq) * (Cq.yq - Bq.yq);
        if (side.sign() < 0) std::swap(ib, ic);
    }
    const InputPoint &A = tri[ia], &B = tri[ib], &C = tri[ic];

    Vec2 vA = vec(A), vB = vec(B), vC = vec(C);
    Vec2 u = normalized(vC - vB);
    Real base_len = norm(vC - vB);
    Real proj = dot(vA - vB, u);  // foot of the altitude lies inside [B, C]
    Vec2 foot = vB + proj * u;
    Real h = norm(vA - foot);
    Real alpha = atan2(proj, h);
    Real beta = atan2(base_len - proj, h);

    auto acute = [](const RationalAngle& a) { return a.cos.sign() > 0; };

    Real delta = eps / 4;
    for (int iter = 0; iter < 80; ++iter, delta /= 2) {
        BigRat h1 = rational_near(h, delta / 2);
        if (h1.sign() <= 0) continue;
        RationalAngle a1 = rational_angle_near_if(alpha, delta / (2 * (1 + h)), acute);
        RationalAngle b1 = rational_angle_near_if(beta, delta / (2 * (1 + h)), acute);
        BigRat ta = a1.tan(), tb = b1.tan();

        // Canonical frame: altitude foot at the origin, base along x.
        BigRat Ax(0), Ay = h1;
        BigRat Bx = -h1 * ta, Cx = h1 * tb;

        Frame frame = make_frame(u, {0, 0});
        // Anchor so the canonical apex maps exactly onto the input vertex A.
        Vec2 apex_img = frame_apply(frame, Ax, Ay);
        frame.dx = vA.x - apex_img.x;
        frame.dy = vA.y - apex_img.y;

        Vec2 gB = frame_apply(frame, Bx, BigRat(0)) - vB;
        Vec2 gC = frame_apply(frame, Cx, BigRat(0)) - vC;
        Real gap = sqrt(std::max(dot(gB, gB), dot(gC, gC)));
        if (gap >= guarded(eps)) continue;

        RationalCertificate cert;
        cert.points.resize(3);
        cert.points[ia] = {A.label, Ax, Ay};
        cert.points[(ia + 1) % 3] = {B.label, Bx, BigRat(0)};
        cert.points[(ia + 2) % 3] = {C.label, Cx, BigRat(0)};
        cert.distances[normalized_pair(A.label, B.label)] = h1 / a1.cos;
        cert.distances[normalized_pair(A.label, C.label)] = h1 / b1.cos;
        cert.distances[normalized_pair(B.label, C.label)] = abs(h1 * (ta + tb));
        cert.area = shoelace_area(cert.points);
        cert.frame = frame;
        return {std::move(cert), {gap}, false};
    }
    throw Error("approx_triangle did not converge");
}

}  // namespace ratgeom
