#include "ktree/rho.hpp"

#include <sstream>

#include "ktree/errors.hpp"
#include "ktree/rows.hpp"

namespace ktree {

namespace {

BigRat rat_pow(const BigRat& base, unsigned e) {
    BigRat acc = 1;
    BigRat b = base;
    while (e > 0) {
        if (e & 1u) acc *= b;
        b *= b;
        e >>= 1u;
    }
    return acc;
}

RhoEnclosure enclose_rational(const KValue& k, const BigRat& value, int n_iters,
                              const BigInt& f_n) {
    const unsigned n = static_cast<unsigned>(n_iters);
    const BigRat kn = rat_pow(value, n);
    const BigRat c_lo = BigRat(f_n) / kn;
    const BigRat c_hi = c_lo + 1 / (kn * (value - 1));
    const BigRat rho_factor = (value - 1) / value;
    return RhoEnclosure{k, n_iters, c_lo, c_hi, rho_factor * c_lo, rho_factor * c_hi};
}

}  // namespace

RhoEnclosure enclose_c(const KValue& k, int n_iters) {
    if (n_iters < 1) throw InvalidParams("enclose_c: n_iters must be at least 1");
    const std::vector<BigInt> f = leftmost_sequence(k, n_iters);
    const BigInt& f_n = f.back();

    switch (k.kind()) {
        case KValue::Kind::Rational:
            return enclose_rational(k, k.rat(), n_iters, f_n);
        case KValue::Kind::Quad: {
            const QuadReal& kq = k.quad();
            const QuadReal one(BigInt(1));
            const QuadReal kn = kq.pow(static_cast<unsigned>(n_iters));
            const QuadReal c_lo = QuadReal(f_n) / kn;
            const QuadReal c_hi = c_lo + (kn * (kq - one)).inverse();
            const QuadReal rho_factor = one - k.quad_inverse();  // (k−1)/k
            const QuadReal rho_lo = rho_factor * c_lo;
            const QuadReal rho_hi = rho_factor * c_hi;
            // Round outward; c ≥ 1 is a theorem, so the lower endpoint may be
            // clamped without losing soundness.
            BigRat c_lo_r = c_lo.lower_rational(kEnclosureGuardDigits);
            if (c_lo_r < 1) c_lo_r = 1;
            return RhoEnclosure{k, n_iters, c_lo_r,
                                c_hi.upper_rational(kEnclosureGuardDigits),
                                rho_lo.lower_rational(kEnclosureGuardDigits),
                                rho_hi.upper_rational(kEnclosureGuardDigits)};
        }
        case KValue::Kind::Approx: {
            // The f-sequence above was unambiguous for every k in [lo, hi],
            // so the true c(k) obeys both one-sided bounds below.
            const BigRat lo = k.lower();
            const BigRat hi = k.upper();
            const unsigned n = static_cast<unsigned>(n_iters);
            const BigRat c_lo = BigRat(f_n) / rat_pow(hi, n);
            const BigRat c_hi = BigRat(f_n) / rat_pow(lo, n) + 1 / (rat_pow(lo, n) * (lo - 1));
            return RhoEnclosure{k, n_iters, c_lo, c_hi, (lo - 1) / lo * c_lo,
                                (hi - 1) / hi * c_hi};
        }
    }
    throw Error("enclose_c: unreachable");
}

QuadReal closed_rho(const GoldenParams& params) {
    if (!params.in_recurrence_range()) {
        std::ostringstream msg;
        msg << "closed_rho: golden parameters out of range (need a >= 1 and 1-a < b < 1+a): a="
            << params.a << ", b=" << params.b;
        throw InvalidParams(msg.str());
    }
    if (params.b == 0) return QuadReal(BigRat(params.a - 1, params.a));
    const QuadReal root = QuadReal::sqrt_of(params.discriminant());
    const QuadReal k = params.k_quad();
    if (params.b > 0) return k / root;
    return (k - QuadReal(BigInt(1))) / root;
}

std::vector<SweepPoint> sweep(const BigRat& k_min, const BigRat& k_max, int num_points,
                              int n_iters) {
    if (!(1 < k_min && k_min < k_max))
        throw InvalidParams("sweep: need 1 < k_min < k_max");
    if (num_points < 2) throw InvalidParams("sweep: need at least 2 points");

    const BigRat step = (k_max - k_min) / (num_points - 1);
    std::vector<SweepPoint> points;
    points.reserve(static_cast<std::size_t>(num_points));
    for (int j = 0; j < num_points; ++j) {
        SweepPoint point{k_min + j * step, std::nullopt, {}};
        try {
            point.enclosure = enclose_c(KValue::from_rational(point.k), n_iters);
        } catch (const Error& e) {
            point.error = e.what();
        }
        points.push_back(std::move(point));
    }
    return points;
}

JosephusReport josephus_probe(long long q, const std::vector<BigRat>& epsilons,
                              int n_iters) {
    if (q < 2) throw InvalidParams("josephus_probe: q must be at least 2");
    const BigRat point(q, q - 1);
    for (const BigRat& eps : epsilons) {
        if (eps <= 0) throw InvalidParams("josephus_probe: epsilons must be positive");
        if (point - eps <= 1)
            throw InvalidParams("josephus_probe: epsilon too large, k0 - eps must exceed 1");
    }

    JosephusReport report{q, point, n_iters, {}};
    const RhoEnclosure at = enclose_c(KValue::from_rational(point), n_iters);
    report.rows.push_back({0, std::nullopt, point, at, std::nullopt, std::nullopt});
    for (const BigRat& eps : epsilons) {
        for (int side : {-1, +1}) {
            const BigRat kval = side < 0 ? BigRat(point - eps) : BigRat(point + eps);
            const RhoEnclosure enc = enclose_c(KValue::from_rational(kval), n_iters);
            report.rows.push_back({side, eps, kval, enc, enc.c_lo / at.c_hi,
                                   enc.c_hi / at.c_lo});
        }
    }
    return report;
}

}  // namespace ktree
