#include "ktree/indicator.hpp"

#include "ktree/errors.hpp"

namespace ktree {

namespace {

const QuadReal kOne(BigInt(1));

void require_unit_interval(const QuadReal& x) {
    if (x.sign() < 0 || x.compare(kOne) >= 0)
        throw InvalidParams("indicator value must lie in [0, 1), got " + x.str());
}

// Classification against an explicit field element k (lets the grandparent
// machinery run on degenerate k = 1 instances that KValue would reject).
RangeClass classify_quad(const QuadReal& x, const QuadReal& k) {
    require_unit_interval(x);
    if (x.sign() == 0) return RangeClass::Ceil;
    const QuadReal threshold = kOne - k.frac();
    return x.compare(threshold) <= 0 ? RangeClass::Floor : RangeClass::Ceil;
}

}  // namespace

QuadReal count_indicator(const BigInt& n, const KValue& k) {
    if (n < 1) throw InvalidParams("count_indicator: n must be positive");
    return frac_scaled(n, k);
}

RangeClass classify(const QuadReal& x, const KValue& k) {
    return classify_quad(x, k.as_quad());
}

BigInt predicted_child_count(const BigInt& n, const KValue& k) {
    if (n == 0) return k.ceil_k();
    return classify(count_indicator(n, k), k) == RangeClass::Floor ? k.floor_k()
                                                                   : k.ceil_k();
}

QuadReal child_indicator(int i, const QuadReal& x, const GoldenParams& params) {
    if (!params.is_real())
        throw InvalidParams("child_indicator: need a >= 1 and a^2+4b >= 0");
    const QuadReal k = params.k_quad();
    if (k.compare(kOne) < 0)
        throw InvalidParams("child_indicator: k must be at least 1");
    require_unit_interval(x);
    const BigInt kc = k.ceil();
    const BigInt kf = k.floor();
    if (i < 1 || BigInt(i) > kc)
        throw InvalidParams("child_indicator: child index out of range 1..ceil(k)");
    if (BigInt(i) == kc && kc != kf && classify_quad(x, k) == RangeClass::Floor)
        throw ChildAbsent("child " + std::to_string(i) +
                          " does not exist at a floor-range indicator");
    // b/k = k − a exactly, since k² = a·k + b.
    const QuadReal b_over_k = k - QuadReal(BigInt(params.a));
    return ((QuadReal(BigInt(i)) - x) * b_over_k).frac();
}

std::vector<IndicatorLine> cci_lines(const GoldenParams& params) {
    if (!params.is_real())
        throw InvalidParams("cci_lines: need a >= 1 and a^2+4b >= 0");
    const QuadReal k = params.k_quad();
    if (k.compare(kOne) < 0) throw InvalidParams("cci_lines: k must be at least 1");
    const BigInt kc = k.ceil();
    const bool fractional = kc != k.floor();
    std::vector<IndicatorLine> lines;
    for (BigInt i = 1; i <= kc; ++i) {
        const int idx = i.convert_to<int>();
        lines.push_back({idx, params, fractional && i == kc});
    }
    return lines;
}

std::vector<std::pair<QuadReal, QuadReal>> indicator_scatter(const KValue& k, long n_max) {
    if (n_max < 1) throw InvalidParams("indicator_scatter: n_max must be positive");
    std::vector<std::pair<QuadReal, QuadReal>> points;
    points.reserve(static_cast<std::size_t>(n_max));
    for (BigInt n = 1; n <= n_max; ++n) {
        const BigInt first_child = ceil_scaled(n, k);
        points.emplace_back(count_indicator(n, k), count_indicator(first_child, k));
    }
    return points;
}

GrandparentReport grandparent_count(const GoldenParams& params,
                                    const std::vector<QuadReal>& samples) {
    if (!params.in_grandparent_range())
        throw InvalidParams("grandparent_count: need a >= 1 and 1-a <= b <= a-1");
    const QuadReal k = params.k_quad();
    const QuadReal fk = k.frac();
    const QuadReal threshold = kOne - fk;  // 1 − {k}
    const BigInt kc = k.ceil();
    const BigInt kf = k.floor();

    GrandparentReport report{params, BigInt(params.b < 0 ? -params.b : params.b), true, {}};
    report.counts.reserve(samples.size());
    for (const QuadReal& x : samples) {
        const RangeClass cls = classify_quad(x, k);
        const BigInt present = cls == RangeClass::Floor ? kf : kc;
        BigInt hits = 0;
        for (BigInt i = 1; i <= present; ++i) {
            const QuadReal f = child_indicator(i.convert_to<int>(), x, params);
            // Half-open windows keep the count constant through the handoff at
            // x = 1−{k}, where the outgoing indicator sits exactly on the
            // threshold while the ⌈k⌉-th child does not exist yet. Realizable
            // node indicators never hit the boundary for irrational k, so both
            // conventions agree on actual trees.
            if (params.b >= 0) {
                // wrap zone [1−{k}, 1)
                if (f.compare(threshold) >= 0) ++hits;
            } else {
                // floor-range (0, 1−{k}]
                if (f.sign() > 0 && f.compare(threshold) <= 0) ++hits;
            }
        }
        if (hits != report.expected) report.verdict = false;
        report.counts.emplace_back(x, std::move(hits));
    }
    return report;
}

std::vector<QuadReal> midpoint_grid(int n) {
    if (n < 1) throw InvalidParams("midpoint_grid: n must be positive");
    std::vector<QuadReal> grid;
    grid.reserve(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) grid.push_back(QuadReal(BigRat(2 * j + 1, 2 * n)));
    return grid;
}

}  // namespace ktree
