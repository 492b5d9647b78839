#include "ktree/rows.hpp"

#include <sstream>
#include <utility>

#include "ktree/errors.hpp"

namespace ktree {

std::vector<BigInt> leftmost_sequence(const KValue& k, int depth) {
    if (depth < 0) throw InvalidParams("leftmost_sequence: depth must be nonnegative");
    std::vector<BigInt> f;
    f.reserve(static_cast<std::size_t>(depth) + 1);
    f.push_back(1);
    for (int i = 0; i < depth; ++i) f.push_back(ceil_scaled(f.back(), k));
    return f;
}

std::vector<BigInt> row_lengths(const KValue& k, int depth) {
    const std::vector<BigInt> f = leftmost_sequence(k, depth);
    std::vector<BigInt> r;
    r.reserve(f.size());
    r.push_back(1);
    for (std::size_t d = 1; d < f.size(); ++d) r.push_back(f[d] - f[d - 1]);
    return r;
}

RowTable make_row_table(const KValue& k, int depth) {
    RowTable table{k, leftmost_sequence(k, depth), {}};
    table.r.reserve(table.f.size());
    table.r.push_back(1);
    for (std::size_t d = 1; d < table.f.size(); ++d)
        table.r.push_back(table.f[d] - table.f[d - 1]);
    return table;
}

std::vector<BigInt> brute_force_row_lengths(const KValue& k, int depth,
                                            std::uint64_t node_cap) {
    if (depth < 0)
        throw InvalidParams("brute_force_row_lengths: depth must be nonnegative");
    std::vector<BigInt> counts;
    counts.reserve(static_cast<std::size_t>(depth) + 1);
    std::vector<BigInt> row{BigInt(0)};
    std::uint64_t total = 1;
    counts.push_back(1);
    for (int d = 0; d < depth; ++d) {
        std::vector<BigInt> next;
        for (const BigInt& n : row) {
            const ChildRange range = children(n, k);
            for (BigInt c = range.lo; c <= range.hi; ++c) {
                if (c == n) continue;
                if (++total > node_cap)
                    throw SizeLimit("brute_force_row_lengths: node count exceeds cap of " +
                                    std::to_string(node_cap));
                next.push_back(c);
            }
        }
        counts.push_back(BigInt(next.size()));
        row = std::move(next);
    }
    return counts;
}

namespace {

void require_recurrence_range(const GoldenParams& params) {
    if (!params.in_recurrence_range()) {
        std::ostringstream msg;
        msg << "golden parameters out of recurrence range (need a >= 1 and 1-a < b < 1+a): a="
            << params.a << ", b=" << params.b;
        BigInt root;
        if (params.a >= 1 && is_square(params.discriminant(), &root))
            msg << "; note k = " << QuadReal(BigInt(params.a) + root, 0, 0, 2).str()
                << " at this boundary";
        throw InvalidParams(msg.str());
    }
}

}  // namespace

RecurrenceReport check_recurrence(const GoldenParams& params,
                                  const std::vector<BigInt>& rows,
                                  const BigInt& expected_r1) {
    if (rows.size() < 3)
        throw InvalidParams("check_recurrence: need rows through depth 2 at least");
    const int depth = static_cast<int>(rows.size()) - 1;
    RecurrenceReport report{params, depth, true, std::nullopt, rows[0], rows[1]};
    if (rows[0] != 1) {
        report.holds = false;
        report.first_failure = 0;
        return report;
    }
    if (rows[1] != expected_r1) {
        report.holds = false;
        report.first_failure = 1;
        return report;
    }
    for (int d = 2; d <= depth; ++d) {
        if (rows[d] != params.a * rows[d - 1] + params.b * rows[d - 2]) {
            report.holds = false;
            report.first_failure = d;
            return report;
        }
    }
    return report;
}

RecurrenceReport verify_recurrence(const GoldenParams& params, int depth) {
    require_recurrence_range(params);
    if (depth < 2) throw InvalidParams("verify_recurrence: depth must be at least 2");
    const KValue k = params.k();
    return check_recurrence(params, row_lengths(k, depth), k.ceil_k() - 1);
}

BigInt closed_form_row(const GoldenParams& params, int d) {
    require_recurrence_range(params);
    if (d < 0) throw InvalidParams("closed_form_row: d must be nonnegative");

    if (params.b == 0) {
        // Integer k = a: r_0 = 1 and r_d = a^{d−1}(a−1) for d ≥ 1.
        if (d == 0) return 1;
        BigInt result = BigInt(params.a) - 1;
        for (int i = 1; i < d; ++i) result *= params.a;
        return result;
    }

    const BigInt disc = params.discriminant();
    const QuadReal k1 = params.k_quad();
    const QuadReal root = QuadReal::sqrt_of(disc);
    QuadReal numer;
    if (params.b > 0) {
        const QuadReal z = k1.pow(static_cast<unsigned>(d) + 1);
        numer = z - z.conjugate();
    } else {
        const QuadReal z = (k1 - QuadReal(BigInt(1))) * k1.pow(static_cast<unsigned>(d));
        numer = z - z.conjugate();
    }
    const QuadReal value = numer / root;
    if (!value.is_integer())
        throw NonIntegerResult("closed_form_row: field arithmetic did not yield an integer: " +
                               value.str());
    return value.p();
}

}  // namespace ktree
