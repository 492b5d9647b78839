#include "ktree/formats.hpp"

#include <json.hpp>

#include <sstream>

#include "ktree/errors.hpp"

namespace ktree {

using ordered_json = nlohmann::ordered_json;

namespace {

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

// Node ids in a materialized slice are bounded by the node cap times k, far
// below 2^53, so they are safe as JSON numbers.
std::int64_t to_json_id(const BigInt& n) { return n.convert_to<std::int64_t>(); }

}  // namespace

std::string tree_to_dot(const TreeSlice& slice, bool meta) {
    std::ostringstream out;
    out << "// k-descending tree: every node c has parent floor(c/k)\n";
    out << "// edges are drawn parent -> child; labels are node ids with child count h\n";
    if (meta) out << "// k = " << slice.k.spec() << ", max_depth = " << slice.max_depth << "\n";
    out << "digraph ktree {\n";
    out << "  node [shape=circle];\n";
    for (const auto& row : slice.rows)
        for (const BigInt& n : row)
            out << "  n" << n << " [label=\"" << n << "\\nh=" << child_count(n, slice.k)
                << "\"];\n";
    for (std::size_t d = 1; d < slice.rows.size(); ++d)
        for (const BigInt& n : slice.rows[d]) out << "  n" << parent(n, slice.k) << " -> n" << n << ";\n";
    out << "}\n";
    return out.str();
}

namespace {

void emit_text(std::ostringstream& out, const TreeSlice& slice, const BigInt& n, int d) {
    for (int i = 0; i < d; ++i) out << "  ";
    out << n << "\n";
    if (d == slice.max_depth) return;
    const ChildRange range = children(n, slice.k);
    for (BigInt c = range.lo; c <= range.hi; ++c) {
        if (c == n) continue;
        emit_text(out, slice, c, d + 1);
    }
}

}  // namespace

std::string tree_to_text(const TreeSlice& slice) {
    std::ostringstream out;
    emit_text(out, slice, 0, 0);
    return out.str();
}

std::string tree_to_json(const TreeSlice& slice) {
    ordered_json j;
    j["k"] = slice.k.spec();
    j["max_depth"] = slice.max_depth;
    ordered_json rows = ordered_json::array();
    for (const auto& row : slice.rows) {
        ordered_json r = ordered_json::array();
        for (const BigInt& n : row) r.push_back(to_json_id(n));
        rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    return dump(j);
}

std::string row_table_to_csv(const RowTable& table, bool meta) {
    std::ostringstream out;
    if (meta) out << "# k = " << table.k.spec() << "\n";
    out << "d,f_d,r_d\n";
    for (std::size_t d = 0; d < table.f.size(); ++d)
        out << d << "," << table.f[d] << "," << table.r[d] << "\n";
    return out.str();
}

std::string row_table_to_json(const RowTable& table) {
    ordered_json j;
    j["k"] = table.k.spec();
    ordered_json f = ordered_json::array(), r = ordered_json::array();
    for (const BigInt& v : table.f) f.push_back(v.str());
    for (const BigInt& v : table.r) r.push_back(v.str());
    j["f"] = std::move(f);
    j["r"] = std::move(r);
    return dump(j);
}

namespace {

ordered_json enclosure_fields(const RhoEnclosure& enc, unsigned digits) {
    ordered_json j;
    j["k"] = enc.k.spec();
    j["n_iters"] = enc.n_iters;
    j["c_lo"] = decimal_string(enc.c_lo, digits, RoundDir::Down);
    j["c_hi"] = decimal_string(enc.c_hi, digits, RoundDir::Up);
    j["rho_lo"] = decimal_string(enc.rho_lo, digits, RoundDir::Down);
    j["rho_hi"] = decimal_string(enc.rho_hi, digits, RoundDir::Up);
    return j;
}

std::string rat_str(const BigRat& v) {
    std::ostringstream out;
    out << numerator(v);
    if (denominator(v) != 1) out << "/" << denominator(v);
    return out.str();
}

}  // namespace

std::string enclosure_to_json(const RhoEnclosure& enc, unsigned digits) {
    return dump(enclosure_fields(enc, digits));
}

std::string sweep_to_csv(const std::vector<SweepPoint>& points, int n_iters,
                         unsigned digits, bool meta) {
    std::ostringstream out;
    if (meta) out << "# evenly spaced rational grid, " << points.size() << " points\n";
    out << "k_num,k_den,n_iters,c_lo,c_hi,rho_lo,rho_hi,error\n";
    for (const SweepPoint& point : points) {
        out << numerator(point.k) << "," << denominator(point.k) << "," << n_iters << ",";
        if (point.enclosure) {
            const RhoEnclosure& enc = *point.enclosure;
            out << decimal_string(enc.c_lo, digits, RoundDir::Down) << ","
                << decimal_string(enc.c_hi, digits, RoundDir::Up) << ","
                << decimal_string(enc.rho_lo, digits, RoundDir::Down) << ","
                << decimal_string(enc.rho_hi, digits, RoundDir::Up) << ",";
        } else {
            out << ",,,,";
        }
        out << point.error << "\n";
    }
    return out.str();
}

std::string josephus_to_json(const JosephusReport& report, unsigned digits) {
    ordered_json j;
    j["q"] = report.q;
    j["point"] = rat_str(report.point);
    j["n_iters"] = report.n_iters;
    ordered_json rows = ordered_json::array();
    for (const JosephusRow& row : report.rows) {
        ordered_json r;
        r["side"] = row.side == 0 ? "at" : row.side < 0 ? "left" : "right";
        r["epsilon"] = row.epsilon ? ordered_json(rat_str(*row.epsilon)) : ordered_json();
        r["k"] = rat_str(row.k);
        r["c_lo"] = decimal_string(row.enclosure.c_lo, digits, RoundDir::Down);
        r["c_hi"] = decimal_string(row.enclosure.c_hi, digits, RoundDir::Up);
        r["ratio_lo"] = row.ratio_lo
                            ? ordered_json(decimal_string(*row.ratio_lo, digits, RoundDir::Down))
                            : ordered_json();
        r["ratio_hi"] = row.ratio_hi
                            ? ordered_json(decimal_string(*row.ratio_hi, digits, RoundDir::Up))
                            : ordered_json();
        rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    return dump(j);
}

namespace {

const char* class_name(RangeClass cls) {
    return cls == RangeClass::Floor ? "floor" : "ceil";
}

RangeClass classify_value(const QuadReal& x, const QuadReal& k) {
    if (x.sign() == 0) return RangeClass::Ceil;
    const QuadReal threshold = QuadReal(BigInt(1)) - k.frac();
    return x.compare(threshold) <= 0 ? RangeClass::Floor : RangeClass::Ceil;
}

}  // namespace

std::string cci_lines_to_csv(const GoldenParams& params, int resolution, unsigned digits,
                             bool meta) {
    if (resolution < 1) throw InvalidParams("cci_lines_to_csv: resolution must be positive");
    const std::vector<IndicatorLine> lines = cci_lines(params);
    const QuadReal k = params.k_quad();

    std::ostringstream out;
    if (meta)
        out << "# child-count indicator lines for a = " << params.a << ", b = " << params.b
            << ", sampled at " << resolution << " points\n";
    out << "x,i,f_i,range_class\n";
    for (int j = 0; j < resolution; ++j) {
        const QuadReal x{BigRat(j, resolution)};
        for (const IndicatorLine& line : lines) {
            if (line.restricted && classify_value(x, k) == RangeClass::Floor) continue;
            const QuadReal f = line.eval(x);
            out << decimal_string(x, digits, RoundDir::Down) << "," << line.index << ","
                << decimal_string(f, digits, RoundDir::Down) << ","
                << class_name(classify_value(f, k)) << "\n";
        }
    }
    return out.str();
}

std::string scatter_to_csv(const KValue& k, long n_max, unsigned digits, bool meta) {
    const auto points = indicator_scatter(k, n_max);
    const QuadReal kq = k.as_quad();
    std::ostringstream out;
    if (meta) out << "# indicator scatter for k = " << k.spec() << ", n = 1.." << n_max << "\n";
    out << "x,i,f_i,range_class\n";
    for (const auto& [x, fx] : points)
        out << decimal_string(x, digits, RoundDir::Down) << ",1,"
            << decimal_string(fx, digits, RoundDir::Down) << ","
            << class_name(classify_value(fx, kq)) << "\n";
    return out.str();
}

VerifyBundle run_verify(const GoldenParams& params, int depth, int n_iters) {
    VerifyBundle bundle{params,
                        verify_recurrence(params, depth),
                        true,
                        std::nullopt,
                        closed_rho(params),
                        enclose_c(params.k(), n_iters),
                        false,
                        false,
                        false};

    const std::vector<BigInt> enumerated = row_lengths(params.k(), depth);
    for (int d = 0; d <= depth; ++d) {
        if (closed_form_row(params, d) != enumerated[d]) {
            bundle.closed_form_holds = false;
            bundle.closed_form_first_failure = d;
            break;
        }
    }

    const QuadReal lo{bundle.enclosure.rho_lo};
    const QuadReal hi{bundle.enclosure.rho_hi};
    const int cmp_lo = bundle.rho_closed.compare(lo);
    const int cmp_hi = bundle.rho_closed.compare(hi);
    bundle.rho_contained = cmp_lo >= 0 && cmp_hi <= 0;
    bundle.rho_strict = cmp_lo > 0 && cmp_hi < 0;

    const bool rho_ok = params.b == 0 ? (bundle.rho_contained && cmp_lo == 0 && cmp_hi < 0)
                                      : bundle.rho_strict;
    bundle.pass = bundle.recurrence.holds && bundle.closed_form_holds && rho_ok;
    return bundle;
}

std::string verify_to_json(const VerifyBundle& bundle, unsigned digits) {
    ordered_json j;
    j["a"] = bundle.params.a;
    j["b"] = bundle.params.b;
    const KValue k = bundle.params.k();
    j["k"] = k.spec();
    j["k_decimal"] = decimal_string(k.as_quad(), digits, RoundDir::Down);
    j["depth"] = bundle.recurrence.depth;

    ordered_json rec;
    rec["holds"] = bundle.recurrence.holds;
    rec["first_failure"] = bundle.recurrence.first_failure
                               ? ordered_json(*bundle.recurrence.first_failure)
                               : ordered_json();
    rec["base"] = {bundle.recurrence.base_r0.str(), bundle.recurrence.base_r1.str()};
    j["recurrence"] = std::move(rec);

    ordered_json cf;
    cf["holds"] = bundle.closed_form_holds;
    cf["first_failure"] = bundle.closed_form_first_failure
                              ? ordered_json(*bundle.closed_form_first_failure)
                              : ordered_json();
    j["closed_form"] = std::move(cf);

    ordered_json rho;
    rho["closed"] = bundle.rho_closed.str();
    rho["closed_decimal"] = decimal_string(bundle.rho_closed, digits, RoundDir::Down);
    rho["n_iters"] = bundle.enclosure.n_iters;
    rho["rho_lo"] = decimal_string(bundle.enclosure.rho_lo, digits, RoundDir::Down);
    rho["rho_hi"] = decimal_string(bundle.enclosure.rho_hi, digits, RoundDir::Up);
    rho["contained"] = bundle.rho_contained;
    rho["strict"] = bundle.rho_strict;
    if (bundle.params.b == 0)
        rho["note"] = "integer k: closed rho equals the enclosure's lower endpoint exactly";
    j["rho"] = std::move(rho);

    j["pass"] = bundle.pass;
    return dump(j);
}

std::string error_to_json(const std::string& type, const std::string& message) {
    ordered_json j;
    j["error"] = {{"type", type}, {"message", message}};
    return dump(j);
}

}  // namespace ktree
