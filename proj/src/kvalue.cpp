#include "ktree/kvalue.hpp"

#include <cctype>
#include <sstream>
#include <vector>

#include "ktree/errors.hpp"

namespace ktree {

namespace {

void require_above_one_exact(const QuadReal& v) {
    if (v.compare(QuadReal(BigInt(1))) <= 0)
        throw InvalidParams("k must be greater than 1, got " + v.str());
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

bool is_integer_literal(std::string_view s) {
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

BigInt parse_int(std::string_view s) {
    if (!is_integer_literal(s))
        throw ParseError("expected an integer, got \"" + std::string(s) + "\"");
    return bigint_from_decimal(s);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    while (true) {
        const auto pos = s.find(sep);
        if (pos == std::string_view::npos) {
            parts.push_back(s);
            return parts;
        }
        parts.push_back(s.substr(0, pos));
        s.remove_prefix(pos + 1);
    }
}

}  // namespace

KValue KValue::from_rational(BigInt num, BigInt den) {
    if (den == 0) throw InvalidParams("rational k: denominator must be nonzero");
    if (den < 0) {
        den = -den;
        num = -num;
    }
    KValue k;
    k.kind_ = Kind::Rational;
    k.rat_ = BigRat(num, den);
    if (k.rat_ <= 1) {
        std::ostringstream msg;
        msg << "k must be greater than 1, got " << k.rat_;
        throw InvalidParams(msg.str());
    }
    k.quad_ = QuadReal(k.rat_);
    k.quad_inv_ = k.quad_.inverse();
    return k;
}

KValue KValue::from_rational(const BigRat& v) {
    return from_rational(numerator(v), denominator(v));
}

KValue KValue::from_quad(QuadReal v) {
    if (v.is_rational()) return from_rational(v.rational_value());
    require_above_one_exact(v);
    KValue k;
    k.kind_ = Kind::Quad;
    k.quad_inv_ = v.inverse();
    k.quad_ = std::move(v);
    return k;
}

KValue KValue::from_approx(std::string_view digits, unsigned guard_digits) {
    std::string_view s = trim(digits);
    const auto dot = s.find('.');
    if (dot == std::string_view::npos || !is_integer_literal(s.substr(0, dot)) ||
        s.substr(dot + 1).empty() || !is_integer_literal(s.substr(dot + 1)) ||
        s.substr(dot + 1).front() == '+' || s.substr(dot + 1).front() == '-')
        throw ParseError("expected a decimal literal, got \"" + std::string(s) + "\"");
    const std::string_view ip = s.substr(0, dot);
    const std::string_view fp = s.substr(dot + 1);
    const BigInt scale = pow10(static_cast<unsigned>(fp.size()));
    const BigInt whole = parse_int(ip);
    const bool neg = whole < 0 || ip.front() == '-';
    BigInt units = abs(whole) * scale + parse_int(fp);
    if (neg) units = -units;

    KValue k;
    k.kind_ = Kind::Approx;
    k.literal_ = std::string(s);
    k.approx_v_ = BigRat(units, scale);
    k.approx_u_ = BigRat(1, scale);
    k.guard_ = guard_digits;
    if (k.approx_v_ - k.approx_u_ <= 1)
        throw InvalidParams("approximate k \"" + k.literal_ +
                            "\" cannot be certified > 1 at its own precision; "
                            "use an exact form (p/q, quad:(p,q,D,r), golden:a,b)");
    return k;
}

KValue KValue::parse(std::string_view text) {
    const std::string_view s = trim(text);
    if (s.empty()) throw ParseError("empty k-spec");

    if (s.starts_with("quad:")) {
        std::string_view body = s.substr(5);
        if (body.size() < 2 || body.front() != '(' || body.back() != ')')
            throw ParseError("quad k-spec must look like quad:(p,q,D,r)");
        const auto parts = split(body.substr(1, body.size() - 2), ',');
        if (parts.size() != 4) throw ParseError("quad k-spec needs four integers");
        const BigInt p = parse_int(trim(parts[0]));
        const BigInt q = parse_int(trim(parts[1]));
        const BigInt d = parse_int(trim(parts[2]));
        const BigInt r = parse_int(trim(parts[3]));
        if (r == 0) throw InvalidParams("quad k-spec: r must be nonzero");
        if (d < 0) throw InvalidParams("quad k-spec: D must be nonnegative");
        return from_quad(QuadReal(p, q, d, r));
    }

    if (s.starts_with("golden:")) {
        const auto parts = split(s.substr(7), ',');
        if (parts.size() != 2) throw ParseError("golden k-spec must look like golden:a,b");
        const BigInt a = parse_int(trim(parts[0]));
        const BigInt b = parse_int(trim(parts[1]));
        const BigInt disc = a * a + 4 * b;
        if (disc < 0)
            throw InvalidParams("golden k-spec: a^2+4b is negative, k is not real");
        return from_quad(QuadReal(a, 1, disc, 2));
    }

    if (s.find('/') != std::string_view::npos) {
        const auto parts = split(s, '/');
        if (parts.size() != 2) throw ParseError("rational k-spec must look like p/q");
        const BigInt num = parse_int(trim(parts[0]));
        const BigInt den = parse_int(trim(parts[1]));
        if (den == 0) throw InvalidParams("rational k-spec: denominator must be nonzero");
        return from_rational(num, den);
    }

    if (is_integer_literal(s)) return from_rational(parse_int(s), 1);

    if (s.find('.') != std::string_view::npos) return from_approx(s);

    throw ParseError("unrecognized k-spec \"" + std::string(s) + "\"");
}

std::string KValue::spec() const {
    switch (kind_) {
        case Kind::Rational: {
            std::ostringstream out;
            out << numerator(rat_);
            if (denominator(rat_) != 1) out << "/" << denominator(rat_);
            return out.str();
        }
        case Kind::Quad: {
            std::ostringstream out;
            out << "quad:(" << quad_.p() << "," << quad_.q() << "," << quad_.d() << ","
                << quad_.r() << ")";
            return out.str();
        }
        case Kind::Approx:
            return literal_;
    }
    return {};
}

const BigRat& KValue::rat() const {
    if (kind_ != Kind::Rational) throw InvalidParams("KValue: not a rational k");
    return rat_;
}

const QuadReal& KValue::quad() const {
    if (kind_ != Kind::Quad) throw InvalidParams("KValue: not a quadratic k");
    return quad_;
}

const QuadReal& KValue::as_quad() const {
    if (kind_ == Kind::Approx)
        throw UnsupportedRepresentation(
            "operation requires an exact k (rational or quadratic); \"" + literal_ +
            "\" is a decimal approximation");
    return quad_;  // Rational KValues fill quad_ at construction
}

const QuadReal& KValue::quad_inverse() const {
    if (kind_ == Kind::Approx)
        throw UnsupportedRepresentation("quad_inverse requires an exact k");
    return quad_inv_;
}

const BigRat& KValue::approx_value() const {
    if (kind_ != Kind::Approx) throw InvalidParams("KValue: not an approximate k");
    return approx_v_;
}

const BigRat& KValue::approx_ulp() const {
    if (kind_ != Kind::Approx) throw InvalidParams("KValue: not an approximate k");
    return approx_u_;
}

BigRat KValue::lower() const {
    switch (kind_) {
        case Kind::Rational: return rat_;
        case Kind::Quad: return quad_.lower_rational(guard_);
        case Kind::Approx: return approx_v_ - approx_u_;
    }
    return {};
}

BigRat KValue::upper() const {
    switch (kind_) {
        case Kind::Rational: return rat_;
        case Kind::Quad: return quad_.upper_rational(guard_);
        case Kind::Approx: return approx_v_ + approx_u_;
    }
    return {};
}

BigInt KValue::floor_k() const { return floor_scaled(1, *this); }
BigInt KValue::ceil_k() const { return ceil_scaled(1, *this); }

QuadReal KValue::frac_k() const { return frac_scaled(1, *this); }

double KValue::approx() const {
    switch (kind_) {
        case Kind::Rational: return rat_.convert_to<double>();
        case Kind::Quad: return quad_.approx();
        case Kind::Approx: return approx_v_.convert_to<double>();
    }
    return 0.0;
}

namespace {

void require_nonnegative(const BigInt& n, const char* op) {
    if (n < 0) throw InvalidParams(std::string(op) + ": n must be nonnegative");
}

}  // namespace

BigInt floor_scaled(const BigInt& n, const KValue& k) {
    require_nonnegative(n, "floor_scaled");
    switch (k.kind()) {
        case KValue::Kind::Rational:
            return floor_div_int(n * numerator(k.rat()), denominator(k.rat()));
        case KValue::Kind::Quad: {
            const QuadReal& v = k.quad();
            const BigInt a = n * v.p();
            const BigInt b = n * v.q();
            const BigInt s =
                b >= 0 ? isqrt_floor(b * b * v.d()) : -isqrt_ceil(b * b * v.d());
            return floor_div_int(a + s, v.r());
        }
        case KValue::Kind::Approx: {
            const BigRat lo = n * k.lower();
            const BigRat hi = n * k.upper();
            BigInt fl = floor_rat(lo);
            const BigInt fh = floor_rat(hi);
            if (fl != fh)
                throw PrecisionExhausted(
                    "floor(n*k) is ambiguous at the stored precision of k = \"" +
                    k.spec() + "\" (interval straddles an integer); supply k as p/q, "
                    "quad:(p,q,D,r), or golden:a,b for exact arithmetic");
            return fl;
        }
    }
    throw Error("floor_scaled: unreachable");
}

BigInt ceil_scaled(const BigInt& n, const KValue& k) {
    require_nonnegative(n, "ceil_scaled");
    switch (k.kind()) {
        case KValue::Kind::Rational:
            return ceil_div_int(n * numerator(k.rat()), denominator(k.rat()));
        case KValue::Kind::Quad: {
            // ⌈x⌉ = −⌊−x⌋
            const QuadReal& v = k.quad();
            const BigInt a = -n * v.p();
            const BigInt b = -n * v.q();
            const BigInt s =
                b >= 0 ? isqrt_floor(b * b * v.d()) : -isqrt_ceil(b * b * v.d());
            return -floor_div_int(a + s, v.r());
        }
        case KValue::Kind::Approx: {
            const BigRat lo = n * k.lower();
            const BigRat hi = n * k.upper();
            BigInt cl = ceil_rat(lo);
            const BigInt ch = ceil_rat(hi);
            if (cl != ch)
                throw PrecisionExhausted(
                    "ceil(n*k) is ambiguous at the stored precision of k = \"" + k.spec() +
                    "\" (interval straddles an integer); supply k as p/q, quad:(p,q,D,r), "
                    "or golden:a,b for exact arithmetic");
            return cl;
        }
    }
    throw Error("ceil_scaled: unreachable");
}

BigInt floor_div(const BigInt& n, const KValue& k) {
    require_nonnegative(n, "floor_div");
    switch (k.kind()) {
        case KValue::Kind::Rational:
            return floor_div_int(n * denominator(k.rat()), numerator(k.rat()));
        case KValue::Kind::Quad: {
            // n/k = n·(1/k); the inverse is cached at construction.
            const QuadReal& inv = k.quad_inverse();
            const BigInt a = n * inv.p();
            const BigInt b = n * inv.q();
            const BigInt s =
                b >= 0 ? isqrt_floor(b * b * inv.d()) : -isqrt_ceil(b * b * inv.d());
            return floor_div_int(a + s, inv.r());
        }
        case KValue::Kind::Approx: {
            const BigRat lo = n / k.upper();
            const BigRat hi = n / k.lower();
            BigInt fl = floor_rat(lo);
            const BigInt fh = floor_rat(hi);
            if (fl != fh)
                throw PrecisionExhausted(
                    "floor(n/k) is ambiguous at the stored precision of k = \"" + k.spec() +
                    "\" (interval straddles an integer); supply k as p/q, quad:(p,q,D,r), "
                    "or golden:a,b for exact arithmetic");
            return fl;
        }
    }
    throw Error("floor_div: unreachable");
}

QuadReal frac_scaled(const BigInt& n, const KValue& k) {
    require_nonnegative(n, "frac_scaled");
    switch (k.kind()) {
        case KValue::Kind::Rational: {
            const BigRat nk = n * k.rat();
            return QuadReal(nk - BigRat(floor_rat(nk)));
        }
        case KValue::Kind::Quad: {
            const QuadReal nk = QuadReal(n) * k.quad();
            return nk.frac();
        }
        case KValue::Kind::Approx:
            throw UnsupportedRepresentation(
                "frac_scaled requires an exact k (rational or quadratic); \"" + k.spec() +
                "\" is a decimal approximation");
    }
    throw Error("frac_scaled: unreachable");
}

}  // namespace ktree
