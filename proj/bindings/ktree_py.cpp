#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "ktree/errors.hpp"
#include "ktree/formats.hpp"
#include "ktree/indicator.hpp"
#include "ktree/rho.hpp"
#include "ktree/rows.hpp"
#include "ktree/tree.hpp"

namespace py = pybind11;

namespace pybind11::detail {

// cpp_int <-> python int, through the decimal representation
template <>
struct type_caster<ktree::BigInt> {
    PYBIND11_TYPE_CASTER(ktree::BigInt, const_name("int"));

    bool load(handle src, bool) {
        if (!PyLong_Check(src.ptr())) return false;
        value = ktree::BigInt(std::string(py::str(src)));
        return true;
    }

    static handle cast(const ktree::BigInt& v, return_value_policy, handle) {
        return PyLong_FromString(v.str().c_str(), nullptr, 10);
    }
};

// cpp_rational <-> fractions.Fraction (ints accepted on input)
template <>
struct type_caster<ktree::BigRat> {
    PYBIND11_TYPE_CASTER(ktree::BigRat, const_name("Fraction"));

    bool load(handle src, bool) {
        if (PyLong_Check(src.ptr())) {
            value = ktree::BigRat(ktree::BigInt(std::string(py::str(src))));
            return true;
        }
        if (!py::hasattr(src, "numerator") || !py::hasattr(src, "denominator")) return false;
        const ktree::BigInt num(std::string(py::str(src.attr("numerator"))));
        const ktree::BigInt den(std::string(py::str(src.attr("denominator"))));
        if (den == 0) return false;
        value = ktree::BigRat(num, den);
        return true;
    }

    static handle cast(const ktree::BigRat& v, return_value_policy, handle) {
        object fraction = module_::import("fractions").attr("Fraction");
        object num = reinterpret_steal<object>(
            PyLong_FromString(numerator(v).str().c_str(), nullptr, 10));
        object den = reinterpret_steal<object>(
            PyLong_FromString(denominator(v).str().c_str(), nullptr, 10));
        return fraction(num, den).release();
    }
};

}  // namespace pybind11::detail

namespace {

ktree::RoundDir parse_dir(const std::string& direction) {
    if (direction == "down") return ktree::RoundDir::Down;
    if (direction == "up") return ktree::RoundDir::Up;
    if (direction == "nearest") return ktree::RoundDir::Nearest;
    throw ktree::InvalidParams("direction must be 'down', 'up' or 'nearest'");
}

py::dict recurrence_to_dict(const ktree::RecurrenceReport& report) {
    py::dict d;
    d["a"] = report.params.a;
    d["b"] = report.params.b;
    d["depth"] = report.depth;
    d["holds"] = report.holds;
    d["first_failure"] =
        report.first_failure ? py::cast(*report.first_failure) : py::none();
    d["base"] = py::make_tuple(report.base_r0, report.base_r1);
    return d;
}

py::dict enclosure_to_dict(const ktree::RhoEnclosure& enc) {
    py::dict d;
    d["k"] = enc.k.spec();
    d["n_iters"] = enc.n_iters;
    d["c_lo"] = enc.c_lo;
    d["c_hi"] = enc.c_hi;
    d["rho_lo"] = enc.rho_lo;
    d["rho_hi"] = enc.rho_hi;
    return d;
}

}  // namespace

PYBIND11_MODULE(_ktree, m) {
    m.doc() = "k-descending trees, row-length sequences and rigorous rho(k) enclosures";
    m.attr("__version__") = "0.1.0";

    py::register_exception<ktree::ParseError>(m, "KParseError", PyExc_ValueError);
    py::register_exception<ktree::InvalidParams>(m, "InvalidParams", PyExc_ValueError);
    py::register_exception<ktree::PrecisionExhausted>(m, "PrecisionExhausted",
                                                      PyExc_ArithmeticError);
    py::register_exception<ktree::UnsupportedRepresentation>(m, "UnsupportedRepresentation",
                                                             PyExc_TypeError);
    py::register_exception<ktree::NonIntegerResult>(m, "NonIntegerResult",
                                                    PyExc_ArithmeticError);
    py::register_exception<ktree::SizeLimit>(m, "SizeLimit", PyExc_RuntimeError);
    py::register_exception<ktree::ChildAbsent>(m, "ChildAbsent", PyExc_ValueError);

    py::class_<ktree::QuadReal>(m, "QuadReal",
                                "Element (p + q*sqrt(d))/r of a real quadratic field, "
                                "kept in canonical form")
        .def(py::init<ktree::BigInt, ktree::BigInt, ktree::BigInt, ktree::BigInt>(),
             py::arg("p"), py::arg("q"), py::arg("d"), py::arg("r"))
        .def_static("sqrt_of", &ktree::QuadReal::sqrt_of, py::arg("d"))
        .def_static("from_fraction",
                    [](const ktree::BigRat& v) { return ktree::QuadReal(v); },
                    py::arg("value"))
        .def_property_readonly("p", &ktree::QuadReal::p)
        .def_property_readonly("q", &ktree::QuadReal::q)
        .def_property_readonly("d", &ktree::QuadReal::d)
        .def_property_readonly("r", &ktree::QuadReal::r)
        .def("is_rational", &ktree::QuadReal::is_rational)
        .def("is_integer", &ktree::QuadReal::is_integer)
        .def("rational_value", &ktree::QuadReal::rational_value)
        .def("sign", &ktree::QuadReal::sign)
        .def("floor", &ktree::QuadReal::floor)
        .def("ceil", &ktree::QuadReal::ceil)
        .def("frac", &ktree::QuadReal::frac)
        .def("conjugate", &ktree::QuadReal::conjugate)
        .def("inverse", &ktree::QuadReal::inverse)
        .def("pow", &ktree::QuadReal::pow, py::arg("e"))
        .def("compare", &ktree::QuadReal::compare)
        .def("to_decimal",
             [](const ktree::QuadReal& v, unsigned digits, const std::string& direction) {
                 return ktree::decimal_string(v, digits, parse_dir(direction));
             },
             py::arg("digits") = 15, py::arg("direction") = "down")
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self / py::self)
        .def(-py::self)
        .def("__eq__",
             [](const ktree::QuadReal& a, const ktree::QuadReal& b) { return a == b; })
        .def("__lt__",
             [](const ktree::QuadReal& a, const ktree::QuadReal& b) { return a.compare(b) < 0; })
        .def("__le__",
             [](const ktree::QuadReal& a, const ktree::QuadReal& b) { return a.compare(b) <= 0; })
        .def("__float__", &ktree::QuadReal::approx)
        .def("__str__", &ktree::QuadReal::str)
        .def("__repr__",
             [](const ktree::QuadReal& v) { return "QuadReal(" + v.str() + ")"; });

    m.def("quad_normalize",
          [](ktree::BigInt p, ktree::BigInt q, ktree::BigInt d, ktree::BigInt r) {
              return ktree::QuadReal(std::move(p), std::move(q), std::move(d), std::move(r));
          },
          py::arg("p"), py::arg("q"), py::arg("d"), py::arg("r"),
          "Canonical form of (p + q*sqrt(d))/r");

    py::class_<ktree::KValue>(m, "KValue", "A real k > 1 (rational, quadratic, or decimal)")
        .def_static("parse", &ktree::KValue::parse, py::arg("text"))
        .def_property_readonly("spec", &ktree::KValue::spec)
        .def_property_readonly("kind",
                               [](const ktree::KValue& k) {
                                   switch (k.kind()) {
                                       case ktree::KValue::Kind::Rational: return "rational";
                                       case ktree::KValue::Kind::Quad: return "quad";
                                       case ktree::KValue::Kind::Approx: return "approx";
                                   }
                                   return "";
                               })
        .def("is_exact", &ktree::KValue::is_exact)
        .def("as_quad", &ktree::KValue::as_quad)
        .def("floor_k", &ktree::KValue::floor_k)
        .def("ceil_k", &ktree::KValue::ceil_k)
        .def("frac_k", &ktree::KValue::frac_k)
        .def("__float__", &ktree::KValue::approx)
        .def("__str__", &ktree::KValue::spec)
        .def("__repr__", [](const ktree::KValue& k) { return "KValue(" + k.spec() + ")"; });

    m.def("parse_k", &ktree::KValue::parse, py::arg("text"),
          "Parse a k-spec: p/q, quad:(p,q,D,r), golden:a,b, integer, or decimal");

    py::class_<ktree::GoldenParams>(m, "GoldenParams",
                                    "(a, b) defining k = (a + sqrt(a^2+4b))/2")
        .def(py::init([](long long a, long long b) { return ktree::GoldenParams{a, b}; }),
             py::arg("a"), py::arg("b"))
        .def_readonly("a", &ktree::GoldenParams::a)
        .def_readonly("b", &ktree::GoldenParams::b)
        .def("discriminant", &ktree::GoldenParams::discriminant)
        .def("is_real", &ktree::GoldenParams::is_real)
        .def("in_recurrence_range", &ktree::GoldenParams::in_recurrence_range)
        .def("in_grandparent_range", &ktree::GoldenParams::in_grandparent_range)
        .def("k_quad", &ktree::GoldenParams::k_quad)
        .def("k", &ktree::GoldenParams::k)
        .def("__repr__", [](const ktree::GoldenParams& p) {
            return "GoldenParams(a=" + std::to_string(p.a) + ", b=" + std::to_string(p.b) + ")";
        });

    // exact floors, ceilings and fractional parts
    m.def("floor_scaled", &ktree::floor_scaled, py::arg("n"), py::arg("k"),
          "floor(n*k), exact");
    m.def("ceil_scaled", &ktree::ceil_scaled, py::arg("n"), py::arg("k"), "ceil(n*k), exact");
    m.def("floor_div", &ktree::floor_div, py::arg("n"), py::arg("k"), "floor(n/k), exact");
    m.def("frac_scaled", &ktree::frac_scaled, py::arg("n"), py::arg("k"),
          "{n*k} as an exact field element");

    // the tree
    m.def("parent", &ktree::parent, py::arg("n"), py::arg("k"));
    m.def("children",
          [](const ktree::BigInt& n, const ktree::KValue& k) {
              const ktree::ChildRange range = ktree::children(n, k);
              return py::make_tuple(range.lo, range.hi);
          },
          py::arg("n"), py::arg("k"), "inclusive (lo, hi) child range");
    m.def("child_count", &ktree::child_count, py::arg("n"), py::arg("k"));
    m.def("depth", &ktree::depth, py::arg("n"), py::arg("k"));

    py::class_<ktree::TreeSlice>(m, "TreeSlice")
        .def_property_readonly("k", [](const ktree::TreeSlice& s) { return s.k.spec(); })
        .def_readonly("max_depth", &ktree::TreeSlice::max_depth)
        .def_readonly("rows", &ktree::TreeSlice::rows)
        .def("node_count", &ktree::TreeSlice::node_count)
        .def("to_dot", [](const ktree::TreeSlice& s) { return ktree::tree_to_dot(s); })
        .def("to_text", [](const ktree::TreeSlice& s) { return ktree::tree_to_text(s); })
        .def("to_json", [](const ktree::TreeSlice& s) { return ktree::tree_to_json(s); });

    m.def("build_slice", &ktree::build_slice, py::arg("k"), py::arg("max_depth"),
          py::arg("node_cap") = ktree::kDefaultNodeCap);

    // rows
    m.def("leftmost_sequence", &ktree::leftmost_sequence, py::arg("k"), py::arg("depth"));
    m.def("row_lengths", &ktree::row_lengths, py::arg("k"), py::arg("depth"));
    m.def("brute_force_row_lengths", &ktree::brute_force_row_lengths, py::arg("k"),
          py::arg("depth"), py::arg("node_cap") = ktree::kDefaultNodeCap);
    m.def("verify_recurrence",
          [](const ktree::GoldenParams& params, int depth) {
              return recurrence_to_dict(ktree::verify_recurrence(params, depth));
          },
          py::arg("params"), py::arg("depth"));
    m.def("closed_form_row", &ktree::closed_form_row, py::arg("params"), py::arg("d"));

    // rho
    m.def("enclose_c",
          [](const ktree::KValue& k, int n_iters) {
              return enclosure_to_dict(ktree::enclose_c(k, n_iters));
          },
          py::arg("k"), py::arg("n_iters"));
    m.def("closed_rho", &ktree::closed_rho, py::arg("params"));
    m.def("sweep",
          [](const ktree::BigRat& k_min, const ktree::BigRat& k_max, int num_points,
             int n_iters) {
              py::list rows;
              for (const ktree::SweepPoint& point :
                   ktree::sweep(k_min, k_max, num_points, n_iters)) {
                  py::dict d;
                  d["k"] = point.k;
                  if (point.enclosure) {
                      d["c_lo"] = point.enclosure->c_lo;
                      d["c_hi"] = point.enclosure->c_hi;
                      d["rho_lo"] = point.enclosure->rho_lo;
                      d["rho_hi"] = point.enclosure->rho_hi;
                  }
                  d["error"] = point.error.empty() ? py::object(py::none())
                                                   : py::object(py::cast(point.error));
                  rows.append(std::move(d));
              }
              return rows;
          },
          py::arg("k_min"), py::arg("k_max"), py::arg("num_points"), py::arg("n_iters"));
    m.def("josephus_probe",
          [](long long q, const std::vector<ktree::BigRat>& epsilons, int n_iters) {
              const ktree::JosephusReport report = ktree::josephus_probe(q, epsilons, n_iters);
              py::dict d;
              d["q"] = report.q;
              d["point"] = report.point;
              d["n_iters"] = report.n_iters;
              py::list rows;
              for (const ktree::JosephusRow& row : report.rows) {
                  py::dict r;
                  r["side"] = row.side;
                  r["epsilon"] = row.epsilon ? py::object(py::cast(*row.epsilon)) : py::none();
                  r["k"] = row.k;
                  r["c_lo"] = row.enclosure.c_lo;
                  r["c_hi"] = row.enclosure.c_hi;
                  r["ratio_lo"] = row.ratio_lo ? py::object(py::cast(*row.ratio_lo)) : py::none();
                  r["ratio_hi"] = row.ratio_hi ? py::object(py::cast(*row.ratio_hi)) : py::none();
                  rows.append(std::move(r));
              }
              d["rows"] = std::move(rows);
              return d;
          },
          py::arg("q"), py::arg("epsilons"), py::arg("n_iters") = 200);

    // indicators
    m.def("count_indicator", &ktree::count_indicator, py::arg("n"), py::arg("k"));
    m.def("classify",
          [](const ktree::QuadReal& x, const ktree::KValue& k) {
              return ktree::classify(x, k) == ktree::RangeClass::Floor ? "floor" : "ceil";
          },
          py::arg("x"), py::arg("k"));
    m.def("predicted_child_count", &ktree::predicted_child_count, py::arg("n"), py::arg("k"));
    m.def("child_indicator", &ktree::child_indicator, py::arg("i"), py::arg("x"),
          py::arg("params"));
    m.def("indicator_scatter", &ktree::indicator_scatter, py::arg("k"), py::arg("n_max"));
    m.def("grandparent_count",
          [](const ktree::GoldenParams& params, int grid) {
              const ktree::GrandparentReport report =
                  ktree::grandparent_count(params, ktree::midpoint_grid(grid));
              py::dict d;
              d["expected"] = report.expected;
              d["verdict"] = report.verdict;
              return d;
          },
          py::arg("params"), py::arg("grid") = 1000);
    m.def("midpoint_grid", &ktree::midpoint_grid, py::arg("n"));
    m.def("cci_lines_csv",
          [](const ktree::GoldenParams& params, int resolution, unsigned digits) {
              return ktree::cci_lines_to_csv(params, resolution, digits);
          },
          py::arg("params"), py::arg("resolution") = 512,
          py::arg("digits") = ktree::kDefaultCsvDigits);

    // verification bundle, as the same JSON the CLI emits
    m.def("verify_json",
          [](long long a, long long b, int depth, int n_iters) {
              return ktree::verify_to_json(ktree::run_verify({a, b}, depth, n_iters));
          },
          py::arg("a"), py::arg("b"), py::arg("depth") = 30, py::arg("iters") = 60);
    m.def("sweep_csv",
          [](const ktree::BigRat& k_min, const ktree::BigRat& k_max, int num_points,
             int n_iters, unsigned digits) {
              return ktree::sweep_to_csv(ktree::sweep(k_min, k_max, num_points, n_iters),
                                         n_iters, digits);
          },
          py::arg("k_min"), py::arg("k_max"), py::arg("num_points"), py::arg("n_iters") = 40,
          py::arg("digits") = ktree::kDefaultCsvDigits);
}
