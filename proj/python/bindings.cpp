// python/bindings.cpp -- pybind11 bindings for the oriseq module.

#include "oriseq/construct.hpp"
#include "oriseq/core.hpp"
#include "oriseq/counting.hpp"
#include "oriseq/lempel.hpp"
#include "oriseq/oracle.hpp"
#include "oriseq/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>

namespace py = pybind11;

namespace {

using namespace oriseq;

// Arbitrary-precision counts cross into python as exact ints via decimal text.
py::int_ to_py(const BigInt& v) { return py::cast<py::int_>(py::str(v.str())); }

HalfInt halfint_from(double s) {
    const double doubled = 2.0 * s;
    const long long rounded = std::llround(doubled);
    if (static_cast<double>(rounded) != doubled)
        throw std::invalid_argument("weight must be a multiple of 0.5");
    return HalfInt::halves(rounded);
}

py::dict verdict_dict(const verify::Verdict& v) {
    py::dict out;
    out["holds"] = v.holds;
    out["witness"] = v.witness ? py::cast(*v.witness) : py::none().cast<py::object>();
    return out;
}

py::dict report_dict(const RingSequence& s, const construct::ConstructionReport& r) {
    py::dict out;
    out["method"] = construct::method_name(r.method);
    out["q"] = r.q;
    out["n"] = r.n;
    out["period"] = r.period;
    out["weight_mod_q"] = r.weight_mod_q;
    out["predicted_period"] = to_py(r.predicted_period);
    out["bound"] = to_py(r.bound);
    out["gap"] = to_py(r.gap);
    out["symbols"] = s.symbols();
    return out;
}

}  // namespace

PYBIND11_MODULE(_oriseq, m) {
    m.doc() = "Construction, verification and enumeration of orientable sequences over Z_q";

    // ---- core -----------------------------------------------------------
    m.def(
        "is_negasymmetric",
        [](const Symbols& symbols, int q) { return is_negasymmetric(Tuple(q, symbols)); },
        py::arg("symbols"), py::arg("q"),
        "True iff the tuple equals its negated reverse.");
    m.def(
        "pseudoweight",
        [](const Symbols& symbols, int q) {
            return static_cast<double>(pseudoweight(Tuple(q, symbols)).doubled) / 2.0;
        },
        py::arg("symbols"), py::arg("q"),
        "Sum of f(u_i) with f(0) = q/2 and f(u) = u otherwise.");
    m.def(
        "weight_mod_q",
        [](const Symbols& symbols, int q) { return weight_mod_q(RingSequence(q, symbols)); },
        py::arg("symbols"), py::arg("q"), "Symbol sum mod q.");
    m.def(
        "canonical_rotation",
        [](const Symbols& symbols, int q) {
            return canonical_rotation(RingSequence(q, symbols)).symbols();
        },
        py::arg("symbols"), py::arg("q"), "Lexicographically least rotation.");
    m.def(
        "count_negasymmetric",
        [](int q, int n) { return to_py(count_negasymmetric(q, n)); },
        py::arg("q"), py::arg("n"), "Number of negasymmetric n-tuples over Z_q.");

    // ---- verify ----------------------------------------------------------
    m.def(
        "is_n_window",
        [](const Symbols& symbols, int q, int n) {
            return verdict_dict(verify::is_n_window(RingSequence(q, symbols), n));
        },
        py::arg("symbols"), py::arg("q"), py::arg("n"),
        "All n-windows pairwise distinct.");
    m.def(
        "is_orientable",
        [](const Symbols& symbols, int q, int n) {
            return verdict_dict(verify::is_orientable(RingSequence(q, symbols), n));
        },
        py::arg("symbols"), py::arg("q"), py::arg("n"),
        "No n-window equals the reverse of any n-window.");
    m.def(
        "is_negative_orientable",
        [](const Symbols& symbols, int q, int n) {
            return verdict_dict(verify::is_negative_orientable(RingSequence(q, symbols), n));
        },
        py::arg("symbols"), py::arg("q"), py::arg("n"),
        "No n-window equals the negated reverse of any n-window.");
    m.def(
        "is_good",
        [](const Symbols& symbols, int q, int n) {
            return verdict_dict(verify::is_good(RingSequence(q, symbols), n));
        },
        py::arg("symbols"), py::arg("q"), py::arg("n"),
        "Every cyclic zero run has length <= n - 2.");
    m.def(
        "parity_check",
        [](const Symbols& symbols, int q, int n) {
            return verify::parity_check(RingSequence(q, symbols), n);
        },
        py::arg("symbols"), py::arg("q"), py::arg("n"),
        "Even prefix-count parity over negasymmetric (n-1)-tuples.");

    // ---- counting --------------------------------------------------------
    m.def(
        "r_count",
        [](int q, int n, double s) { return to_py(counting::r_count(q, n, halfint_from(s))); },
        py::arg("q"), py::arg("n"), py::arg("s"),
        "Number of q-ary n-tuples with pseudoweight s.");
    m.def(
        "k_count",
        [](int q, int n, long long w) { return to_py(counting::k_count(q, n, w)); },
        py::arg("q"), py::arg("n"), py::arg("w"),
        "Number of zero-free q-ary n-tuples with weight w.");
    m.def(
        "polynomial_coefficient",
        [](int m_, long long r, int k) {
            return to_py(counting::polynomial_coefficient(m_, r, k));
        },
        py::arg("m"), py::arg("r"), py::arg("k"),
        "Coefficient of x^r in (1 + x + ... + x^m)^k.");
    m.def(
        "nos_bound", [](int q, int n) { return to_py(counting::nos_bound(q, n)); },
        py::arg("q"), py::arg("n"),
        "Maximum period of a negative orientable sequence of order n over Z_q.");
    m.def(
        "simple_nos_bound",
        [](int q, int n) { return to_py(counting::simple_nos_bound(q, n)); },
        py::arg("q"), py::arg("n"), "Counting bound (q^n - #negasymmetric)/2.");
    m.def("os2_max_period", &counting::os2_max_period, py::arg("q"),
          "Maximum period of an orientable sequence of order 2.");
    m.def(
        "construction2_period",
        [](int q, int n) { return to_py(counting::construction2_period(q, n)); },
        py::arg("q"), py::arg("n"), "Period of the pseudoweight-filtered construction.");
    m.def(
        "construction3_period",
        [](int q, int n) { return to_py(counting::construction3_period(q, n)); },
        py::arg("q"), py::arg("n"), "Period of the zero-free construction.");
    m.def(
        "construction3_weight",
        [](int q, int n) { return to_py(counting::construction3_weight(q, n)); },
        py::arg("q"), py::arg("n"), "Weight of one period of the zero-free construction.");

    // ---- construct -------------------------------------------------------
    m.def(
        "maximal_os2",
        [](int q) {
            auto [s, r] = construct::maximal_os2(q);
            return report_dict(s, r);
        },
        py::arg("q"), "Maximum-period orientable sequence of order 2.");
    m.def(
        "nos2_construction1",
        [](int q) {
            auto [s, r] = construct::nos2_construction1(q);
            return report_dict(s, r);
        },
        py::arg("q"), "Maximum-period negative orientable sequence of order 2.");
    m.def(
        "nos_construction2",
        [](int q, int n) {
            auto [s, r] = construct::nos_construction2(q, n);
            return report_dict(s, r);
        },
        py::arg("q"), py::arg("n"),
        "Negative orientable sequence from the pseudoweight filter.");
    m.def(
        "nos_construction3",
        [](int q, int n) {
            auto [s, r] = construct::nos_construction3(q, n);
            return report_dict(s, r);
        },
        py::arg("q"), py::arg("n"),
        "Negative orientable sequence from the zero-free weight filter.");

    // ---- lifting ---------------------------------------------------------
    m.def(
        "d_beta",
        [](const Symbols& symbols, int q, int beta) {
            return lempel::d_beta(RingSequence(q, symbols), beta).symbols();
        },
        py::arg("symbols"), py::arg("q"), py::arg("beta") = 1,
        "Cyclic difference beta * (s_{j+1} - s_j) mod q.");
    m.def("additive_order", &lempel::additive_order, py::arg("w"), py::arg("q"),
          "Additive order q / gcd(w, q).");
    m.def(
        "inverse_lift",
        [](const Symbols& symbols, int q, int n, int start, int beta) {
            auto lifted = lempel::inverse_lift(RingSequence(q, symbols), n, start, beta);
            py::dict out;
            out["symbols"] = lifted.output.symbols();
            out["period"] = lifted.output.period();
            out["input_period"] = lifted.input_period;
            out["weight"] = lifted.weight;
            out["h"] = lifted.h;
            out["start"] = lifted.start;
            out["beta"] = lifted.beta;
            return out;
        },
        py::arg("symbols"), py::arg("q"), py::arg("n"), py::arg("start") = 0,
        py::arg("beta") = 1,
        "Integrate one order up; output period is h * input period.");
    m.def("find_unit_adjustment", &lempel::find_unit_adjustment, py::arg("q"), py::arg("w"),
          "Symbols to delete so the weight becomes a unit mod q.");
    m.def(
        "ensure_unit_weight",
        [](const Symbols& symbols, int q, int n) {
            return lempel::ensure_unit_weight(RingSequence(q, symbols), n).symbols();
        },
        py::arg("symbols"), py::arg("q"), py::arg("n"),
        "Apply the unit-weight deletion recipe (no-op for unit weight).");
    m.def(
        "extend_run",
        [](const Symbols& symbols, int q, int a) {
            return lempel::extend_run(RingSequence(q, symbols), a).symbols();
        },
        py::arg("symbols"), py::arg("q"), py::arg("a"),
        "Insert one extra a at the first maximal run of a.");
    m.def(
        "recursive_tower",
        [](const Symbols& symbols, int q, int n, int target_n) {
            auto tower = lempel::recursive_tower(RingSequence(q, symbols), n, target_n);
            py::list trace;
            for (const auto& row : tower.trace) {
                py::dict entry;
                entry["order"] = row.order;
                entry["period"] = row.period;
                entry["weight"] = row.weight;
                entry["inserted"] =
                    row.inserted ? py::cast(*row.inserted) : py::none().cast<py::object>();
                entry["orientable"] = row.orientable;
                trace.append(entry);
            }
            py::dict out;
            out["symbols"] = tower.sequence.symbols();
            out["trace"] = trace;
            return out;
        },
        py::arg("symbols"), py::arg("q"), py::arg("n"), py::arg("target_n"),
        "Alternating lift-extend recursion up to the target order.");
    m.def(
        "predicted_tower_period",
        [](long long m_, int q, int s) {
            return to_py(lempel::predicted_tower_period(BigInt(m_), q, s));
        },
        py::arg("m"), py::arg("q"), py::arg("s"),
        "Closed-form tower period q^s m + (q^s - 1)/(q - 1).");
    m.def(
        "build_os3",
        [](int q) {
            auto [s, r] = lempel::build_os3(q);
            return report_dict(s, r);
        },
        py::arg("q"), "Orientable sequence of order 3 via adjust-and-lift.");
    m.def(
        "build_os_n",
        [](int q, int n) {
            auto [s, r] = lempel::build_os_n(q, n);
            return report_dict(s, r);
        },
        py::arg("q"), py::arg("n"), "Orientable sequence of order n via adjust-and-lift.");

    // ---- oracle ----------------------------------------------------------
    m.def(
        "exhaustive_max",
        [](int q, int n, const std::string& property, long long cap) {
            oracle::TargetProperty target;
            if (property == "orientable") target = oracle::TargetProperty::orientable;
            else if (property == "negative-orientable")
                target = oracle::TargetProperty::negative_orientable;
            else throw std::invalid_argument("property must be orientable or negative-orientable");
            auto found = oracle::exhaustive_max(q, n, target, cap);
            py::dict out;
            out["max_period"] = found.max_period;
            out["witness"] =
                found.witness ? py::cast(found.witness->symbols()) : py::none().cast<py::object>();
            out["states_explored"] = found.states_explored;
            return out;
        },
        py::arg("q"), py::arg("n"), py::arg("property"), py::arg("cap") = 256,
        "Exact maximum period by exhaustive search (refuses when q^n > cap).");
}
