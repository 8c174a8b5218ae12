#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cli.hpp"
#include "permfib/bijections.hpp"
#include "permfib/composition.hpp"
#include "permfib/error.hpp"
#include "permfib/permutation.hpp"
#include "permfib/regex.hpp"
#include "permfib/series.hpp"
#include "permfib/verify.hpp"

namespace py = pybind11;
using namespace permfib;

namespace {

py::object to_py(const BigInt& v) {
    return py::reinterpret_steal<py::object>(PyLong_FromString(v.str().c_str(), nullptr, 10));
}

py::object to_py(const Rational& r) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(to_py(numerator(r)), to_py(denominator(r)));
}

std::vector<int> letters(const Permutation& p) { return {p.letters().begin(), p.letters().end()}; }

std::vector<int> parts(const Composition& c) { return {c.parts().begin(), c.parts().end()}; }

// Coefficients 0..order of a univariate series.
py::list coefficients(const RationalSeries& s) {
    py::list out;
    for (int i = 0; i <= s.order() && (s.order() != kExactOrder || i <= s.degree()); ++i) out.append(to_py(s.coeff(i)));
    return out;
}

// Outer list by x-degree, inner lists by t-degree.
py::list coefficients(const BivariateSeries& s) {
    py::list out;
    for (int i = 0; i <= s.order(); ++i) out.append(coefficients(s.coeff(i)));
    return out;
}

py::object report(const VerificationReport& r) {
    return py::module_::import("json").attr("loads")(r.to_json().dump());
}

py::dict stats_dict(const Permutation& p) {
    const StatReport s = statistics(p);
    py::dict d;
    d["des"] = s.des;
    d["pk"] = s.pk;
    d["lpk"] = s.lpk;
    d["rpk"] = s.rpk;
    d["valleys"] = s.valleys;
    d["right_valleys"] = s.right_valleys;
    d["ipk"] = s.ipk;
    d["ilpk"] = s.ilpk;
    d["descent_positions"] = s.descent_positions;
    d["peak_positions"] = s.peak_positions;
    d["left_peak_positions"] = s.left_peak_positions;
    d["right_valley_positions"] = s.right_valley_positions;
    d["descent_composition"] = parts(descent_composition(p));
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Permutation statistics, word bijections and generating functions";

    auto error = py::register_exception<Error>(m, "Error");
    py::register_exception<InvalidInput>(m, "InvalidInput", error.ptr());
    py::register_exception<ResourceLimit>(m, "ResourceLimit", error.ptr());
    py::register_exception<NotInLanguage>(m, "NotInLanguage", error.ptr());
    py::register_exception<NotInDomain>(m, "NotInDomain", error.ptr());
    py::register_exception<SingularSeries>(m, "SingularSeries", error.ptr());

    // Permutations are passed as lists of letters 1..n.
    m.def("statistics", [](std::vector<int> p) { return stats_dict(Permutation(std::move(p))); }, py::arg("perm"));
    m.def("inverse", [](std::vector<int> p) { return letters(inverse(Permutation(std::move(p)))); }, py::arg("perm"));
    m.def("descent_composition", [](std::vector<int> p) { return parts(descent_composition(Permutation(std::move(p)))); },
          py::arg("perm"));
    m.def(
        "contains_consecutive",
        [](std::vector<int> p, std::vector<int> pattern) {
            return contains_consecutive(Permutation(std::move(p)), Permutation(std::move(pattern)));
        },
        py::arg("perm"), py::arg("pattern"));

    m.def("fib", [](int k, long n) { return to_py(fib(k, n)); }, py::arg("k"), py::arg("n"));
    m.def(
        "compositions",
        [](int n, std::optional<int> max_part) {
            std::vector<std::vector<int>> out;
            for (const auto& c : enumerate_compositions(n, max_part)) out.push_back(parts(c));
            return out;
        },
        py::arg("n"), py::arg("max_part") = py::none());

    m.def("zero_ipk_permutation", [](std::vector<int> c) { return letters(zero_ipk_permutation(Composition(std::move(c)))); },
          py::arg("composition"));
    m.def(
        "canonical_decomposition",
        [](std::vector<int> p) {
            const auto d = canonical_decomposition(Permutation(std::move(p)));
            return py::make_tuple(d.alpha, d.beta, d.gamma);
        },
        py::arg("perm"));
    m.def("phi", [](std::vector<int> p) { return phi(Permutation(std::move(p))).str(); }, py::arg("perm"));
    m.def("phi_inverse", [](std::string w) { return letters(phi_inverse(Word(std::move(w)))); }, py::arg("word"));
    m.def("in_N", [](std::vector<int> p) { return in_N(Permutation(std::move(p))); }, py::arg("perm"));
    m.def("in_N_prime", [](std::vector<int> p, int mm) { return in_N_prime(Permutation(std::move(p)), mm); }, py::arg("perm"),
          py::arg("m") = 3);
    m.def("is_in_W", [](const std::string& w, int mm) { return is_in_W(std::string_view(w), mm); }, py::arg("word"),
          py::arg("m") = 3);

    m.def("regex", [](int mm) { return mm == 0 ? z_regex().to_string() : w_regex(mm).to_string(); }, py::arg("m") = 3,
          "Printed expression for W with parameter m, or for Z when m = 0.");
    m.def("matches_W", [](const std::string& w, int mm) { return w_dfa(mm).accepts(w); }, py::arg("word"), py::arg("m") = 3);
    m.def("matches_Z", [](const std::string& w) { return z_dfa().accepts(w); }, py::arg("word"));
    m.def("count_W", [](int n, int mm) { return to_py(w_dfa(mm).count_accepted(n)); }, py::arg("n"), py::arg("m") = 3);
    m.def("count_parses", [](const std::string& w, int mm) { return to_py(count_parses(w_regex(mm), w)); }, py::arg("word"),
          py::arg("m") = 3);
    m.def(
        "blocks",
        [](std::string z) {
            std::vector<std::string> out;
            for (const auto& b : unique_factor_decomposition(Word(std::move(z)))) out.push_back(b.text());
            return out;
        },
        py::arg("z"));
    m.def(
        "split_W_word",
        [](std::string w) {
            const WSplit s = split_W_word(Word(std::move(w)));
            return py::make_tuple(s.j, s.k, s.z.str());
        },
        py::arg("word"));

    m.def(
        "z_to_tiling",
        [](std::string z) {
            const Tiling t = z_to_tiling(Word(std::move(z)));
            return py::make_tuple(t.top, t.bottom);
        },
        py::arg("z"));
    m.def("tiling_to_z", [](std::vector<int> top, std::vector<int> bottom) { return tiling_to_z({top, bottom}).str(); },
          py::arg("top"), py::arg("bottom"));
    m.def("render_tiling", [](std::vector<int> top, std::vector<int> bottom) { return Tiling{top, bottom}.render(); },
          py::arg("top"), py::arg("bottom"));
    m.def(
        "tilings",
        [](int k) {
            py::list out;
            for (const auto& t : enumerate_tilings(k)) out.append(py::make_tuple(t.top, t.bottom));
            return out;
        },
        py::arg("k"));
    m.def(
        "nprime_to_triple",
        [](std::vector<int> p) {
            const TripleJKT t = nprime_to_triple(Permutation(std::move(p)));
            return py::make_tuple(t.j, t.k, py::make_tuple(t.tiling.top, t.tiling.bottom));
        },
        py::arg("perm"));
    m.def(
        "triple_to_nprime",
        [](int j, int k, std::vector<int> top, std::vector<int> bottom, int n) {
            return letters(triple_to_nprime({j, k, Tiling{top, bottom}}, n));
        },
        py::arg("j"), py::arg("k"), py::arg("top"), py::arg("bottom"), py::arg("n"));

    m.def("count_ipk0_avoiders", &count_ipk0_avoiders, py::arg("n"), py::arg("m"), py::arg("allow_large") = false,
          py::call_guard<py::gil_scoped_release>());
    m.def("count_ilpk1_avoiders", &count_ilpk1_avoiders, py::arg("n"), py::arg("m"), py::arg("allow_large") = false,
          py::call_guard<py::gil_scoped_release>());

    m.def("v_of_t", [](int order) { return coefficients(v_of_t(order)); }, py::arg("order"));
    m.def("ogf_fib", [](int mm, int order) { return coefficients(ogf_fib(mm, order)); }, py::arg("m"), py::arg("order"));
    m.def("ogf_ilpk_general", [](int mm, int order) { return coefficients(ogf_ilpk_general(mm, order)); }, py::arg("m"),
          py::arg("order"));
    m.def("ipk_polynomial", [](int mm, int n) { return coefficients(ipk_polynomial(mm, n)); }, py::arg("m"), py::arg("n"));
    m.def("ilpk_polynomial", [](int mm, int n) { return coefficients(ilpk_polynomial(mm, n)); }, py::arg("m"), py::arg("n"));
    m.def("ipk_gf_by_substitution", [](int mm, int x, int t) { return coefficients(ipk_gf_by_substitution(mm, x, t)); },
          py::arg("m"), py::arg("x_order"), py::arg("t_order"));
    m.def("verify_theorem3", &verify_theorem3, py::arg("m"), py::arg("x_order"), py::arg("t_order"));
    m.def("verify_theorem5", &verify_theorem5, py::arg("m"), py::arg("x_order"), py::arg("t_order"));

    m.def("check_theorem1", [](int n, std::vector<int> ms) { return report(check_theorem1(n, ms)); }, py::arg("n_max"),
          py::arg("m") = std::vector<int>{3, 4, 5});
    m.def("check_theorem2", [](int n) { return report(check_theorem2(n)); }, py::arg("n_max"));
    m.def("check_theorem4", [](int n) { return report(check_theorem4(n)); }, py::arg("n_max"));
    m.def("check_eq1", [](int n) { return report(check_eq1(n)); }, py::arg("n_max"));
    m.def("check_prop8", [](int k) { return report(check_prop8(k)); }, py::arg("k_max"));

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            const int code = cli::run_cli(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Runs the command-line tool in process; returns (exit_code, stdout, stderr).");
}
