#include "heckekit/arith.hpp"
#include "heckekit/eisenstein.hpp"
#include "heckekit/error.hpp"
#include "heckekit/identities.hpp"
#include "heckekit/kloosterman.hpp"
#include "heckekit/matgroup.hpp"
#include "heckekit/specfun.hpp"
#include "heckekit/transforms.hpp"

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace heckekit;

namespace {

Convention convention_of(const std::string& s) {
    if (s == "plain") return Convention::PLAIN;
    if (s == "shifted") return Convention::SHIFTED;
    throw InvalidParameters("convention must be 'plain' or 'shifted'");
}

// json values cross the boundary as text.
py::object to_py(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

nlohmann::json from_py(const py::object& o) {
    // complex values are accepted and turned into [re, im]
    py::object conv = py::module_::import("json").attr("dumps")(
        o, py::arg("default") = py::cpp_function([](py::object x) -> py::object {
            if (py::isinstance<py::float_>(x) || py::isinstance<py::int_>(x)) return x;
            const auto z = x.cast<cplx>();
            return py::make_tuple(z.real(), z.imag());
        }));
    return nlohmann::json::parse(conv.cast<std::string>());
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Cusps, Kloosterman sums, Eisenstein series and identity checks for Gamma_0(q)";

    static py::exception<Error> base(m, "Error");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::set_error(base, (std::string(e.kind()) + ": " + e.what()).c_str());
        }
    });

    py::class_<Cusp>(m, "Cusp")
        .def(py::init([](std::int64_t q, std::int64_t w, std::int64_t u) { return Cusp{q, w, u}; }), py::arg("q"),
             py::arg("w"), py::arg("u") = 1)
        .def_readonly("q", &Cusp::q)
        .def_readonly("w", &Cusp::w)
        .def_readonly("u", &Cusp::u)
        .def_property_readonly("v", &Cusp::v)
        .def("__repr__", [](const Cusp& c) { return "Cusp(" + c.str() + ", q=" + std::to_string(c.q) + ")"; })
        .def("__eq__", [](const Cusp& a, const Cusp& b) { return a == b; });

    m.def("enumerate_cusps", &enumerate_cusps, py::arg("q"));
    m.def("cusp_count", &cusp_count, py::arg("q"));
    m.def(
        "cusp_width",
        [](const Cusp& c, const std::string& conv) { return scaling_data(c, convention_of(conv)).width; },
        py::arg("cusp"), py::arg("convention") = "plain");

    m.def("ordinary_kloosterman", &ordinary_kloosterman, py::arg("m"), py::arg("n"), py::arg("c"));
    m.def(
        "kloosterman_bruteforce",
        [](std::int64_t q, const Cusp& a, const Cusp& b, std::int64_t mm, std::int64_t n, std::int64_t c,
           const std::string& conv) {
            return general_kloosterman_bruteforce({q, a, b, convention_of(conv), mm, n, c});
        },
        py::arg("q"), py::arg("cusp_a"), py::arg("cusp_b"), py::arg("m"), py::arg("n"), py::arg("c"),
        py::arg("convention") = "shifted");
    m.def("kloosterman_squarefree", &general_kloosterman_squarefree, py::arg("q"), py::arg("w1"), py::arg("w2"),
          py::arg("m"), py::arg("n"), py::arg("r"));
    m.def(
        "kloosterman_factorized",
        [](std::int64_t q, const Cusp& a, const Cusp& b, std::int64_t mm, std::int64_t n, std::int64_t c) {
            return kloosterman_factorize(q, a, b, mm, n, c).product();
        },
        py::arg("q"), py::arg("cusp_a"), py::arg("cusp_b"), py::arg("m"), py::arg("n"), py::arg("c"));

    m.def("eisen_phi", &eisen_phi, py::arg("s"), py::arg("q"), py::arg("w1"), py::arg("w2"));
    m.def(
        "eisen_coeff",
        [](std::int64_t n, cplx s, std::int64_t q, std::int64_t w1, std::int64_t w2) {
            const auto c = eisen_coeff(n, s, q, w1, w2);
            return py::make_tuple(c.bracket, c.assembled);
        },
        py::arg("n"), py::arg("s"), py::arg("q"), py::arg("w1"), py::arg("w2"));
    m.def(
        "scattering_matrix",
        [](cplx s, std::int64_t q) {
            const auto sm = scattering_matrix(s, q);
            return py::make_tuple(sm.order, sm.entries);
        },
        py::arg("s"), py::arg("q"));
    m.def("unitarity_residual", &unitarity_residual, py::arg("s"), py::arg("q"));

    m.def("zeta", [](cplx s) { return zeta(s); }, py::arg("s"));
    m.def("hurwitz_zeta", [](cplx s, double w) { return hurwitz_zeta(s, w); }, py::arg("s"), py::arg("omega"));
    m.def("gamma", &cgamma, py::arg("s"));

    m.def(
        "moment",
        [](double T, const std::vector<cplx>& coeffs, double height) {
            const auto r = moment_quadrature(WeightSpec::gaussian_t(T), coeffs, height);
            py::dict d;
            d["rearranged"] = r.rearranged;
            d["direct"] = r.direct;
            d["difference"] = r.difference();
            d["tail_bound"] = r.tail_bound;
            d["cutoff"] = r.cutoff;
            return d;
        },
        py::arg("T"), py::arg("coeffs"), py::arg("height") = 400.0);

    m.def("list_identities", [] {
        py::list out;
        for (const auto& i : list_identities()) {
            py::dict d;
            d["id"] = i.id;
            d["description"] = i.description;
            py::list params;
            for (const auto& p : i.schema) params.append(p.name);
            d["params"] = params;
            d["default_N"] = i.default_N;
            d["default_tol"] = i.default_tol;
            out.append(d);
        }
        return out;
    });
    m.def(
        "verify",
        [](const std::string& id, const py::object& params, std::uint64_t seed) {
            const nlohmann::json j = params.is_none() ? nlohmann::json::object() : from_py(params);
            VerificationReport r;
            {
                py::gil_scoped_release release;
                r = verify(id, j, seed);
            }
            return to_py(r.to_json());
        },
        py::arg("id"), py::arg("params") = py::none(), py::arg("seed") = 0);
}
