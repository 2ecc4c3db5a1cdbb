// Python bindings. Structured data crosses the boundary as JSON text.
#include "crossact/braided.hpp"
#include "crossact/cli.hpp"
#include "crossact/cocycles.hpp"
#include "crossact/crossed_action.hpp"
#include "crossact/errors.hpp"
#include "crossact/hopf.hpp"
#include "crossact/matched_pair.hpp"
#include "crossact/ybe.hpp"

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace crossact;
using nlohmann::json;

namespace {

std::string dump(const json& j) { return j.dump(); }

CocyclePair cocycles_or_trivial(const MatchedPair& mp, const std::string& cocycles) {
    return cocycles.empty() ? trivial_cocycles(mp) : cocycles_from_json(mp, json::parse(cocycles));
}

}  // namespace

PYBIND11_MODULE(_crossact, m) {
    auto error = py::register_exception<Error>(m, "Error");
    py::register_exception<ParseError>(m, "ParseError", error.ptr());

    py::class_<Cyclotomic>(m, "Cyclotomic")
        .def(py::init<long>())
        .def_static("root_of_unity", &Cyclotomic::root_of_unity)
        .def_property_readonly("conductor", &Cyclotomic::conductor)
        .def("inverse", &Cyclotomic::inverse)
        .def("embed", &Cyclotomic::embed)
        .def("is_zero", &Cyclotomic::is_zero)
        .def("is_one", &Cyclotomic::is_one)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self / py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def(py::self != py::self)
        .def("__pow__", &Cyclotomic::pow)
        .def("__repr__", &Cyclotomic::to_string);

    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    });
    m.def("validate_pair", [](const std::string& pair) { return dump(pair_to_json(pair_from_json(json::parse(pair)))); });
    m.def("bicrossed_group_order", [](const std::string& pair) { return bicrossed_group(pair_from_json(json::parse(pair))).order(); });
    m.def("cocycle_report", [](const std::string& pair, const std::string& cocycles) {
        MatchedPair mp = pair_from_json(json::parse(pair));
        return dump(cocycle_conditions(cocycles_or_trivial(mp, cocycles)).to_json());
    }, py::arg("pair"), py::arg("cocycles") = "");
    m.def("enumerate_cocycles", [](const std::string& pair, int N, long budget) {
        MatchedPair mp = pair_from_json(json::parse(pair));
        std::vector<int> e(N);
        for (int k = 0; k < N; ++k) e[k] = k;
        json arr = json::array();
        for (const auto& cp : enumerate_cocycle_pairs(mp, N, e, budget)) arr.push_back(cocycles_to_json(cp));
        return dump(arr);
    }, py::arg("pair"), py::arg("N"), py::arg("budget") = 1000000);
    m.def("build_hopf", [](const std::string& pair, const std::string& cocycles) {
        MatchedPair mp = pair_from_json(json::parse(pair));
        return dump(hopf_to_json(with_antipode(build_bicrossed(mp, cocycles_or_trivial(mp, cocycles)))));
    }, py::arg("pair"), py::arg("cocycles") = "");
    m.def("verify_hopf", [](const std::string& hopf) { return dump(verify_hopf(hopf_from_json(json::parse(hopf))).to_json()); });
    m.def("monad_check", [](const std::string& pair, const std::string& cocycles) {
        MatchedPair mp = pair_from_json(json::parse(pair));
        return dump(hopf_monad_check(CrossedAction(cocycles_or_trivial(mp, cocycles))).to_json());
    }, py::arg("pair"), py::arg("cocycles") = "");
    m.def("braiding_pairs", [](const std::string& pair) {
        json arr = json::array();
        for (const auto& bp : enumerate_braiding_pairs(pair_from_json(json::parse(pair)))) {
            json j = braiding_pair_to_json(bp);
            j["qybe"] = b_map(bp).is_bijective() && verify_qybe(r_map(bp)).all_pass();
            arr.push_back(j);
        }
        return dump(arr);
    });
    m.def("search_braidings", [](const std::string& pair, const std::string& cocycles, const std::string& braiding_pair, int N) {
        MatchedPair mp = pair_from_json(json::parse(pair));
        CrossedAction ca(cocycles_or_trivial(mp, cocycles));
        BraidingPair bp = braiding_pair_from_json(mp, json::parse(braiding_pair));
        std::vector<int> e(N);
        for (int k = 0; k < N; ++k) e[k] = k;
        json arr = json::array();
        for (const auto& bd : scalar_braiding_search(ca, bp, N, e)) arr.push_back(braiding_data_to_json(bd));
        return dump(arr);
    });
    m.def("verify_braiding", [](const std::string& pair, const std::string& cocycles, const std::string& braiding, unsigned long seed) {
        MatchedPair mp = pair_from_json(json::parse(pair));
        CrossedAction ca(cocycles_or_trivial(mp, cocycles));
        BraidingData bd = braiding_data_from_json(ca, json::parse(braiding));
        return dump(verify_braiding(ca, bd, default_object_sample(ca, seed)).to_json());
    }, py::arg("pair"), py::arg("cocycles"), py::arg("braiding"), py::arg("seed") = 0);
}
