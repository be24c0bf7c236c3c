#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lsdc/bounds.hpp"
#include "lsdc/json_io.hpp"
#include "lsdc/multishot.hpp"
#include "lsdc/scheme.hpp"
#include "lsdc/sim.hpp"

namespace py = pybind11;
using namespace lsdc;

namespace {

using Rows = std::vector<std::vector<std::int64_t>>;

FqMatrix to_matrix(std::uint32_t q, const Rows& rows) {
    return FqMatrix::from_rows(Field(q), rows);
}

std::vector<std::vector<std::uint32_t>> from_matrix(const FqMatrix& m) {
    std::vector<std::vector<std::uint32_t>> out(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        out[r] = m.row(r).data();
    return out;
}

py::object fraction(const Rational& r) {
    static py::object ctor = py::module_::import("fractions").attr("Fraction");
    return ctor(r.numerator(), r.denominator());
}

py::dict cost_dict(const CostReport& c) {
    py::dict d;
    d["gamma"] = fraction(c.gamma);
    d["delta"] = fraction(c.delta);
    d["Delta"] = fraction(c.Delta);
    d["max_column_support"] = c.max_column_support;
    d["d_weight"] = c.d_weight;
    d["user_symbols"] = c.user_symbols;
    d["column_supports"] = c.column_supports;
    return d;
}

Strategy parse_strategy(const std::string& name, std::uint32_t q,
                        const std::optional<Rows>& d_rows) {
    if (name == "full-covering") return FullCovering{};
    if (name == "partial-covering") return PartialCovering{};
    if (name == "given-d") {
        if (!d_rows) throw DomainError("strategy 'given-d' needs D=");
        return GivenD{to_matrix(q, *d_rows)};
    }
    throw DomainError("unknown strategy: " + name);
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Coded schemes for linearly-separable distributed computing: "
              "factor a demand matrix F over GF(q) into D*E = F.";

    auto base = py::register_exception<Error>(m, "Error");
    py::register_exception<InfeasibleD>(m, "InfeasibleD", base);
    py::register_exception<InfeasibleRadius>(m, "InfeasibleRadius", base);
    py::register_exception<ResourceLimit>(m, "ResourceLimit", base);
    py::register_exception<DomainError>(m, "DomainError", base);

    py::class_<Scheme>(m, "Scheme")
        .def_property_readonly("q",
                               [](const Scheme& s) { return s.field.q(); })
        .def_readonly("K", &Scheme::K)
        .def_readonly("N", &Scheme::N)
        .def_readonly("L", &Scheme::L)
        .def_readonly("T", &Scheme::T)
        .def_property_readonly("F",
                               [](const Scheme& s) { return from_matrix(s.F); })
        .def_property_readonly("D",
                               [](const Scheme& s) { return from_matrix(s.D); })
        .def_property_readonly("E",
                               [](const Scheme& s) { return from_matrix(s.E); })
        .def_property_readonly("provenance",
                               [](const Scheme& s) {
                                   py::dict d;
                                   d["strategy"] = s.provenance.strategy;
                                   d["seed"] = s.provenance.seed;
                                   d["radius"] = s.provenance.radius;
                                   d["rounds"] = s.provenance.rounds;
                                   d["repaired"] = s.provenance.repaired;
                                   d["raw_gamma"] = s.provenance.raw_gamma;
                                   d["notes"] = s.provenance.notes;
                                   return d;
                               })
        .def("verify", [](const Scheme& s) { return verify_scheme(s).ok; })
        .def("costs", [](const Scheme& s) { return cost_dict(costs(s)); })
        .def("bounds",
             [](const Scheme& s) {
                 SchemeBoundsReport r = bounds_check(s);
                 py::dict d;
                 d["achieved_gamma"] = r.achieved_gamma;
                 d["converse"] = r.converse;
                 d["achievable"] = r.achievable;
                 d["distinct"] = r.distinct;
                 d["finite_n_ok"] = r.finite_n_ok;
                 d["within_capacity"] = r.within_capacity;
                 return d;
             })
        .def("run_round",
             [](const Scheme& s, const std::vector<std::int64_t>& w) {
                 RoundResult r = run_round(s, FqVector::from_ints(s.field, w));
                 py::dict d;
                 d["ok"] = r.ok;
                 d["w"] = r.w.data();
                 d["z"] = r.z.data();
                 d["decoded"] = r.decoded.data();
                 d["demanded"] = r.demanded.data();
                 return d;
             },
             py::arg("w"))
        .def("to_json", &scheme_to_string)
        .def_static("from_json", &scheme_from_string)
        .def("__repr__", [](const Scheme& s) {
            return "<Scheme q=" + std::to_string(s.field.q()) +
                   " K=" + std::to_string(s.K) + " N=" + std::to_string(s.N) +
                   " L=" + std::to_string(s.L) + " T=" + std::to_string(s.T) +
                   ">";
        });

    m.def("example_scheme", &example_scheme,
          "The bundled GF(7) reference instance (gamma 6/8, delta 19/32)");

    m.def(
        "build_coded",
        [](const Rows& F, std::uint32_t q, std::size_t N,
           const std::string& strategy, std::size_t T, int radius,
           std::uint64_t seed, bool repair, const std::optional<Rows>& D) {
            BuildOptions opts;
            opts.radius = radius;
            opts.seed = seed;
            opts.repair = repair;
            return build_multishot(to_matrix(q, F), N, T,
                                   parse_strategy(strategy, q, D), opts);
        },
        py::arg("F"), py::arg("q"), py::arg("N"),
        py::arg("strategy") = "full-covering", py::arg("T") = 1,
        py::arg("radius") = -1, py::arg("seed") = kDefaultSeed,
        py::arg("repair") = true, py::arg("D") = py::none());

    m.def(
        "build_uncoded_decentralized",
        [](const Rows& F, std::uint32_t q) {
            return build_uncoded_decentralized(to_matrix(q, F));
        },
        py::arg("F"), py::arg("q"));

    m.def(
        "build_uncoded_centralized",
        [](const Rows& F, std::uint32_t q, std::size_t N) {
            return build_uncoded_centralized(to_matrix(q, F), N);
        },
        py::arg("F"), py::arg("q"), py::arg("N"));

    m.def(
        "brute_force_optimal_gamma",
        [](const Rows& F, std::uint32_t q, std::size_t N,
           std::uint64_t max_candidates) {
            BruteForceResult r =
                brute_force_optimal_gamma(to_matrix(q, F), N, max_candidates);
            py::dict d;
            d["gamma"] = fraction(r.gamma);
            d["D"] = from_matrix(r.best_D);
            d["searched"] = r.searched;
            return d;
        },
        py::arg("F"), py::arg("q"), py::arg("N"),
        py::arg("max_candidates") = std::uint64_t(1) << 22);

    m.def("entropy", &entropy_q, py::arg("x"), py::arg("q"));
    m.def("entropy_inv", &entropy_q_inv, py::arg("y"), py::arg("q"));
    m.def("converse_gamma", &converse_gamma, py::arg("l_distinct"),
          py::arg("n"), py::arg("q"));
    m.def("achievable_gamma", &achievable_gamma, py::arg("k"), py::arg("n"),
          py::arg("q"));
    m.def(
        "multishot_gamma_bound",
        [](std::size_t K, std::size_t N, std::size_t T, std::uint32_t q) {
            MultiShotBound b = multishot_gamma_bound(K, N, T, q);
            py::dict d;
            d["value"] = b.value;
            d["rho"] = b.rho;
            d["clamped"] = b.clamped;
            return d;
        },
        py::arg("K"), py::arg("N"), py::arg("T"), py::arg("q"));
    m.def("multishot_gamma_bound_derivative", &multishot_gamma_bound_derivative,
          py::arg("c"), py::arg("T"), py::arg("q"));
    m.def(
        "region_report",
        [](std::uint32_t q, std::size_t K, std::size_t N, std::uint64_t L) {
            std::vector<std::tuple<std::string, double, double>> out;
            for (const auto& p : region_report(q, K, N, L).points)
                out.emplace_back(p.label, p.gamma, p.delta);
            return out;
        },
        py::arg("q"), py::arg("K"), py::arg("N"), py::arg("L"));
}
