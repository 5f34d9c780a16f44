#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "trustres/bulk.hpp"
#include "trustres/generators.hpp"
#include "trustres/network_json.hpp"
#include "trustres/oracle.hpp"
#include "trustres/poss.hpp"
#include "trustres/resolution.hpp"
#include "trustres/verify.hpp"

namespace py = pybind11;
using namespace trustres;

namespace {

// Python sees belief tables as lists of (user, key, value) tuples.
using Rows = std::vector<std::tuple<std::string, std::string, std::string>>;

PossTable table_from_rows(const Rows& rows) {
    PossTable table;
    for (const auto& [user, key, value] : rows) table.rows.push_back({user, key, value});
    table.canonicalize();
    return table;
}

Rows rows_from_table(const PossTable& table) {
    Rows rows;
    for (const auto& r : table.rows) rows.emplace_back(r.user, r.key, r.value);
    return rows;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Trust-network conflict resolution core";

    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<DomainTooLarge>(m, "DomainTooLarge", PyExc_RuntimeError);

    py::class_<TrustMapping>(m, "TrustMapping")
        .def(py::init<std::string, std::string, std::uint32_t>(), py::arg("target"),
             py::arg("source"), py::arg("priority"))
        .def_readonly("target", &TrustMapping::target)
        .def_readonly("source", &TrustMapping::source)
        .def_readonly("priority", &TrustMapping::priority)
        .def(py::self == py::self)
        .def("__repr__", [](const TrustMapping& t) {
            return "TrustMapping(target='" + t.target + "', source='" + t.source +
                   "', priority=" + std::to_string(t.priority) + ")";
        });

    py::class_<Belief>(m, "Belief")
        .def(py::init<std::string, std::string, std::string>(), py::arg("user"),
             py::arg("key"), py::arg("value"))
        .def_readonly("user", &Belief::user)
        .def_readonly("key", &Belief::key)
        .def_readonly("value", &Belief::value)
        .def(py::self == py::self)
        .def("__repr__", [](const Belief& b) {
            return "Belief(user='" + b.user + "', key='" + b.key + "', value='" + b.value +
                   "')";
        });

    py::class_<TrustNetwork>(m, "TrustNetwork")
        .def(py::init(&TrustNetwork::build), py::arg("users"),
             py::arg("mappings") = std::vector<TrustMapping>{},
             py::arg("beliefs") = std::vector<Belief>{})
        .def_property_readonly("users", &TrustNetwork::users)
        .def_property_readonly("mappings", &TrustNetwork::mappings)
        .def_property_readonly("beliefs", &TrustNetwork::beliefs)
        .def("has_user", &TrustNetwork::has_user)
        .def("insert_belief", &TrustNetwork::insert_belief)
        .def("revoke_belief", &TrustNetwork::revoke_belief)
        .def("add_mapping", &TrustNetwork::add_mapping)
        .def("revoke_mapping", &TrustNetwork::revoke_mapping)
        .def("active_domain", &TrustNetwork::active_domain)
        .def("keys", &TrustNetwork::keys)
        .def_static("disjoint_union", &TrustNetwork::disjoint_union)
        .def("__len__", &TrustNetwork::size)
        .def(py::self == py::self)
        .def("to_json", &network_to_json)
        .def_static("from_json", &network_from_json);

    py::class_<ResolutionResult>(m, "ResolutionResult")
        .def_readonly("key", &ResolutionResult::key)
        .def_readonly("users", &ResolutionResult::users)
        .def_readonly("values", &ResolutionResult::values)
        .def_readonly("no_stable_solution", &ResolutionResult::no_stable_solution)
        .def("possible_values", &ResolutionResult::possible_values)
        .def("certain_value", &ResolutionResult::certain_value)
        .def("to_csv", &result_to_csv)
        .def(py::self == py::self);

    m.def("resolve", &resolve, py::arg("network"), py::arg("key"),
          "Polynomial resolution: possible and certain values for one key");
    m.def("resolve_all_keys", &resolve_all_keys, py::arg("network"));
    m.def(
        "oracle_resolve",
        [](const TrustNetwork& net, const std::string& key, unsigned max_choice_atoms) {
            OracleOptions opts;
            opts.max_choice_atoms = max_choice_atoms;
            OracleOutcome o = oracle_resolve(net, key, opts);
            return py::make_tuple(o.result, o.model_count);
        },
        py::arg("network"), py::arg("key"), py::arg("max_choice_atoms") = kDefaultOracleLimit,
        "Exhaustive stable-model semantics; returns (result, model_count)");
    m.def("check_instance", &check_instance, py::arg("network"), py::arg("key"),
          "True when resolve and oracle_resolve agree on the instance");

    m.def(
        "condense",
        [](const TrustNetwork& net) { return condense(net).components; },
        py::arg("network"),
        "Strongly connected components of the trust graph in topological order");

    m.def(
        "bulk_resolve",
        [](const TrustNetwork& topology, const Rows& beliefs) {
            return rows_from_table(bulk_resolve(topology, table_from_rows(beliefs)));
        },
        py::arg("topology"), py::arg("beliefs"),
        "Resolve many keyed objects; rows are (user, key, value) tuples");

    m.def("gen_cycle_clusters", &gen_cycle_clusters, py::arg("n_clusters"), py::arg("seed"),
          py::arg("value_pool") = 10);
    m.def("gen_scale_free", &gen_scale_free, py::arg("n_nodes"), py::arg("edges_per_node"),
          py::arg("seed"), py::arg("belief_fraction") = 0.5);
    m.def("sample_edges", &sample_edges, py::arg("network"), py::arg("fraction"),
          py::arg("seed"));
    m.def("gen_nested_cycles", &gen_nested_cycles, py::arg("n_users"), py::arg("seed"));
    m.def("bulk_topology", &bulk_topology);
    m.def(
        "gen_bulk_workload",
        [](std::size_t n_objects, double conflict_fraction, std::uint64_t seed) {
            return rows_from_table(gen_bulk_workload(n_objects, conflict_fraction, seed));
        },
        py::arg("n_objects"), py::arg("conflict_fraction"), py::arg("seed"));

    m.def(
        "verify_equivalence",
        [](std::size_t random_instances, std::uint64_t seed, bool include_grid) {
            VerifyReport r = verify_equivalence(random_instances, seed, include_grid);
            return py::make_tuple(r.instances, r.mismatches);
        },
        py::arg("random_instances") = 1000, py::arg("seed") = 1,
        py::arg("include_grid") = true,
        "Equivalence sweep; returns (instances, mismatches)");
}
