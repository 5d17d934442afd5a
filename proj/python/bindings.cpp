#include <map>
#include <mutex>
#include <string>
#include <variant>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "symchar/class_algebra.hpp"
#include "symchar/formulas.hpp"
#include "symchar/mn.hpp"
#include "symchar/table_io.hpp"
#include "symchar/vanishing.hpp"

namespace py = pybind11;
using namespace symchar;

namespace {

using PartitionArg = std::variant<std::string, std::vector<int>>;

Partition to_partition(const PartitionArg& arg) {
    if (const auto* text = std::get_if<std::string>(&arg)) return parse_partition(*text);
    return Partition(std::get<std::vector<int>>(arg));
}

py::tuple to_tuple(const Partition& p) { return py::cast(p.parts()).cast<py::tuple>(); }

py::int_ to_int(const BigInt& v) {
    return py::reinterpret_steal<py::int_>(PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

// Tables are immutable once built; keep one per n for the life of the module.
const CharTable& table_for(int n) {
    static std::mutex mutex;
    static std::map<int, CharTable> tables;
    std::lock_guard lock(mutex);
    auto it = tables.find(n);
    if (it == tables.end()) {
        it = tables.emplace(n, character_table(n, {1, &shared_engine()})).first;
    }
    return it->second;
}

NearHookShape parse_shape(const std::string& name) {
    for (NearHookShape s : kNearHookShapes) {
        if (shape_name(s) == name) return s;
    }
    throw std::invalid_argument("unknown shape " + name + " (R1, R2, R11, R3, R21, R111, R211, R1111)");
}

py::dict report_dict(const CoveringPairReport& r) {
    py::list pairs;
    for (const auto& p : r.pairs) pairs.append(py::make_tuple(to_tuple(p.first), to_tuple(p.second)));
    py::dict stats;
    stats["examined"] = r.pruning_stats.examined;
    stats["parity_pruned"] = r.pruning_stats.parity_pruned;
    stats["merge_pruned"] = r.pruning_stats.merge_pruned;
    stats["table_checked"] = r.pruning_stats.table_checked;
    py::dict d;
    d["n"] = r.n;
    d["pairs"] = pairs;
    d["k_value"] = r.k_value ? py::object(py::int_(*r.k_value)) : py::object(py::none());
    d["matches_theorem"] = r.matches_theorem ? py::object(py::bool_(*r.matches_theorem)) : py::object(py::none());
    d["pruning_stats"] = stats;
    d["vacuous"] = r.vacuous;
    return d;
}

}  // namespace

PYBIND11_MODULE(_symchar, m) {
    m.doc() = "Exact character theory of the symmetric groups";
    m.attr("__version__") = "0.1.0";
    py::register_exception<CacheError>(m, "CacheError", PyExc_RuntimeError);

    m.def("partitions_of", [](int n) {
        py::list out;
        for (const auto& p : partitions_of(n)) out.append(to_tuple(p));
        return out;
    }, py::arg("n"), "Partitions of n, (n) first and (1^n) last.");
    m.def("parse_partition", [](const std::string& text) { return to_tuple(parse_partition(text)); });
    m.def("centralizer_order", [](const PartitionArg& p) { return to_int(centralizer_order(to_partition(p))); });
    m.def("class_size", [](const PartitionArg& p) { return to_int(class_size(to_partition(p))); });
    m.def("conjugate", [](const PartitionArg& p) { return to_tuple(conjugate(to_partition(p))); });
    m.def("is_hook", [](const PartitionArg& p) { return is_hook(to_partition(p)); });
    m.def("dominance_compare", [](const PartitionArg& p, const PartitionArg& q) {
        return to_string(dominance_compare(to_partition(p), to_partition(q)));
    });

    m.def("mn_char", [](const PartitionArg& lambda, const PartitionArg& mu) {
        return to_int(mn_char(to_partition(lambda), to_partition(mu)));
    }, py::arg("lam"), py::arg("mu"));
    m.def("degree", [](const PartitionArg& lambda) { return to_int(degree(to_partition(lambda))); });
    m.def("sign_value", [](const PartitionArg& mu) { return sign_value(to_partition(mu)); });
    m.def("border_strip_removals", [](const PartitionArg& p, int length) {
        py::list out;
        for (const auto& r : border_strip_removals(to_partition(p), length)) {
            out.append(py::make_tuple(to_tuple(r.remaining), r.height, r.sign));
        }
        return out;
    }, py::arg("p"), py::arg("length"), "List of (remaining, height, sign).");
    m.def("character_table", [](int n, unsigned workers) {
        CharTable t = workers == 1 ? table_for(n) : character_table(n, {workers, nullptr});
        py::list order;
        for (const auto& p : t.order()) order.append(to_tuple(p));
        py::list rows;
        for (std::size_t r = 0; r < t.dim(); ++r) {
            py::list row;
            for (std::size_t c = 0; c < t.dim(); ++c) row.append(to_int(t.at(r, c)));
            rows.append(row);
        }
        py::dict d;
        d["n"] = n;
        d["order"] = order;
        d["values"] = rows;
        return d;
    }, py::arg("n"), py::arg("workers") = 1u);
    m.def("character_table_json", [](int n) { return table_to_json(table_for(n)); }, py::arg("n"));

    m.def("near_hook_value", [](const std::string& shape, const PartitionArg& mu) {
        return to_int(near_hook_value(parse_shape(shape), to_partition(mu)));
    }, py::arg("shape"), py::arg("mu"));
    m.def("induced_value", [](int k, const std::string& inner, const PartitionArg& mu) {
        if (inner != "trivial" && inner != "sign") throw std::invalid_argument("inner must be 'trivial' or 'sign'");
        return to_int(induced_value(k, inner == "sign" ? InnerCharacter::Sign : InnerCharacter::Trivial,
                                    to_partition(mu)));
    }, py::arg("k"), py::arg("inner"), py::arg("mu"));
    m.def("hook_char_recursive", [](int k, const PartitionArg& mu) {
        return to_int(hook_char_recursive(k, to_partition(mu)));
    });
    m.def("two_row_char_recursive", [](int k, const PartitionArg& mu) {
        return to_int(two_row_char_recursive(k, to_partition(mu)));
    });

    m.def("structure_constant", [](const PartitionArg& mu, const PartitionArg& nu, const PartitionArg& gamma) {
        Partition a = to_partition(mu);
        return to_int(structure_constant(a, to_partition(nu), to_partition(gamma), table_for(a.size())));
    }, py::arg("mu"), py::arg("nu"), py::arg("gamma"));
    m.def("structure_constant_bruteforce",
          [](const PartitionArg& mu, const PartitionArg& nu, const PartitionArg& gamma, int limit) {
              py::gil_scoped_release release;
              return structure_constant_bruteforce(to_partition(mu), to_partition(nu), to_partition(gamma),
                                                   {.limit = limit, .workers = 1})
                  .get_str();
          },
          py::arg("mu"), py::arg("nu"), py::arg("gamma"), py::arg("limit") = kDefaultBruteForceLimit);
    m.def("predicted_coefficient", [](const PartitionArg& mu, const PartitionArg& nu, const PartitionArg& gamma) {
        Partition a = to_partition(mu);
        auto v = predicted_coefficient(a, to_partition(nu), to_partition(gamma), table_for(a.size()));
        return v ? py::object(to_int(*v)) : py::object(py::none());
    });
    m.def("merge_lemma_check", [](const PartitionArg& mu, const PartitionArg& nu) {
        return merge_lemma_check(to_partition(mu), to_partition(nu));
    });

    m.def("vanishing_set", [](const PartitionArg& lambda) {
        Partition l = to_partition(lambda);
        py::list out;
        for (const auto& p : vanishing_set(l, table_for(l.size()))) out.append(to_tuple(p));
        return out;
    });
    m.def("covers_all_nonlinear", [](const PartitionArg& mu, const PartitionArg& nu) {
        Partition a = to_partition(mu);
        return covers_all_nonlinear(a, to_partition(nu), table_for(a.size()));
    });
    m.def("find_covering_pairs", [](int n, bool use_pruning) {
        return report_dict(find_covering_pairs(table_for(n), {.use_pruning = use_pruning}));
    }, py::arg("n"), py::arg("use_pruning") = true);
    m.def("k_of_Sn", [](int n) { return k_of_Sn(table_for(n)); }, py::arg("n"));
    m.def("verify_main_theorem", [](int n) { return verify_main_theorem(table_for(n)).holds; }, py::arg("n"));
}
