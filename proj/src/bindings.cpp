#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gwakit/catalog.hpp"

namespace py = pybind11;
using namespace gwakit;

namespace {

// pybind11 holders cannot be const; groups are never mutated through Python.
using PyGroup = std::shared_ptr<Group>;
PyGroup py_group(GroupPtr g) { return std::const_pointer_cast<Group>(std::move(g)); }

py::tuple check(const CheckResult& r) { return py::make_tuple(r.ok, r.message); }

py::dict report_dict(const RoundTripReport& r) {
  py::dict d;
  d["roundtrip_ok"] = r.ok();
  d["simplicial_ok"] = r.simplicial_ok;
  d["bracket_zero"] = r.bracket_zero;
  d["evaluations_ok"] = r.evaluations_ok;
  d["moore_length"] = r.moore_length;
  d["error"] = r.error;
  return d;
}

std::vector<ElementSet> ideal_sets(const std::vector<Ideal>& ids) {
  std::vector<ElementSet> out;
  for (const auto& i : ids) out.push_back(i.elements);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Groups with action, crossed modules and simplicial groups with action";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ValidationError>(m, "ValidationError", base.ptr());
  py::register_exception<CapacityError>(m, "CapacityError", base.ptr());
  py::register_exception<CatalogError>(m, "CatalogError", base.ptr());

  py::class_<Group, PyGroup>(m, "Group")
      .def_static("from_table", [](std::vector<std::vector<Elem>> t) { return py_group(make_group(Group::from_table(std::move(t)))); })
      .def_property_readonly("order", &Group::order)
      .def("op", &Group::op)
      .def("inv", &Group::inv)
      .def("element_order", &Group::element_order)
      .def("is_abelian", &Group::is_abelian)
      .def("table", &Group::table_rows)
      .def("name", &Group::name)
      .def_property_readonly("generators", &Group::generators)
      .def_property_readonly("catalog_id", [](const Group& g) -> py::object {
        if (!g.catalog_id()) return py::none();
        return py::make_tuple(g.catalog_id()->order, g.catalog_id()->index);
      })
      .def("__len__", &Group::order)
      .def("__eq__", [](const Group& a, const Group& b) { return a == b; });

  m.def("small_group", [](int o, int i) { return py_group(small_group(o, i)); }, py::arg("order"), py::arg("index"));
  m.def("small_group_count", &small_group_count);
  m.def("group_from_spec", [](const std::string& s) { return py_group(resolve_group_spec(s)); }, py::arg("spec"));
  m.def("cyclic", [](int n) { return py_group(make_cyclic(n)); });
  m.def("alternating4", [] { return py_group(make_alternating_4()); });
  m.def("direct_product", [](const PyGroup& a, const PyGroup& b) { return py_group(direct_product(*a, *b)); });
  m.def("all_subgroups", [](const PyGroup& g) {
    std::vector<ElementSet> out;
    for (auto& s : all_subgroups(*g)) out.push_back(std::move(s.elements));
    return out;
  });
  m.def("automorphism_count", [](const PyGroup& g) { return automorphism_group(g).perms.size(); });

  py::class_<GroupWithAction>(m, "GroupWithAction")
      .def(py::init([](const PyGroup& g, const ActionTable& act) { return GroupWithAction(g, act); }),
           py::arg("group"), py::arg("act"))
      .def_property_readonly("group", [](const GroupWithAction& g) { return py_group(g.group_ptr()); })
      .def_property_readonly("order", &GroupWithAction::order)
      .def("act", &GroupWithAction::act, py::arg("actor"), py::arg("operand"))
      .def("table", &GroupWithAction::table)
      .def("__eq__", [](const GroupWithAction& a, const GroupWithAction& b) { return a == b; })
      .def("to_json", [](const GroupWithAction& g) { return gwa_to_json(g).dump(); });

  m.def("is_gwa", [](const PyGroup& g, const ActionTable& act) { return check(is_gwa(*g, act)); });
  m.def("gwa_trivial", &gwa_trivial);
  m.def("gwa_conjugation", &gwa_conjugation);
  m.def("all_gwa_on_group", [](const PyGroup& g) { return all_gwa_on_group(g); });
  m.def("gwa_from_json", [](const std::string& s) { return gwa_from_json(json::parse(s)); });
  m.def("are_isomorphic_gwa", &are_isomorphic_gwa);
  m.def("is_gwa_morphism", [](const std::vector<Elem>& image, const GroupWithAction& a, const GroupWithAction& b) {
    return check(is_gwa_morphism(image, a, b));
  });
  m.def("all_gwa_morphisms", [](const GroupWithAction& a, const GroupWithAction& b) {
    std::vector<std::vector<Elem>> out;
    for (auto& f : all_gwa_morphisms(a, b)) out.push_back(std::move(f.image));
    return out;
  });
  m.def("isomorphism_classes", [](const std::vector<GroupWithAction>& list, int jobs) {
    return isomorphism_classes(list, jobs);
  }, py::arg("gwas"), py::arg("jobs") = 1);
  m.def("is_ideal", [](const ElementSet& e, const GroupWithAction& g) { return is_ideal(e, g); });
  m.def("all_ideals", [](const GroupWithAction& g) { return ideal_sets(all_ideals(g)); });
  m.def("satisfies_condition1", &satisfies_condition1);
  m.def("lower_central_series", [](const GroupWithAction& g) { return ideal_sets(lower_central_series(g)); });
  m.def("nilpotency_class", &nilpotency_class);
  m.def("is_perfect", &is_perfect);

  m.def("classify", [](const std::vector<GroupWithAction>& list, int jobs) {
    py::list out;
    for (const auto& r : classify(list, jobs)) {
      py::dict d;
      d["family"] = r.family;
      d["members"] = r.members;
      d["representative_index"] = r.representative_index;
      d["ideals"] = r.ideals;
      d["nilpotency_class"] = r.nilpotency_class;
      d["condition1"] = r.condition1;
      out.append(d);
    }
    return out;
  }, py::arg("gwas"), py::arg("jobs") = 1);
  m.def("classification_csv", [](const std::vector<GroupWithAction>& list, int jobs) {
    return classification_to_csv(classify(list, jobs));
  }, py::arg("gwas"), py::arg("jobs") = 1);

  py::class_<XModGwA>(m, "XModGwA")
      .def_property_readonly("source", &XModGwA::source)
      .def_property_readonly("range", &XModGwA::range)
      .def_property_readonly("boundary", [](const XModGwA& x) { return x.boundary.image; })
      .def_property_readonly("dot", [](const XModGwA& x) { return x.action.dot; })
      .def_property_readonly("star", [](const XModGwA& x) { return x.action.star; })
      .def_property_readonly("is_full", [](const XModGwA& x) { return x.level == XModLevel::full; })
      .def("to_json", [](const XModGwA& x) { return xmod_to_json(x).dump(); });

  m.def("is_gwa_action", [](const GroupWithAction& s, const GroupWithAction& r, const ActionTable& dot,
                            const ActionTable& star) { return check(is_gwa_action(s, r, dot, star)); });
  m.def("xmod_action_count", [](const GroupWithAction& s, const GroupWithAction& r) {
    return all_xmod_gwa_actions(s, r).size();
  });
  m.def("is_xmod", [](const XModGwA& x) { return check(is_xmod(x)); });
  m.def("is_pre_xmod", [](const XModGwA& x) { return check(is_pre_xmod(x)); });
  m.def("is_xmod_c1", &is_xmod_c1);
  m.def("xmod_by_ideal", [](const GroupWithAction& g, const ElementSet& e) { return xmod_by_ideal(g, Ideal{e}); });
  m.def("all_xmods", [](const GroupWithAction& s, const GroupWithAction& r) {
    auto e = all_xmods(s, r);
    return py::make_tuple(e.pre, e.full);
  });
  m.def("all_xmods_by_id", [](int so, int si, int ro, int ri, int jobs) {
    XModEnumeration e;
    {
      py::gil_scoped_release release;
      e = all_xmods_by_id(so, si, ro, ri, jobs);
    }
    return py::make_tuple(e.pre, e.full);
  }, py::arg("source_order"), py::arg("source_index"), py::arg("range_order"), py::arg("range_index"),
        py::arg("jobs") = 1);
  m.def("are_isomorphic_xmod", [](const XModGwA& a, const XModGwA& b) { return find_xmod_isomorphism(a, b).has_value(); });

  m.def("semidirect_gwa", [](const XModGwA& x, bool relaxed) {
    return semidirect_gwa(x, relaxed ? SemidirectMode::relaxed : SemidirectMode::strict);
  }, py::arg("xmod"), py::arg("relaxed") = false);
  m.def("simplicial_json", [](const XModGwA& x) { return simplicial_to_json(simplicial_from_xmod(x)).dump(); });
  m.def("roundtrip", [](const XModGwA& x, bool relaxed) {
    return report_dict(roundtrip(x, relaxed ? SemidirectMode::relaxed : SemidirectMode::strict));
  }, py::arg("xmod"), py::arg("relaxed") = false);

  m.attr("__version__") = tool_version();
}
