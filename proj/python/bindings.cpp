#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tcores/bqf.hpp"
#include "tcores/errors.hpp"
#include "tcores/families.hpp"
#include "tcores/map47.hpp"
#include "tcores/ncoding.hpp"
#include "tcores/squares.hpp"
#include "tcores/suites.hpp"

namespace py = pybind11;
using namespace tcores;

namespace {

using Parts = std::vector<Int>;

Partition part(const Parts& p) { return Partition(p); }
Parts parts(const Partition& p) { return p.parts(); }
Abacus abacus(const Parts& counts) { return Abacus(static_cast<int>(counts.size()), counts); }
std::vector<Parts> parts_of(const std::vector<NCoding>& codes) {
  std::vector<Parts> out;
  for (const auto& c : codes) out.push_back(c.entries);
  return out;
}
py::tuple triple(const Triple& v) { return py::make_tuple(v[0], v[1], v[2]); }
py::tuple form(const BQF& q) { return py::make_tuple(q.a, q.b, q.c); }

}  // namespace

PYBIND11_MODULE(_tcores, m) {
  m.doc() = "t-core partitions, abaci, N-codings and sums-of-squares maps";

  static py::exception<DomainError> domain_error(m, "DomainError", PyExc_ValueError);
  static py::exception<ResourceError> resource_error(m, "ResourceError", PyExc_RuntimeError);
  static py::exception<InvariantViolation> invariant(m, "InvariantViolation", PyExc_AssertionError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const DomainError& e) {
      domain_error(e.what());
    } catch (const ResourceError& e) {
      resource_error(e.what());
    } catch (const InvariantViolation& e) {
      invariant(e.what());
    }
  });

  py::class_<ReportRecord>(m, "ReportRecord")
      .def_readonly("check", &ReportRecord::check)
      .def_readonly("params", &ReportRecord::params)
      .def_readonly("lhs", &ReportRecord::lhs)
      .def_readonly("rhs", &ReportRecord::rhs)
      .def_readonly("relation", &ReportRecord::relation)
      .def_readonly("ok", &ReportRecord::ok)
      .def_readonly("witnesses", &ReportRecord::witnesses)
      .def_readonly("elapsed_ms", &ReportRecord::elapsed_ms)
      .def("__repr__", [](const ReportRecord& r) {
        return "<ReportRecord " + r.check + " " + std::to_string(r.lhs) + " " + r.relation + " " +
               std::to_string(r.rhs) + (r.ok ? " ok>" : " FAIL>");
      });

  // partitions
  m.def("hook_lengths", [](const Parts& p) { return hook_multiset(part(p)); }, py::arg("partition"));
  m.def("hook_length", [](const Parts& p, int row, int col) { return hook_length(part(p), row, col); });
  m.def("conjugate", [](const Parts& p) { return parts(conjugate(part(p))); });
  m.def("is_t_core", [](const Parts& p, int t) { return is_t_core(part(p), t); });
  m.def("is_self_conjugate", [](const Parts& p) { return is_self_conjugate(part(p)); });
  m.def("partitions", [](int n, int cap) {
    std::vector<Parts> out;
    for (const auto& p : enumerate_partitions(n, cap)) out.push_back(p.parts());
    return out;
  }, py::arg("n"), py::arg("cap") = kDefaultPartitionCap);

  // abacus and N-coding
  m.def("structure_numbers", [](const Parts& p) { return structure_numbers(part(p)); });
  m.def("abacus", [](const Parts& p, int t) { return abacus_from_partition(part(p), t).counts; });
  m.def("normalized_abacus", [](const Parts& p, int t) { return normalize_abacus(part(p), t).counts; });
  m.def("partition_from_abacus", [](const Parts& a) { return parts(partition_from_abacus(abacus(a))); });
  m.def("ncoding", [](const Parts& p, int t) { return ncoding_from_partition(part(p), t).entries; });
  m.def("size_from_ncoding", [](const Parts& n) { return size_from_ncoding(NCoding(n)); });
  m.def("partition_from_ncoding", [](const Parts& n) { return parts(partition_from_ncoding(NCoding(n))); });
  m.def("t_cores", [](int t, Int n, bool sc) {
    return parts_of(sc ? enumerate_sc_t_cores_lattice(t, n) : enumerate_t_cores_lattice(t, n));
  }, py::arg("t"), py::arg("n"), py::arg("self_conjugate") = false, "N-codings of the t-cores of n.");
  m.def("count_t_cores", &count_t_cores, py::arg("t"), py::arg("n"));
  m.def("count_sc_t_cores", &count_sc_t_cores, py::arg("t"), py::arg("n"));

  // sums of squares
  m.def("tcore_to_squares", [](const Parts& n) { return tcore_to_squares(NCoding(n)).values; });
  m.def("alpha_map", [](const Parts& n) { return alpha_map(NCoding(n)).values; });
  m.def("alpha_inverse", [](const Parts& w) { return alpha_inverse(w).entries; });
  m.def("sc_odd_squares", [](const Parts& n) { return sc_odd_squares(NCoding(n)).values; });
  m.def("sc_even_squares", [](const Parts& n) { return sc_even_squares(NCoding(n)).values; });
  m.def("bkm_class", [](const Parts& v) { return canonical_bkm(v); });
  m.def("triple_classes", [](Int target) {
    std::vector<py::tuple> out;
    for (const auto& c : triple_classes(target)) out.push_back(triple(c.values));
    return out;
  });
  m.def("verify_theorem", [](const std::string& id, int t, Int n) {
    return verify_theorem_counts(parse_theorem(id), t, n);
  }, py::arg("theorem"), py::arg("t"), py::arg("n"), "theorem is one of '1.1' .. '1.5'");

  // families
  m.def("sc4_squares", [](const Parts& p) {
    const auto code = ncoding_from_partition(part(p), 4);
    const auto xy = sc4_to_squares(classify_sc4(code), size_from_ncoding(code));
    return py::make_tuple(xy.first, xy.second);
  });
  m.def("sc6_triple", [](const Parts& p) {
    const Partition q = part(p);
    return triple(sc6_to_triple(sc6_constraints_check(normalize_abacus(q, 6)), q.size()));
  });
  m.def("s9_identity_check", &s9_identity_check);

  // forms
  m.def("reduce_form", [](Int a, Int b, Int c) { return form(reduce({a, b, c})); });
  m.def("reduced_forms", [](Int D) {
    std::vector<py::tuple> out;
    for (const auto& q : reduced_forms(D)) out.push_back(form(q));
    return out;
  });
  m.def("class_count", &class_count);
  m.def("class_count_7primitive", &class_count_7primitive);
  m.def("class_count_hurwitz", [](Int D) {
    const auto r = class_count_hurwitz(D);
    return py::module_::import("fractions").attr("Fraction")(r.num, r.den);
  });
  m.def("gauss_lift", [](Int x, Int y, Int z, Int bound) {
    const auto l = gauss_lift(x, y, z, bound);
    return py::make_tuple(triple(l.m), triple(l.n));
  }, py::arg("x"), py::arg("y"), py::arg("z"), py::arg("bound") = 0);
  m.def("phi_sc6", [](const Parts& p) { return form(phi_sc6(part(p))); });

  // the 4-core / 7-core map
  m.def("psi", [](const Parts& a) { return triple(psi(abacus(a))); });
  m.def("rho", [](const Parts& a) { return triple(rho(abacus(a))); });
  m.def("rho_inverse", [](Int x, Int y, Int z) { return rho_inverse({x, y, z}).counts; });
  m.def("phi47", [](const Parts& a) { return phi47(abacus(a)).counts; });
  m.def("verify_two_to_one", &verify_two_to_one);

  m.def("run_suite", [](const std::string& suite, int t_min, int t_max, Int n_min, Int n_max, const std::string& kind,
                        int jobs) {
    py::gil_scoped_release release;
    return run_suite({suite, t_min, t_max, n_min, n_max, kind, jobs});
  }, py::arg("suite"), py::arg("t_min") = 3, py::arg("t_max") = 3, py::arg("n_min") = 0, py::arg("n_max") = 0,
        py::arg("kind") = "", py::arg("jobs") = 1);
}
