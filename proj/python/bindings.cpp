#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "matvol/descent.hpp"
#include "matvol/errors.hpp"
#include "matvol/matroid.hpp"
#include "matvol/matroid_json.hpp"
#include "matvol/oracle.hpp"
#include "matvol/volume.hpp"

namespace py = pybind11;
using namespace matvol;

namespace {

py::int_ to_py(const BigInt& v) {
  return py::reinterpret_steal<py::int_>(
      PyLong_FromString(v.str().c_str(), nullptr, 10));
}

py::object to_fraction(const ExactVolume& v) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_py(v.numerator()), to_py(v.denominator()));
}

Subset to_subset(const std::vector<int>& elems) {
  const Subset s = subset_of(elems);
  if (cardinality(s) != static_cast<int>(elems.size())) {
    throw InvalidInput("element listed twice");
  }
  return s;
}

std::vector<std::vector<int>> to_lists(const std::vector<Subset>& sets) {
  std::vector<std::vector<int>> out;
  for (Subset s : sets) out.push_back(elements_of(s));
  return out;
}

}  // namespace

PYBIND11_MODULE(matvol, mod) {
  mod.doc() = "Exact volumes of matroid base polytopes";

  auto error = py::register_exception<Error>(mod, "Error");
  py::register_exception<InvalidInput>(mod, "InvalidInput", error.ptr());
  py::register_exception<PreconditionError>(mod, "PreconditionError", error.ptr());
  py::register_exception<BudgetExceeded>(mod, "BudgetExceeded", error.ptr());

  py::class_<Matroid>(mod, "Matroid")
      .def_static(
          "from_bases",
          [](int ground_size, const std::vector<std::vector<int>>& bases) {
            return Matroid::from_basis_lists(ground_size, bases);
          },
          py::arg("ground_size"), py::arg("bases"))
      .def_static(
          "from_json",
          [](const std::string& text) {
            nlohmann::json doc;
            try {
              doc = nlohmann::json::parse(text);
            } catch (const nlohmann::json::exception& e) {
              throw InvalidInput(std::string("invalid JSON: ") + e.what());
            }
            return matroid_from_json(doc);
          },
          py::arg("text"))
      .def_static("uniform", &uniform, py::arg("rank"), py::arg("ground_size"))
      .def_static("graphic", &graphic, py::arg("vertices"), py::arg("edges"))
      .def_static(
          "schubert",
          [](const std::string& bits) { return schubert(BinarySequence::parse(bits)); },
          py::arg("bits"))
      .def_static(
          "sparse_paving",
          [](int n, int d, const std::vector<std::vector<int>>& hyperplanes) {
            std::vector<Subset> family;
            for (const auto& h : hyperplanes) family.push_back(to_subset(h));
            return sparse_paving(n, d, family);
          },
          py::arg("n"), py::arg("d"), py::arg("circuit_hyperplanes"))
      .def_property_readonly("ground_size", &Matroid::ground_size)
      .def_property_readonly("rank", &Matroid::rank)
      .def_property_readonly("bases", [](const Matroid& m) { return to_lists(m.bases()); })
      .def("rank_of", [](const Matroid& m, const std::vector<int>& s) {
        return m.rank_of(to_subset(s));
      })
      .def("is_connected", [](const Matroid& m) { return is_connected(m); })
      .def("dual", [](const Matroid& m) { return dual(m); })
      .def("relax",
           [](const Matroid& m, const std::vector<int>& h) { return relax(m, to_subset(h)); })
      .def("direct_sum", [](const Matroid& a, const Matroid& b) { return direct_sum(a, b); })
      .def("cyclic_flats",
           [](const Matroid& m) {
             std::vector<std::pair<std::vector<int>, int>> out;
             for (const auto& cf : cyclic_flats(m)) out.emplace_back(elements_of(cf.elements), cf.rank);
             return out;
           })
      .def("circuit_hyperplanes",
           [](const Matroid& m) { return to_lists(circuit_hyperplanes(m)); })
      .def("to_json", [](const Matroid& m) { return matroid_to_json(m).dump(); })
      .def("__eq__", [](const Matroid& a, const Matroid& b) { return a == b; })
      .def("__repr__", [](const Matroid& m) {
        return "<Matroid ground_size=" + std::to_string(m.ground_size()) +
               " rank=" + std::to_string(m.rank()) +
               " bases=" + std::to_string(m.bases().size()) + ">";
      });

  mod.def("volume", [](const Matroid& m) { return to_fraction(volume(m)); }, py::arg("m"));
  mod.def(
      "oracle_volume",
      [](const Matroid& m, int budget, int threads) {
        OracleVolume result;
        {
          py::gil_scoped_release release;
          result = oracle_volume(m, budget, threads);
        }
        return to_fraction(result.volume);
      },
      py::arg("m"), py::arg("budget") = kDefaultOracleBudget, py::arg("threads") = 1);
  mod.def("ehrhart_counts", &ehrhart_counts, py::arg("m"), py::arg("max_t"),
          py::arg("threads") = 1);
  mod.def("dimension", &polytope_dimension, py::arg("m"));
  mod.def(
      "chains",
      [](const Matroid& m) {
        const ChainPoset poset = build_chain_poset(m);
        py::list out;
        for (std::size_t i = 0; i < poset.chains.size(); ++i) {
          out.append(py::make_tuple(to_lists(poset.chains[i].proper_flats),
                                    chain_to_sequence(m, poset.chains[i]).str(),
                                    to_py(poset.mobius[i])));
        }
        return out;
      },
      py::arg("m"));

  mod.def(
      "schubert_volume",
      [](const std::string& bits) {
        return to_fraction(schubert_volume(BinarySequence::parse(bits)));
      },
      py::arg("bits"));
  mod.def(
      "sparse_paving_volume",
      [](int n, int d, int alpha) { return to_fraction(sparse_paving_volume(n, d, alpha)); },
      py::arg("n"), py::arg("d"), py::arg("alpha"));
  mod.def(
      "relaxation_volume",
      [](const Matroid& m, const std::vector<int>& h) {
        return to_fraction(relaxation_volume(m, to_subset(h)));
      },
      py::arg("m"), py::arg("hyperplane"));

  mod.def(
      "delta", [](const std::string& bits) { return to_py(delta(BinarySequence::parse(bits))); },
      py::arg("bits"));
  mod.def(
      "delta_leq",
      [](const std::string& bits) { return to_py(delta_leq(BinarySequence::parse(bits))); },
      py::arg("bits"));
  mod.def(
      "dual_sequence",
      [](const std::string& bits) { return dual_sequence(BinarySequence::parse(bits)).str(); },
      py::arg("bits"));
  mod.def("eulerian", [](int n, int d) { return to_py(eulerian(n, d)); }, py::arg("n"),
          py::arg("d"));
}
