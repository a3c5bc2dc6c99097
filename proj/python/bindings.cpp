#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hyspec/dsl.hpp"
#include "hyspec/spectrum.hpp"
#include "hyspec/verifier.hpp"

namespace py = pybind11;
using namespace hyspec;

namespace {

// One ring with its lattice and primes; Y is passed as prime indices.
class Ring {
 public:
  explicit Ring(const std::string& dsl)
      : ring_(build_ring(parse_ring_dsl(dsl))),
        lattice_(all_ideals(ring_)),
        primes_(spec_primes(lattice_)) {}

  int size() const { return ring_.size(); }
  std::string name(int a) const { return ring_.name(a); }
  int add(int a, int b) const { return ring_.add(a, b); }
  int mul(int a, int b) const { return ring_.mul(a, b); }

  bool regular() const { return is_regular(ring_); }
  bool root_property() const { return has_root_property(ring_); }
  bool arithmetical() const { return is_arithmetical(ring_); }

  std::vector<std::vector<int>> ideals() const {
    std::vector<std::vector<int>> out;
    for (const Ideal& I : lattice_.ideals) out.push_back(I.element_list());
    return out;
  }
  std::vector<std::vector<int>> primes() const {
    std::vector<std::vector<int>> out;
    for (const Ideal& P : primes_) out.push_back(P.element_list());
    return out;
  }
  std::vector<int> ideal(const std::vector<int>& gens) const {
    return ideal_generate(ring_, gens).element_list();
  }

  bool is_hy(const std::vector<int>& gens, const std::vector<int>& y) const {
    return is_hy_ideal(ideal_generate(ring_, gens), subspace(y));
  }
  bool is_strong_hy(const std::vector<int>& gens, const std::vector<int>& y) const {
    return is_strong_hy_ideal(ideal_generate(ring_, gens), subspace(y));
  }
  bool fixed(const std::vector<int>& gens, const std::vector<int>& y) const {
    return is_fixed(ideal_generate(ring_, gens), subspace(y));
  }
  std::vector<int> closure(const std::vector<int>& gens,
                           const std::vector<int>& y) const {
    return hy_closure(ideal_generate(ring_, gens), subspace(y)).element_list();
  }
  std::vector<int> strong_closure(const std::vector<int>& gens,
                                  const std::vector<int>& y) const {
    return strong_hy_closure(ideal_generate(ring_, gens), subspace(y)).element_list();
  }
  bool relative(const std::vector<int>& gens, const std::vector<int>& y,
                bool strong) const {
    SubSpace Y = subspace(y);
    YCache c = make_ycache(Y, lattice_);
    return is_relative(c, lattice_.find(ideal_generate(ring_, gens)), strong).relative;
  }
  std::vector<std::vector<int>> factors(const std::vector<int>& gens,
                                        const std::vector<int>& y,
                                        bool strong) const {
    SubSpace Y = subspace(y);
    YCache c = make_ycache(Y, lattice_);
    std::vector<std::vector<int>> out;
    for (int j : factor_indices(c, lattice_.find(ideal_generate(ring_, gens)), strong))
      out.push_back(lattice_.ideals[j].element_list());
    return out;
  }
  std::vector<int> greatest_factor_members(const std::vector<int>& gens,
                                           const std::vector<int>& y,
                                           bool strong) const {
    SubSpace Y = subspace(y);
    YCache c = make_ycache(Y, lattice_);
    return greatest_factor(c, lattice_.find(ideal_generate(ring_, gens)), strong)
        .members.members();
  }

 private:
  SubSpace subspace(const std::vector<int>& y) const {
    std::vector<Ideal> pts;
    for (int i : y) {
      if (i < 0 || i >= static_cast<int>(primes_.size()))
        throw BadSpec("prime index out of range");
      pts.push_back(primes_[static_cast<std::size_t>(i)]);
    }
    return make_subspace(ring_, std::move(pts));
  }

  FiniteRing ring_;
  IdealLattice lattice_;
  std::vector<Ideal> primes_;
};

std::string verify(const std::string& corpus_json) {
  Corpus corpus = parse_corpus_json(corpus_json);
  auto reports = run_all(corpus);
  return report_to_json(reports, corpus.seed, corpus.caps).dump(2);
}

}  // namespace

PYBIND11_MODULE(_hyspec, m) {
  m.doc() = "ideal calculus over Zariski spectra of finite commutative rings";

  py::register_exception<Error>(m, "HyspecError");

  py::class_<Ring>(m, "Ring")
      .def(py::init<const std::string&>(), py::arg("dsl"))
      .def("size", &Ring::size)
      .def("name", &Ring::name)
      .def("add", &Ring::add)
      .def("mul", &Ring::mul)
      .def("is_regular", &Ring::regular)
      .def("has_root_property", &Ring::root_property)
      .def("is_arithmetical", &Ring::arithmetical)
      .def("ideals", &Ring::ideals)
      .def("primes", &Ring::primes)
      .def("ideal", &Ring::ideal, py::arg("gens"))
      .def("is_hy", &Ring::is_hy, py::arg("gens"), py::arg("y"))
      .def("is_strong_hy", &Ring::is_strong_hy, py::arg("gens"), py::arg("y"))
      .def("is_fixed", &Ring::fixed, py::arg("gens"), py::arg("y"))
      .def("hy_closure", &Ring::closure, py::arg("gens"), py::arg("y"))
      .def("strong_hy_closure", &Ring::strong_closure, py::arg("gens"), py::arg("y"))
      .def("is_relative", &Ring::relative, py::arg("gens"), py::arg("y"),
           py::arg("strong") = false)
      .def("factors", &Ring::factors, py::arg("gens"), py::arg("y"),
           py::arg("strong") = false)
      .def("greatest_factor", &Ring::greatest_factor_members, py::arg("gens"),
           py::arg("y"), py::arg("strong") = false);

  m.def("verify", &verify, py::arg("corpus_json"),
        "run the full check registry over a corpus, returns report JSON");
  m.def("default_corpus", [] { return std::string(default_corpus_json()); });
  m.def("registry_ids", &registry_ids);
}
