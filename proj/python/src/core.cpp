// Python bindings. Big integers cross as decimal strings and rationals as
// (numerator, denominator) string pairs; the package wrapper converts them
// to int and fractions.Fraction.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>
#include <memory>
#include <optional>

#include "snwalk/characters.hpp"
#include "snwalk/profile.hpp"
#include "snwalk/spectrum.hpp"
#include "snwalk/walk.hpp"

namespace py = pybind11;
using namespace snwalk;

namespace {

std::vector<int> to_vector(const Partition& p) { return {p.parts().begin(), p.parts().end()}; }

py::tuple rational(const Rational& r) {
  return py::make_tuple(boost::multiprecision::numerator(r).str(), boost::multiprecision::denominator(r).str());
}

std::shared_ptr<const CharacterTable> shared_table(int n) {
  static TableStore store(TableStore::Config{cache_dir_from_env(), false, {}});
  return store.get(n);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact analysis of the random-transposition shuffle";

  py::register_exception<ResourceLimitError>(m, "ResourceLimitError", PyExc_RuntimeError);
  py::register_exception<TableUnavailableError>(m, "TableUnavailableError", PyExc_RuntimeError);

  m.def("partitions", [](int n) {
    std::vector<std::vector<int>> out;
    for (const auto& p : enumerate_partitions(n)) out.push_back(to_vector(p));
    return out;
  }, py::arg("n"));
  m.def("partition_count", [](int n) { return partition_count(n).str(); }, py::arg("n"));
  m.def("dimension", [](const std::vector<int>& lambda) { return dimension(Partition(lambda)).str(); },
        py::arg("shape"));
  m.def("character_ratio", [](const std::vector<int>& lambda) { return rational(character_ratio(Partition(lambda))); },
        py::arg("shape"));
  m.def("eigenvalue", [](const std::vector<int>& lambda) { return rational(eigenvalue_exact(Partition(lambda))); },
        py::arg("shape"));
  m.def("character", [](const std::vector<int>& lambda, const std::vector<int>& mu) {
    return mn_character(Partition(lambda), Partition(mu));
  }, py::arg("shape"), py::arg("cycle_type"));
  m.def("character_table", [](int n) {
    const auto t = shared_table(n);
    std::vector<std::vector<std::int64_t>> rows;
    for (std::size_t i = 0; i < t->size(); ++i) rows.emplace_back(t->row(i).begin(), t->row(i).end());
    return rows;
  }, py::arg("n"), py::call_guard<py::gil_scoped_release>());

  m.def("spectrum", [](int n) {
    const auto spectrum = build_spectrum(n);
    py::list out;
    for (const auto& e : spectrum.entries) {
      py::dict row;
      row["lambda"] = to_vector(e.lambda);
      row["dim"] = e.dim.str();
      row["ratio"] = rational(e.ratio);
      row["s"] = e.s;
      row["zone"] = std::string(to_string(e.zone));
      out.append(row);
    }
    return out;
  }, py::arg("n"));

  m.def("tv_to_uniform", [](int n, int k) { return ExactWalk(shared_table(n)).tv_to_uniform(k); },
        py::arg("n"), py::arg("k"), py::call_guard<py::gil_scoped_release>());
  m.def("tv_curve", [](int n, int k_max) {
    const ExactWalk walk(shared_table(n));
    std::vector<double> out;
    for (int k = 0; k <= k_max; ++k) out.push_back(walk.tv_to_uniform(k));
    return out;
  }, py::arg("n"), py::arg("k_max"), py::call_guard<py::gil_scoped_release>());
  m.def("class_masses", [](int n, int k) {
    std::vector<py::tuple> out;
    const auto masses = ExactWalk(shared_table(n)).class_masses(k);
    for (const auto& r : masses) out.push_back(rational(r));
    return out;
  }, py::arg("n"), py::arg("k"));
  m.def("ubl_bound", py::overload_cast<int, int>(&ubl_bound), py::arg("n"), py::arg("k"));
  m.def("steps_for", &steps_for, py::arg("n"), py::arg("c"));
  m.def("ds_bound", [](int n, double c) {
    const auto r = ds_bound_report(n, c);
    return py::dict(py::arg("n") = r.n, py::arg("c") = r.c, py::arg("k") = r.k, py::arg("c_realized") = r.c_realized,
                    py::arg("ubl_sqrt") = r.ubl_sqrt, py::arg("exp_neg_2c") = r.decay, py::arg("ratio") = r.ratio);
  }, py::arg("n"), py::arg("c"));
  m.def("zone_sum", [](int n, int k, const std::string& zone) {
    for (Zone z : {Zone::A1, Zone::A2, Zone::A3})
      if (to_string(z) == zone) return zone_sum(n, k, z);
    throw std::invalid_argument("unknown zone " + zone);
  }, py::arg("n"), py::arg("k"), py::arg("zone"));

  m.def("limiting_profile", &limiting_profile, py::arg("c"));
  m.def("poisson_tv", &poisson_tv, py::arg("a"), py::arg("b"));
  m.def("s_m_ratio", [](int n, int M) { return rational(s_m_ratio(n, M)); }, py::arg("n"), py::arg("M"));
  m.def("profile", [](double c, const std::vector<int>& n_values, std::optional<int> M) {
    TableStore store(TableStore::Config{cache_dir_from_env(), false, {}});
    const auto report = profile_report(c, n_values, M, store);
    py::list out;
    for (const auto& r : report.rows) {
      out.append(py::dict(py::arg("c") = c, py::arg("n") = r.n, py::arg("k") = r.k, py::arg("M") = r.M,
                          py::arg("tv_exact") = r.tv_exact, py::arg("main_term") = r.main_term,
                          py::arg("trunc_err") = r.truncation_error, py::arg("poisson_limit") = r.poisson_limit,
                          py::arg("gap") = r.gap));
    }
    return out;
  }, py::arg("c"), py::arg("n_values"), py::arg("M") = py::none());
  m.def("simulate", [](int n, int k, std::uint64_t trials, std::uint64_t seed) {
    const auto e = simulate_shuffle(n, k, trials, seed);
    return py::make_tuple(e.counts, e.generator);
  }, py::arg("n"), py::arg("k"), py::arg("trials"), py::arg("seed"));
}
