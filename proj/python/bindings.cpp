#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cosetgrowth/cosetgrowth.hpp"

namespace py = pybind11;
using namespace cosetgrowth;

namespace {

std::vector<Word> parse_words(const Presentation& p, const std::vector<std::string>& texts) {
  std::vector<Word> out;
  for (const auto& t : texts) out.push_back(p.parse_word(t));
  return out;
}

std::vector<std::string> format_words(const Presentation& p, const std::vector<Word>& words) {
  std::vector<std::string> out;
  for (const Word& w : words) out.push_back(p.format(w));
  return out;
}

CoreGraph core(const std::vector<std::string>& gens, std::size_t rank) {
  const Presentation f = Presentation::free_group(rank);
  return fold_core(parse_words(f, gens), rank);
}

py::dict series_dict(const GrowthSeries& s) {
  py::dict d;
  d["counts"] = s.counts;
  d["exact"] = std::vector<bool>(s.exact.begin(), s.exact.end());
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.attr("__version__") = std::string(version());

  py::register_exception<Error>(m, "CosetGrowthError", PyExc_RuntimeError);

  py::class_<Presentation>(m, "Presentation")
      .def_static("parse", [](const std::string& text) { return parse_presentation(text); })
      .def_static("free_group", &Presentation::free_group)
      .def_property_readonly("rank", &Presentation::rank)
      .def_property_readonly("generators", &Presentation::generator_names)
      .def_property_readonly("relators",
                             [](const Presentation& p) { return format_words(p, p.relators()); })
      .def("reduce", [](const Presentation& p, const std::string& w) { return p.format(p.parse_word(w)); })
      .def("__str__", [](const Presentation& p) { return serialize(p); });

  m.def("max_piece", [](const Presentation& p) { return max_piece(symmetrize(p)).max_piece_length; });
  m.def("satisfies_metric_condition", [](const Presentation& p, const std::string& lambda) {
    return check_metric_condition(symmetrize(p), parse_rational(lambda));
  });
  m.def("dehn_reduce", [](const Presentation& p, const std::string& w) {
    return p.format(DehnSolver(p).reduce(p.parse_word(w)));
  });

  m.def("build_rips", [](const Presentation& g) { return build_rips(g).result; },
        "Small-cancellation group H with H/N = G.");

  m.def("is_member", [](const std::vector<std::string>& gens, const std::string& w, std::size_t rank) {
    return membership(core(gens, rank), Presentation::free_group(rank).parse_word(w));
  }, py::arg("generators"), py::arg("word"), py::arg("rank") = 2);
  m.def("is_finite_index", [](const std::vector<std::string>& gens, std::size_t rank) {
    return is_finite_index(core(gens, rank));
  }, py::arg("generators"), py::arg("rank") = 2);
  m.def("double_coset_canonical",
        [](const std::vector<std::string>& a, const std::vector<std::string>& b, const std::string& h,
           std::size_t rank) {
          const Presentation f = Presentation::free_group(rank);
          return f.format(double_coset_canonical_free(core(a, rank), core(b, rank), f.parse_word(h)));
        },
        py::arg("a"), py::arg("b"), py::arg("h"), py::arg("rank") = 2);

  m.def("growth", [](const Presentation& p, std::size_t radius) {
    return series_dict(growth_function(p, WordProblemOracle::automatic(p, radius), radius));
  });
  m.def("double_coset_growth",
        [](const std::vector<std::string>& a, const std::vector<std::string>& b, std::size_t radius,
           std::size_t rank) { return series_dict(double_coset_growth_free(rank, core(a, rank), core(b, rank), radius)); },
        py::arg("a"), py::arg("b"), py::arg("radius"), py::arg("rank") = 2);

  m.def("theorem1_check", [](const Presentation& g, std::size_t radius) {
    const Theorem1Report rep = theorem1_check(g, WordProblemOracle::automatic(g, radius), radius);
    py::dict d;
    std::vector<std::uint64_t> gr, f;
    for (const auto& row : rep.rows) {
      gr.push_back(row.gr_exact);
      f.push_back(row.f_g);
    }
    d["gr"] = gr;
    d["f_G"] = f;
    d["equality_holds"] = rep.equality_holds;
    d["beta_violations"] = rep.beta_violations;
    d["passed"] = rep.pass();
    return d;
  });
}
