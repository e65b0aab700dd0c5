#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "graphlet/oracle.hpp"
#include "graphlet/transform.hpp"

namespace py = pybind11;
using namespace graphlet;

namespace {

Dictionary dict_from_spec(const std::string& spec) {
  return parse_dictionary(spec).dict;
}

py::array_t<std::uint64_t> field_to_array(const FrequencyField& f) {
  const auto rows = static_cast<py::ssize_t>(f.num_vertices());
  const auto cols = static_cast<py::ssize_t>(f.num_columns());
  py::array_t<std::uint64_t> out({rows, cols});
  auto view = out.mutable_unchecked<2>();
  for (py::ssize_t v = 0; v < rows; ++v) {
    auto row = f.vertex_row(static_cast<vertex_t>(v));
    for (py::ssize_t c = 0; c < cols; ++c)
      view(v, c) = row[static_cast<std::size_t>(c)];
  }
  return out;
}

SparseAdjacency graph_from_edges(
    const std::vector<std::pair<vertex_t, vertex_t>>& edges, vertex_t n,
    bool symmetrize, bool drop_self_loops, bool dedupe) {
  EdgeCollection ec;
  ec.edges = edges;
  if (n > 0) ec.declared_n = n;
  SanitizeOptions opt;
  opt.symmetrize = symmetrize;
  opt.drop_self_loops = drop_self_loops;
  opt.dedupe = dedupe;
  return build_adjacency(ec, opt).graph;
}

SparseAdjacency graph_from_text(const std::string& text,
                                const std::string& format, bool symmetrize) {
  std::istringstream in(text);
  EdgeCollection ec;
  if (format == "mtx" ||
      (format == "auto" && text.rfind("%%MatrixMarket", 0) == 0))
    ec = parse_matrix_market(in);
  else
    ec = parse_edge_list(in);
  SanitizeOptions opt;
  opt.symmetrize = symmetrize;
  return build_adjacency(ec, opt).graph;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Exact per-vertex graphlet frequencies (raw and net) for sparse "
      "undirected graphs over the 16-graphlet dictionary";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<StructuralError>(m, "StructuralError",
                                          PyExc_ValueError);
  py::register_exception<graphlet::OverflowError>(m, "CountOverflowError",
                                                  PyExc_OverflowError);
  py::register_exception<InconsistencyError>(m, "InconsistencyError",
                                             PyExc_ValueError);

  py::class_<SparseAdjacency>(m, "Graph")
      .def_property_readonly("num_vertices", &SparseAdjacency::num_vertices)
      .def_property_readonly("num_edges", &SparseAdjacency::num_edges)
      .def_property_readonly("max_degree", &SparseAdjacency::max_degree)
      .def("degree", &SparseAdjacency::degree, py::arg("v"))
      .def("neighbors",
           [](const SparseAdjacency& g, vertex_t v) {
             auto r = g.row(v);
             return std::vector<vertex_t>(r.begin(), r.end());
           },
           py::arg("v"))
      .def("has_edge", &SparseAdjacency::has_edge, py::arg("u"), py::arg("v"))
      .def("__repr__", [](const SparseAdjacency& g) {
        std::ostringstream out;
        out << "Graph(n=" << g.num_vertices() << ", m=" << g.num_edges()
            << ")";
        return out.str();
      });

  m.def("from_edges", &graph_from_edges, py::arg("edges"), py::arg("n") = 0,
        py::arg("symmetrize") = true, py::arg("drop_self_loops") = true,
        py::arg("dedupe") = true,
        "Build an immutable undirected graph from (u, v) pairs.");
  m.def("from_text", &graph_from_text, py::arg("text"),
        py::arg("format") = "auto", py::arg("symmetrize") = true,
        "Parse an edge-list or Matrix Market document.");

  m.def("graphlet_ids",
        [](const std::string& spec) { return dict_from_spec(spec).ids(); },
        py::arg("dict") = "all",
        "Sorted graphlet ids selected by a dictionary spec.");

  m.def("graphlet_names", [] {
    std::vector<std::string> names;
    for (const auto& d : graphlet_descriptors()) names.push_back(d.name);
    return names;
  });

  m.def(
      "raw_frequencies",
      [](const SparseAdjacency& g, const std::string& spec, int threads) {
        KernelOptions opt;
        opt.threads = threads;
        return field_to_array(raw_frequencies(g, dict_from_spec(spec), opt));
      },
      py::arg("graph"), py::arg("dict") = "all", py::arg("threads") = 0,
      "Raw frequency table, one row per vertex, one column per selected "
      "graphlet id (ascending).");

  m.def(
      "transform",
      [](const SparseAdjacency& g, const std::string& spec, int threads,
         bool lenient) {
        TransformOptions opt;
        opt.dict = dict_from_spec(spec);
        opt.threads = threads;
        opt.lenient = lenient;
        auto result = transform(g, opt);
        return py::make_tuple(field_to_array(result.raw),
                              field_to_array(result.net));
      },
      py::arg("graph"), py::arg("dict") = "all", py::arg("threads") = 0,
      py::arg("lenient") = false,
      "Run the full transform; returns (raw, net) tables.");

  m.def(
      "conversion_matrix",
      [](const std::string& spec) {
        auto u = sub_matrix(dict_from_spec(spec));
        const auto k = static_cast<py::ssize_t>(u.dim());
        py::array_t<std::uint64_t> out({k, k});
        auto view = out.mutable_unchecked<2>();
        for (py::ssize_t r = 0; r < k; ++r)
          for (py::ssize_t c = 0; c < k; ++c)
            view(r, c) = u.coeff(static_cast<std::size_t>(r),
                                 static_cast<std::size_t>(c));
        return out;
      },
      py::arg("dict") = "all",
      "Net-to-raw conversion matrix for the selected dictionary.");

  m.def(
      "oracle_raw",
      [](const SparseAdjacency& g, vertex_t cap) {
        return field_to_array(oracle_raw(g, {cap}));
      },
      py::arg("graph"), py::arg("cap") = 200);
  m.def(
      "oracle_net",
      [](const SparseAdjacency& g, vertex_t cap) {
        return field_to_array(oracle_net(g, {cap}));
      },
      py::arg("graph"), py::arg("cap") = 200);

  m.def(
      "cross_check",
      [](const SparseAdjacency& g, int threads) {
        TransformOptions opt;
        opt.threads = threads;
        auto result = transform(g, opt);
        auto report = cross_check(g, result.raw, result.net);
        return py::make_tuple(report.all_passed(), report.summary());
      },
      py::arg("graph"), py::arg("threads") = 0,
      "Verify the fast transform against the brute-force oracle; returns "
      "(ok, report).");
}
