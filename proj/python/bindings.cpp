#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hfs/approx.hpp"
#include "hfs/fixtures.hpp"
#include "hfs/io.hpp"
#include "hfs/laws.hpp"
#include "hfs/neighborhood.hpp"

namespace py = pybind11;

namespace {

using namespace hfs;

InclusionKind kind_of(const std::string& s) {
  if (s.size() == 1)
    if (std::optional<InclusionKind> k = kind_from_letter(s[0])) return *k;
  throw ParseError("kind must be one of p, a, m, s, t, n (got \"" + s + "\")");
}

HesitantElement element_of(const std::vector<std::string>& degrees, int precision) {
  if (degrees.empty()) throw ParseError("an element needs at least one degree");
  std::vector<Degree> d;
  d.reserve(degrees.size());
  for (const std::string& s : degrees) d.push_back(Degree::parse(s, precision));
  return HesitantElement(std::move(d));
}

std::vector<std::string> degrees_of(const HesitantElement& h) {
  std::vector<std::string> out;
  out.reserve(h.size());
  for (Degree g : h.degrees()) out.push_back(g.str());
  return out;
}

py::dict hfs_to_dict(const HesitantFuzzySet& h) {
  py::dict out;
  for (std::size_t i = 0; i < h.size(); ++i)
    out[py::str(h.universe()->name(i))] = degrees_of(h.at(i));
  return out;
}

// The covering space plus the conversions a python caller needs: dicts
// of degree-string lists in, dicts and name lists out.
class Space {
 public:
  Space(const std::string& json_text, const std::optional<std::string>& kind,
        const std::optional<std::vector<std::string>>& beta, int precision)
      : precision_(precision) {
    io::SpaceDocument doc = io::space_from_json(json_text);
    std::optional<InclusionKind> k;
    if (kind) k = kind_of(*kind);
    space_ = std::make_unique<CoveringSpace>(io::build_space(doc, precision, k, beta));
  }

  std::vector<std::string> objects() const { return space_->universe()->objects(); }
  std::vector<std::string> parameters() const { return space_->soft().params().params(); }
  std::string kind() const { return std::string(1, kind_letter(space_->kind())); }
  std::vector<std::string> beta() const { return degrees_of(space_->beta()); }

  std::vector<std::string> qualifying(const std::string& x) const {
    return fuzzy_neighborhood(*space_, x).qualifying;
  }

  py::object fuzzy_nbhd(const std::string& x) const {
    FuzzyNeighborhood n = fuzzy_neighborhood(*space_, x);
    if (!n.defined()) return py::none();
    return hfs_to_dict(n.get());
  }

  py::object crisp_nbhd(const std::string& x) const {
    CrispNeighborhood n = crisp_neighborhood(*space_, x);
    if (!n.defined()) return py::none();
    return py::cast(obj_names(*space_->universe(), n.get()));
  }

  py::dict hesitant_lower_py(const py::dict& target) const {
    return hfs_to_dict(hesitant_lower(*space_, target_set(target)));
  }
  py::dict hesitant_upper_py(const py::dict& target) const {
    return hfs_to_dict(hesitant_upper(*space_, target_set(target)));
  }

  std::vector<std::string> crisp_lower_py(const std::vector<std::string>& names) const {
    return obj_names(*space_->universe(), crisp_lower(*space_, object_set(names)));
  }
  std::vector<std::string> crisp_upper_py(const std::vector<std::string>& names) const {
    return obj_names(*space_->universe(), crisp_upper(*space_, object_set(names)));
  }

 private:
  HesitantFuzzySet target_set(const py::dict& target) const {
    const Universe& u = *space_->universe();
    std::vector<std::optional<HesitantElement>> slots(u.size());
    for (const auto& item : target) {
      std::string name = py::cast<std::string>(item.first);
      auto degrees = py::cast<std::vector<std::string>>(item.second);
      slots[u.index_of_checked(name)] = element_of(degrees, precision_);
    }
    std::vector<HesitantElement> values;
    values.reserve(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
      if (!slots[i]) throw ParseError("target is missing object " + u.name(i));
      values.push_back(std::move(*slots[i]));
    }
    return HesitantFuzzySet(space_->universe(), std::move(values));
  }

  ObjectSet object_set(const std::vector<std::string>& names) const {
    const Universe& u = *space_->universe();
    ObjectSet out;
    out.reserve(names.size());
    for (const std::string& n : names) out.push_back(u.index_of_checked(n));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  std::unique_ptr<CoveringSpace> space_;
  int precision_;
};

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "hesitant fuzzy soft beta-covering approximation spaces";

  py::register_exception<HfsError>(m, "HfsError");

  m.def(
      "includes",
      [](const std::string& kind, const std::vector<std::string>& a,
         const std::vector<std::string>& b, int precision) {
        return elem_includes(kind_of(kind), element_of(a, precision),
                             element_of(b, precision));
      },
      py::arg("kind"), py::arg("a"), py::arg("b"), py::arg("precision") = 4,
      "Whether multiset a is contained in b under the given inclusion kind.");

  m.def(
      "element_union",
      [](const std::vector<std::string>& a, const std::vector<std::string>& b,
         int precision) {
        return degrees_of(elem_union(element_of(a, precision), element_of(b, precision)));
      },
      py::arg("a"), py::arg("b"), py::arg("precision") = 4);

  m.def(
      "element_intersect",
      [](const std::vector<std::string>& a, const std::vector<std::string>& b,
         int precision) {
        return degrees_of(
            elem_intersect(element_of(a, precision), element_of(b, precision)));
      },
      py::arg("a"), py::arg("b"), py::arg("precision") = 4);

  m.def(
      "element_complement",
      [](const std::vector<std::string>& a, int precision) {
        return degrees_of(element_of(a, precision).complement());
      },
      py::arg("a"), py::arg("precision") = 4);

  m.def(
      "element_mean",
      [](const std::vector<std::string>& a, int precision) {
        return element_of(a, precision).mean().str();
      },
      py::arg("a"), py::arg("precision") = 4,
      "Arithmetic mean as an exact rational string, e.g. \"17/30\".");

  py::class_<Space>(m, "Space")
      .def(py::init<const std::string&, const std::optional<std::string>&,
                    const std::optional<std::vector<std::string>>&, int>(),
           py::arg("json_text"), py::arg("kind") = std::nullopt,
           py::arg("beta") = std::nullopt, py::arg("precision") = 4,
           "Builds and validates a covering space from a JSON document; "
           "kind and beta override the document when given.")
      .def_property_readonly("objects", &Space::objects)
      .def_property_readonly("parameters", &Space::parameters)
      .def_property_readonly("kind", &Space::kind)
      .def_property_readonly("beta", &Space::beta)
      .def("qualifying", &Space::qualifying, py::arg("x"),
           "Parameters whose image dominates beta at x.")
      .def("fuzzy_neighborhood", &Space::fuzzy_nbhd, py::arg("x"),
           "Dict of degree lists, or None when no parameter qualifies.")
      .def("crisp_neighborhood", &Space::crisp_nbhd, py::arg("x"),
           "List of object names, or None when no parameter qualifies.")
      .def("hesitant_lower", &Space::hesitant_lower_py, py::arg("target"))
      .def("hesitant_upper", &Space::hesitant_upper_py, py::arg("target"))
      .def("crisp_lower", &Space::crisp_lower_py, py::arg("target"))
      .def("crisp_upper", &Space::crisp_upper_py, py::arg("target"));

  m.def(
      "run_laws",
      [](std::uint64_t seed, std::uint64_t cases) {
        laws::LawReport rep =
            laws::run_laws(laws::law_registry(), seed, cases, laws::GenBounds{});
        py::dict out;
        out["seed"] = rep.seed;
        out["cases_per_law"] = rep.cases_per_law;
        out["laws"] = rep.results.size();
        out["failed"] = rep.failed_laws();
        py::list failing;
        for (const laws::LawResult& r : rep.results)
          if (!r.passed()) failing.append(r.id);
        out["failing"] = failing;
        return out;
      },
      py::arg("seed") = 1, py::arg("cases") = 200,
      "Runs the randomized law suite; returns a summary dict.");

  m.def(
      "run_fixtures",
      []() {
        std::string diag;
        std::vector<std::string> failing = fixtures::run_fixtures("", &diag);
        return py::make_tuple(failing, diag);
      },
      "Replays every frozen worked example; returns (failing ids, diagnostics).");
}
