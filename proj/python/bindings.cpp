#include "hallkit/errors.hpp"
#include "hallkit/notation.hpp"

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>

namespace py = pybind11;
using namespace hallkit;

namespace {

py::object to_py(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

Quiver quiver_from(const std::string& source, int q) {
  Quiver Q = source == "a2" ? a2_quiver(2)
             : source == "a3" ? a3_quiver(2)
             : (source == "kronecker" || source == "kron") ? kronecker_quiver(2)
             : (!source.empty() && source.front() == '{') ? Quiver::from_json(nlohmann::json::parse(source))
                                                      : Quiver::load(source);
  return q ? Q.with_q(q) : Q;
}

/// One quiver over one field, with its class labels.
class Session {
public:
  Session(const std::string& quiver, int q, int cap_dim, unsigned long long cap_space, uint64_t seed)
      : engine_(std::make_unique<Engine>(quiver_from(quiver, q), caps(cap_dim, cap_space), seed)), nt_(*engine_) {}

  int q() const { return engine_->quiver().q(); }
  int rank() const { return engine_->quiver().rank(); }
  py::object quiver() const { return to_py(engine_->quiver().to_json()); }

  py::object classes(const std::string& dim) {
    nlohmann::json out = nlohmann::json::array();
    for (ClassId c : nt_.candidates(nt_.parse_dim(dim))) out.push_back(nt_.class_entry(c));
    return to_py(out);
  }
  std::string hallnum(const std::string& l, const std::string& a, const std::string& b) {
    return engine_->catalog().hall_number(nt_.parse_class(l), nt_.parse_class(a), nt_.parse_class(b)).get_str();
  }
  py::object mul(const std::string& e) { return to_py(nt_.to_json(nt_.parse_hall(e))); }
  py::object comul(const std::string& e, int sign) { return to_py(nt_.to_json(engine_->hall().comul(nt_.parse_hall(e), sign))); }
  py::object pair(const std::string& x, const std::string& y) {
    const bool tensors = x.find('<') != std::string::npos || y.find('<') != std::string::npos;
    const Coeff c = tensors ? engine_->hall().pairing(nt_.parse_tensor(x), nt_.parse_tensor(y))
                            : engine_->hall().pairing(nt_.parse_hall(x), nt_.parse_hall(y));
    return to_py({{"value", c.to_json()}, {"expr", c.to_string()}});
  }
  py::object dmul(const std::string& e) { return to_py(nt_.to_json(nt_.parse_double(e))); }
  py::object straighten(const std::string& l, const std::string& m) {
    return to_py(nt_.to_json(engine_->dbl().straighten(nt_.parse_class(l), nt_.parse_class(m))));
  }
  py::object mutate(const std::string& side, const std::string& a, const std::string& b) {
    Catalog& cat = engine_->catalog();
    const ClassId x = nt_.parse_exceptional(a), y = nt_.parse_exceptional(b);
    const ExceptionalPair p = classify_pair(cat, x, y);
    if (side != "left" && side != "right") throw DomainError("side must be left or right");
    const bool left = side == "left";
    const ClassId t = left ? left_mutation(cat, x, y) : right_mutation(cat, x, y);
    return to_py({{"case", roman(left ? p.left_case : p.right_case)}, {left ? "gamma" : "lambda", cat.at(t).dim.vec()}});
  }
  std::vector<std::string> braid(const std::string& word, const std::vector<std::string>& seq) {
    return labels(braid_apply(engine_->catalog(), parse_braid(word), sequence(seq)));
  }
  std::vector<std::vector<std::string>> orbit(int depth, const std::vector<std::string>& seq) {
    std::vector<std::vector<std::string>> out;
    for (const auto& s : orbit_enumerate(engine_->catalog(), sequence(seq), depth)) out.push_back(labels(s));
    std::sort(out.begin(), out.end());
    return out;
  }
  py::object theta(int sign) { return to_py(nt_.to_json(engine_->dbl().theta1(sign))); }

private:
  static Caps caps(int cap_dim, unsigned long long cap_space) {
    Caps c;
    if (cap_dim) c.enum_total_dim = cap_dim;
    if (cap_space) c.rep_space = cap_space;
    return c;
  }
  ExceptionalSequence sequence(const std::vector<std::string>& items) {
    ExceptionalSequence s;
    for (const auto& t : items) s.push_back(nt_.parse_exceptional(t));
    if (!is_exceptional_sequence(engine_->catalog(), s)) throw DomainError("the classes do not form an exceptional sequence");
    return s;
  }
  std::vector<std::string> labels(const ExceptionalSequence& s) {
    std::vector<std::string> out;
    for (ClassId c : s) out.push_back(nt_.label(c));
    return out;
  }

  std::unique_ptr<Engine> engine_;
  Notation nt_;
};

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Hall algebras of quivers over finite fields";

  py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<InvariantError>(m, "InvariantError", PyExc_AssertionError);

  py::class_<Session>(m, "Session")
      .def(py::init<const std::string&, int, int, unsigned long long, uint64_t>(), py::arg("quiver"), py::arg("q") = 0,
           py::arg("cap_dim") = 0, py::arg("cap_space") = 0, py::arg("seed") = 1)
      .def_property_readonly("q", &Session::q)
      .def_property_readonly("rank", &Session::rank)
      .def("quiver", &Session::quiver)
      .def("classes", &Session::classes, py::arg("dim"))
      .def("hallnum", &Session::hallnum)
      .def("mul", &Session::mul, py::arg("expr"))
      .def("comul", &Session::comul, py::arg("expr"), py::arg("sign") = 1)
      .def("pair", &Session::pair)
      .def("dmul", &Session::dmul, py::arg("expr"))
      .def("straighten", &Session::straighten)
      .def("mutate", &Session::mutate, py::arg("side"), py::arg("alpha"), py::arg("beta"))
      .def("braid", &Session::braid, py::arg("word"), py::arg("sequence"))
      .def("orbit", &Session::orbit, py::arg("depth"), py::arg("sequence"))
      .def("theta", &Session::theta, py::arg("sign"));

  m.def("alternating_binomial_sum", [](int q, int l, int d) { return to_py(alternating_binomial_sum(q, l, d).to_json()); },
        py::arg("q"), py::arg("l"), py::arg("d") = 1);

  m.def("suite_groups", [] {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& g : default_suite()) out.emplace_back(g.key, g.title);
    return out;
  });
  m.def(
      "verify",
      [](const std::string& target) {
        nlohmann::json out = nlohmann::json::array();
        bool found = false;
        for (const auto& g : default_suite()) {
          if (target != "all" && target != g.key) continue;
          found = true;
          py::gil_scoped_release release;
          for (const auto& r : g.run({})) out.push_back(r.to_json());
        }
        if (!found) throw DomainError("unknown verification group " + target);
        return to_py(out);
      },
      py::arg("target") = "all");
}
