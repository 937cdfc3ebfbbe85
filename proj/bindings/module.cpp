#include "wittconics/cli_app.hpp"
#include "wittconics/conics.hpp"
#include "wittconics/hyperfield.hpp"
#include "wittconics/localglobal.hpp"
#include "wittconics/quadfields.hpp"
#include "wittconics/serialize.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace wittconics;

namespace {

Rat to_rat(const py::object& obj) {
    // Accepts int, str, and fractions.Fraction (all stringify to p/q form).
    return parse_rational(py::str(obj).cast<std::string>());
}

Int to_int(const py::object& obj) {
    return parse_integer(py::str(obj).cast<std::string>());
}

py::object py_int(const Int& n) {
    return py::module_::import("builtins").attr("int")(n.str());
}

py::object py_fraction(const Rat& r) {
    auto fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(rat_str(r));
}

Place to_place(const py::object& obj) {
    std::string s = py::str(obj).cast<std::string>();
    if (s == "inf") return Place::at_infinity();
    return Place::finite(parse_integer(s));
}

py::object json_to_py(const Json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

Json py_to_json(const py::object& obj) {
    std::string dumped = py::module_::import("json").attr("dumps")(obj).cast<std::string>();
    return Json::parse(dumped);
}

FiniteHyperfield table_from_py(const py::object& obj) {
    return hyperfield_from_json(py_to_json(obj));
}

std::vector<LocalCondition> conditions_from_py(const py::list& conditions) {
    std::vector<LocalCondition> out;
    for (const auto& item : conditions) {
        py::tuple t = item.cast<py::tuple>();
        if (t.size() != 2) throw std::invalid_argument("condition must be a (place, target) pair");
        std::string place = py::str(t[0]).cast<std::string>();
        if (place == "inf")
            out.push_back(LocalCondition::sign_at_infinity(t[1].cast<int>()));
        else
            out.push_back(LocalCondition::class_at(parse_integer(place), to_rat(t[1].cast<py::object>())));
    }
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact Witt-equivalence invariants of function fields of conics over Q";

    // Square classes and local symbols.
    m.def("square_class", [](const py::object& r) { return py_int(square_class(to_rat(r)).value()); },
          py::arg("r"), "Canonical square class of a non-zero rational, as a signed squarefree integer.");
    m.def("padic_square_class",
          [](const py::object& r, const py::object& p) { return py_int(padic_square_class(to_rat(r), to_int(p)).rep); },
          py::arg("r"), py::arg("p"),
          "Canonical representative of the class of r in Q_p*/Q_p*^2.");
    m.def("hilbert_symbol",
          [](const py::object& a, const py::object& b, const py::object& v) {
              return hilbert_symbol(to_rat(a), to_rat(b), to_place(v));
          },
          py::arg("a"), py::arg("b"), py::arg("v"), "Hilbert symbol (a,b)_v; v is a prime or 'inf'.");
    m.def("reciprocity_check",
          [](const py::object& a, const py::object& b) { return reciprocity_check(to_rat(a), to_rat(b)); },
          py::arg("a"), py::arg("b"));
    m.def("represents",
          [](const py::object& a, const py::object& b, const py::object& c, const py::object& place) {
              std::optional<Place> at;
              if (!place.is_none()) at = to_place(place);
              return represents(to_rat(a), to_rat(b), to_rat(c), at);
          },
          py::arg("a"), py::arg("b"), py::arg("c"), py::arg("place") = py::none(),
          "Is c in the value set D<a,b>, locally at `place` or globally?");
    m.def("quaternion_ramification",
          [](const py::object& a, const py::object& b) {
              std::vector<std::string> out;
              for (const Place& v : quaternion_ramification(to_rat(a), to_rat(b)).places) out.push_back(v.str());
              return out;
          },
          py::arg("a"), py::arg("b"), "Places where (a,b/Q) is non-split.");
    m.def("local_level", [](const py::object& v) -> py::object {
        auto level = local_level(to_place(v));
        return level ? py::int_(*level) : py::object(py::none());
    });

    // Conics.
    m.def("splits", [](const py::object& a, const py::object& b) { return splits(to_rat(a), to_rat(b)); });
    m.def("find_rational_point",
          [](const py::object& a, const py::object& b, const py::object& bound) -> py::object {
              auto pt = find_rational_point(to_rat(a), to_rat(b), to_int(bound));
              if (!pt) return py::none();
              return py::make_tuple(py_fraction(pt->x), py_fraction(pt->y));
          },
          py::arg("a"), py::arg("b"), py::arg("bound") = 10000);
    m.def("holzer_point_bound",
          [](const py::object& a, const py::object& b) { return py_int(holzer_point_bound(to_rat(a), to_rat(b))); });
    m.def("parametrize",
          [](const py::object& a, const py::object& b, const py::object& x, const py::object& y) {
              ConicParametrization c = parametrize(to_rat(a), to_rat(b), RationalPoint{to_rat(x), to_rat(y)});
              auto coeffs = [](const PolyQ& f) {
                  py::list out;
                  for (const Rat& r : f) out.append(py_fraction(r));
                  return out;
              };
              py::dict d;
              d["x_num"] = coeffs(c.x_num);
              d["y_num"] = coeffs(c.y_num);
              d["den"] = coeffs(c.den);
              return d;
          },
          py::arg("a"), py::arg("b"), py::arg("x"), py::arg("y"),
          "Rational parametrization through the point (x, y); exact identity.");
    m.def("conic_isomorphic",
          [](const py::object& a, const py::object& b, const py::object& c, const py::object& d) {
              return conic_isomorphic(to_rat(a), to_rat(b), to_rat(c), to_rat(d));
          });
    m.def("quaternion_splits_over_conic",
          [](const py::object& r, const py::object& s, const py::object& a, const py::object& b) {
              return quaternion_splits_over_conic(to_rat(r), to_rat(s), to_rat(a), to_rat(b));
          });
    m.def("orderings_extending",
          [](const py::object& a, const py::object& b) { return orderings_extending(to_rat(a), to_rat(b)); });
    m.def("orderings_extending_quadratic",
          [](const py::object& d, const py::tuple& a, const py::tuple& b) {
              QuadElem ea{to_rat(a[0].cast<py::object>()), to_rat(a[1].cast<py::object>())};
              QuadElem eb{to_rat(b[0].cast<py::object>()), to_rat(b[1].cast<py::object>())};
              return orderings_extending(to_int(d), ea, eb);
          },
          py::arg("d"), py::arg("a"), py::arg("b"),
          "Orderings of Q(sqrt(d)) extending to the conic field; elements are (u, v) pairs meaning u + v*sqrt(d).");

    // Certificates.
    m.def("witt_distinguish",
          [](const py::object& a, const py::object& b, const py::object& c, const py::object& d) {
              return json_to_py(certificate_to_json(witt_distinguish(to_rat(a), to_rat(b), to_rat(c), to_rat(d))));
          },
          py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"),
          "Witt-inequivalence certificate for Q_{a,b} vs Q_{c,d} (or 'indistinguishable').");
    m.def("verify_certificate",
          [](const py::object& cert, const py::object& a, const py::object& b, const py::object& c,
             const py::object& d) {
              return verify_certificate(certificate_from_json(py_to_json(cert)), to_rat(a), to_rat(b), to_rat(c),
                                        to_rat(d));
          },
          py::arg("certificate"), py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"));
    m.def("weak_approx",
          [](const py::list& conditions) { return py_int(weak_approx(conditions_from_py(conditions))); },
          py::arg("conditions"),
          "Smallest integer with prescribed sign/local square classes; conditions are (place, target) pairs.");
    m.def("witness_set", []() { return json_to_py(witness_set_to_json(witness_set())); },
          "The constructive family of pairwise Witt-inequivalent conic fields over Q.");

    // Quadratic fields.
    m.def("discriminant_of", [](const py::object& d) { return py_int(discriminant_of(to_int(d))); });
    m.def("ramified_count", [](const py::object& d) { return ramified_count(to_int(d)); });
    m.def("is_sum_two_squares", [](const py::object& d) { return is_sum_two_squares(to_int(d)); });
    m.def("class_group_2rank", [](const py::object& d) { return class_group_2rank(to_int(d)); });
    m.def("imaginary_class_group",
          [](const py::object& d) { return json_to_py(class_group_to_json(imaginary_class_group_oracle(to_int(d)))); });
    m.def("vk_2rank", [](const py::object& d) { return vk_2rank(to_int(d)); });
    m.def("distinct_2rank_family", [](int count) {
        py::list out;
        for (const Int& d : distinct_2rank_family(count)) out.append(py_int(d));
        return out;
    });
    m.def("rational_function_field_inequiv", [](const py::object& d1, const py::object& d2) {
        return rational_function_field_inequiv(to_int(d1), to_int(d2));
    });

    // Hyperfields, exchanged as JSON-shaped dicts (the file format).
    m.def("local_hyperfield",
          [](const py::object& v) { return json_to_py(hyperfield_to_json(local_square_class_hyperfield(to_place(v)))); },
          py::arg("v"), "The quadratic hyperfield Q(Q_v) as a table dict.");
    m.def("finite_quadratic_hyperfield",
          [](const py::object& q) { return json_to_py(hyperfield_to_json(finite_field_quadratic_hyperfield(to_int(q)))); },
          py::arg("q"), "Q(F_q) for odd prime powers q.");
    m.def("verify_axioms",
          [](const py::object& table) { return json_to_py(axiom_report_to_json(verify_axioms(table_from_py(table)))); },
          py::arg("table"));
    m.def("quotient",
          [](const py::object& table, const std::vector<Elem>& members) {
              FiniteHyperfield H = table_from_py(table);
              return json_to_py(hyperfield_to_json(quotient(H, SubgroupSelection::of(H, members))));
          },
          py::arg("table"), py::arg("members"));
    m.def("prime", [](const py::object& table) { return json_to_py(hyperfield_to_json(prime(table_from_py(table)))); },
          py::arg("table"));
    m.def("is_morphism",
          [](const py::object& source, const py::object& target, const std::vector<Elem>& map) {
              MorphismCheck c = is_morphism(MorphismTable{table_from_py(source), table_from_py(target), map});
              return py::make_tuple(c.morphism, c.isomorphism);
          },
          py::arg("source"), py::arg("target"), py::arg("map"),
          "Returns (is_morphism, is_isomorphism).");
    m.def("find_isomorphisms",
          [](const py::object& t1, const py::object& t2) {
              py::list out;
              for (const MorphismTable& f : find_isomorphisms(table_from_py(t1), table_from_py(t2)))
                  out.append(f.map);
              return out;
          },
          py::arg("t1"), py::arg("t2"), "Complete list of isomorphisms, as index maps.");
    m.def("residue_embedding", [](const py::object& p) {
        MorphismTable f = residue_embedding(to_int(p));
        py::dict d;
        d["source"] = json_to_py(hyperfield_to_json(f.source));
        d["target"] = json_to_py(hyperfield_to_json(f.target));
        d["map"] = f.map;
        return d;
    });
    m.def("is_group_extension", [](const py::object& source, const py::object& target, const std::vector<Elem>& map) {
        return is_group_extension(MorphismTable{table_from_py(source), table_from_py(target), map});
    });
    m.def("is_quotient_morphism", [](const py::object& source, const py::object& target, const std::vector<Elem>& map) {
        return is_quotient_morphism(MorphismTable{table_from_py(source), table_from_py(target), map});
    });
    m.def("is_rigid",
          [](const py::object& table, const std::vector<Elem>& members, Elem x) {
              FiniteHyperfield H = table_from_py(table);
              return is_rigid(H, SubgroupSelection::of(H, members), x);
          },
          py::arg("table"), py::arg("members"), py::arg("x"));
    m.def("basic_part", [](const py::object& table, const std::vector<Elem>& members) {
        FiniteHyperfield H = table_from_py(table);
        return basic_part(H, SubgroupSelection::of(H, members));
    });
    m.def("is_exceptional", [](const py::object& table, const std::vector<Elem>& members) {
        FiniteHyperfield H = table_from_py(table);
        return is_exceptional(H, SubgroupSelection::of(H, members));
    });

    // Polynomials.
    m.def("gauss_valuation",
          [](const py::list& coeffs, const py::object& p, const py::object& den) -> py::object {
              PolyOverQ num;
              for (const auto& c : coeffs) num.push_back(to_rat(c.cast<py::object>()));
              if (den.is_none()) {
                  auto v = gauss_valuation(num, to_int(p));
                  return v ? py_int(*v) : py::object(py::none());
              }
              PolyOverQ d;
              for (const auto& c : den.cast<py::list>()) d.push_back(to_rat(c.cast<py::object>()));
              auto v = gauss_valuation(num, d, to_int(p));
              return v ? py_int(*v) : py::object(py::none());
          },
          py::arg("coeffs"), py::arg("p"), py::arg("den") = py::none(),
          "Gauss valuation min_i v_p(a_i); None encodes +infinity.");
}
