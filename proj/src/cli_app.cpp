#include "wittconics/cli_app.hpp"

#include "wittconics/conics.hpp"
#include "wittconics/localglobal.hpp"
#include "wittconics/quadfields.hpp"
#include "wittconics/serialize.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

namespace wittconics {

void export_hyperfield(const FiniteHyperfield& H, const std::string& path) {
    H.validate();
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("export_hyperfield: cannot open '" + path + "'");
    out << hyperfield_to_json(H).dump(2) << "\n";
}

FiniteHyperfield import_hyperfield(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("import_hyperfield: cannot open '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const Json::exception& e) {
        throw std::invalid_argument(std::string("import_hyperfield: malformed JSON: ") + e.what());
    }
    return hyperfield_from_json(j);
}

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    bool json = false;
    Int bound = 10000;
    bool oracle = false;
};

struct Outcome {
    Json result;
    std::vector<std::string> text;
    std::vector<std::string> diagnostics;
    bool failed_check = false;  // exit 1 with a well-formed envelope
};

Place parse_place(const std::string& token) {
    if (token == "inf") return Place::at_infinity();
    return Place::finite(parse_integer(token));
}

void oracle_check_symbol(const Rat& a, const Rat& b, const Place& v, Outcome& out) {
    if (hilbert_symbol(a, b, v) != oracle::hilbert_symbol(a, b, v))
        throw std::logic_error("oracle cross-check failed: hilbert symbol at " + v.str());
    out.diagnostics.push_back("oracle agreement at " + v.str());
}

Outcome cmd_hilbert(const Rat& a, const Rat& b, const Place& v, const Options& opt) {
    Outcome out;
    int s = hilbert_symbol(a, b, v);
    if (opt.oracle) oracle_check_symbol(a, b, v, out);
    out.result = Json{{"symbol", s}};
    out.text.push_back("hilbert symbol at " + v.str() + ": " + std::to_string(s));
    return out;
}

Outcome cmd_quaternion(const Rat& a, const Rat& b, const Options& opt) {
    Outcome out;
    RamificationSet ram = quaternion_ramification(a, b);
    if (opt.oracle)
        for (const Place& v : ram.places) oracle_check_symbol(a, b, v, out);
    out.result = Json{{"ramified", ramification_to_json(ram)}};
    std::string line = "ramified places:";
    for (const Place& v : ram.places) line += " " + v.str();
    if (ram.empty()) line += " none (split)";
    out.text.push_back(line);
    return out;
}

Outcome cmd_conic_split(const Rat& a, const Rat& b, const Options& opt) {
    Outcome out;
    bool s = splits(a, b);
    if (opt.oracle) {
        bool found = find_rational_point(a, b, holzer_point_bound(a, b)).has_value();
        if (found != s) throw std::logic_error("oracle cross-check failed: point search disagrees with symbols");
        out.diagnostics.push_back("point-search oracle agrees");
    }
    out.result = Json{{"splits", s}};
    out.text.push_back(std::string("splits: ") + (s ? "true" : "false"));
    return out;
}

Outcome cmd_conic_point(const Rat& a, const Rat& b, const Options& opt) {
    Outcome out;
    auto pt = find_rational_point(a, b, opt.bound);
    out.result = Json{{"point", pt ? point_to_json(*pt) : Json()}, {"bound", opt.bound.str()}};
    if (pt)
        out.text.push_back("point: x = " + rat_str(pt->x) + ", y = " + rat_str(pt->y));
    else
        out.text.push_back("point: none within bound " + opt.bound.str());
    return out;
}

Outcome cmd_conic_isom(const Rat& a, const Rat& b, const Rat& c, const Rat& d) {
    Outcome out;
    bool iso = conic_isomorphic(a, b, c, d);
    out.result = Json{{"isomorphic", iso}};
    out.text.push_back(std::string("isomorphic: ") + (iso ? "true" : "false"));
    return out;
}

Outcome cmd_conic_certify(const Rat& a, const Rat& b, const Rat& c, const Rat& d) {
    Outcome out;
    Certificate cert = witt_distinguish(a, b, c, d);
    if (!verify_certificate(cert, a, b, c, d)) throw std::logic_error("emitted certificate failed re-verification");
    out.result = certificate_to_json(cert);
    out.text.push_back("certificate: " + cert.kind());
    if (cert.indistinguishable())
        out.diagnostics.push_back("no inequivalence proven; the tool never claims equivalence");
    return out;
}

Outcome cmd_witnesses() {
    Outcome out;
    WitnessSet ws = witness_set();
    out.result = witness_set_to_json(ws);
    std::string line = "witness fields:";
    for (const ConicField& f : ws.fields) line += " (" + f.a.value().str() + "," + f.b.value().str() + ")";
    out.text.push_back(line);
    out.text.push_back("pairs certified: " + std::to_string(ws.fields.size() * (ws.fields.size() - 1) / 2));
    return out;
}

Outcome cmd_hyperfield_table(const FiniteHyperfield& H) {
    Outcome out;
    out.result = hyperfield_to_json(H);
    out.text.push_back("hyperfield with " + std::to_string(H.size()) + " elements");
    for (std::size_t i = 0; i < H.size(); ++i) out.text.push_back("  [" + std::to_string(i) + "] " + H.elements[i]);
    return out;
}

Outcome cmd_hyperfield_check(const std::string& path) {
    Outcome out;
    FiniteHyperfield H = import_hyperfield(path);
    AxiomReport report = verify_axioms(H);
    out.result = axiom_report_to_json(report);
    if (report.ok()) {
        out.text.push_back("all axioms hold");
    } else {
        out.failed_check = true;
        for (const auto& v : report.violations) {
            std::string line = "violated " + v.axiom + " at (";
            for (std::size_t i = 0; i < v.witness.size(); ++i)
                line += (i ? "," : "") + std::to_string(v.witness[i]);
            out.text.push_back(line + ")");
            out.diagnostics.push_back("axiom " + v.axiom + " violated");
        }
    }
    return out;
}

Outcome cmd_quadfield(const Int& d, const Options& opt) {
    Outcome out;
    int rank = class_group_2rank(d);
    if (opt.oracle && d < 0) {
        ClassGroupData data = imaginary_class_group_oracle(d);
        if (data.two_rank != rank) throw std::logic_error("oracle cross-check failed: reduced-forms 2-rank");
        out.diagnostics.push_back("reduced-forms oracle agrees (h = " + data.order.str() + ")");
    }
    bool n2_branch = d > 0 && !is_sum_two_squares(d);
    out.result = Json{{"d", d.str()},
                      {"discriminant", discriminant_of(d).str()},
                      {"N", ramified_count(d)},
                      {"branch", n2_branch ? "N-2" : "N-1"},
                      {"two_rank", rank},
                      {"vk_two_rank", vk_2rank(d)}};
    out.text.push_back("d = " + d.str() + ", discriminant " + discriminant_of(d).str() + ", N = " +
                       std::to_string(ramified_count(d)) + ", branch " + (n2_branch ? "N-2" : "N-1") +
                       ", two_rank " + std::to_string(rank) + ", vk_two_rank " + std::to_string(vk_2rank(d)));
    return out;
}

Outcome cmd_quadfield_family(int count) {
    Outcome out;
    Json family = Json::array();
    std::string line = "family:";
    for (const Int& d : distinct_2rank_family(count)) {
        family.push_back({{"d", d.str()}, {"two_rank", class_group_2rank(d)}});
        line += " " + d.str() + "(rank " + std::to_string(class_group_2rank(d)) + ")";
    }
    out.result = Json{{"family", family}};
    out.text.push_back(line);
    return out;
}

Outcome cmd_gauss(const Int& p, const std::vector<Rat>& coeffs) {
    Outcome out;
    auto v = gauss_valuation(coeffs, p);
    out.result = Json{{"valuation", v ? Json(v->str()) : Json("inf")}};
    out.text.push_back("gauss valuation: " + (v ? v->str() : "inf"));
    return out;
}

Outcome execute(const std::vector<std::string>& args);

Json envelope(const std::string& status, const Json& result, const std::vector<std::string>& diagnostics) {
    return Json{{"status", status}, {"result", result}, {"diagnostics", diagnostics}};
}

Outcome cmd_batch(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("batch: cannot open '" + path + "'");
    std::vector<std::vector<std::string>> lines;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ss(line);
        std::vector<std::string> tokens;
        std::string tok;
        while (ss >> tok) tokens.push_back(tok);
        if (!tokens.empty()) lines.push_back(std::move(tokens));
    }
    // Lines are independent; evaluate concurrently, emit in input order.
    std::vector<std::future<Json>> futures;
    futures.reserve(lines.size());
    for (const auto& tokens : lines) {
        futures.push_back(std::async(std::launch::async, [tokens]() -> Json {
            try {
                Outcome o = execute(tokens);
                return envelope(o.failed_check ? "error" : "ok", o.result, o.diagnostics);
            } catch (const std::exception& e) {
                return envelope("error", Json(), {e.what()});
            }
        }));
    }
    Outcome out;
    Json envelopes = Json::array();
    for (auto& f : futures) envelopes.push_back(f.get());
    out.result = std::move(envelopes);
    return out;
}

Outcome execute(const std::vector<std::string>& args) {
    CLI::App app{"Witt-equivalence invariants of function fields of conics over Q"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_flag("--json", opt.json, "emit a single JSON envelope on stdout");
    std::string bound_str = "10000";
    app.add_option("--bound", bound_str, "point search bound (default 10^4)");
    app.add_flag("--oracle", opt.oracle, "force brute-force cross-checks; fail on disagreement");

    std::string s_a, s_b, s_c, s_d, s_v, s_file, s_q, s_dd, s_k, s_p;
    std::vector<std::string> s_coeffs;

    auto* hilbert = app.add_subcommand("hilbert", "Hilbert symbol (a,b)_v");
    hilbert->add_option("a", s_a)->required();
    hilbert->add_option("b", s_b)->required();
    hilbert->add_option("v", s_v, "place: a prime or 'inf'")->required();

    auto* quaternion = app.add_subcommand("quaternion", "ramification set of (a,b/Q)");
    quaternion->add_option("a", s_a)->required();
    quaternion->add_option("b", s_b)->required();

    auto* conic = app.add_subcommand("conic", "function field of a x^2 + b y^2 = 1");
    conic->require_subcommand(1);
    auto* conic_split = conic->add_subcommand("split", "does (a,b/Q) split?");
    conic_split->add_option("a", s_a)->required();
    conic_split->add_option("b", s_b)->required();
    auto* conic_point = conic->add_subcommand("point", "bounded rational point search");
    conic_point->add_option("a", s_a)->required();
    conic_point->add_option("b", s_b)->required();
    auto* conic_isom = conic->add_subcommand("isom", "Q-isomorphism of two conic fields");
    conic_isom->add_option("a", s_a)->required();
    conic_isom->add_option("b", s_b)->required();
    conic_isom->add_option("c", s_c)->required();
    conic_isom->add_option("d", s_d)->required();
    auto* conic_certify = conic->add_subcommand("certify", "Witt-inequivalence certificate");
    conic_certify->add_option("a", s_a)->required();
    conic_certify->add_option("b", s_b)->required();
    conic_certify->add_option("c", s_c)->required();
    conic_certify->add_option("d", s_d)->required();

    auto* witnesses = app.add_subcommand("witnesses", "constructive witness family over Q");

    auto* hyperfield = app.add_subcommand("hyperfield", "quadratic hyperfield tables");
    hyperfield->require_subcommand(1);
    auto* hf_local = hyperfield->add_subcommand("local", "Q(Q_v) table");
    hf_local->add_option("v", s_v, "place: a prime or 'inf'")->required();
    auto* hf_finite = hyperfield->add_subcommand("finite", "Q(F_q) table");
    hf_finite->add_option("q", s_q)->required();
    auto* hf_check = hyperfield->add_subcommand("check", "verify axioms of a table file");
    hf_check->add_option("file", s_file)->required();

    auto* quadfield = app.add_subcommand("quadfield", "invariants of Q(sqrt(d))");
    auto* qf_family = quadfield->add_subcommand("family", "strictly increasing 2-rank family");
    qf_family->add_option("count", s_k)->required();
    quadfield->add_option("d", s_dd);

    auto* gauss = app.add_subcommand("gauss", "Gauss valuation of a polynomial");
    gauss->add_option("p", s_p)->required();
    gauss->add_option("coeffs", s_coeffs, "coefficients a_0 a_1 ...");

    auto* batch = app.add_subcommand("batch", "run invocations from a file, one per line");
    batch->add_option("file", s_file)->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    try {
        opt.bound = parse_integer(bound_str);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }

    // Token -> value conversions are usage errors; semantic failures
    // inside operations stay domain errors.
    auto rat = [](const std::string& s) {
        try {
            return parse_rational(s);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    };
    auto integer = [](const std::string& s) {
        try {
            return parse_integer(s);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    };
    auto place = [&](const std::string& s) {
        if (s == "inf") return Place::at_infinity();
        return Place::finite(integer(s));
    };

    Outcome out;
    if (*hilbert) return cmd_hilbert(rat(s_a), rat(s_b), place(s_v), opt);
    if (*quaternion) return cmd_quaternion(rat(s_a), rat(s_b), opt);
    if (*conic_split) return cmd_conic_split(rat(s_a), rat(s_b), opt);
    if (*conic_point) return cmd_conic_point(rat(s_a), rat(s_b), opt);
    if (*conic_isom) return cmd_conic_isom(rat(s_a), rat(s_b), rat(s_c), rat(s_d));
    if (*conic_certify) return cmd_conic_certify(rat(s_a), rat(s_b), rat(s_c), rat(s_d));
    if (*witnesses) return cmd_witnesses();
    if (*hf_local) return cmd_hyperfield_table(local_square_class_hyperfield(place(s_v)));
    if (*hf_finite) return cmd_hyperfield_table(finite_field_quadratic_hyperfield(integer(s_q)));
    if (*hf_check) return cmd_hyperfield_check(s_file);
    if (*qf_family) return cmd_quadfield_family(static_cast<int>(to_ll(integer(s_k))));
    if (*quadfield) {
        if (s_dd.empty()) throw UsageError("quadfield: missing d");
        return cmd_quadfield(integer(s_dd), opt);
    }
    if (*gauss) {
        if (s_coeffs.empty()) throw UsageError("gauss: missing coefficients");
        std::vector<Rat> coeffs;
        for (const std::string& s : s_coeffs) coeffs.push_back(rat(s));
        return cmd_gauss(integer(s_p), coeffs);
    }
    if (*batch) return cmd_batch(s_file);
    throw UsageError("unknown subcommand");
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    bool json_mode = std::count(args.begin(), args.end(), "--json") > 0;
    bool batch_mode = !args.empty() && args.front() == "batch";
    try {
        Outcome o = execute(args);
        if (batch_mode) {
            // Batch streams one envelope per line regardless of mode.
            for (const Json& env : o.result) out << env.dump() << "\n";
            return 0;
        }
        if (json_mode) {
            out << envelope(o.failed_check ? "error" : "ok", o.result, o.diagnostics).dump() << "\n";
        } else {
            for (const std::string& line : o.text) out << line << "\n";
            for (const std::string& d : o.diagnostics) err << d << "\n";
        }
        return o.failed_check ? 1 : 0;
    } catch (const UsageError& e) {
        if (json_mode)
            out << envelope("error", Json(), {e.what()}).dump() << "\n";
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        if (json_mode)
            out << envelope("error", Json(), {e.what()}).dump() << "\n";
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace wittconics
