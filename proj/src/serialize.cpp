#include "wittconics/serialize.hpp"

namespace wittconics {

std::string rat_str(const Rat& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

Json hyperfield_to_json(const FiniteHyperfield& H) {
    Json j;
    j["elements"] = H.elements;
    j["one"] = H.one;
    j["neg"] = H.neg;
    j["mul"] = H.mul;
    j["add"] = H.add;
    return j;
}

namespace {

[[noreturn]] void import_error(const std::string& where, const std::string& what) {
    throw std::invalid_argument("hyperfield import: " + what + " at " + where);
}

} // namespace

FiniteHyperfield hyperfield_from_json(const Json& j) {
    if (!j.is_object()) import_error("top level", "expected an object");
    for (const char* key : {"elements", "one", "neg", "mul", "add"})
        if (!j.contains(key)) import_error(key, "missing key");
    FiniteHyperfield H;
    try {
        H.elements = j["elements"].get<std::vector<std::string>>();
    } catch (const Json::exception&) {
        import_error("elements", "expected an array of strings");
    }
    if (!j["one"].is_number_unsigned()) import_error("one", "expected an index");
    H.one = j["one"].get<Elem>();
    try {
        H.neg = j["neg"].get<std::vector<Elem>>();
        H.mul = j["mul"].get<std::vector<std::vector<Elem>>>();
        H.add = j["add"].get<std::vector<std::vector<ElemSet>>>();
    } catch (const Json::exception& e) {
        import_error("tables", e.what());
    }
    for (auto& row : H.add)
        for (auto& s : row) std::sort(s.begin(), s.end());
    try {
        H.validate();
    } catch (const std::invalid_argument& e) {
        import_error("validation", e.what());
    }
    return H;
}

Json axiom_report_to_json(const AxiomReport& report) {
    Json violations = Json::array();
    for (const auto& v : report.violations) violations.push_back({{"axiom", v.axiom}, {"witness", v.witness}});
    return Json{{"ok", report.ok()}, {"violations", violations}};
}

Json ramification_to_json(const RamificationSet& ram) {
    Json out = Json::array();
    for (const Place& v : ram.places) out.push_back(v.str());
    return out;
}

namespace {

RamificationSet ramification_from_json(const Json& j) {
    RamificationSet ram;
    for (const auto& entry : j) {
        std::string s = entry.get<std::string>();
        ram.places.push_back(s == "inf" ? Place::at_infinity() : Place::finite(parse_integer(s)));
    }
    return ram;
}

Json int_pair_to_json(const std::array<Int, 2>& w) {
    return Json::array({w[0].str(), w[1].str()});
}

std::array<Int, 2> int_pair_from_json(const Json& j) {
    return {parse_integer(j.at(0).get<std::string>()), parse_integer(j.at(1).get<std::string>())};
}

} // namespace

Json point_to_json(const RationalPoint& pt) {
    return Json{{"x", rat_str(pt.x)}, {"y", rat_str(pt.y)}};
}

Json certificate_to_json(const Certificate& cert) {
    Json j;
    j["kind"] = cert.kind();
    j["inputs"] = Json{{"a", rat_str(cert.inputs[0])},
                       {"b", rat_str(cert.inputs[1])},
                       {"c", rat_str(cert.inputs[2])},
                       {"d", rat_str(cert.inputs[3])}};
    Json data = Json::object();
    if (const auto* oc = std::get_if<OrderingCountCert>(&cert.data)) {
        data["count_first"] = std::to_string(oc->count_first);
        data["count_second"] = std::to_string(oc->count_second);
    } else if (const auto* sn = std::get_if<SplitVsNonsplitCert>(&cert.data)) {
        data["ram_first"] = ramification_to_json(sn->ram_first);
        data["ram_second"] = ramification_to_json(sn->ram_second);
    } else if (const auto* qo = std::get_if<QuaternionObstructionCert>(&cert.data)) {
        data["witness_identity"] = int_pair_to_json(qo->witness_identity);
        data["witness_swap"] = int_pair_to_json(qo->witness_swap);
        data["ram_witness_identity"] = ramification_to_json(qo->ram_witness_identity);
        data["ram_witness_swap"] = ramification_to_json(qo->ram_witness_swap);
        data["ram_first"] = ramification_to_json(qo->ram_first);
        data["ram_second"] = ramification_to_json(qo->ram_second);
    }
    j["data"] = data;
    return j;
}

Certificate certificate_from_json(const Json& j) {
    Certificate cert;
    const Json& in = j.at("inputs");
    cert.inputs = {parse_rational(in.at("a").get<std::string>()), parse_rational(in.at("b").get<std::string>()),
                   parse_rational(in.at("c").get<std::string>()), parse_rational(in.at("d").get<std::string>())};
    const std::string kind = j.at("kind").get<std::string>();
    const Json& data = j.at("data");
    if (kind == "ordering_count") {
        cert.data = OrderingCountCert{static_cast<int>(to_ll(parse_integer(data.at("count_first").get<std::string>()))),
                                      static_cast<int>(to_ll(parse_integer(data.at("count_second").get<std::string>())))};
    } else if (kind == "split_vs_nonsplit") {
        cert.data = SplitVsNonsplitCert{ramification_from_json(data.at("ram_first")),
                                        ramification_from_json(data.at("ram_second"))};
    } else if (kind == "quaternion_obstruction") {
        cert.data = QuaternionObstructionCert{
            int_pair_from_json(data.at("witness_identity")), int_pair_from_json(data.at("witness_swap")),
            ramification_from_json(data.at("ram_witness_identity")),
            ramification_from_json(data.at("ram_witness_swap")), ramification_from_json(data.at("ram_first")),
            ramification_from_json(data.at("ram_second"))};
    } else if (kind == "indistinguishable") {
        cert.data = IndistinguishableCert{};
    } else {
        throw std::invalid_argument("certificate import: unknown kind '" + kind + "'");
    }
    return cert;
}

Json witness_set_to_json(const WitnessSet& ws) {
    Json fields = Json::array();
    for (const ConicField& f : ws.fields)
        fields.push_back({{"a", f.a.value().str()}, {"b", f.b.value().str()}});
    Json matrix = Json::array();
    for (const auto& row : ws.certificates) {
        Json jrow = Json::array();
        for (const auto& cell : row) jrow.push_back(cell ? certificate_to_json(*cell) : Json());
        matrix.push_back(jrow);
    }
    return Json{{"fields", fields}, {"certificates", matrix}};
}

Json class_group_to_json(const ClassGroupData& data) {
    Json reps = Json::array();
    for (const auto& f : data.representatives)
        reps.push_back(Json::array({f.a.str(), f.b.str(), f.c.str()}));
    return Json{{"order", data.order.str()}, {"two_rank", data.two_rank}, {"representatives", reps}};
}

} // namespace wittconics
