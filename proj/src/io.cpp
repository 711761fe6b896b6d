#include "waveset/io.hpp"

namespace waveset {

Rational parse_rational(const Json& j, const std::string& where) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) {
        auto r = Rational::parse(j.get<std::string>());
        if (r) return *r;
    }
    throw parse_error("expected rational \"p/q\" at " + where + ", got " + j.dump());
}

Json to_json(const Rational& r) { return r.str(); }

Json to_json(const IntervalSet& s) {
    Json arr = Json::array();
    for (const auto& iv : s.intervals()) arr.push_back(Json::array({iv.lo.str(), iv.hi.str()}));
    return arr;
}

Json to_json(const SetDocument& doc) {
    Json j;
    j["space"] = doc.space == Space::L2 ? "L2" : "H2";
    j["intervals"] = to_json(doc.set);
    if (!doc.metadata.is_null()) j["metadata"] = doc.metadata;
    return j;
}

SetDocument set_document_from_json(const Json& j) {
    if (!j.is_object()) throw parse_error("set document must be an object");
    SetDocument doc;
    std::string space = j.value("space", "L2");
    if (space == "L2")
        doc.space = Space::L2;
    else if (space == "H2")
        doc.space = Space::H2;
    else
        throw parse_error("space must be \"L2\" or \"H2\"");
    if (!j.contains("intervals") || !j["intervals"].is_array())
        throw parse_error("set document needs an \"intervals\" array");
    std::vector<std::pair<Rational, Rational>> raw;
    std::size_t idx = 0;
    for (const auto& e : j["intervals"]) {
        if (!e.is_array() || e.size() != 2)
            throw parse_error("intervals[" + std::to_string(idx) + "] must be [lo, hi]");
        Rational lo = parse_rational(e[0], "intervals[" + std::to_string(idx) + "][0]");
        Rational hi = parse_rational(e[1], "intervals[" + std::to_string(idx) + "][1]");
        if (lo >= hi)
            throw parse_error("intervals[" + std::to_string(idx) + "] needs lo < hi");
        raw.emplace_back(std::move(lo), std::move(hi));
        ++idx;
    }
    doc.set = IntervalSet::normalize(std::move(raw));
    if (j.contains("metadata")) doc.metadata = j["metadata"];
    return doc;
}

Json to_json(const Polygonal& p) {
    Json j;
    switch (p.flavor) {
        case PolyFlavor::L2: j["flavor"] = "L2"; break;
        case PolyFlavor::H2: j["flavor"] = "H2"; break;
        case PolyFlavor::Minus: j["flavor"] = "MINUS"; break;
    }
    Json vs = Json::array();
    for (const auto& v : p.vertices) {
        Json e;
        e["lambda"] = v.lambda;
        e["m"] = v.m.str();
        vs.push_back(e);
    }
    j["vertices"] = vs;
    return j;
}

Polygonal polygonal_from_json(const Json& j) {
    if (!j.is_object()) throw parse_error("polygonal must be an object");
    Polygonal p;
    std::string flavor = j.value("flavor", "");
    if (flavor == "L2")
        p.flavor = PolyFlavor::L2;
    else if (flavor == "H2")
        p.flavor = PolyFlavor::H2;
    else if (flavor == "MINUS")
        p.flavor = PolyFlavor::Minus;
    else
        throw parse_error("flavor must be \"L2\", \"H2\" or \"MINUS\"");
    if (!j.contains("vertices") || !j["vertices"].is_array() || j["vertices"].empty())
        throw parse_error("polygonal needs a nonempty \"vertices\" array");
    for (const auto& e : j["vertices"]) {
        if (!e.is_object() || !e.contains("lambda") || !e.contains("m"))
            throw parse_error("each vertex needs \"lambda\" and \"m\"");
        LatticeVertex v;
        v.lambda = e["lambda"].get<long long>();
        Rational m = parse_rational(e["m"], "vertex m");
        if (!m.is_integer() || m.is_negative()) throw parse_error("vertex m must be a nonnegative integer");
        v.m = m.num();
        p.vertices.push_back(std::move(v));
    }
    return p;
}

Json to_json(const ClassificationData& d) {
    Json j;
    j["n"] = d.n;
    j["epsilon"] = d.epsilon;
    j["tau"] = d.tau;
    Json a = Json::array();
    for (const auto& x : d.a) a.push_back(x.str());
    j["a"] = a;
    Json m = Json::array();
    for (const auto& x : d.m) m.push_back(x.str());
    j["m"] = m;
    j["lambda"] = d.lambda;
    return j;
}

ClassificationData classification_from_json(const Json& j) {
    if (!j.is_object()) throw parse_error("classification data must be an object");
    ClassificationData d;
    d.n = j.at("n").get<int>();
    d.epsilon = j.at("epsilon").get<std::vector<int>>();
    d.tau = j.value("tau", std::vector<int>{});
    for (const auto& e : j.at("a")) d.a.push_back(parse_rational(e, "a"));
    for (const auto& e : j.at("m")) {
        Rational m = parse_rational(e, "m");
        if (!m.is_integer() || m.is_negative()) throw parse_error("m entries must be nonnegative integers");
        d.m.push_back(m.num());
    }
    d.lambda = j.value("lambda", std::vector<long long>{});
    return d;
}

Json to_json(const Verdict& v) {
    Json j;
    j["passed"] = v.passed;
    if (v.residual) j["residual"] = v.residual->str();
    if (!v.detail.empty()) j["detail"] = v.detail;
    Json reports = Json::array();
    for (const auto& r : v.reports) {
        Json e;
        e["condition"] = condition_name(r.tag);
        e["passed"] = r.passed;
        if (!r.overlap.empty()) e["overlap"] = to_json(r.overlap);
        if (!r.uncovered.empty()) e["uncovered"] = to_json(r.uncovered);
        reports.push_back(e);
    }
    j["conditions"] = reports;
    return j;
}

Json to_json(const H2Certificate& c, std::size_t interval_count) {
    auto chain = [&](const std::vector<std::size_t>& order) {
        Json arr = Json::array();
        arr.push_back(1);  // chains start at the first interval
        for (auto i : order) arr.push_back(i + 1);
        return arr;
    };
    Json j;
    j["intervals"] = interval_count;
    j["translation_order"] = chain(c.rho);
    Json ks = Json::array();
    ks.push_back(0);
    for (const auto& k : c.k_shifts) ks.push_back(k.str());
    j["translation_shifts"] = ks;
    j["dilation_order"] = chain(c.sigma);
    Json rs = Json::array();
    rs.push_back(0);
    for (auto e : c.r_exponents) rs.push_back(e);
    j["dilation_exponents"] = rs;
    return j;
}

std::string enumerate_csv_header() { return "case,r,k,s,l,p1,q1,p2,q2,p3,q3"; }

std::string enumerate_csv_row(CaseId c, const EnumRow& row) {
    H2Endpoints e = case_endpoints(c, row.r, row.k, row.s, row.l);
    std::string s = case_name(c);
    for (long long v : {row.r, row.k, row.s, row.l}) s += "," + std::to_string(v);
    for (const Rational* r : {&e.p1, &e.q1, &e.p2, &e.q2, &e.p3, &e.q3}) s += "," + r->str();
    return s;
}

std::string plotdata(const SetDocument& doc) {
    std::string tag = doc.space == Space::L2 ? "L2" : "H2";
    if (doc.metadata.is_object() && doc.metadata.contains("family"))
        tag = doc.metadata["family"].get<std::string>();
    std::string out;
    for (const auto& iv : doc.set.intervals())
        out += iv.lo.str() + " " + iv.hi.str() + " " + tag + "\n";
    return out;
}

}  // namespace waveset
