#include "waveset/cli.hpp"

#include "waveset/accumulate.hpp"
#include "waveset/classify.hpp"
#include "waveset/h2_enum.hpp"
#include "waveset/io.hpp"
#include "waveset/polygonal.hpp"
#include "waveset/tiling.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace waveset {

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

SetDocument load_set(const std::string& path) {
    Json j;
    try {
        j = Json::parse(read_input(path));
    } catch (const Json::parse_error& e) {
        throw parse_error(path + ": " + e.what());
    }
    return set_document_from_json(j);
}

int default_depth() {
    if (const char* env = std::getenv("WAVESET_DEPTH")) {
        int d = std::atoi(env);
        if (d >= 1) return d;
    }
    return 16;
}

Rational require_rational(const std::string& text, const std::string& what) {
    auto r = Rational::parse(text);
    if (!r) throw parse_error(what + ": malformed rational \"" + text + "\"");
    return *r;
}

int emit_verdict(const Verdict& v, const std::string& summary) {
    std::cout << to_json(v).dump(2) << "\n";
    std::cerr << summary << (v.passed ? ": pass" : ": FAIL") << "\n";
    return v.passed ? kExitPass : kExitFail;
}

int cmd_verify(const std::string& file, const std::string& space_name, bool mra, int depth) {
    SetDocument doc = load_set(file);
    Space space = space_name == "h2" ? Space::H2 : Space::L2;
    Verdict v = verify_wavelet(doc.set, space);
    if (mra) {
        if (space == Space::H2) throw parse_error("--mra applies to --space l2 only");
        if (v.passed) {
            Verdict m = verify_mra(doc.set, depth);
            v.reports.insert(v.reports.end(), m.reports.begin(), m.reports.end());
            v.passed = v.passed && m.passed;
            v.residual = m.residual;
            if (!m.passed && v.detail.empty()) v.detail = m.detail;
        } else {
            v.detail += " (MRA not checked: tiling failed)";
        }
    }
    return emit_verdict(v, "verify " + file);
}

int cmd_construct_polygonal(const std::string& file) {
    Json j;
    try {
        j = Json::parse(read_input(file));
    } catch (const Json::parse_error& e) {
        throw parse_error(file + ": " + e.what());
    }
    Polygonal p = polygonal_from_json(j);
    Verdict val = validate(p);
    if (!val.passed) {
        std::cout << to_json(val).dump(2) << "\n";
        std::cerr << "invalid polygonal: " << val.detail << "\n";
        return kExitFail;
    }
    SetDocument doc;
    doc.space = p.flavor == PolyFlavor::H2 ? Space::H2 : Space::L2;
    doc.set = build(p);
    doc.metadata = Json{{"source", "polygonal"}};
    std::cout << to_json(doc).dump(2) << "\n";
    return kExitPass;
}

FamilyId parse_family(const std::string& id, const std::string& params_csv) {
    static const std::pair<const char*, FamilyTag> tags[] = {
        {"n2", FamilyTag::N2},       {"kstv", FamilyTag::KSTV},
        {"ksuv", FamilyTag::KSUV},   {"ka", FamilyTag::KA},
        {"h2_4int", FamilyTag::H2_4INT}, {"h2_5int", FamilyTag::H2_5INT}};
    std::string lower;
    for (char c : id) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    FamilyId f{FamilyTag::KA, {}};
    bool found = false;
    for (const auto& [name, tag] : tags) {
        if (lower == name) {
            f.tag = tag;
            found = true;
        }
    }
    if (!found) throw parse_error("unknown family id \"" + id + "\"");
    std::stringstream ss(params_csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (!tok.empty()) f.params.push_back(require_rational(tok, "--params"));
    }
    return f;
}

int cmd_construct_family(const std::string& id, const std::string& params_csv) {
    FamilyId f = parse_family(id, params_csv);
    SetDocument doc;
    doc.space = family_space(f.tag);
    doc.set = build_family(f);
    Json params = Json::array();
    for (const auto& p : f.params) params.push_back(p.str());
    doc.metadata = Json{{"family", id}, {"params", params}};
    std::cout << to_json(doc).dump(2) << "\n";
    return kExitPass;
}

int cmd_classify(const std::string& file) {
    SetDocument doc = load_set(file);
    try {
        ClassificationData d = classify(doc.set);
        std::cout << to_json(d).dump(2) << "\n";
        return kExitPass;
    } catch (const not_classifiable& e) {
        Json j{{"passed", false}, {"error", "not-classifiable"}, {"reason", e.what()}};
        std::cout << j.dump(2) << "\n";
        std::cerr << "not classifiable: " << e.what() << "\n";
        return kExitFail;
    }
}

int cmd_enumerate(const std::string& case_name_str, long long r_max, long long s_max, bool csv) {
    CaseId c;
    if (case_name_str == "t1d1")
        c = CaseId::T1D1;
    else if (case_name_str == "t2d2")
        c = CaseId::T2D2;
    else if (case_name_str == "t2d1")
        c = CaseId::T2D1;
    else if (case_name_str == "t1d2")
        c = CaseId::T1D2;
    else
        throw parse_error("--case must be one of t1d1, t2d2, t2d1, t1d2");

    std::vector<EnumRow> rows = enumerate_case(c, r_max, s_max);
    if (csv) {
        std::cout << enumerate_csv_header() << "\n";
        for (const auto& row : rows) std::cout << enumerate_csv_row(c, row) << "\n";
    } else {
        Json arr = Json::array();
        for (const auto& row : rows) {
            Json e{{"case", case_name(c)}, {"r", row.r}, {"k", row.k}, {"s", row.s}, {"l", row.l}};
            e["intervals"] = to_json(row.set);
            arr.push_back(e);
        }
        std::cout << arr.dump(2) << "\n";
    }
    return kExitPass;
}

int cmd_equiv(const std::string& mode_name, const std::string& file_a, const std::string& file_b,
              const std::string& tol_text) {
    EquivMode mode;
    if (mode_name == "translation")
        mode = EquivMode::Translation;
    else if (mode_name == "dilation")
        mode = EquivMode::Dilation;
    else
        throw parse_error("--mode must be translation or dilation");
    Rational tol(0);
    if (!tol_text.empty()) tol = require_rational(tol_text, "--tolerance");
    SetDocument a = load_set(file_a);
    SetDocument b = load_set(file_b);
    Verdict v = check_equivalence(a.set, b.set, mode, tol);
    return emit_verdict(v, "equiv " + mode_name);
}

int cmd_accumulate(const std::string& id, int n, const std::string& eps_text, int depth,
                   bool run_verify) {
    SetDocument doc;
    doc.space = Space::L2;
    Json meta{{"family", id}};

    if (id == "wn" || id == "kn") {
        doc.set = build_base(id == "wn" ? BaseFamily::WN : BaseFamily::KN, n);
        meta["n"] = n;
        doc.metadata = meta;
        std::cout << to_json(doc).dump(2) << "\n";
        if (run_verify) {
            Verdict v = verify_wavelet(doc.set, Space::L2);
            std::cerr << "verify: " << (v.passed ? "pass" : "FAIL") << "\n";
            return v.passed ? kExitPass : kExitFail;
        }
        return kExitPass;
    }

    LazyId lid;
    if (id == "wne")
        lid = LazyId::WNE;
    else if (id == "kne")
        lid = LazyId::KNE;
    else if (id == "propbra")
        lid = LazyId::PROPBRA;
    else
        throw parse_error("--id must be one of wn, kn, wne, kne, propbra");

    Rational eps(0);
    if (lid != LazyId::PROPBRA) {
        if (eps_text.empty()) throw parse_error(id + " requires --eps");
        eps = require_rational(eps_text, "--eps");
        meta["n"] = n;
        meta["eps"] = eps.str();
    }
    LazyFamily fam = make_lazy(lid, n, eps);
    Truncation t = materialize(fam, depth);
    doc.set = t.set;
    meta["depth"] = depth;
    meta["tail"] = t.tail_bound.str();
    doc.metadata = meta;
    std::cout << to_json(doc).dump(2) << "\n";
    if (run_verify) {
        Verdict v = verify_truncated_set(t, Space::L2);
        std::cerr << "truncated verify: " << (v.passed ? "pass" : "FAIL")
                  << " (residual " << t.tail_bound.str() << ")\n";
        return v.passed ? kExitPass : kExitFail;
    }
    return kExitPass;
}

int cmd_export(const std::string& format, const std::string& file) {
    SetDocument doc = load_set(file);
    if (format == "json") {
        std::cout << to_json(doc).dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "lo,hi\n";
        for (const auto& iv : doc.set.intervals()) std::cout << iv.lo.str() << "," << iv.hi.str() << "\n";
    } else if (format == "plotdata") {
        std::cout << plotdata(doc);
    } else {
        throw parse_error("--format must be json, csv or plotdata");
    }
    return kExitPass;
}

}  // namespace

int run_cli(int argc, char** argv) {
    CLI::App app{"exact construction, verification and enumeration of wavelet sets"};
    app.require_subcommand(1);

    std::string file, space = "l2", family_id, params, case_name_str = "t1d1";
    std::string mode = "translation", file_b, tolerance, format = "json", acc_id, eps_text;
    bool mra = false, csv = false, run_verify = false;
    int depth = default_depth(), n = 2;
    long long r_max = 1, s_max = 4;

    auto* verify_cmd = app.add_subcommand("verify", "check the tiling conditions of a set");
    verify_cmd->add_option("--space", space)->check(CLI::IsMember({"l2", "h2"}))->required();
    verify_cmd->add_flag("--mra", mra);
    verify_cmd->add_option("--depth", depth);
    verify_cmd->add_option("file", file)->required();

    auto* construct = app.add_subcommand("construct", "build a set from a polygonal or a family");
    auto* cpoly = construct->add_subcommand("polygonal", "from a vertex-list JSON file");
    cpoly->add_option("file", file)->required();
    auto* cfam = construct->add_subcommand("family", "from a named parametric family");
    cfam->add_option("--id", family_id)->required();
    cfam->add_option("--params", params)->required();
    construct->require_subcommand(1);

    auto* classify_cmd = app.add_subcommand("classify", "recover classification data of a symmetric set");
    classify_cmd->add_option("file", file)->required();

    auto* enum_cmd = app.add_subcommand("enumerate", "list 3-interval Hardy-space sets of a case");
    enum_cmd->add_option("--case", case_name_str)->required();
    enum_cmd->add_option("--r-max", r_max)->required();
    enum_cmd->add_option("--s-max", s_max)->required();
    enum_cmd->add_flag("--csv", csv);

    auto* equiv_cmd = app.add_subcommand("equiv", "fiber-profile equivalence of two sets");
    equiv_cmd->add_option("--mode", mode)->required();
    equiv_cmd->add_option("--tolerance", tolerance);
    equiv_cmd->add_option("a", file)->required();
    equiv_cmd->add_option("b", file_b)->required();

    auto* acc_cmd = app.add_subcommand("accumulate", "families accumulating at the origin");
    acc_cmd->add_option("--id", acc_id)->required();
    acc_cmd->add_option("--n", n);
    acc_cmd->add_option("--eps", eps_text, "perturbation, rational");
    acc_cmd->add_option("--depth", depth);
    acc_cmd->add_flag("--verify", run_verify);

    auto* export_cmd = app.add_subcommand("export", "re-emit a set document");
    export_cmd->add_option("--format", format)->required();
    export_cmd->add_option("file", file)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            std::cout << app.help();
            return kExitPass;
        }
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (verify_cmd->parsed()) return cmd_verify(file, space, mra, depth);
        if (construct->parsed()) {
            if (cpoly->parsed()) return cmd_construct_polygonal(file);
            return cmd_construct_family(family_id, params);
        }
        if (classify_cmd->parsed()) return cmd_classify(file);
        if (enum_cmd->parsed()) return cmd_enumerate(case_name_str, r_max, s_max, csv);
        if (equiv_cmd->parsed()) return cmd_equiv(mode, file, file_b, tolerance);
        if (acc_cmd->parsed()) return cmd_accumulate(acc_id, n, eps_text, depth, run_verify);
        if (export_cmd->parsed()) return cmd_export(format, file);
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const not_classifiable& e) {
        std::cerr << "not classifiable: " << e.what() << "\n";
        return kExitFail;
    } catch (const not_wavelet_set& e) {
        Json j{{"passed", false}, {"error", e.what()}};
        std::cout << j.dump(2) << "\n";
        std::cerr << "not a wavelet set: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}

}  // namespace waveset
