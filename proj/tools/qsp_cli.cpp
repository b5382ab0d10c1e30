#include "CLI11.hpp"
#include "json.hpp"
#include "qsp/spherical.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>

using json = nlohmann::json;
using namespace qsp;

namespace {

enum Exit { kPass = 0, kCheckFailed = 1, kInputError = 2, kResourceCap = 3 };

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string config, out;
    int root_order = 2;
    int weight_box = 2;
    int dim_cap = 2000;
    std::vector<std::string> c, s;
    std::vector<std::vector<int>> weights;
};

json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError(path + ": " + e.what());
    }
}

IMat to_imat(const json& j) { return j.get<IMat>(); }

// black and tau are 1-based in the file
SatakeDatum satake_from_json(const json& j) {
    try {
        RootDatum rd;
        if (j.contains("type")) {
            std::string t = j.at("type").get<std::string>();
            if (t.size() != 1) throw InputError("type must be a single letter");
            rd = RootDatum::of_type(t[0], j.at("rank").get<int>());
        } else {
            rd = RootDatum(to_imat(j.at("cartan")), j.at("symmetrizer").get<IVec>());
        }
        std::vector<int> black;
        for (int b : j.value("black", std::vector<int>{})) black.push_back(b - 1);
        IVec tau;
        if (j.contains("tau"))
            for (int t : j.at("tau").get<IVec>()) tau.push_back(t - 1);
        else
            for (int k = 0; k < rd.n; ++k) tau.push_back(k);
        return SatakeDatum(rd, black, tau);
    } catch (const json::exception& e) {
        throw InputError(std::string("config: ") + e.what());
    }
}

// literals "i=expr" with 1-based i
std::map<int, std::string> literal_map(const std::vector<std::string>& items) {
    std::map<int, std::string> out;
    for (const auto& it : items) {
        auto eq = it.find('=');
        if (eq == std::string::npos) throw InputError("parameter literal '" + it + "' is not of the form i=expr");
        out[std::stoi(it.substr(0, eq)) - 1] = it.substr(eq + 1);
    }
    return out;
}

std::map<int, std::string> literal_map(const json& j) {
    std::map<int, std::string> out;
    for (const auto& [k, v] : j.items()) out[std::stoi(k) - 1] = v.get<std::string>();
    return out;
}

Parameter parameter_from(const SatakeDatum& sd, const json& cfg, const Options& o) {
    std::map<int, std::string> c, s;
    bool distinguished = false;
    if (cfg.contains("c")) {
        if (cfg["c"].is_string() && cfg["c"] == "distinguished")
            distinguished = true;
        else
            c = literal_map(cfg["c"]);
    }
    if (cfg.contains("s")) s = literal_map(cfg["s"]);
    for (auto& [k, v] : literal_map(o.c)) c[k] = v;
    for (auto& [k, v] : literal_map(o.s)) s[k] = v;
    if (c.empty() && (distinguished || o.c.empty())) {
        Parameter p = distinguished_parameter(sd, o.root_order);
        for (const auto& [i, lit] : s) p.s[i] = parse_scalar(lit, o.root_order);
        return p;
    }
    return parse_parameter(sd, c, s, o.root_order);
}

json vec_json(const IVec& v) { return json(v); }

json qvec_json(const QVec& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(x.get_str());
    return a;
}

json sparse_json(const Mat& m) {
    json a = json::array();
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c)
            if (!m.at(r, c).is_zero()) a.push_back({{"row", r + 1}, {"col", c + 1}, {"value", m.at(r, c).str()}});
    return a;
}

json character_json(const SatakeDatum& sd, const Character& chi) {
    json l = json::object(), values = json::object();
    for (const auto& [i, li] : chi.l) l[std::to_string(i + 1)] = li;
    for (int i : sd.white) values["B_" + std::to_string(i + 1)] = chi.value[i].str();
    return {{"lambda", vec_json(chi.lambda)}, {"l", l}, {"values", values}};
}

json restriction_json(const SatakeDatum& sd, const TorusFunction& t, bool invariant) {
    json values = json::array();
    for (const auto& [key, c] : t.terms) values.push_back({{"key", qvec_json(key)}, {"coeff", c.str()}});
    return {{"basis", sd.ytheta}, {"values", values}, {"invariant", invariant}};
}

std::vector<IVec> requested_weights(const SatakeDatum& sd, const Options& o) {
    std::vector<IVec> out;
    for (const auto& w : o.weights) {
        if (static_cast<int>(w.size()) != sd.rd.n) throw InputError("weight has wrong length");
        if (!is_dominant(w)) throw InputError("weight is not dominant");
        out.push_back(w);
    }
    if (out.empty()) out = dominant_weights(sd.rd.n, o.weight_box, sd.black_set);
    return out;
}

void emit(const json& report, const Options& o) {
    std::string text = report.dump(2) + "\n";
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(o.out);
    if (!f) throw InputError("cannot write '" + o.out + "'");
    f << text;
}

int cmd_validate(const Options& o) {
    auto sd = satake_from_json(read_json(o.config));
    auto r = sd.validate();
    json rep{{"valid", r.ok}, {"failures", r.failures}};
    if (r.ok) {
        rep["white"] = json::array();
        for (int i : sd.white) rep["white"].push_back(i + 1);
        rep["ytheta"] = sd.ytheta;
        json tau0 = json::array();
        for (int t : sd.tau0) tau0.push_back(t + 1);
        rep["tau0"] = tau0;
    }
    emit(rep, o);
    return r.ok ? kPass : kCheckFailed;
}

SatakeDatum checked_satake(const json& cfg) {
    auto sd = satake_from_json(cfg);
    auto r = sd.validate();
    if (!r.ok) throw InputError("invalid Satake diagram: " + (r.failures.empty() ? "" : r.failures[0]));
    return sd;
}

int cmd_module(const Options& o) {
    json cfg = read_json(o.config);
    auto sd = checked_satake(cfg);
    json mods = json::array();
    for (const auto& lam : requested_weights(sd, o)) {
        auto M = build_simple(sd.rd, lam, o.root_order, o.dim_cap);
        json m{{"lambda", lam}, {"dim", M.dim()}, {"root_order", o.root_order}};
        m["weights"] = M.wt;
        for (int i = 0; i < sd.rd.n; ++i) {
            std::string k = std::to_string(i + 1);
            m["E_" + k] = sparse_json(M.E[i]);
            m["F_" + k] = sparse_json(M.F[i]);
            m["K_" + k] = sparse_json(M.Ki(i));
        }
        mods.push_back(m);
    }
    emit({{"modules", mods}}, o);
    return kPass;
}

json scan_json(const SatakeDatum& sd, const ScanReport& r) {
    json per = json::array();
    for (const auto& [lam, lines] : r.per_weight) {
        json chars = json::array();
        for (const auto& l : lines) chars.push_back(character_json(sd, l.chi));
        per.push_back({{"lambda", lam}, {"characters", chars}});
    }
    return {{"per_weight", per},
            {"distinct", r.distinct.size()},
            {"nontrivial", r.nontrivial},
            {"max_multiplicity", r.max_multiplicity},
            {"shape_ok", r.shape_ok},
            {"warnings", r.warnings}};
}

int cmd_characters(const Options& o) {
    json cfg = read_json(o.config);
    auto sd = checked_satake(cfg);
    auto p = parameter_from(sd, cfg, o);
    auto r = hermitian_scan(sd, p, requested_weights(sd, o), o.root_order, o.dim_cap);
    json rep = scan_json(sd, r);
    rep["parameter"] = param_str(sd, p);
    emit(rep, o);
    return r.max_multiplicity <= 1 ? kPass : kCheckFailed;
}

int cmd_invariance(const Options& o) {
    json cfg = read_json(o.config);
    auto sd = checked_satake(cfg);
    auto p = parameter_from(sd, cfg, o);
    if (!classify(sd, p, o.root_order).balanced) throw InputError("invariance checks need a balanced parameter");
    bool ok = true;
    json rows = json::array();
    for (const auto& lam : requested_weights(sd, o)) {
        auto M = build_simple(sd.rd, lam, o.root_order, o.dim_cap);
        auto ls = find_spherical_lines(sd, p, M);
        auto words = evaluation_words(sd.rd, 1, 8, 1);
        for (const auto& line : ls.lines) {
            json row{{"character", character_json(sd, line.chi)}};
            MatrixCoefficient c{&M, find_akin_dual(sd, p, M, line.chi), line.v};
            auto t = restrict_torus(sd, c);
            auto inv = is_weyl_invariant(sd, t);
            row["restriction"] = restriction_json(sd, t, inv.ok);
            if (!inv.ok) row["certificate"] = {{"generator", inv.generator + 1}, {"key", qvec_json(inv.key)}};
            json wz = json::object();
            MatrixCoefficient cs{&M, find_dual_spherical(sd, p, M, line.chi), line.v};
            for (int i : sd.white) {
                if (sd.tau[i] < i) continue;
                auto a = wz_character_check(sd, p, i, M, line);
                auto b = wz_spherical_check(sd, p, i, cs, words);
                wz["r_" + std::to_string(i + 1)] = {{"character", a.ok}, {"spherical", b.ok}};
                ok = ok && a.ok && b.ok;
            }
            row["wz"] = wz;
            ok = ok && inv.ok;
            rows.push_back(row);
        }
    }
    emit({{"parameter", param_str(sd, p)}, {"results", rows}, {"pass", ok}}, o);
    return ok ? kPass : kCheckFailed;
}

FieldElem qn(int k) { return FieldElem::mono(Gauss(1), k, 1); }

json example_aiii_sl3(const FieldElem& c1, const FieldElem& c2, bool& ok) {
    auto sd = rank_one_diagram("AIII11").sd;
    auto M = build_simple(sd.rd, {1, 0});
    Parameter p = zero_parameter(sd);
    p.c = {c1, c2};
    auto line = find_spherical_lines(sd, p, M).lines.at(0);
    auto t = restrict_torus(sd, {&M, find_dual_spherical(sd, p, M, line.chi), line.v});
    Parameter pb = zero_parameter(sd);
    pb.c = {c1, c1};
    auto lb = find_spherical_lines(sd, pb, M).lines.at(0);
    auto tb = restrict_torus(sd, {&M, find_akin_dual(sd, pb, M, lb.chi), lb.v});
    json rows = json::array();
    for (int n = -4; n <= 4; ++n) {
        FieldElem a = t.at({n}), b = tb.at({n});
        FieldElem ea = qn(-1) * c1.inv() * c2 * qn(-n) + qn(n), eb = qn(n) + qn(-n);
        ok = ok && a == ea && b == eb;
        rows.push_back({{"n", n}, {"value", a.str()}, {"match", a == ea}, {"value_chi", b.str()}, {"match_chi", b == eb}});
    }
    return {{"name", "examples-aiii-sl3"}, {"c", {c1.str(), c2.str()}}, {"restriction", restriction_json(sd, t, is_weyl_invariant(sd, t).ok)},
            {"table", rows}};
}

json example_aiii3_sl4(bool& ok) {
    SatakeDatum sd(RootDatum::of_type('A', 3), {}, {2, 1, 0});
    Parameter p = zero_parameter(sd);
    p.c = {FieldElem(1), qn(-1), FieldElem(1)};
    auto M = build_simple(sd.rd, {0, 1, 0});
    auto line = find_spherical_lines(sd, p, M).lines.at(0);
    auto t = restrict_torus(sd, {&M, find_akin_dual(sd, p, M, line.chi), line.v});
    bool inv = is_weyl_invariant(sd, t).ok;
    ok = ok && inv;
    json rows = json::array();
    for (int m = -3; m <= 3; ++m)
        for (int n = -3; n <= 3; ++n) {
            FieldElem a = t.at({m, n});
            bool match = a == qn(n) + qn(2 * m - n) + qn(n - 2 * m) + qn(-n);
            ok = ok && match;
            rows.push_back({{"m", m}, {"n", n}, {"value", a.str()}, {"match", match}});
        }
    return {{"name", "examples-aiii3-sl4"}, {"restriction", restriction_json(sd, t, inv)}, {"table", rows}};
}

int cmd_examples(const std::vector<std::string>& names, const Options& o) {
    bool ok = true;
    json out = json::array();
    std::map<int, std::string> c = literal_map(o.c);
    FieldElem c1 = parse_scalar(c.count(0) ? c[0] : "2", 1), c2 = parse_scalar(c.count(1) ? c[1] : "3", 1);
    std::vector<std::string> todo = names.empty() ? std::vector<std::string>{"aiii-sl3", "aiii3-sl4"} : names;
    for (const auto& n : todo) {
        if (n == "aiii-sl3" || n == "examples-aiii-sl3")
            out.push_back(example_aiii_sl3(c1, c2, ok));
        else if (n == "aiii3-sl4" || n == "examples-aiii3-sl4")
            out.push_back(example_aiii3_sl4(ok));
        else
            throw InputError("unknown example '" + n + "'");
    }
    emit({{"examples", out}, {"pass", ok}}, o);
    return ok ? kPass : kCheckFailed;
}

struct Table1Row {
    std::string label;
    int n;
    std::array<long, 4> expected;
};

std::vector<Table1Row> table1_rows() {
    auto bii = [](long n) { return std::array<long, 4>{4, -2 * n + 2, 2 * (2 * n - 3), 2 * (2 * n - 1)}; };
    auto cii = [](long n) { return std::array<long, 4>{2, -2 * n + 4, 2 * n - 3, 2 * n - 1}; };
    auto dii = [](long n) { return std::array<long, 4>{2, -2 * n + 4, 2 * n - 4, 2 * n - 2}; };
    return {{"AI1", 0, {2, 0, 0, 2}},   {"AII3", 0, {2, -2, 2, 4}}, {"AIII11", 0, {2, 0, 0, 2}},
            {"AIV", 3, {2, -1, 1, 3}},  {"BII", 2, bii(2)},         {"BII", 3, bii(3)},
            {"CII", 3, cii(3)},         {"CII", 4, cii(4)},         {"DII", 4, dii(4)},
            {"DII", 5, dii(5)},         {"FII", 0, {2, -6, 9, 11}}};
}

int cmd_table1(const Options& o) {
    bool ok = true;
    json rows = json::array();
    for (const auto& r : table1_rows()) {
        auto got = table1_constants(r.label, r.n);
        bool match = got == r.expected;
        ok = ok && match;
        rows.push_back({{"type", r.label}, {"n", r.n}, {"computed", got}, {"expected", r.expected}, {"match", match}});
    }
    emit({{"rows", rows}, {"pass", ok}}, o);
    return ok ? kPass : kCheckFailed;
}

// job file: {"satake": {...} | "path", "c": {...}, "s": {...}, "weights": [...], "checks": [...], "root_order": d}
int cmd_run(const std::string& job, Options o) {
    if (job == "table1") return cmd_table1(o);
    if (job.rfind("examples-", 0) == 0) return cmd_examples({job}, o);
    json j = read_json(job);
    std::vector<std::string> checks = j.value("checks", std::vector<std::string>{});
    static const std::set<std::string> known{"characters", "quasik", "spherical", "table1", "examples"};
    for (const auto& c : checks)
        if (!known.count(c)) throw InputError("unknown check '" + c + "'");
    o.root_order = j.value("root_order", o.root_order);
    if (j.contains("weights")) o.weights = j["weights"].get<std::vector<std::vector<int>>>();
    if (j.contains("out")) o.out = j["out"].get<std::string>();
    json report{{"checks", json::array()}};
    bool ok = true;
    std::string out = o.out;
    o.out = "/dev/null";
    json cfg;
    if (j.contains("satake")) cfg = j["satake"].is_string() ? read_json(j["satake"].get<std::string>()) : j["satake"];
    for (const auto& k : {"c", "s"})
        if (j.contains(k)) cfg[k] = j[k];
    for (const auto& c : checks) {
        int rc = kPass;
        std::string tmp = std::filesystem::temp_directory_path() / ("qsp_job_" + c + ".json");
        Options sub = o;
        sub.out = tmp;
        if (c == "table1" || c == "examples") {
            rc = c == "table1" ? cmd_table1(sub) : cmd_examples({}, sub);
        } else {
            std::string cpath = std::filesystem::temp_directory_path() / "qsp_job_config.json";
            std::ofstream(cpath) << cfg.dump();
            sub.config = cpath;
            rc = c == "characters" ? cmd_characters(sub) : cmd_invariance(sub);
        }
        report["checks"].push_back({{"check", c}, {"pass", rc == kPass}, {"report", read_json(tmp)}});
        ok = ok && rc == kPass;
    }
    o.out = out;
    emit(report, o);
    return ok ? kPass : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spherical functions for quantum symmetric pairs"};
    app.require_subcommand(1);
    Options o;
    std::vector<std::string> names;
    std::string job;

    auto common = [&](CLI::App* sub, bool config) {
        if (config) sub->add_option("--config", o.config, "Satake diagram JSON")->required()->check(CLI::ExistingFile);
        sub->add_option("--out", o.out, "output file (default stdout)");
        sub->add_option("--root-order", o.root_order, "d with v = q^(1/d)")->check(CLI::PositiveNumber);
        sub->add_option("--weight-box", o.weight_box, "bound on the sum of weight coordinates");
        sub->add_option("--dim-cap", o.dim_cap, "largest module dimension")->check(CLI::PositiveNumber);
        sub->add_option("--c", o.c, "parameter c_i as i=expr");
        sub->add_option("--s", o.s, "parameter s_i as i=expr");
        sub->add_option("--weight", o.weights, "dominant weight, comma separated")->delimiter(',')->allow_extra_args(false);
    };
    auto* v = app.add_subcommand("validate", "check a Satake diagram");
    common(v, true);
    auto* m = app.add_subcommand("module", "dump simple modules");
    common(m, true);
    auto* ch = app.add_subcommand("characters", "scan for one-dimensional submodules");
    common(ch, true);
    auto* in = app.add_subcommand("invariance", "Weyl and WZ invariance of spherical functions");
    common(in, true);
    auto* ex = app.add_subcommand("examples", "reproduce the worked examples");
    common(ex, false);
    ex->add_option("names", names, "aiii-sl3, aiii3-sl4");
    auto* t1 = app.add_subcommand("table1", "rank-one constants");
    common(t1, false);
    auto* run = app.add_subcommand("run", "run a job file or a named job");
    common(run, false);
    run->add_option("job", job, "job JSON or table1 / examples-*")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*v) return cmd_validate(o);
        if (*m) return cmd_module(o);
        if (*ch) return cmd_characters(o);
        if (*in) return cmd_invariance(o);
        if (*ex) return cmd_examples(names, o);
        if (*t1) return cmd_table1(o);
        if (*run) return cmd_run(job, o);
    } catch (const DimensionCapExceeded& e) {
        std::cerr << "error[dim-cap]: " << e.what() << "\n";
        return kResourceCap;
    } catch (const NotRepresentable& e) {
        std::cerr << "error[root-order]: " << e.what() << "\n";
        return kInputError;
    } catch (const ParseError& e) {
        std::cerr << "error[parameter]: " << e.what() << "\n";
        return kInputError;
    } catch (const ParameterError& e) {
        std::cerr << "error[parameter]: " << e.what() << "\n";
        return kInputError;
    } catch (const RootDataError& e) {
        std::cerr << "error[config]: " << e.what() << "\n";
        return kInputError;
    } catch (const InputError& e) {
        std::cerr << "error[config]: " << e.what() << "\n";
        return kInputError;
    } catch (const ModuleError& e) {
        std::cerr << "error[module]: " << e.what() << "\n";
        return kCheckFailed;
    }
    return kPass;
}
