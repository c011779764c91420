// Copyright 2026 The entdist Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "entdist/convexroof.hpp"
#include "entdist/cvmode.hpp"
#include "entdist/io.hpp"
#include "entdist/locc.hpp"
#include "entdist/luequiv.hpp"

namespace entdist::cli {

namespace {

using json = nlohmann::ordered_json;

std::string trim(std::string s) {
    const auto ws = [](unsigned char c) { return std::isspace(c) != 0; };
    s.erase(s.begin(), std::find_if_not(s.begin(), s.end(), ws));
    s.erase(std::find_if_not(s.rbegin(), s.rend(), ws).base(), s.end());
    return s;
}

std::vector<std::string> split(const std::string &s, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, sep)) {
        out.push_back(trim(item));
    }
    return out;
}

double parse_number(const std::string &text) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception &) {
        throw Error("cannot parse number '" + text + "'");
    }
    if (used != text.size() || !std::isfinite(v)) {
        throw Error("cannot parse number '" + text + "'");
    }
    return v;
}

cplx parse_complex(const std::string &text) {
    const auto parts = split(text, ',');
    if (parts.size() == 1) {
        return {parse_number(parts[0]), 0.0};
    }
    if (parts.size() != 2) {
        throw Error("expected re,im but got '" + text + "'");
    }
    return {parse_number(parts[0]), parse_number(parts[1])};
}

json vec3_json(const Vec3 &v) {
    return json::array({v.x(), v.y(), v.z()});
}

json matrix_json(const Eigen::MatrixXd &m) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            row.push_back(m(r, c));
        }
        rows.push_back(row);
    }
    return rows;
}

json frame_json(const UnitVectorFrame &f) {
    json out = json::array();
    for (const Vec3 &v : f.vectors()) {
        out.push_back(vec3_json(v));
    }
    return out;
}

json family_json(const FamilySpec &spec) {
    return {{"kind", to_string(spec.kind)},
            {"num_qubits", spec.num_qubits},
            {"params", spec.params}};
}

json report_header(const std::string &command) {
    return {{"schema_version", io::kSchemaVersion}, {"command", command}};
}

class Csv {
  public:
    explicit Csv(const std::vector<std::string> &header) {
        for (std::size_t i = 0; i < header.size(); ++i) {
            text_ += (i ? "," : "") + header[i];
        }
        text_ += "\n";
    }
    void row(const std::vector<double> &values) {
        for (std::size_t i = 0; i < values.size(); ++i) {
            text_ += (i ? "," : "") + io::format_double(values[i]);
        }
        text_ += "\n";
    }
    [[nodiscard]] const std::string &str() const { return text_; }

  private:
    std::string text_;
};

/// Where a pure state comes from: a file or a family description.
struct StateSource {
    std::string state_path;
    std::string spec;
    std::string family;
    int num_qubits = 0;
    std::string theta;
    std::string phi;
    std::string params;

    void add_options(CLI::App *cmd) {
        cmd->add_option("--state", state_path, "state JSON file");
        cmd->add_option("--spec", spec, "inline family spec kind:M:p1,p2,...");
        cmd->add_option("--family", family, "ghzl, brs or w");
        cmd->add_option("--M", num_qubits, "number of qubits");
        cmd->add_option("--theta", theta, "ghzl angle");
        cmd->add_option("--phi", phi, "brs phase");
        cmd->add_option("--params", params, "comma-separated family parameters");
    }

    /// `sweeping` lets a one-parameter family omit its parameter.
    [[nodiscard]] std::optional<FamilySpec> family_spec(bool sweeping = false) const {
        if (!spec.empty()) {
            return parse_family_spec(spec);
        }
        if (family.empty()) {
            return std::nullopt;
        }
        FamilySpec fs;
        fs.kind = family_kind_from_string(family);
        fs.num_qubits = num_qubits;
        if (!params.empty()) {
            for (const auto &p : split(params, ',')) {
                fs.params.push_back(parse_angle(p));
            }
        } else if (fs.kind == FamilyKind::GHZL && !theta.empty()) {
            fs.params = {parse_angle(theta)};
        } else if (fs.kind == FamilyKind::BRS && !phi.empty()) {
            fs.params = {parse_angle(phi)};
        } else if (sweeping) {
            fs.params = {0.0};
        }
        fs.validate();
        return fs;
    }

    [[nodiscard]] PureState load(json &description) const {
        const int given = static_cast<int>(!state_path.empty()) + static_cast<int>(!spec.empty()) +
                          static_cast<int>(!family.empty());
        if (given != 1) {
            throw Error("give exactly one of --state, --spec or --family");
        }
        if (!state_path.empty()) {
            description = {{"state", state_path}};
            return io::load_state(state_path);
        }
        const FamilySpec fs = *family_spec();
        description = {{"family", family_json(fs)}};
        return make_state(fs);
    }
};

/// A pure state named by a file path or, when it contains ':' and is not an
/// existing file, an inline family spec.
PureState load_operand(const std::string &text, json &description) {
    if (text.find(':') != std::string::npos && !std::filesystem::exists(text)) {
        const FamilySpec fs = parse_family_spec(text);
        description = family_json(fs);
        return make_state(fs);
    }
    description = text;
    return io::load_state(text);
}

struct Output {
    std::string path;
    std::string format = "json";

    void add_options(CLI::App *cmd, const std::string &default_format = "json") {
        format = default_format;
        cmd->add_option("-o,--output", path, "write the report to this file");
        cmd->add_option("--format", format, "json or csv")
            ->check(CLI::IsMember({"json", "csv"}))
            ->capture_default_str();
    }

    void emit(const std::string &text, std::ostream &out) const {
        if (path.empty()) {
            out << text;
        } else {
            io::write_file(path, text);
        }
    }

    void emit(const json &j, std::ostream &out) const { emit(j.dump(2) + "\n", out); }

    void require_json(const std::string &command) const {
        if (format != "json") {
            throw Error(command + " supports JSON output only");
        }
    }
};

int cmd_ed(const StateSource &src, const Output &o, std::ostream &out) {
    json desc;
    const PureState psi = src.load(desc);
    const EdReport r = entanglement_distance(psi);
    if (o.format == "csv") {
        Csv csv({"qubit", "e_mu", "frame_x", "frame_y", "frame_z"});
        for (int q = 0; q < psi.num_qubits(); ++q) {
            const Vec3 &v = r.frame[q];
            csv.row({static_cast<double>(q), r.per_qubit[static_cast<std::size_t>(q)], v.x(), v.y(),
                     v.z()});
        }
        o.emit(csv.str(), out);
        return kExitOk;
    }
    json j = report_header("ed");
    j["input"] = desc;
    j["num_qubits"] = psi.num_qubits();
    j["E"] = r.total;
    j["E_over_M"] = r.total / psi.num_qubits();
    j["E_mu"] = r.per_qubit;
    j["frame"] = frame_json(r.frame);
    j["em"] = matrix_json(r.em.entries);
    j["degenerate"] = r.degenerate_qubits;
    j["blocks"] = block_structure(r.em);
    o.emit(j, out);
    return kExitOk;
}

int cmd_em(const StateSource &src, const std::string &axis, const Output &o, std::ostream &out) {
    json desc;
    const PureState psi = src.load(desc);
    UnitVectorFrame frame;
    if (axis.empty()) {
        frame = optimal_frame(psi).frame;
    } else {
        const Vec3 v = axis == "x" ? Vec3::UnitX() : axis == "y" ? Vec3::UnitY() : Vec3::UnitZ();
        frame = UnitVectorFrame::uniform(psi.num_qubits(), v);
    }
    const MetricTensor g = metric_tensor(psi, frame);
    if (o.format == "csv") {
        std::vector<std::string> header;
        for (int q = 0; q < g.size(); ++q) {
            header.push_back("g" + std::to_string(q));
        }
        Csv csv(header);
        for (int r = 0; r < g.size(); ++r) {
            std::vector<double> row;
            for (int c = 0; c < g.size(); ++c) {
                row.push_back(g.entries(r, c));
            }
            csv.row(row);
        }
        o.emit(csv.str(), out);
        return kExitOk;
    }
    json j = report_header("em");
    j["input"] = desc;
    j["frame_kind"] = axis.empty() ? "optimal" : "uniform-" + axis;
    j["frame"] = frame_json(frame);
    j["em"] = matrix_json(g.entries);
    j["trace"] = g.trace();
    j["blocks"] = block_structure(g);
    o.emit(j, out);
    return kExitOk;
}

int cmd_equiv(const std::string &a, const std::string &b, const MatchConfig &cfg, const Output &o,
              std::ostream &out) {
    o.require_json("equiv");
    cfg.validate();
    json da;
    json db;
    const PureState sa = load_operand(a, da);
    const PureState sb = load_operand(b, db);
    const EquivalenceReport r = equivalence_test(sa, sb, cfg);
    json j = report_header("equiv");
    j["a"] = da;
    j["b"] = db;
    j["status"] = to_string(r.status);
    j["verdict"] = r.verdict;
    j["conclusive_for_equivalence"] = r.conclusive_for_equivalence;
    j["witnesses_tested"] = r.witnesses.size();
    j["max_residual"] = r.max_residual();
    double min_res = r.witnesses.empty() ? 0.0 : r.witnesses.front().residual;
    for (const Witness &w : r.witnesses) {
        min_res = std::min(min_res, w.residual);
    }
    j["min_residual"] = min_res;
    j["measure_gap"] = r.measure_gap;
    j["measure_mismatch"] = r.measure_mismatch;
    j["config"] = {{"grid_points_per_sphere", cfg.grid_points_per_sphere},
                   {"restarts", cfg.restarts},
                   {"polish_iters", cfg.polish_iters},
                   {"match_tol", cfg.match_tol},
                   {"inequivalence_margin", cfg.inequivalence_margin},
                   {"seed", cfg.seed},
                   {"measure_precheck", cfg.measure_precheck}};
    json ws = json::array();
    for (const Witness &w : r.witnesses) {
        ws.push_back({{"label", w.label},
                      {"residual", w.residual},
                      {"frame_a", frame_json(w.frame_a)},
                      {"frame_b", frame_json(w.frame_b)}});
    }
    j["witnesses"] = ws;
    o.emit(j, out);
    return kExitOk;
}

std::optional<double> closed_form_ed(const FamilySpec &spec) {
    try {
        return family_ed_closed_form(spec);
    } catch (const Error &) {
        return std::nullopt;
    }
}

std::optional<MetricTensor> closed_form_em(const FamilySpec &spec) {
    try {
        return family_em_closed_form(spec);
    } catch (const Error &) {
        return std::nullopt;
    }
}

json optional_json(const std::optional<double> &v) {
    return v ? json(*v) : json(nullptr);
}

/// One family point: numeric and closed-form values side by side.
struct FamilyRow {
    FamilySpec spec;
    EdReport numeric;
    std::optional<double> closed;

    explicit FamilyRow(FamilySpec s)
        : spec(std::move(s)), numeric(entanglement_distance(make_state(spec))),
          closed(closed_form_ed(spec)) {}

    [[nodiscard]] double per_qubit() const { return numeric.total / spec.num_qubits; }

    [[nodiscard]] std::vector<double> csv_values() const {
        std::vector<double> v = spec.params;
        v.push_back(numeric.total);
        v.push_back(per_qubit());
        v.push_back(closed ? *closed : std::nan(""));
        const Eigen::MatrixXd &g = numeric.em.entries;
        for (Eigen::Index r = 0; r < g.rows(); ++r) {
            for (Eigen::Index c = 0; c < g.cols(); ++c) {
                v.push_back(g(r, c));
            }
        }
        return v;
    }
};

std::vector<std::string> family_csv_header(const FamilySpec &spec) {
    std::vector<std::string> h;
    const std::string name = spec.kind == FamilyKind::BRS ? "phi" : "theta";
    for (std::size_t i = 0; i < spec.params.size(); ++i) {
        h.push_back(spec.params.size() == 1 ? name : name + std::to_string(i + 1));
    }
    h.insert(h.end(), {"E_total", "E_per_qubit", "E_per_qubit_closed_form"});
    for (int r = 0; r < spec.num_qubits; ++r) {
        for (int c = 0; c < spec.num_qubits; ++c) {
            h.push_back("g" + std::to_string(r) + std::to_string(c));
        }
    }
    return h;
}

int cmd_family(const StateSource &src, int sweep, const std::string &export_path, const Output &o,
               std::ostream &out) {
    const auto spec = src.family_spec(sweep > 0);
    if (!spec) {
        throw Error("family needs --spec or --family");
    }
    std::vector<FamilyRow> rows;
    if (sweep > 0) {
        if (spec->params.size() != 1) {
            throw Error("--sweep needs a one-parameter family (ghzl, brs, or w with M = 2)");
        }
        const double hi = spec->kind == FamilyKind::BRS ? 2 * kPi : kPi / 2;
        for (int i = 0; i < sweep; ++i) {
            FamilySpec s = *spec;
            s.params[0] = sweep == 1 ? 0.0 : hi * i / (sweep - 1);
            rows.emplace_back(s);
        }
    } else {
        rows.emplace_back(*spec);
        if (!export_path.empty()) {
            io::write_file(export_path, io::state_to_json(make_state(*spec)));
        }
    }
    if (o.format == "csv") {
        Csv csv(family_csv_header(*spec));
        for (const FamilyRow &r : rows) {
            csv.row(r.csv_values());
        }
        o.emit(csv.str(), out);
        return kExitOk;
    }
    json j = report_header("family");
    j["family"] = family_json(*spec);
    if (sweep > 0) {
        json pts = json::array();
        for (const FamilyRow &r : rows) {
            pts.push_back({{"param", r.spec.params[0]},
                           {"E_total", r.numeric.total},
                           {"E_per_qubit", r.per_qubit()},
                           {"E_per_qubit_closed_form", optional_json(r.closed)}});
        }
        j["sweep"] = pts;
        o.emit(j, out);
        return kExitOk;
    }
    const FamilyRow &r = rows.front();
    j["E_total"] = r.numeric.total;
    j["E_per_qubit"] = r.per_qubit();
    j["E_per_qubit_closed_form"] = optional_json(r.closed);
    j["E_per_qubit_difference"] =
        r.closed ? json(std::abs(r.per_qubit() - *r.closed)) : json(nullptr);
    j["em"] = matrix_json(r.numeric.em.entries);
    const auto em_cf = closed_form_em(*spec);
    j["em_closed_form"] = em_cf ? matrix_json(em_cf->entries) : json(nullptr);
    j["em_max_difference"] =
        em_cf ? json((em_cf->entries - r.numeric.em.entries).cwiseAbs().maxCoeff()) : json(nullptr);
    j["degenerate"] = r.numeric.degenerate_qubits;
    j["blocks"] = block_structure(r.numeric.em);
    if (!export_path.empty()) {
        j["exported_state"] = export_path;
    }
    o.emit(j, out);
    return kExitOk;
}

int cmd_roof(const std::string &rho_path, const RoofConfig &cfg, const Output &o, std::ostream &out) {
    const DensityMatrix rho = io::load_density(rho_path);
    const MixedEdReport r = mixed_ed(rho, cfg);
    if (o.format == "csv") {
        Csv csv({"qubit", "value", "eigen_bound", "best_restart", "evaluations"});
        for (std::size_t q = 0; q < r.per_qubit.size(); ++q) {
            const RoofResult &x = r.per_qubit[q];
            csv.row({static_cast<double>(q), x.value, x.eigen_bound,
                     static_cast<double>(x.best_restart), static_cast<double>(x.evaluations)});
        }
        o.emit(csv.str(), out);
        return kExitOk;
    }
    json j = report_header("roof");
    j["rho"] = rho_path;
    j["num_qubits"] = rho.num_qubits();
    j["rank"] = spectrum(rho).rank();
    j["value_kind"] = "best found (upper bound on the convex roof)";
    j["total"] = r.total;
    json per = json::array();
    for (std::size_t q = 0; q < r.per_qubit.size(); ++q) {
        const RoofResult &x = r.per_qubit[q];
        per.push_back({{"qubit", q},
                       {"value", x.value},
                       {"eigen_bound", x.eigen_bound},
                       {"ensemble_size", x.ensemble_size},
                       {"restarts", x.restarts},
                       {"best_restart", x.best_restart},
                       {"evaluations", x.evaluations}});
    }
    j["per_qubit"] = per;
    j["config"] = {{"ensemble_size", cfg.ensemble_size},
                   {"restarts", cfg.restarts},
                   {"max_iters", cfg.max_iters},
                   {"tol", cfg.tol},
                   {"seed", cfg.seed}};
    o.emit(j, out);
    return kExitOk;
}

int cmd_cv(const std::string &a1, const std::string &a2, int cutoff, const Output &o,
           std::ostream &out) {
    o.require_json("cv");
    const CatSpec spec{parse_complex(a1), parse_complex(a2)};
    CutoffPolicy policy;
    if (cutoff > 0) {
        policy.cutoff = cutoff;
        policy.auto_raise = false;
    }
    const FockState s = symmetric_cat(spec, policy);
    const double e = cv_ed(s);
    const double cf = cat_ed_closed_form(spec);
    json j = report_header("cv");
    j["alpha1"] = json::array({spec.alpha1.real(), spec.alpha1.imag()});
    j["alpha2"] = json::array({spec.alpha2.real(), spec.alpha2.imag()});
    j["ed"] = e;
    j["overlap_p"] = spec.overlap();
    j["closed_form"] = cf;
    j["difference"] = e - cf;
    j["cutoff"] = s.cutoff;
    j["tail_bound"] = s.tail_bound;
    j["mode_terms"] = cv_mode_terms(s);
    o.emit(j, out);
    return kExitOk;
}

int cmd_proptest(const std::string &suite, int trials, std::uint64_t seed, const Output &o,
                 std::ostream &out) {
    o.require_json("proptest");
    const MonotonicityReport r = run_property_suite(suite, trials, seed);
    json j = report_header("proptest");
    j["suite"] = r.suite;
    j["trials"] = r.trials;
    j["violations"] = r.violations;
    j["worst_margin"] = r.worst_margin;
    j["tolerance"] = r.tolerance;
    j["seed"] = r.seed;
    o.emit(j, out);
    return r.violations == 0 ? kExitOk : kExitViolation;
}

int cmd_fig5(int resolution, const Output &o, std::ostream &out) {
    const auto grid = fig5_grid(resolution);
    const auto best = std::max_element(grid.begin(), grid.end(), [](const auto &a, const auto &b) {
        return a.ed_per_qubit < b.ed_per_qubit;
    });
    if (o.format == "csv") {
        Csv csv({"theta1", "theta2", "e_over_3"});
        for (const Fig5Point &p : grid) {
            csv.row({p.theta1, p.theta2, p.ed_per_qubit});
        }
        o.emit(csv.str(), out);
        return kExitOk;
    }
    json j = report_header("fig5");
    j["resolution"] = resolution;
    j["max_e_over_3"] = best->ed_per_qubit;
    j["argmax"] = {{"theta1", best->theta1}, {"theta2", best->theta2}};
    json pts = json::array();
    for (const Fig5Point &p : grid) {
        pts.push_back(json::array({p.theta1, p.theta2, p.ed_per_qubit}));
    }
    j["points"] = pts;
    o.emit(j, out);
    return kExitOk;
}

} // namespace

double parse_angle(const std::string &raw) {
    std::string t;
    for (char c : raw) {
        if (!std::isspace(static_cast<unsigned char>(c))) {
            t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
        }
    }
    const auto pos = t.find("pi");
    if (pos == std::string::npos) {
        return parse_number(t);
    }
    // [coef[*]]pi[/den]
    std::string coef = t.substr(0, pos);
    std::string rest = t.substr(pos + 2);
    if (!coef.empty() && coef.back() == '*') {
        coef.pop_back();
    }
    double value = kPi;
    if (coef == "-") {
        value = -kPi;
    } else if (!coef.empty()) {
        value *= parse_number(coef);
    }
    if (!rest.empty()) {
        if (rest.front() != '/') {
            throw Error("cannot parse angle '" + raw + "'");
        }
        const double den = parse_number(rest.substr(1));
        if (den == 0.0) {
            throw Error("division by zero in angle '" + raw + "'");
        }
        value /= den;
    }
    return value;
}

FamilySpec parse_family_spec(const std::string &text) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) {
        throw Error("family spec '" + text + "' is not kind:M:params");
    }
    FamilySpec fs;
    fs.kind = family_kind_from_string(parts[0]);
    try {
        std::size_t used = 0;
        fs.num_qubits = std::stoi(parts[1], &used);
        if (used != parts[1].size()) {
            throw Error("");
        }
    } catch (const std::exception &) {
        throw Error("family spec '" + text + "': bad qubit count '" + parts[1] + "'");
    }
    for (const auto &p : split(parts[2], ',')) {
        fs.params.push_back(parse_angle(p));
    }
    fs.validate();
    return fs;
}

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Entanglement distance and entanglement metric toolkit", "entdist"};
    app.require_subcommand(1);

    StateSource ed_src;
    Output ed_out;
    auto *ed = app.add_subcommand("ed", "entanglement distance of a pure state");
    ed_src.add_options(ed);
    ed_out.add_options(ed);

    StateSource em_src;
    Output em_out;
    std::string em_axis;
    auto *em = app.add_subcommand("em", "entanglement metric of a pure state");
    em_src.add_options(em);
    em->add_option("--axis", em_axis, "uniform frame axis instead of the optimal frame")
        ->check(CLI::IsMember({"x", "y", "z"}));
    em_out.add_options(em);

    std::string eq_a;
    std::string eq_b;
    MatchConfig mcfg;
    Output eq_out;
    auto *eq = app.add_subcommand("equiv", "local-unitary equivalence test");
    eq->add_option("--a", eq_a, "state file or inline spec")->required();
    eq->add_option("--b", eq_b, "state file or inline spec")->required();
    eq->add_option("--grid", mcfg.grid_points_per_sphere)->capture_default_str();
    eq->add_option("--restarts", mcfg.restarts)->capture_default_str();
    eq->add_option("--polish-iters", mcfg.polish_iters)->capture_default_str();
    eq->add_option("--match-tol", mcfg.match_tol)->capture_default_str();
    eq->add_option("--margin", mcfg.inequivalence_margin)->capture_default_str();
    eq->add_option("--seed", mcfg.seed)->capture_default_str();
    eq->add_flag("--measure-precheck", mcfg.measure_precheck,
                 "skip the search when the two E values differ");
    eq_out.add_options(eq);

    StateSource fam_src;
    Output fam_out;
    int sweep = 0;
    std::string export_path;
    auto *fam = app.add_subcommand("family", "family state with closed-form comparison");
    fam_src.add_options(fam);
    fam->add_option("--sweep", sweep, "points of a parameter sweep (one-parameter families)");
    fam->add_option("--export", export_path, "write the state as JSON");
    fam_out.add_options(fam);

    std::string rho_path;
    RoofConfig rcfg;
    Output roof_out;
    auto *roof = app.add_subcommand("roof", "mixed-state entanglement distance");
    roof->add_option("--rho", rho_path, "density matrix JSON")->required();
    roof->add_option("--ensemble-size", rcfg.ensemble_size, "0 selects rank + 2")
        ->capture_default_str();
    roof->add_option("--restarts", rcfg.restarts)->capture_default_str();
    roof->add_option("--max-iters", rcfg.max_iters)->capture_default_str();
    roof->add_option("--tol", rcfg.tol)->capture_default_str();
    roof->add_option("--seed", rcfg.seed)->capture_default_str();
    roof_out.add_options(roof);

    std::string a1;
    std::string a2;
    int cutoff = 0;
    Output cv_out;
    auto *cv = app.add_subcommand("cv", "two-mode cat state entanglement distance");
    cv->add_option("--alpha1", a1, "re,im")->required();
    cv->add_option("--alpha2", a2, "re,im")->required();
    cv->add_option("--cutoff", cutoff, "fixed Fock cutoff (default: automatic)");
    cv_out.add_options(cv);

    std::string suite;
    int trials = 500;
    std::uint64_t pseed = 0;
    Output pt_out;
    auto *pt = app.add_subcommand("proptest", "randomized monotone property suites");
    pt->add_option("--suite", suite)->required()->check(CLI::IsMember(property_suites()));
    pt->add_option("--trials", trials)->capture_default_str();
    pt->add_option("--seed", pseed)->capture_default_str();
    pt_out.add_options(pt);

    int resolution = 101;
    Output f5_out;
    auto *f5 = app.add_subcommand("fig5", "E/3 of the three-qubit W family on a grid");
    f5->add_option("--resolution", resolution)->capture_default_str();
    f5_out.add_options(f5, "csv");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitValidation;
    }

    try {
        if (ed->parsed()) {
            return cmd_ed(ed_src, ed_out, out);
        }
        if (em->parsed()) {
            return cmd_em(em_src, em_axis, em_out, out);
        }
        if (eq->parsed()) {
            return cmd_equiv(eq_a, eq_b, mcfg, eq_out, out);
        }
        if (fam->parsed()) {
            return cmd_family(fam_src, sweep, export_path, fam_out, out);
        }
        if (roof->parsed()) {
            return cmd_roof(rho_path, rcfg, roof_out, out);
        }
        if (cv->parsed()) {
            return cmd_cv(a1, a2, cutoff, cv_out, out);
        }
        if (pt->parsed()) {
            return cmd_proptest(suite, trials, pseed, pt_out, out);
        }
        if (f5->parsed()) {
            return cmd_fig5(resolution, f5_out, out);
        }
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitValidation;
}

} // namespace entdist::cli
