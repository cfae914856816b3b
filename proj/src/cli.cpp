#include "qcrb/cli.hpp"

#include <unistd.h>

#include <CLI11.hpp>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>

#include "qcrb/bounds.hpp"
#include "qcrb/collective.hpp"
#include "qcrb/errors.hpp"
#include "qcrb/gaussian.hpp"
#include "qcrb/holevo_program.hpp"
#include "qcrb/spin.hpp"

namespace qcrb::cli {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

double parse_number(const std::string& raw) {
    const std::string s = trim(raw);
    if (s.empty()) throw ValidationError("empty number");
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &pos);
    } catch (const std::exception&) {
        throw ValidationError("not a number: '" + s + "'");
    }
    if (pos != s.size() || !std::isfinite(v)) throw ValidationError("not a finite number: '" + s + "'");
    return v;
}

std::uint64_t as_count(double v, const char* what) {
    if (v < 1.0 || v != std::floor(v) || v > 9.007199254740992e15)
        throw ValidationError(std::string(what) + " must be a positive integer");
    return static_cast<std::uint64_t>(v);
}

ordered matrix_json(const RMatrix& m) {
    ordered rows = ordered::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        ordered row = ordered::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(row);
    }
    return rows;
}

ordered opt_json(const std::optional<double>& v) { return v ? ordered(*v) : ordered(nullptr); }

// One table of rows sharing a fixed column order; single reports are one-row tables.
struct Output {
    std::string command;
    std::uint64_t seed = 0;
    ordered config = ordered::object();
    std::vector<std::string> columns;
    std::vector<ordered> rows;
    bool single = false;
};

std::string csv_cell(const ordered& v) {
    if (v.is_null()) return "";
    if (v.is_string()) {
        const std::string s = v.get<std::string>();
        if (s.find_first_of(",\"\n") == std::string::npos) return s;
        std::string q = "\"";
        for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
        return q + "\"";
    }
    if (v.is_array()) {
        std::string s;
        for (const auto& row : v)
            for (const auto& x : row.is_array() ? row : ordered::array({row})) {
                if (!s.empty()) s += ' ';
                s += csv_cell(x);
            }
        return s;
    }
    return v.dump();  // shortest round-trip form for floats
}

std::string render(const Output& o, const std::string& format) {
    if (format == "csv") {
        std::ostringstream os;
        os << "# version: " << kVersion << "\n";
        os << "# command: " << o.command << "\n";
        os << "# seed: " << o.seed << "\n";
        os << "# config: " << o.config.dump() << "\n";
        for (std::size_t i = 0; i < o.columns.size(); ++i) os << (i ? "," : "") << o.columns[i];
        os << "\n";
        for (const auto& row : o.rows) {
            for (std::size_t i = 0; i < o.columns.size(); ++i) os << (i ? "," : "") << csv_cell(row[o.columns[i]]);
            os << "\n";
        }
        return os.str();
    }
    ordered doc;
    doc["version"] = kVersion;
    doc["command"] = o.command;
    doc["seed"] = o.seed;
    doc["config"] = o.config;
    if (o.single) {
        doc["report"] = o.rows.front();
    } else {
        doc["columns"] = o.columns;
        doc["rows"] = o.rows;
    }
    return doc.dump(2) + "\n";
}

void write_atomic(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    const fs::path tmp = target.string() + ".tmp." + std::to_string(::getpid());
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw ValidationError("cannot open output file '" + tmp.string() + "'");
        f << content;
        f.flush();
        if (!f) throw ValidationError("failed writing '" + tmp.string() + "'");
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp);
        throw ValidationError("cannot move output into place: " + ec.message());
    }
}

struct Common {
    std::string out = "json";
    std::string path;
    std::uint64_t seed = 1;
};

void add_common(CLI::App* sub, Common& c) {
    sub->add_option("--out", c.out, "output format")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--path", c.path, "output file (written atomically); standard output if omitted");
    sub->add_option("--seed", c.seed, "master seed, echoed in every report");
}

const std::vector<std::string> kBoundsColumns{"model", "r", "phi", "nbar", "c_sld", "c_rld", "c_holevo",
                                              "c_quasi", "regime", "mse_target", "fisher_target"};

struct BoundsArgs {
    std::string model = "full";
    double r = 0.0;
    std::string theta;
    double phi = 0.0;
    double nbar = 0.0;
    std::string weight = "identity";
    std::string solver = "closed";
};

ordered bounds_row(const BoundsArgs& a, double r, std::optional<Eigen::Vector3d> theta) {
    BoundsReport rep;
    if (a.model == "gaussian") {
        const WeightMatrix G(parse_weight(a.weight, 2));
        const double c = gaussian_rld_bound(a.nbar, G);
        rep.c_sld = (a.nbar + 0.5) * G.matrix().trace();
        rep.c_rld = rep.c_holevo = rep.c_quasi = c;
        const RMatrix cov = (a.nbar + 0.5) * RMatrix::Identity(2, 2) +
                            (G.strictly_pd() ? RMatrix(squeezed_params(G, a.nbar).ghat.matrix()) * 0.5
                                             : RMatrix(RMatrix::Zero(2, 2)));
        rep.mse_target = SymmetricMatrix::symmetric_part(cov);
        rep.fisher_target = SymmetricMatrix::symmetric_part(cov.inverse());
        rep.regime = Regime::full;
    } else if (a.model == "full") {
        const WeightMatrix G(parse_weight(a.weight, 3));
        rep = theta ? full_model_report(QubitPoint{*theta}, G) : full_model_report(r, G);
        if (a.solver == "numeric") {
            if (theta) throw ValidationError("--solver numeric supports on-axis points only");
            const auto prog = full_qubit_program(r, G);
            const auto res = holevo_numeric(prog);
            rep.c_holevo = res.value;
            rep.mse_target = holevo_mse(prog, res.argmin);
            rep.fisher_target = SymmetricMatrix::symmetric_part(rep.mse_target.matrix().inverse());
            rep.regime = Regime::numeric;
        }
    } else {
        const WeightMatrix G(parse_weight(a.weight, 2));
        rep = submodel_report(r, a.phi, G);
        if (a.solver == "numeric") {
            const auto prog = submodel_program(r, a.phi, G);
            const auto res = holevo_numeric(prog);
            rep.c_holevo = res.value;
            rep.mse_target = holevo_mse(prog, res.argmin);
            rep.fisher_target = SymmetricMatrix::symmetric_part(rep.mse_target.matrix().inverse());
            rep.regime = Regime::numeric;
        }
    }
    ordered row;
    row["model"] = a.model;
    row["r"] = theta ? theta->norm() : r;
    row["phi"] = a.model == "submodel" ? ordered(a.phi) : ordered(nullptr);
    row["nbar"] = a.model == "gaussian" ? ordered(a.nbar) : ordered(nullptr);
    row["c_sld"] = rep.c_sld;
    row["c_rld"] = rep.c_rld;
    row["c_holevo"] = rep.c_holevo;
    row["c_quasi"] = rep.c_quasi;
    row["regime"] = to_string(rep.regime);
    row["mse_target"] = matrix_json(rep.mse_target.matrix());
    row["fisher_target"] = matrix_json(rep.fisher_target.matrix());
    return row;
}

ordered bounds_config(const BoundsArgs& a) {
    ordered c;
    c["model"] = a.model;
    c["weight"] = a.weight;
    c["solver"] = a.solver;
    if (a.model == "gaussian") {
        c["nbar"] = a.nbar;
    } else {
        if (!a.theta.empty()) c["theta"] = parse_vector(a.theta, 3);
        c["r"] = a.r;
        if (a.model == "submodel") c["phi"] = a.phi;
    }
    return c;
}

void check_model(const BoundsArgs& a) {
    if (a.model != "full" && !a.theta.empty()) throw ValidationError("--theta applies to the full model only");
    if (a.model == "gaussian" && a.solver == "numeric") throw ValidationError("the gaussian model has no numeric solver");
}

const std::vector<std::string> kSimColumns{"n",         "risk_kind",    "trials",     "seed",
                                           "risk_estimate", "std_error", "prediction", "prediction_source",
                                           "exact_mean", "n_risk",      "n_std_error", "z_score"};

ordered sim_row(const SimReport& rep) {
    ordered row;
    const double n = double(rep.n);
    row["n"] = rep.n;
    row["risk_kind"] = to_string(rep.risk_kind);
    row["trials"] = rep.trials;
    row["seed"] = rep.seed;
    row["risk_estimate"] = rep.risk_estimate;
    row["std_error"] = rep.std_error;
    row["prediction"] = rep.prediction;
    row["prediction_source"] = rep.prediction_source;
    row["exact_mean"] = opt_json(rep.exact_mean);
    row["n_risk"] = n * rep.risk_estimate;
    row["n_std_error"] = n * rep.std_error;
    row["z_score"] = rep.std_error > 0.0 ? ordered(rep.z_score()) : ordered(nullptr);
    return row;
}

void guard_work(std::uint64_t n, std::uint64_t trials) {
    if (trials == 0) throw ValidationError("trials must be at least 1");
    if (n != 0 && trials > std::numeric_limits<std::uint64_t>::max() / n)
        throw ValidationError("trials * n overflows a 64-bit count");
}

const std::vector<std::string> kResidualNames{"trace_distance", "coherent", "ladder_plus", "ladder_minus",
                                              "quad_q",         "quad_p",   "cross_qq",    "cross_qp",
                                              "cross_pq",       "cross_pp", "moment_q2",   "moment_p2",
                                              "moment_qp"};

std::vector<Residual> residuals(const LimitReport& r) {
    return {r.trace_distance, r.coherent, r.ladder_plus, r.ladder_minus, r.quad_q,    r.quad_p,   r.cross_qq,
            r.cross_qp,       r.cross_pq, r.cross_pp,    r.moment_q2,    r.moment_p2, r.moment_qp};
}

int two_j_of(double j) {
    const double tj = 2.0 * j;
    if (j <= 0.0 || tj != std::floor(tj) || tj > 1e6) throw ValidationError("j must be a positive half-integer");
    return static_cast<int>(tj);
}

}  // namespace

RMatrix parse_weight(const std::string& literal, int dim) {
    const std::string s = trim(literal);
    RMatrix m;
    if (s == "identity") {
        m = RMatrix::Identity(dim, dim);
    } else if (s.rfind("diag:", 0) == 0) {
        const auto parts = split(s.substr(5), ',');
        if (static_cast<int>(parts.size()) != dim)
            throw ValidationError("weight literal: expected " + std::to_string(dim) + " diagonal entries");
        m = RMatrix::Zero(dim, dim);
        for (int i = 0; i < dim; ++i) m(i, i) = parse_number(parts[i]);
    } else {
        const auto rows = split(s, ';');
        if (static_cast<int>(rows.size()) != dim)
            throw ValidationError("weight literal: expected " + std::to_string(dim) + " rows");
        m = RMatrix::Zero(dim, dim);
        for (int i = 0; i < dim; ++i) {
            const auto cols = split(rows[i], ',');
            if (static_cast<int>(cols.size()) != dim)
                throw ValidationError("weight literal: row " + std::to_string(i + 1) + " needs " +
                                      std::to_string(dim) + " entries");
            for (int j = 0; j < dim; ++j) m(i, j) = parse_number(cols[j]);
        }
    }
    WeightMatrix check(m);  // symmetry and PSD
    return check.matrix();
}

std::vector<double> parse_grid(const std::string& spec) {
    const std::string s = trim(spec);
    if (s.empty()) throw ValidationError("empty grid");
    std::vector<double> out;
    if (s.find(':') != std::string::npos) {
        const auto parts = split(s, ':');
        if (parts.size() != 3) throw ValidationError("range grid must be start:stop:step");
        const double a = parse_number(parts[0]), b = parse_number(parts[1]), h = parse_number(parts[2]);
        if (!(h > 0.0)) throw ValidationError("range step must be positive");
        if (b < a) throw ValidationError("empty grid");
        const double count = std::floor((b - a) / h + 1e-9) + 1.0;
        if (count > 1e6) throw ValidationError("grid too large");
        for (int i = 0; i < int(count); ++i) out.push_back(std::round((a + i * h) * 1e12) / 1e12);
    } else {
        for (const auto& p : split(s, ',')) out.push_back(parse_number(p));
    }
    if (out.empty()) throw ValidationError("empty grid");
    return out;
}

std::vector<double> parse_vector(const std::string& spec, std::size_t expected) {
    const auto parts = split(trim(spec), ',');
    if (parts.size() != expected)
        throw ValidationError("expected a vector of " + std::to_string(expected) + " comma-separated numbers");
    std::vector<double> v;
    for (const auto& p : parts) v.push_back(parse_number(p));
    return v;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Quantum Cramer-Rao bounds for qubit and Gaussian models", "qcrb"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    Common common;
    BoundsArgs b;
    auto* bounds = app.add_subcommand("bounds", "bound report for one model point");
    add_common(bounds, common);
    bounds->add_option("--model", b.model)->check(CLI::IsMember({"full", "submodel", "gaussian"}));
    bounds->add_option("--r", b.r, "Bloch-vector length on the z axis");
    bounds->add_option("--theta", b.theta, "full Bloch vector x,y,z (full model)");
    bounds->add_option("--phi", b.phi, "submodel tangent angle in [0, pi/2]");
    bounds->add_option("--nbar", b.nbar, "mean photon number (gaussian model)");
    bounds->add_option("--weight", b.weight, "identity | diag:a,b,.. | a,b;c,d");
    bounds->add_option("--solver", b.solver)->check(CLI::IsMember({"closed", "numeric"}));

    std::uint64_t sim_n = 0, trials = 100000;
    double sim_r = 0.0;
    std::string sim_theta, risk = "euclidean";
    bool full_vector = false;
    auto* simulate = app.add_subcommand("simulate", "Monte Carlo risk of the covariant collective estimator");
    add_common(simulate, common);
    simulate->add_option("--n", sim_n, "number of copies")->required();
    simulate->add_option("--r", sim_r, "Bloch-vector length on the z axis");
    simulate->add_option("--theta", sim_theta, "full Bloch vector x,y,z");
    simulate->add_option("--trials", trials);
    simulate->add_option("--risk", risk)->check(CLI::IsMember({"euclidean", "bures"}));
    simulate->add_flag("--full-vector", full_vector, "evaluate the loss on the reconstructed 3-vector");

    double g_nbar = 0.0;
    std::uint64_t copies = 1;
    std::string g_weight = "identity", g_theta = "0,0";
    auto* gaussian = app.add_subcommand("gaussian", "Monte Carlo risk of the n-copy squeezed measurement");
    add_common(gaussian, common);
    gaussian->add_option("--nbar", g_nbar);
    gaussian->add_option("--weight", g_weight);
    gaussian->add_option("--n", copies, "number of copies");
    gaussian->add_option("--theta", g_theta, "shift parameter a,b");
    gaussian->add_option("--trials", trials);

    double lp = 0.5;
    std::string lj, lweight;
    auto* limits = app.add_subcommand("limits", "spin-to-Gaussian limit residuals over a j grid");
    add_common(limits, common);
    limits->add_option("--p", lp, "thermal ratio in (0, 1)");
    limits->add_option("--j", lj, "j grid, e.g. 5,10,20 or 5:40:5")->required();
    limits->add_option("--weight", lweight, "optional 2x2 weight for the weighted moment gap");

    std::string sweep_cmd, sn, sr;
    BoundsArgs sb;
    std::string srisk = "euclidean";
    auto* sweep = app.add_subcommand("sweep", "tabulate a quantity over a grid");
    add_common(sweep, common);
    sweep->add_option("--command", sweep_cmd)
        ->required()
        ->check(CLI::IsMember({"bounds", "origin", "radial", "covariant"}));
    sweep->add_option("--n", sn, "copy-count grid");
    sweep->add_option("--r", sr, "r grid");
    sweep->add_option("--model", sb.model)->check(CLI::IsMember({"full", "submodel"}));
    sweep->add_option("--phi", sb.phi);
    sweep->add_option("--weight", sb.weight);
    sweep->add_option("--solver", sb.solver)->check(CLI::IsMember({"closed", "numeric"}));
    sweep->add_option("--risk", srisk)->check(CLI::IsMember({"euclidean", "bures"}));

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        Output o;
        o.seed = common.seed;
        if (bounds->parsed()) {
            check_model(b);
            o.command = "bounds";
            o.config = bounds_config(b);
            o.columns = kBoundsColumns;
            std::optional<Eigen::Vector3d> th;
            if (!b.theta.empty()) {
                const auto v = parse_vector(b.theta, 3);
                th = Eigen::Vector3d(v[0], v[1], v[2]);
            }
            o.rows.push_back(bounds_row(b, b.r, th));
            o.single = true;
        } else if (simulate->parsed()) {
            guard_work(sim_n, trials);
            Eigen::Vector3d theta(0.0, 0.0, sim_r);
            if (!sim_theta.empty()) {
                const auto v = parse_vector(sim_theta, 3);
                theta = Eigen::Vector3d(v[0], v[1], v[2]);
            }
            CovariantOptions opt;
            opt.full_vector = full_vector;
            const auto rep = simulate_covariant(sim_n, theta, parse_risk_kind(risk), trials, common.seed, opt);
            o.command = "simulate";
            o.config = {{"n", sim_n},       {"theta", {theta[0], theta[1], theta[2]}}, {"trials", trials},
                        {"risk", risk},     {"full_vector", full_vector}};
            o.columns = kSimColumns;
            o.rows.push_back(sim_row(rep));
            o.single = true;
        } else if (gaussian->parsed()) {
            guard_work(copies, trials);
            const auto v = parse_vector(g_theta, 2);
            const WeightMatrix G(parse_weight(g_weight, 2));
            const auto rep = simulate_gaussian(g_nbar, Eigen::Vector2d(v[0], v[1]), G, copies, trials, common.seed);
            o.command = "gaussian";
            o.config = {{"nbar", g_nbar}, {"weight", g_weight}, {"n", copies}, {"theta", v}, {"trials", trials}};
            o.columns = kSimColumns;
            o.rows.push_back(sim_row(rep));
            o.single = true;
        } else if (limits->parsed()) {
            const auto grid = parse_grid(lj);
            std::optional<WeightMatrix> G;
            if (!lweight.empty()) G = WeightMatrix(parse_weight(lweight, 2));
            o.command = "limits";
            o.config = {{"p", lp}, {"j", grid}, {"weight", lweight.empty() ? ordered(nullptr) : ordered(lweight)}};
            o.columns = {"j", "two_j", "p"};
            for (const auto& name : kResidualNames) {
                o.columns.push_back(name);
                o.columns.push_back(name + "_bound");
            }
            o.columns.push_back("weighted_moment_gap");
            for (double j : grid) {
                const int tj = two_j_of(j);
                const auto rep = limit_report(tj, lp, G);
                ordered row;
                row["j"] = j;
                row["two_j"] = tj;
                row["p"] = lp;
                const auto res = residuals(rep);
                for (std::size_t k = 0; k < res.size(); ++k) {
                    row[kResidualNames[k]] = res[k].value;
                    row[kResidualNames[k] + "_bound"] = opt_json(res[k].bound);
                }
                row["weighted_moment_gap"] = opt_json(rep.weighted_moment_gap);
                o.rows.push_back(row);
            }
        } else if (sweep->parsed()) {
            o.command = "sweep";
            o.config["command"] = sweep_cmd;
            auto n_grid = [&] {
                if (sn.empty()) throw ValidationError("sweep --command " + sweep_cmd + " needs --n");
                std::vector<std::uint64_t> ns;
                for (double v : parse_grid(sn)) ns.push_back(as_count(v, "n"));
                o.config["n"] = ns;
                return ns;
            };
            auto r_grid = [&] {
                if (sr.empty()) throw ValidationError("sweep --command " + sweep_cmd + " needs --r");
                const auto rs = parse_grid(sr);
                o.config["r"] = rs;
                return rs;
            };
            if (sweep_cmd == "bounds") {
                check_model(sb);
                const auto rs = r_grid();
                o.config["model"] = sb.model;
                o.config["weight"] = sb.weight;
                o.config["solver"] = sb.solver;
                if (sb.model == "submodel") o.config["phi"] = sb.phi;
                o.columns = kBoundsColumns;
                for (double r : rs) o.rows.push_back(bounds_row(sb, r, std::nullopt));
            } else if (sweep_cmd == "origin") {
                o.columns = {"n", "origin_exact", "origin_approx", "origin_cov_fisher", "origin_fisher_deficit",
                             "origin_fisher_deficit_approx"};
                for (auto n : n_grid()) {
                    const auto a = asymptotic_predictions(std::max<std::uint64_t>(n, 2), 0.0);
                    ordered row;
                    row["n"] = n;
                    row["origin_exact"] = origin_exact_risk(n);
                    row["origin_approx"] = n >= 2 ? ordered(a.origin_approx) : ordered(nullptr);
                    row["origin_cov_fisher"] = origin_cov_fisher(n);
                    row["origin_fisher_deficit"] = origin_fisher_deficit(n);
                    row["origin_fisher_deficit_approx"] = origin_fisher_deficit_approx(n);
                    o.rows.push_back(row);
                }
            } else if (sweep_cmd == "radial") {
                const auto ns = n_grid();
                const auto rs = r_grid();
                o.columns = {"n", "r", "radial_mse", "radial_exact", "jnr_inv_approx", "jnr_inv_exact"};
                for (auto n : ns)
                    for (double r : rs) {
                        const auto a = asymptotic_predictions(n, r);
                        o.rows.push_back({{"n", n},
                                          {"r", r},
                                          {"radial_mse", opt_json(a.radial_mse)},
                                          {"radial_exact", opt_json(a.radial_exact)},
                                          {"jnr_inv_approx", opt_json(a.jnr_inv_approx)},
                                          {"jnr_inv_exact", opt_json(a.jnr_inv_exact)}});
                    }
            } else {
                const auto ns = n_grid();
                const auto rs = r_grid();
                const RiskKind kind = parse_risk_kind(srisk);
                o.config["risk"] = srisk;
                o.columns = {"n", "r", "risk_kind", "exact_mean", "prediction", "prediction_source", "n_exact",
                             "n_prediction"};
                for (auto n : ns)
                    for (double r : rs) {
                        const double ex = covariant_exact_risk(n, r, kind);
                        const double pr = covariant_prediction(n, r, kind);
                        o.rows.push_back({{"n", n},
                                          {"r", r},
                                          {"risk_kind", srisk},
                                          {"exact_mean", ex},
                                          {"prediction", pr},
                                          {"prediction_source", covariant_prediction_source(r, kind)},
                                          {"n_exact", double(n) * ex},
                                          {"n_prediction", double(n) * pr}});
                    }
            }
        }

        const std::string text = render(o, common.out);
        if (common.path.empty()) {
            out << text;
            out.flush();
        } else {
            write_atomic(common.path, text);
        }
        return kOk;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const ConvergenceError& e) {
        err << "numerical failure: " << e.what() << " (best value " << e.best_value() << ")\n";
        return kNumerical;
    } catch (const std::exception& e) {
        err << "numerical failure: " << e.what() << "\n";
        return kNumerical;
    }
}

}  // namespace qcrb::cli
