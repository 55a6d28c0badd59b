#include "memchan/cli_runner.hpp"

#include "memchan/capacity.hpp"
#include "memchan/cascade.hpp"
#include "memchan/gaussian.hpp"
#include "memchan/numeric.hpp"
#include "memchan/spectral.hpp"

#include <json.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace memchan {

namespace {

using nlohmann::json;

constexpr double kTwoPi = 6.283185307179586476925286766559;

void check_unit(double v, const char* name) {
    if (!(v >= 0.0 && v <= 1.0))
        throw std::invalid_argument(std::string(name) + " must lie in [0, 1]");
}

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

enum class Format { csv, json };

Format resolve_format(const RunConfig& c) {
    std::string f = c.format;
    if (f.empty()) {
        const bool tabular =
            c.subcommand == "spectrum" || c.subcommand == "eigs" || c.subcommand == "sweep";
        f = tabular ? "csv" : "json";
    }
    if (f == "csv") return Format::csv;
    if (f == "json") return Format::json;
    throw std::invalid_argument("format must be csv or json");
}

// min of the two: tightening either flag tightens the run
double capacity_tol(const RunConfig& c) {
    require(c.quad_tol > 0.0 && c.lagrange_tol > 0.0, "tolerances must be positive");
    return std::min(c.quad_tol, c.lagrange_tol);
}

void emit_json(const json& j, std::ostream& out) { out << j.dump(2) << "\n"; }

int cmd_spectrum(const RunConfig& c, std::ostream& out) {
    check_unit(c.epsilon, "epsilon");
    check_unit(c.eta, "eta");
    require(c.samples >= 2, "samples must be at least 2");
    std::vector<double> zs(static_cast<std::size_t>(c.samples));
    std::vector<double> taus(zs.size());
    for (int i = 0; i < c.samples; ++i) {
        const double z = (i == c.samples - 1) ? kTwoPi : kTwoPi * i / (c.samples - 1);
        zs[static_cast<std::size_t>(i)] = z;
        taus[static_cast<std::size_t>(i)] = symbol_tau(c.epsilon, c.eta, z);
    }
    if (resolve_format(c) == Format::csv) {
        out << "z,tau\n";
        for (std::size_t i = 0; i < zs.size(); ++i)
            out << format_double(zs[i]) << "," << format_double(taus[i]) << "\n";
    } else {
        json j;
        j["subcommand"] = "spectrum";
        j["epsilon"] = c.epsilon;
        j["eta"] = c.eta;
        j["samples"] = c.samples;
        j["z"] = zs;
        j["tau"] = taus;
        emit_json(j, out);
    }
    return 0;
}

int cmd_eigs(const RunConfig& c, std::ostream& out) {
    const ChannelParams params{c.epsilon, c.eta, c.n, c.setup};
    validate(params);
    const Eigen::VectorXd taus = effective_transmissivities_only(memory_matrix(params));
    if (resolve_format(c) == Format::csv) {
        out << "k,tau_k\n";
        for (Eigen::Index k = 0; k < taus.size(); ++k)
            out << (k + 1) << "," << format_double(taus(k)) << "\n";
    } else {
        json j;
        j["subcommand"] = "eigs";
        j["epsilon"] = c.epsilon;
        j["eta"] = c.eta;
        j["n"] = c.n;
        j["setup"] = to_string(c.setup);
        std::vector<double> vals(taus.data(), taus.data() + taus.size());
        j["tau_k"] = vals;
        emit_json(j, out);
    }
    return 0;
}

void emit_capacity(const RunConfig& c, const CapacityResult& r, const char* name,
                   std::ostream& out) {
    if (resolve_format(c) == Format::csv) {
        out << "epsilon,eta,photons,value,lagrange,status\n";
        out << format_double(c.epsilon) << "," << format_double(c.eta) << ","
            << format_double(c.photons) << ","
            << (r.infinite ? "inf" : format_double(r.value)) << ","
            << format_double(r.lagrange) << "," << (r.infinite ? "infinite" : "ok") << "\n";
        return;
    }
    json j;
    j["subcommand"] = name;
    j["epsilon"] = c.epsilon;
    j["eta"] = c.eta;
    j["photons"] = c.photons;
    j["quad_tol"] = c.quad_tol;
    j["lagrange_tol"] = c.lagrange_tol;
    j["infinite"] = r.infinite;
    j["value"] = r.infinite ? json(nullptr) : json(r.value);
    j["lagrange"] = r.lagrange;
    if (c.subcommand == "capacity-quantum") j["unconstrained"] = c.unconstrained;
    emit_json(j, out);
}

int cmd_capacity_classical(const RunConfig& c, std::ostream& out) {
    check_unit(c.epsilon, "epsilon");
    check_unit(c.eta, "eta");
    require(c.photons > 0.0, "photons must be positive");
    const auto r = classical_capacity(c.epsilon, c.eta, c.photons, capacity_tol(c));
    emit_capacity(c, r, "capacity-classical", out);
    return 0;
}

int cmd_capacity_quantum(const RunConfig& c, std::ostream& out) {
    check_unit(c.epsilon, "epsilon");
    check_unit(c.eta, "eta");
    CapacityResult r;
    if (c.unconstrained) {
        r = quantum_capacity_unconstrained(c.epsilon, c.eta, capacity_tol(c));
    } else {
        require(c.photons > 0.0, "photons must be positive");
        r = quantum_capacity(c.epsilon, c.eta, c.photons, capacity_tol(c));
    }
    emit_capacity(c, r, "capacity-quantum", out);
    return 0;
}

int cmd_bounds(const RunConfig& c, std::ostream& out) {
    check_unit(c.epsilon, "epsilon");
    check_unit(c.eta, "eta");
    require(c.photons > 0.0, "photons must be positive");
    require(c.blocks >= 1, "blocks must be at least 1");
    const auto [lo, hi] =
        classical_capacity_bounds(c.epsilon, c.eta, c.photons, c.blocks, capacity_tol(c));
    if (resolve_format(c) == Format::csv) {
        out << "lower,upper,gap\n";
        out << format_double(lo.value) << "," << format_double(hi.value) << ","
            << format_double(hi.value - lo.value) << "\n";
        return 0;
    }
    json j;
    j["subcommand"] = "bounds";
    j["epsilon"] = c.epsilon;
    j["eta"] = c.eta;
    j["photons"] = c.photons;
    j["blocks"] = c.blocks;
    j["quad_tol"] = c.quad_tol;
    j["lagrange_tol"] = c.lagrange_tol;
    j["lower"] = lo.value;
    j["upper"] = hi.value;
    j["gap"] = hi.value - lo.value;
    emit_json(j, out);
    return 0;
}

int cmd_verify(const RunConfig& c, std::ostream& out) {
    const ChannelParams params{c.epsilon, c.eta, c.n, c.setup};
    validate(params);
    require(c.trials >= 1, "trials must be at least 1");
    const double deviation = verify_equivalence(params, c.trials, c.seed);
    const bool pass = deviation <= c.verify_tol;
    if (resolve_format(c) == Format::csv) {
        out << "deviation,tol,pass\n";
        out << format_double(deviation) << "," << format_double(c.verify_tol) << ","
            << (pass ? "true" : "false") << "\n";
    } else {
        json j;
        j["subcommand"] = "verify";
        j["epsilon"] = c.epsilon;
        j["eta"] = c.eta;
        j["n"] = c.n;
        j["setup"] = to_string(c.setup);
        j["trials"] = c.trials;
        j["seed"] = c.seed;
        j["tol"] = c.verify_tol;
        j["deviation"] = deviation;
        j["pass"] = pass;
        emit_json(j, out);
    }
    return pass ? 0 : 5;
}

std::vector<double> sweep_axis(double step) {
    require(step > 0.0 && step <= 1.0, "step must lie in (0, 1]");
    const int cells = static_cast<int>(std::round(1.0 / step));
    require(std::abs(cells * step - 1.0) < 1e-9, "step must divide the unit interval");
    std::vector<double> values(static_cast<std::size_t>(cells) + 1);
    for (int i = 0; i <= cells; ++i) values[static_cast<std::size_t>(i)] = i * step;
    values.back() = 1.0;
    return values;
}

int cmd_sweep(const RunConfig& c, std::ostream& out) {
    GridKind kind;
    if (c.sweep_kind == "classical")
        kind = GridKind::classical;
    else if (c.sweep_kind == "quantum")
        kind = GridKind::quantum_constrained;
    else if (c.sweep_kind == "quantum-unconstrained")
        kind = GridKind::quantum_unconstrained;
    else
        throw std::invalid_argument("kind must be classical, quantum, or quantum-unconstrained");
    if (kind != GridKind::quantum_unconstrained)
        require(c.photons > 0.0, "photons must be positive");
    const auto axis = sweep_axis(c.grid_step);
    const auto table = capacity_grid(axis, axis, kind, c.photons, capacity_tol(c));
    if (resolve_format(c) == Format::csv) {
        out << "epsilon,eta,value,status\n";
        for (const auto& p : table) {
            out << format_double(p.epsilon) << "," << format_double(p.eta) << ",";
            if (!p.ok)
                out << "nan,error";
            else if (p.result.infinite)
                out << "inf,infinite";
            else
                out << format_double(p.result.value) << ",ok";
            out << "\n";
        }
        return 0;
    }
    json rows = json::array();
    for (const auto& p : table) {
        json row;
        row["epsilon"] = p.epsilon;
        row["eta"] = p.eta;
        if (!p.ok) {
            row["value"] = nullptr;
            row["status"] = "error";
        } else if (p.result.infinite) {
            row["value"] = nullptr;
            row["status"] = "infinite";
        } else {
            row["value"] = p.result.value;
            row["status"] = "ok";
        }
        rows.push_back(row);
    }
    json j;
    j["subcommand"] = "sweep";
    j["kind"] = c.sweep_kind;
    j["photons"] = c.photons;
    j["step"] = c.grid_step;
    j["quad_tol"] = c.quad_tol;
    j["lagrange_tol"] = c.lagrange_tol;
    j["rows"] = rows;
    emit_json(j, out);
    return 0;
}

int dispatch(const RunConfig& c, std::ostream& out, std::ostream& err) {
    if (c.subcommand == "spectrum") return cmd_spectrum(c, out);
    if (c.subcommand == "eigs") return cmd_eigs(c, out);
    if (c.subcommand == "capacity-classical") return cmd_capacity_classical(c, out);
    if (c.subcommand == "capacity-quantum") return cmd_capacity_quantum(c, out);
    if (c.subcommand == "bounds") return cmd_bounds(c, out);
    if (c.subcommand == "verify") return cmd_verify(c, out);
    if (c.subcommand == "sweep") return cmd_sweep(c, out);
    err << "error: unknown subcommand: " << c.subcommand << "\n";
    return 1;
}

}  // namespace

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0.0 ? "inf" : "-inf";
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    std::ofstream file;
    std::ostream* sink = &out;
    if (!config.output.empty()) {
        file.open(config.output);
        if (!file) {
            err << "error: cannot open output path: " << config.output << "\n";
            return 4;
        }
        sink = &file;
    }
    int status = 0;
    try {
        status = dispatch(config, *sink, err);
    } catch (const NonConvergence& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
    sink->flush();
    if (!sink->good()) {
        err << "error: write failed\n";
        return 4;
    }
    return status;
}

}  // namespace memchan
