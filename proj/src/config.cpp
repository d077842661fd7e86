#include "hydroprim/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "hydroprim/diagnostics.hpp"
#include "hydroprim/experiments.hpp"

namespace hydroprim {

namespace {

[[noreturn]] void fail(int line, const std::string& msg) {
    throw ConfigError("config line " + std::to_string(line) + ": " + msg);
}

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

double parse_double(const std::string& v, int line, const std::string& key) {
    try {
        std::size_t pos = 0;
        const double x = std::stod(v, &pos);
        if (pos != v.size()) fail(line, "trailing characters in value for " + key);
        if (!std::isfinite(x)) fail(line, "non-finite value for " + key);
        return x;
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception&) {
        fail(line, "expected a number for " + key + ", got '" + v + "'");
    }
}

long parse_int(const std::string& v, int line, const std::string& key) {
    try {
        std::size_t pos = 0;
        const long x = std::stol(v, &pos);
        if (pos != v.size()) fail(line, "trailing characters in value for " + key);
        return x;
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception&) {
        fail(line, "expected an integer for " + key + ", got '" + v + "'");
    }
}

}  // namespace

RunConfig parse_config(const std::string& text) {
    RunConfig cfg;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    std::map<std::string, int> seen;

    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) fail(lineno, "expected 'section.key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (key.empty() || val.empty()) fail(lineno, "empty key or value");
        if (seen.count(key)) fail(lineno, "duplicate key " + key + " (first at line " +
                                              std::to_string(seen[key]) + ")");
        seen[key] = lineno;

        if (key == "grid.nx") cfg.grid.nx = static_cast<int>(parse_int(val, lineno, key));
        else if (key == "grid.ny") cfg.grid.ny = static_cast<int>(parse_int(val, lineno, key));
        else if (key == "grid.nz") cfg.grid.nz = static_cast<int>(parse_int(val, lineno, key));
        else if (key == "grid.lx") cfg.grid.lx = parse_double(val, lineno, key);
        else if (key == "grid.ly") cfg.grid.ly = parse_double(val, lineno, key);
        else if (key == "grid.h") cfg.grid.h = parse_double(val, lineno, key);
        else if (key == "model.kind") {
            if (val == "classical") cfg.model_kind = ModelKind::Classical;
            else if (val == "partial") cfg.model_kind = ModelKind::PartialViscosity;
            else if (val == "spectral_eddy") cfg.model_kind = ModelKind::SpectralEddy;
            else fail(lineno, "model.kind must be classical|partial|spectral_eddy");
        } else if (key == "physics.mu") cfg.mu = parse_double(val, lineno, key);
        else if (key == "physics.nu") cfg.nu = parse_double(val, lineno, key);
        else if (key == "physics.mu_delta") cfg.mu_delta = parse_double(val, lineno, key);
        else if (key == "physics.nu_delta") cfg.nu_delta = parse_double(val, lineno, key);
        else if (key == "physics.f") cfg.f = parse_double(val, lineno, key);
        else if (key == "physics.rho0") cfg.rho0 = parse_double(val, lineno, key);
        else if (key == "physics.g") cfg.g = parse_double(val, lineno, key);
        else if (key == "filter.m_cut") cfg.filter.m_cut = static_cast<int>(parse_int(val, lineno, key));
        else if (key == "filter.n_cut") cfg.filter.n_cut = static_cast<int>(parse_int(val, lineno, key));
        else if (key == "time.dt") cfg.dt = parse_double(val, lineno, key);
        else if (key == "time.t_end") cfg.t_end = parse_double(val, lineno, key);
        else if (key == "time.scheme") {
            if (val == "rk3if") cfg.scheme = Scheme::RK3IF;
            else if (val == "eulerif") cfg.scheme = Scheme::EulerIF;
            else fail(lineno, "time.scheme must be rk3if|eulerif");
        } else if (key == "init.kind") {
            if (val == "remark2") cfg.init_kind = InitKind::Remark2;
            else if (val == "random_low") cfg.init_kind = InitKind::RandomLow;
            else if (val == "random_banded") cfg.init_kind = InitKind::RandomBanded;
            else if (val == "file") cfg.init_kind = InitKind::File;
            else fail(lineno, "init.kind must be remark2|random_low|random_banded|file");
        } else if (key == "init.seed") {
            const long s = parse_int(val, lineno, key);
            if (s < 0) fail(lineno, "init.seed must be nonnegative");
            cfg.seed = static_cast<std::uint64_t>(s);
        } else if (key == "init.path") cfg.init_path = val;
        else if (key == "forcing.kind") {
            if (val == "zero") cfg.forcing_kind = ForcingKind::Zero;
            else if (val == "modal") cfg.forcing_kind = ForcingKind::Modal;
            else fail(lineno, "forcing.kind must be zero|modal");
        } else if (key == "output.dir") cfg.output_dir = val;
        else if (key == "output.snapshot_every") cfg.snapshot_every = parse_int(val, lineno, key);
        else if (key == "output.csv_every") cfg.csv_every = parse_int(val, lineno, key);
        else if (key == "sweep.mu_delta") {
            std::istringstream vs(val);
            std::string item;
            while (std::getline(vs, item, ',')) {
                item = trim(item);
                if (item.empty()) fail(lineno, "empty entry in sweep.mu_delta");
                cfg.sweep_mu_delta.push_back(parse_double(item, lineno, key));
            }
        } else
            fail(lineno, "unknown key '" + key + "'");
    }

    // Cross-field validation (constraint violations reported without lines).
    try {
        cfg.grid.validate();
        cfg.filter.validate_against(cfg.grid);
        cfg.model().validate();
        cfg.stepper().validate();
    } catch (const std::exception& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    if (cfg.snapshot_every < 0 || cfg.csv_every < 0)
        throw ConfigError("config: output intervals must be nonnegative");
    if (cfg.init_kind == InitKind::File && cfg.init_path.empty())
        throw ConfigError("config: init.kind = file requires init.path");
    for (double s : cfg.sweep_mu_delta)
        if (s < 0.0) throw ConfigError("config: sweep.mu_delta entries must be nonnegative");
    return cfg;
}

RunConfig parse_config_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("config: cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

namespace {
std::string fmt(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}
}  // namespace

std::string serialize_config(const RunConfig& c) {
    std::ostringstream o;
    o << "grid.nx = " << c.grid.nx << "\ngrid.ny = " << c.grid.ny << "\ngrid.nz = " << c.grid.nz
      << "\ngrid.lx = " << fmt(c.grid.lx) << "\ngrid.ly = " << fmt(c.grid.ly)
      << "\ngrid.h = " << fmt(c.grid.h) << "\n";
    o << "model.kind = "
      << (c.model_kind == ModelKind::Classical
              ? "classical"
              : c.model_kind == ModelKind::PartialViscosity ? "partial" : "spectral_eddy")
      << "\n";
    o << "physics.mu = " << fmt(c.mu) << "\nphysics.nu = " << fmt(c.nu)
      << "\nphysics.mu_delta = " << fmt(c.mu_delta) << "\nphysics.nu_delta = " << fmt(c.nu_delta)
      << "\nphysics.f = " << fmt(c.f) << "\nphysics.rho0 = " << fmt(c.rho0)
      << "\nphysics.g = " << fmt(c.g) << "\n";
    o << "filter.m_cut = " << c.filter.m_cut << "\nfilter.n_cut = " << c.filter.n_cut << "\n";
    o << "time.dt = " << fmt(c.dt) << "\ntime.t_end = " << fmt(c.t_end)
      << "\ntime.scheme = " << (c.scheme == Scheme::RK3IF ? "rk3if" : "eulerif") << "\n";
    o << "init.kind = "
      << (c.init_kind == InitKind::Remark2
              ? "remark2"
              : c.init_kind == InitKind::RandomLow
                    ? "random_low"
                    : c.init_kind == InitKind::RandomBanded ? "random_banded" : "file")
      << "\ninit.seed = " << c.seed << "\n";
    if (!c.init_path.empty()) o << "init.path = " << c.init_path << "\n";
    o << "forcing.kind = " << (c.forcing_kind == ForcingKind::Zero ? "zero" : "modal") << "\n";
    o << "output.dir = " << c.output_dir << "\noutput.snapshot_every = " << c.snapshot_every
      << "\noutput.csv_every = " << c.csv_every << "\n";
    if (!c.sweep_mu_delta.empty()) {
        o << "sweep.mu_delta = ";
        for (std::size_t i = 0; i < c.sweep_mu_delta.size(); ++i)
            o << (i ? "," : "") << fmt(c.sweep_mu_delta[i]);
        o << "\n";
    }
    return o.str();
}

State make_initial_state(const RunConfig& cfg) {
    switch (cfg.init_kind) {
        case InitKind::Remark2:
            return exact_solution_state(cfg.grid, 1.0);
        case InitKind::RandomLow: {
            EnsembleSpec spec;
            spec.seed = cfg.seed;
            spec.m_max = cfg.filter.m_cut;
            spec.n_max = cfg.filter.n_cut;
            return remove_mean(random_state(cfg.grid, spec, 0));
        }
        case InitKind::RandomBanded: {
            EnsembleSpec spec;
            spec.seed = cfg.seed;
            return remove_mean(random_state(cfg.grid, spec, 0));
        }
        case InitKind::File:
            return read_snapshot(cfg.init_path, &cfg.grid);
    }
    throw ConfigError("config: unhandled init.kind");
}

Forcing make_forcing(const RunConfig& cfg) {
    if (cfg.forcing_kind == ForcingKind::Zero) return Forcing::none(cfg.grid);
    // Fixed modal forcing: F_u = 0.01 cos(x') cos(y'), F_v = 0, mean-zero.
    FieldPair f(cfg.grid);
    const double amp = 0.01;
    f.u.at_freq(1, 1, 0) = cplx{0.25 * amp, 0.0};
    f.u.at_freq(-1, -1, 0) = cplx{0.25 * amp, 0.0};
    f.u.at_freq(1, -1, 0) = cplx{0.25 * amp, 0.0};
    f.u.at_freq(-1, 1, 0) = cplx{0.25 * amp, 0.0};
    return Forcing::of(std::move(f));
}

}  // namespace hydroprim
