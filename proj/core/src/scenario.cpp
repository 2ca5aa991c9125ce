#include "vdwsurf/scenario.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <string_view>

namespace vdwsurf {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

double parse_double(std::string_view v, int line, const std::string& key) {
    double out = 0.0;
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc{} || ptr != v.data() + v.size())
        throw ScenarioParseError(line, key + ": not a number: '" + std::string(v) + "'");
    return out;
}

int parse_int(std::string_view v, int line, const std::string& key) {
    int out = 0;
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc{} || ptr != v.data() + v.size())
        throw ScenarioParseError(line, key + ": not an integer: '" + std::string(v) + "'");
    return out;
}

void fail(const std::string& what) { throw ScenarioParseError(0, what); }

}  // namespace

void validate_scenario(const Scenario& s) {
    if (!(std::isfinite(s.eta) && s.eta >= 1.0)) fail("eta must be >= 1");
    if (!(std::isfinite(s.eps0) && s.eps0 > s.eta)) fail("eps0 must exceed eta");
    if (!(std::isfinite(s.gamma_rel) && s.gamma_rel > 0.0)) fail("gamma_rel must be > 0");
    if (!(std::isfinite(s.omega_s_hz) && s.omega_s_hz >= 0.0))
        fail("omega_s_hz must be >= 0");
    if (!(std::isfinite(s.omega_b_rel) && s.omega_b_rel > 0.0))
        fail("omega_b_rel must be > 0");
    // gamma_b_rel = 0 is deliberately legal: the sweep then reports the
    // crossing omega_A = omega_B as a gap instead of a Lorentzian spike.
    if (!(std::isfinite(s.gamma_b_rel) && s.gamma_b_rel >= 0.0))
        fail("gamma_b_rel must be >= 0");
    if (!(std::isfinite(s.alpha_b0_rel) && s.alpha_b0_rel > 0.0))
        fail("alpha_b0_rel must be > 0");
    if (!(std::isfinite(s.z_a_rel) && s.z_a_rel > 0.0)) fail("z_a_rel must be > 0");
    if (!(std::isfinite(s.r_rel) && s.r_rel > 0.0)) fail("r_rel must be > 0");
    if (!(std::isfinite(s.z_a_alpha) && s.z_a_alpha >= 0.0))
        fail("z_a_alpha must be >= 0");
    if (!(std::isfinite(s.omega_a_min_rel) && s.omega_a_min_rel > 0.0))
        fail("omega_a_min_rel must be > 0");
    if (!(std::isfinite(s.omega_a_max_rel) && s.omega_a_max_rel > s.omega_a_min_rel))
        fail("omega_a_max_rel must exceed omega_a_min_rel");
    if (s.points < 2) fail("points must be >= 2");
    if (!(std::isfinite(s.rel_tol) && s.rel_tol > 0.0)) fail("rel_tol must be > 0");
}

Scenario parse_scenario(const std::string& text, const Scenario& base) {
    Scenario s = base;
    int line_no = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t eol = text.find('\n', pos);
        std::string_view line(text.data() + pos,
                              (eol == std::string::npos ? text.size() : eol) - pos);
        pos = eol == std::string::npos ? text.size() + 1 : eol + 1;
        ++line_no;

        if (size_t hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        size_t eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ScenarioParseError(line_no, "expected 'key = value'");
        std::string key{trim(line.substr(0, eq))};
        std::string_view value = trim(line.substr(eq + 1));
        if (key.empty()) throw ScenarioParseError(line_no, "empty key");
        if (value.empty()) throw ScenarioParseError(line_no, key + ": empty value");

        if (key == "eta") s.eta = parse_double(value, line_no, key);
        else if (key == "eps0") s.eps0 = parse_double(value, line_no, key);
        else if (key == "gamma_rel") s.gamma_rel = parse_double(value, line_no, key);
        else if (key == "omega_s_hz") s.omega_s_hz = parse_double(value, line_no, key);
        else if (key == "omega_b_rel") s.omega_b_rel = parse_double(value, line_no, key);
        else if (key == "gamma_b_rel") s.gamma_b_rel = parse_double(value, line_no, key);
        else if (key == "alpha_b0_rel") s.alpha_b0_rel = parse_double(value, line_no, key);
        else if (key == "orientation") {
            if (value == "parallel") s.orientation = Orientation::parallel;
            else if (value == "perpendicular") s.orientation = Orientation::perpendicular;
            else
                throw ScenarioParseError(
                    line_no, "orientation must be 'parallel' or 'perpendicular'");
        }
        else if (key == "z_a_rel") s.z_a_rel = parse_double(value, line_no, key);
        else if (key == "r_rel") s.r_rel = parse_double(value, line_no, key);
        else if (key == "z_a_alpha") s.z_a_alpha = parse_double(value, line_no, key);
        else if (key == "omega_a_min_rel")
            s.omega_a_min_rel = parse_double(value, line_no, key);
        else if (key == "omega_a_max_rel")
            s.omega_a_max_rel = parse_double(value, line_no, key);
        else if (key == "points") s.points = parse_int(value, line_no, key);
        else if (key == "rel_tol") s.rel_tol = parse_double(value, line_no, key);
        else throw ScenarioParseError(line_no, "unknown key '" + key + "'");
    }
    validate_scenario(s);
    return s;
}

std::string serialize_scenario(const Scenario& s) {
    char buf[64];
    auto num = [&buf](double v) {
        std::snprintf(buf, sizeof buf, "%.17g", v);
        return std::string(buf);
    };
    std::string out;
    out += "eta = " + num(s.eta) + "\n";
    out += "eps0 = " + num(s.eps0) + "\n";
    out += "gamma_rel = " + num(s.gamma_rel) + "\n";
    out += "omega_s_hz = " + num(s.omega_s_hz) + "\n";
    out += "omega_b_rel = " + num(s.omega_b_rel) + "\n";
    out += "gamma_b_rel = " + num(s.gamma_b_rel) + "\n";
    out += "alpha_b0_rel = " + num(s.alpha_b0_rel) + "\n";
    out += std::string("orientation = ") +
           (s.orientation == Orientation::parallel ? "parallel" : "perpendicular") + "\n";
    out += "z_a_rel = " + num(s.z_a_rel) + "\n";
    out += "r_rel = " + num(s.r_rel) + "\n";
    out += "z_a_alpha = " + num(s.z_a_alpha) + "\n";
    out += "omega_a_min_rel = " + num(s.omega_a_min_rel) + "\n";
    out += "omega_a_max_rel = " + num(s.omega_a_max_rel) + "\n";
    out += "points = " + std::to_string(s.points) + "\n";
    out += "rel_tol = " + num(s.rel_tol) + "\n";
    return out;
}

MediumModel scenario_medium(const Scenario& s) {
    return from_observables(s.eta, s.eps0, 1.0, s.gamma_rel);
}

double scenario_z_a(const Scenario& s) { return s.z_a_rel * s.r_rel; }

double scenario_alpha_b0(const Scenario& s) {
    if (s.z_a_alpha > 0.0) {
        double cube_root = scenario_z_a(s) / s.z_a_alpha;
        return cube_root * cube_root * cube_root;
    }
    return s.alpha_b0_rel;
}

AtomSpec scenario_atom_B(const Scenario& s) {
    return AtomSpec::ground_from_alpha0(s.omega_b_rel, s.gamma_b_rel,
                                        scenario_alpha_b0(s));
}

AtomSpec scenario_atom_A(const Scenario& s, double omega_a_rel) {
    (void)s;
    return AtomSpec::excited(omega_a_rel, 1.0);
}

PairGeometry scenario_geometry(const Scenario& s) {
    return build_pair_geometry(scenario_z_a(s), s.orientation, s.r_rel);
}

QuadratureSpec scenario_quadrature(const Scenario& s) {
    QuadratureSpec q;
    q.rel_tol = s.rel_tol;
    return q;
}

}  // namespace vdwsurf
