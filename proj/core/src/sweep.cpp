#include "vdwsurf/sweep.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <memory>
#include <mutex>
#include <ostream>
#include <thread>

#include "vdwsurf/forces.hpp"
#include "vdwsurf/potentials.hpp"

namespace vdwsurf {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

// One curve: a name and an evaluator over omega_A. The evaluator owns its
// scenario-derived state by value so curves are self-contained and can be
// called from any thread. A domain_error marks the point as a gap; anything
// else aborts the sweep.
struct Curve {
    std::string name;
    std::function<double(double)> eval;
};

Curve make_curve(const Scenario& s, SweepQuantity q, std::string name) {
    MediumModel medium = scenario_medium(s);
    AtomSpec atom_b = scenario_atom_B(s);
    PairGeometry geom = scenario_geometry(s);
    HostModel host = HostModel::vacuum();
    QuadratureSpec quad = scenario_quadrature(s);
    double z_a = scenario_z_a(s);

    switch (q) {
        case SweepQuantity::u_ratio:
            return {std::move(name), [=](double w) {
                        return u_resonant_ratio(atom_b, geom, medium, host, w);
                    }};
        case SweepQuantity::force_z:
            return {std::move(name), [=](double w) {
                        AtomSpec atom_a = AtomSpec::excited(w, 1.0);
                        return resonant_force(atom_a, atom_b, geom, medium, w).F_z_ratio();
                    }};
        case SweepQuantity::force_par:
            return {std::move(name), [=](double w) {
                        AtomSpec atom_a = AtomSpec::excited(w, 1.0);
                        return resonant_force(atom_a, atom_b, geom, medium, w)
                            .F_parallel_ratio()[0];
                    }};
        case SweepQuantity::cp_potential:
            return {std::move(name), [=](double w) {
                        AtomSpec atom_a = AtomSpec::excited(w, 1.0);
                        double z3 = z_a * z_a * z_a;
                        return casimir_polder(atom_a, z_a, medium, host, w, quad) * z3;
                    }};
    }
    throw std::invalid_argument("sweep: unknown quantity");
}

SweepResult run_curves(const Scenario& s, const std::vector<Curve>& curves,
                       unsigned threads) {
    const int n = s.points;
    const double w0 = s.omega_a_min_rel;
    const double dw = (s.omega_a_max_rel - s.omega_a_min_rel) / (n - 1);

    SweepResult result;
    result.columns.push_back("omega_a_rel");
    for (const Curve& c : curves) result.columns.push_back(c.name);
    result.rows.resize(n);

    std::vector<char> has_gap(n, 0);
    std::atomic<int> next{0};
    std::mutex err_mutex;
    std::exception_ptr first_error;
    std::atomic<bool> failed{false};

    auto worker = [&] {
        for (;;) {
            int i = next.fetch_add(1);
            if (i >= n || failed.load()) return;
            double w = i == n - 1 ? s.omega_a_max_rel : w0 + i * dw;
            SweepRow row{w, {}};
            row.values.reserve(curves.size());
            try {
                for (const Curve& c : curves) {
                    try {
                        row.values.push_back(c.eval(w));
                    } catch (const std::domain_error&) {
                        row.values.push_back(kNan);
                        has_gap[i] = 1;
                    }
                }
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lock(err_mutex);
                if (!first_error) {
                    char buf[64];
                    std::snprintf(buf, sizeof buf, "%.17g", w);
                    first_error = std::make_exception_ptr(std::runtime_error(
                        std::string("sweep failed at omega_a_rel = ") + buf + ": " +
                        e.what()));
                }
                failed.store(true);
                return;
            }
            result.rows[i] = std::move(row);
        }
    };

    unsigned want = threads ? threads : std::thread::hardware_concurrency();
    if (want < 1) want = 1;
    if (want > static_cast<unsigned>(n)) want = n;
    if (want == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(want);
        for (unsigned t = 0; t < want; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (first_error) std::rethrow_exception(first_error);

    for (int i = 0; i < n; ++i)
        if (has_gap[i]) result.gaps.push_back(result.rows[i].omega_a_rel);
    return result;
}

std::runtime_error bad_figure(int id) {
    return std::runtime_error("figure id must be 2, 3, 4 or 5, got " +
                              std::to_string(id));
}

}  // namespace

SweepQuantity parse_quantity(const std::string& name) {
    if (name == "u_ratio") return SweepQuantity::u_ratio;
    if (name == "force_z") return SweepQuantity::force_z;
    if (name == "force_par") return SweepQuantity::force_par;
    if (name == "cp_potential") return SweepQuantity::cp_potential;
    throw std::invalid_argument(
        "quantity must be u_ratio, force_z, force_par or cp_potential, got '" + name +
        "'");
}

SweepResult run_sweep(const Scenario& s, SweepQuantity quantity, unsigned threads) {
    validate_scenario(s);
    const char* name = nullptr;
    switch (quantity) {
        case SweepQuantity::u_ratio: name = "u_ratio"; break;
        case SweepQuantity::force_z: name = "f_z_ratio"; break;
        case SweepQuantity::force_par: name = "f_par_ratio"; break;
        case SweepQuantity::cp_potential: name = "cp_ratio"; break;
    }
    return run_curves(s, {make_curve(s, quantity, name)}, threads);
}

SweepResult figure_sweep(int figure_id, const Scenario& base, unsigned threads) {
    validate_scenario(base);
    Scenario s = base;
    std::vector<Curve> curves;
    switch (figure_id) {
        case 2: {
            s.omega_a_min_rel = 0.7;
            s.omega_a_max_rel = 1.3;
            Scenario par = s, perp = s;
            par.orientation = Orientation::parallel;
            perp.orientation = Orientation::perpendicular;
            curves.push_back(make_curve(par, SweepQuantity::u_ratio, "u_ratio_parallel"));
            curves.push_back(
                make_curve(perp, SweepQuantity::u_ratio, "u_ratio_perpendicular"));
            break;
        }
        case 3: {
            s.omega_a_min_rel = 0.7;
            s.omega_a_max_rel = 1.3;
            s.orientation = Orientation::parallel;
            Scenario low = s, high = s;
            low.omega_b_rel = 0.9;
            high.omega_b_rel = 1.1;
            curves.push_back(
                make_curve(low, SweepQuantity::u_ratio, "u_ratio_omega_b_0p9"));
            curves.push_back(
                make_curve(high, SweepQuantity::u_ratio, "u_ratio_omega_b_1p1"));
            break;
        }
        case 4: {
            s.omega_a_min_rel = 0.97;
            s.omega_a_max_rel = 1.03;
            s.omega_b_rel = 1.0;  // both resonances on top of each other
            Scenario par = s, perp = s;
            par.orientation = Orientation::parallel;
            perp.orientation = Orientation::perpendicular;
            curves.push_back(make_curve(par, SweepQuantity::u_ratio, "u_ratio_parallel"));
            curves.push_back(
                make_curve(perp, SweepQuantity::u_ratio, "u_ratio_perpendicular"));
            break;
        }
        case 5: {
            s.omega_a_min_rel = 0.9;
            s.omega_a_max_rel = 1.1;
            s.orientation = Orientation::parallel;
            s.z_a_alpha = 3.0;  // z_A = 3 alpha_B(0)^{1/3}
            Scenario near = s, far = s;
            near.z_a_rel = 1.0;  // R = z_A
            far.z_a_rel = 0.2;   // R = 5 z_A
            curves.push_back(
                make_curve(near, SweepQuantity::force_z, "f_z_ratio_r_eq_za"));
            curves.push_back(
                make_curve(far, SweepQuantity::force_z, "f_z_ratio_r_eq_5za"));
            break;
        }
        default:
            throw bad_figure(figure_id);
    }
    return run_curves(s, curves, threads);
}

void write_csv(const SweepResult& result, std::ostream& out) {
    for (size_t c = 0; c < result.columns.size(); ++c) {
        if (c) out << ',';
        out << result.columns[c];
    }
    out << '\n';
    char buf[32];
    for (const SweepRow& row : result.rows) {
        std::snprintf(buf, sizeof buf, "%.16e", row.omega_a_rel);
        out << buf;
        for (double v : row.values) {
            if (std::isnan(v)) {
                out << ",nan";
            } else {
                std::snprintf(buf, sizeof buf, "%.16e", v);
                out << ',' << buf;
            }
        }
        out << '\n';
    }
}

void write_csv_file(const SweepResult& result, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    write_csv(result, out);
    if (!out.flush()) throw std::runtime_error("write failed: " + path);
}

void emit_figure(int figure_id, const Scenario& base, const std::string& out_path,
                 unsigned threads) {
    write_csv_file(figure_sweep(figure_id, base, threads), out_path);
}

}  // namespace vdwsurf
