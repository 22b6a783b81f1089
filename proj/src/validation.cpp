#include "validation.hpp"

#include <cmath>
#include <sstream>

#include <json.hpp>

#include "excitons.hpp"
#include "lattice_sums.hpp"

namespace nfx {

namespace {

ValidationCheck relative_check(std::string name, double measured, double expected, double tolerance) {
    ValidationCheck c;
    c.name = std::move(name);
    c.measured = measured;
    c.expected = expected;
    c.tolerance = tolerance;
    c.passed = std::abs(measured - expected) <= tolerance * std::abs(expected);
    return c;
}

std::string format_k(double k) {
    std::ostringstream os;
    os << k;
    return os.str();
}

}  // namespace

bool ValidationReport::passed() const {
    for (const auto& c : checks)
        if (!c.passed) return false;
    return !checks.empty();
}

ValidationReport run_validation(const ModelParams& params, const ValidationOptions& options) {
    ValidationReport report;

    for (int n : options.n_sites) {
        DispersionMatchReport match = compare_dispersion(params, n);
        ValidationCheck c;
        c.name = "oracle N=" + std::to_string(n) + " max abs error (eV)";
        c.measured = match.max_error;
        c.expected = 0;
        c.tolerance = match.tolerance;
        c.passed = match.passed;
        c.detail = "worst k = " + format_k(match.worst_k);
        report.checks.push_back(c);
        report.dispersion.push_back(std::move(match));
    }

    for (double k : {1e-4, 5e-4, 1e-3}) {
        const CouplingValue sd = s_function(k, params.geometry, SumMethod::Direct, params.numerics);
        const CouplingValue sb = s_function(k, params.geometry, SumMethod::BesselSeries, params.numerics);
        report.checks.push_back(relative_check("S direct vs bessel k=" + format_k(k), sd.value, sb.value, 1e-8));
        const CouplingValue jd = inter_dynamical_matrix(k, params, SumMethod::Direct);
        const CouplingValue jb = inter_dynamical_matrix(k, params, SumMethod::BesselSeries);
        report.checks.push_back(relative_check("J' direct vs bessel k=" + format_k(k), jd.value, jb.value, 1e-8));
    }

    const ModelParams reference;
    report.checks.push_back(relative_check("single-atom line width (eV)",
                                           single_atom_damping(reference, options.units), 2.5e-9, 0.01));
    report.checks.push_back(relative_check(
        "symmetric exciton line width k=1e-6, theta=90 (eV)",
        exciton_damping(1e-6, kPi / 2, ExcitonLabel::Symmetric, reference, options.units), 2.32e-8, 0.01));
    return report;
}

std::string report_to_json(const ValidationReport& report) {
    nlohmann::ordered_json doc;
    doc["passed"] = report.passed();
    auto& checks = doc["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : report.checks) {
        checks.push_back({{"name", c.name},
                          {"measured", c.measured},
                          {"expected", c.expected},
                          {"tolerance", c.tolerance},
                          {"passed", c.passed},
                          {"detail", c.detail}});
    }
    auto& disp = doc["dispersion"] = nlohmann::ordered_json::array();
    for (const auto& m : report.dispersion) {
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (const auto& r : m.rows) {
            rows.push_back({{"k", r.k},
                            {"analytic_upper", r.analytic_upper},
                            {"analytic_lower", r.analytic_lower},
                            {"eigen_upper", r.eigen_upper},
                            {"eigen_lower", r.eigen_lower},
                            {"abs_error", r.abs_error}});
        }
        disp.push_back({{"n_sites", m.n_sites},
                        {"theta_rad", m.theta},
                        {"max_error", m.max_error},
                        {"worst_k", m.worst_k},
                        {"passed", m.passed},
                        {"rows", rows}});
    }
    return doc.dump(2);
}

}  // namespace nfx
