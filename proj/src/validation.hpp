#pragma once

#include <string>
#include <vector>

#include "oracle.hpp"
#include "params.hpp"
#include "units.hpp"

namespace nfx {

struct ValidationCheck {
    std::string name;
    double measured = 0;
    double expected = 0;
    double tolerance = 0;  // relative unless the name says otherwise
    bool passed = false;
    std::string detail;
};

struct ValidationOptions {
    std::vector<int> n_sites{32};
    // Golden numbers are evaluated with these constants; tests perturb them.
    UnitSystem units = kUnits;
};

struct ValidationReport {
    std::vector<ValidationCheck> checks;
    std::vector<DispersionMatchReport> dispersion;
    bool passed() const;
};

// Oracle match per N on params, Direct vs Bessel agreement of S and J' on
// params, and the golden line widths on the reference (default) system.
ValidationReport run_validation(const ModelParams& params, const ValidationOptions& options = {});

std::string report_to_json(const ValidationReport& report);

}  // namespace nfx
