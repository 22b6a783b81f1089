#include "params.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "error.hpp"

namespace nfx {

namespace {

using json = nlohmann::json;

enum class Kind { Real, Integer };

struct KeySpec {
    const char* name;
    Kind kind;
    double ConfigValues::*real = nullptr;
    int ConfigValues::*integer = nullptr;
    long ConfigValues::*wide = nullptr;
};

const std::vector<KeySpec>& key_table() {
    static const std::vector<KeySpec> table = {
        {"a_angstrom", Kind::Real, &ConfigValues::a_angstrom},
        {"d_over_a", Kind::Real, &ConfigValues::d_over_a},
        {"b_angstrom", Kind::Real, &ConfigValues::b_angstrom},
        {"n_sites", Kind::Integer, nullptr, &ConfigValues::n_sites},
        {"mu_eA", Kind::Real, &ConfigValues::mu_eA},
        {"theta_deg", Kind::Real, &ConfigValues::theta_deg},
        {"mu_y_eA", Kind::Real, &ConfigValues::mu_y_eA},
        {"E_A_eV", Kind::Real, &ConfigValues::E_A_eV},
        {"epsilon", Kind::Real, &ConfigValues::epsilon},
        {"S_over_4pi_a2", Kind::Real, &ConfigValues::S_over_4pi_a2},
        {"u_b", Kind::Real, &ConfigValues::u_b},
        {"hbar_gamma_ph_eV", Kind::Real, &ConfigValues::hbar_gamma_ph_eV},
        {"hbar_gamma_eV", Kind::Real, &ConfigValues::hbar_gamma_eV},
        {"sum_tol", Kind::Real, &ConfigValues::sum_tol},
        {"max_terms", Kind::Integer, nullptr, nullptr, &ConfigValues::max_terms},
        {"bessel_n_max", Kind::Integer, nullptr, &ConfigValues::bessel_n_max},
        {"root_tol", Kind::Real, &ConfigValues::root_tol},
    };
    return table;
}

const KeySpec* find_key(std::string_view name) {
    for (const auto& spec : key_table())
        if (name == spec.name) return &spec;
    return nullptr;
}

void require(bool ok, const char* invariant, double value) {
    if (ok) return;
    std::ostringstream os;
    os.precision(17);
    os << "invariant violated: " << invariant << " (got " << value << ")";
    throw Error(ErrorCode::Constraint, os.str());
}

void check_invariants(const ConfigValues& c) {
    require(c.a_angstrom > 0, "a > 0", c.a_angstrom);
    require(c.d_over_a > 0, "d > 0", c.d_over_a);
    require(c.d_over_a > 1, "d > a", c.d_over_a);
    require(c.b_angstrom >= 0, "b >= 0", c.b_angstrom);
    require(c.n_sites >= 4, "n_sites >= 4", c.n_sites);
    require(c.mu_eA >= 0, "mu >= 0", c.mu_eA);
    require(std::abs(c.mu_y_eA) <= c.mu_eA, "|mu_y| <= mu", c.mu_y_eA);
    require(std::isfinite(c.theta_deg), "theta finite", c.theta_deg);
    require(c.E_A_eV > 0, "E_A > 0", c.E_A_eV);
    require(c.epsilon >= 1, "epsilon >= 1", c.epsilon);
    require(c.S_over_4pi_a2 > 0, "S > 0", c.S_over_4pi_a2);
    require(c.u_b > 0 && c.u_b <= 1, "0 < u_b <= 1", c.u_b);
    require(c.hbar_gamma_ph_eV >= 0, "gamma_ph >= 0", c.hbar_gamma_ph_eV);
    require(c.hbar_gamma_eV > 0, "gamma > 0", c.hbar_gamma_eV);
    require(c.sum_tol > 0, "sum_tol > 0", c.sum_tol);
    require(c.max_terms >= 1, "max_terms >= 1", static_cast<double>(c.max_terms));
    require(c.bessel_n_max >= 0, "bessel_n_max >= 0", c.bessel_n_max);
    require(c.root_tol > 0, "root_tol > 0", c.root_tol);
}

}  // namespace

double DipoleOrientation::in_plane_magnitude() const {
    return std::sqrt(std::max(0.0, mu * mu - mu_y * mu_y));
}

namespace {

// cos/sin that return exact axis values at quarter turns, so 90 deg gives mu_x == 0.
std::pair<double, double> axis_exact_cos_sin(double theta) {
    const double quarters = theta / (0.5 * kPi);
    const double nearest = std::nearbyint(quarters);
    if (std::abs(quarters - nearest) < 1e-15) {
        switch (static_cast<long>(nearest) & 3) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
        }
    }
    return {std::cos(theta), std::sin(theta)};
}

}  // namespace

double DipoleOrientation::mu_x() const { return in_plane_magnitude() * axis_exact_cos_sin(theta).first; }
double DipoleOrientation::mu_z() const { return in_plane_magnitude() * axis_exact_cos_sin(theta).second; }

double resonance_k0(double atom_energy, double epsilon) {
    if (!(atom_energy > 0) || !(epsilon >= 1))
        throw Error(ErrorCode::Domain, "resonance_k0 requires E_A > 0 and epsilon >= 1");
    return std::sqrt(epsilon) * atom_energy / kUnits.hbar_c;
}

ModelParams::ModelParams(const ConfigValues& c) : config_(c) {
    check_invariants(c);
    geometry = {c.a_angstrom, c.d_over_a * c.a_angstrom, c.b_angstrom, c.n_sites};
    dipole = {c.mu_eA, c.theta_deg * kPi / 180.0, c.mu_y_eA};
    fiber = {c.epsilon, resonance_k0(c.E_A_eV, c.epsilon),
             c.S_over_4pi_a2 * 4.0 * kPi * c.a_angstrom * c.a_angstrom, c.u_b, c.hbar_gamma_ph_eV};
    atom_energy = c.E_A_eV;
    edge_coupling = c.hbar_gamma_eV;
    numerics.sum_tol = c.sum_tol;
    numerics.max_terms = c.max_terms;
    numerics.bessel_n_max = c.bessel_n_max;
    numerics.root_tol = c.root_tol;
}

ModelParams ModelParams::with_theta(double theta) const {
    ModelParams copy = *this;
    copy.dipole = DipoleOrientation::in_plane(dipole.mu, theta);
    return copy;
}

const std::vector<std::string>& config_keys() {
    static const std::vector<std::string> keys = [] {
        std::vector<std::string> out;
        for (const auto& spec : key_table()) out.emplace_back(spec.name);
        return out;
    }();
    return keys;
}

LoadedConfig load_config(std::string_view text) {
    json doc;
    bool blank = text.find_first_not_of(" \t\r\n") == std::string_view::npos;
    if (blank) {
        doc = json::object();
    } else {
        try {
            doc = json::parse(text.begin(), text.end());
        } catch (const json::parse_error& e) {
            throw Error(ErrorCode::Parse, std::string("config: ") + e.what());
        }
    }
    if (!doc.is_object()) throw Error(ErrorCode::Parse, "config: document must be a flat JSON object");

    ConfigValues values;
    std::vector<std::string> defaulted;
    for (const auto& [key, value] : doc.items()) {
        if (!find_key(key)) throw Error(ErrorCode::Parse, "config: unknown key '" + key + "'");
    }
    for (const auto& spec : key_table()) {
        auto it = doc.find(spec.name);
        if (it == doc.end()) {
            defaulted.emplace_back(spec.name);
            continue;
        }
        if (!it->is_number())
            throw Error(ErrorCode::Parse, std::string("config: key '") + spec.name + "' must be a number");
        double v = it->get<double>();
        if (spec.kind == Kind::Integer) {
            if (v != std::floor(v) || std::abs(v) > 9.0e15)
                throw Error(ErrorCode::Parse, std::string("config: key '") + spec.name + "' must be an integer");
            if (spec.integer) {
                if (std::abs(v) > std::numeric_limits<int>::max())
                    throw Error(ErrorCode::Parse, std::string("config: key '") + spec.name + "' out of range");
                values.*spec.integer = static_cast<int>(v);
            } else {
                values.*spec.wide = static_cast<long>(v);
            }
        } else {
            values.*spec.real = v;
        }
    }
    return {ModelParams(values), std::move(defaulted)};
}

std::string serialize_config(const ModelParams& params) {
    const ConfigValues& c = params.config();
    // Hand-rolled so the output is ordered like the key table and carries 17 digits.
    std::ostringstream os;
    os.precision(17);
    os << "{";
    bool first = true;
    for (const auto& spec : key_table()) {
        if (!first) os << ", ";
        first = false;
        os << '"' << spec.name << "\": ";
        if (spec.real) os << c.*spec.real;
        else if (spec.integer) os << c.*spec.integer;
        else os << c.*spec.wide;
    }
    os << "}";
    return os.str();
}

double config_value(const ConfigValues& values, std::string_view key) {
    const KeySpec* spec = find_key(key);
    if (!spec) throw Error(ErrorCode::InvalidArgument, "unknown config key '" + std::string(key) + "'");
    if (spec->real) return values.*spec->real;
    if (spec->integer) return values.*spec->integer;
    return static_cast<double>(values.*spec->wide);
}

ConfigValues with_config_value(ConfigValues values, std::string_view key, double value) {
    const KeySpec* spec = find_key(key);
    if (!spec) throw Error(ErrorCode::InvalidArgument, "unknown config key '" + std::string(key) + "'");
    if (spec->real) {
        values.*spec->real = value;
    } else {
        if (value != std::floor(value))
            throw Error(ErrorCode::InvalidArgument, "config key '" + std::string(key) + "' must be an integer");
        if (spec->integer) values.*spec->integer = static_cast<int>(value);
        else values.*spec->wide = static_cast<long>(value);
    }
    return values;
}

}  // namespace nfx
