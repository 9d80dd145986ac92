#ifndef VLEQ_TYPES_HPP
#define VLEQ_TYPES_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace vleq {

// Universal gas constant, 2019 SI exact [J/(mol K)].
inline constexpr double GAS_CONSTANT = 8.31446261815324;

// Ideal-gas caloric data: two-range 9-coefficient polynomial record.
// cp/R = a1/T^2 + a2/T + a3 + a4 T + a5 T^2 + a6 T^3 + a7 T^4,
// a8 = integration constant of H/R [K], a9 = integration constant of S/R [-].
struct NasaRecord {
    double t_low = 0.0;
    double t_mid = 0.0;
    double t_high = 0.0;
    double coef[2][9] = {};
};

struct Component {
    std::string name;
    double tc = 0.0;     // critical temperature [K]
    double pc = 0.0;     // critical pressure [Pa]
    double omega = 0.0;  // acentric factor [-]
    NasaRecord nasa;
};

// Cubic EoS family constants: p = RT/(v-b) - a/((v+d1 b)(v+d2 b)).
struct EosSpec {
    enum class AlphaForm { PengRobinson, SoaveRedlichKwong };

    double delta1 = 0.0;
    double delta2 = 0.0;
    double omega_a = 0.0;
    double omega_b = 0.0;
    AlphaForm alpha_form = AlphaForm::PengRobinson;

    static EosSpec peng_robinson();
    static EosSpec soave_redlich_kwong();

    // Acentric-factor polynomial c(omega) of the alpha function.
    double c_of_omega(double omega) const;
};

struct Mixture {
    std::vector<Component> components;
    std::vector<double> z_hat;            // overall mole fractions, sum 1
    std::vector<double> kappa;            // n x n binary interaction matrix, row-major
    EosSpec eos = EosSpec::peng_robinson();

    std::size_t size() const { return components.size(); }
    double kappa_at(std::size_t i, std::size_t j) const { return kappa[i * size() + j]; }

    // Throws std::invalid_argument when an invariant is broken.
    void validate() const;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line)
        : std::runtime_error(what + " (line " + std::to_string(line) + ")"), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

}  // namespace vleq

#endif
