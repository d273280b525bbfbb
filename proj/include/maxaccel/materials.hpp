#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "maxaccel/units.hpp"

namespace maxaccel::london {

/// Superelectron parameters of a type-I superconductor, Gaussian-CGS.
struct Material {
    std::string name;
    Quantity mass;                  // g
    Quantity charge;                // esu, magnitude
    Quantity density;               // cm^-3
    Quantity critical_field;        // G
    Quantity critical_temperature;  // K
    Quantity fermi_energy;          // erg
    std::string source;

    /// Electron-convention material (m = m_e, e = elementary charge).
    /// Throws DomainError unless every parameter is positive.
    static Material electron_gas(std::string name, Quantity density, Quantity critical_field,
                                 Quantity critical_temperature, Quantity fermi_energy);

    /// Electron-convention material whose density reproduces the London
    /// depth `penetration_depth`.
    static Material from_penetration_depth(std::string name, Quantity penetration_depth,
                                           Quantity critical_field, Quantity critical_temperature,
                                           Quantity fermi_energy);

    /// Cooper-pair convention: m -> 2m, e -> 2e, n -> n/2. The London depth
    /// is unchanged.
    Material as_cooper_pairs() const;

    /// Throws DomainError/DimensionError on nonpositive or mis-dimensioned fields.
    void validate() const;

    /// Bohr magneton of this carrier, e hbar / (2 m c).
    Quantity bohr_magneton() const;
};

/// Presets shipped in data/materials.txt.
class MaterialCatalog {
  public:
    static MaterialCatalog parse(std::string_view text);
    static const MaterialCatalog& presets();

    /// Case-sensitive lookup; throws LookupError listing the known names.
    const Material& find(std::string_view name) const;
    const std::vector<Material>& materials() const { return materials_; }

  private:
    std::vector<Material> materials_;
};

/// Parameter set used by the reproduction table: London depth 5e-6 cm,
/// eps_F = 4.5e-12 erg, B_c = 500 G, T_c = 3.7 K. Reconstructed values.
Material reconstruction_material();

/// beta = (4 pi n e^2 / (m c^2))^(1/2), the inverse London depth (cm^-1).
Quantity beta(const Material& material);
Quantity penetration_depth(const Material& material);

}  // namespace maxaccel::london
