#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "maxaccel/units.hpp"

namespace maxaccel {

struct ConstantEntry {
    std::string name;
    Quantity value;
    std::string unit;
    std::string source;
    bool derived = false;
};

/// Constants loaded from data/constants.txt plus the derived entries
/// mu_B = e hbar / (2 m_e c) and m_P = (hbar c / G)^(1/2).
class ConstantsTable {
  public:
    /// Parses the whitespace-separated table format (key value unit source...).
    static ConstantsTable parse(std::string_view text);

    /// The pinned table compiled into the library.
    static const ConstantsTable& pinned();

    const Quantity& get(std::string_view name) const;
    const std::vector<ConstantEntry>& entries() const { return entries_; }

  private:
    std::vector<ConstantEntry> entries_;
};

/// Lookup by name in the pinned table. Throws LookupError for unknown names.
Quantity constant(std::string_view name);

/// Plain-double view of the pinned table, CGS. Used on hot paths where
/// the dimension is fixed by construction.
struct PhysicalConstants {
    double hbar;           // erg s
    double c;              // cm/s
    double e;              // esu
    double m_e;            // g
    double m_p;            // g
    double k_B;            // erg/K
    double G;              // cm^3 g^-1 s^-2
    double electron_volt;  // erg
    double mu_B;           // erg/G
    double m_P;            // g
};

const PhysicalConstants& constants();

}  // namespace maxaccel
