#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ncwell {

using SymbolId = std::uint32_t;

/// Physical dimension exponents over (mass, length, time, charge).
/// Used only for an advisory homogeneity lint on reported expressions;
/// no arithmetic operation ever rejects a value because of its dimension.
struct Dimension {
    int mass = 0;
    int length = 0;
    int time = 0;
    int charge = 0;

    friend bool operator==(const Dimension&, const Dimension&) = default;

    Dimension operator+(const Dimension& o) const {
        return {mass + o.mass, length + o.length, time + o.time, charge + o.charge};
    }
    Dimension operator-(const Dimension& o) const {
        return {mass - o.mass, length - o.length, time - o.time, charge - o.charge};
    }
    Dimension operator*(int k) const { return {mass * k, length * k, time * k, charge * k}; }

    bool is_dimensionless() const { return mass == 0 && length == 0 && time == 0 && charge == 0; }

    std::string to_string() const;
};

/// Built-in scalar parameters, registered in this fixed order so that
/// symbol ids (and therefore every canonical term ordering) are stable
/// across runs and across processes.
namespace sym {
inline constexpr SymbolId hbar = 0;   ///< reduced Planck constant
inline constexpr SymbolId theta = 1;  ///< position-position deformation scale
inline constexpr SymbolId eta = 2;    ///< momentum-momentum deformation scale
inline constexpr SymbolId mass = 3;   ///< particle mass
inline constexpr SymbolId g = 4;      ///< gravitational acceleration
inline constexpr SymbolId k = 5;      ///< harmonic constant (k = m*omega^2)
inline constexpr SymbolId q = 6;      ///< electric charge
inline constexpr SymbolId B = 7;      ///< magnetic field strength
inline constexpr SymbolId omega = 8;  ///< angular frequency
} // namespace sym

/// Append-only registry of scalar parameter symbols.  The nine built-ins
/// above are always present; callers may register additional symbols
/// (e.g. a formal grading variable) and receive fresh ids.
class SymbolRegistry {
public:
    static SymbolRegistry& instance();

    /// Registers a new symbol, or returns the existing id when the name is
    /// already present with the same dimension.  A name collision with a
    /// different dimension is an error.
    SymbolId register_symbol(const std::string& name, Dimension dim);

    std::optional<SymbolId> find(const std::string& name) const;
    const std::string& name_of(SymbolId id) const;
    const Dimension& dimension_of(SymbolId id) const;
    std::size_t size() const;

private:
    SymbolRegistry();
    struct Entry {
        std::string name;
        Dimension dim;
    };
    std::vector<Entry> entries_;
};

} // namespace ncwell
