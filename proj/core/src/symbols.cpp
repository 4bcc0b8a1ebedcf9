#include "ncwell/symbols.hpp"

#include <deque>
#include <mutex>
#include <stdexcept>

namespace ncwell {

std::string Dimension::to_string() const {
    if (is_dimensionless()) return "1";
    std::string out;
    auto append = [&out](const char* base, int exp) {
        if (exp == 0) return;
        if (!out.empty()) out += "*";
        out += base;
        if (exp != 1) out += "^" + std::to_string(exp);
    };
    append("M", mass);
    append("L", length);
    append("T", time);
    append("Q", charge);
    return out;
}

namespace {
struct RegistryState {
    std::deque<std::pair<std::string, Dimension>> entries;
    mutable std::mutex mutex;
};
RegistryState& state() {
    static RegistryState s;
    return s;
}
} // namespace

SymbolRegistry& SymbolRegistry::instance() {
    static SymbolRegistry reg;
    return reg;
}

SymbolRegistry::SymbolRegistry() {
    auto& s = state();
    std::lock_guard<std::mutex> lock(s.mutex);
    // Fixed built-in order; ids must match the constants in ncwell::sym.
    s.entries = {
        {"hbar", {1, 2, -1, 0}},   // action
        {"theta", {0, 2, 0, 0}},   // area
        {"eta", {2, 2, -2, 0}},    // momentum^2
        {"m", {1, 0, 0, 0}},       // mass
        {"g", {0, 1, -2, 0}},      // acceleration
        {"k", {1, 0, -2, 0}},      // spring constant
        {"q", {0, 0, 0, 1}},       // charge
        {"B", {1, 0, -1, -1}},     // magnetic field
        {"omega", {0, 0, -1, 0}},  // angular frequency
    };
}

SymbolId SymbolRegistry::register_symbol(const std::string& name, Dimension dim) {
    auto& s = state();
    std::lock_guard<std::mutex> lock(s.mutex);
    for (std::size_t i = 0; i < s.entries.size(); ++i) {
        if (s.entries[i].first == name) {
            if (!(s.entries[i].second == dim))
                throw std::invalid_argument("SymbolRegistry: symbol '" + name +
                                            "' already registered with a different dimension");
            return static_cast<SymbolId>(i);
        }
    }
    s.entries.emplace_back(name, dim);
    return static_cast<SymbolId>(s.entries.size() - 1);
}

std::optional<SymbolId> SymbolRegistry::find(const std::string& name) const {
    auto& s = state();
    std::lock_guard<std::mutex> lock(s.mutex);
    for (std::size_t i = 0; i < s.entries.size(); ++i)
        if (s.entries[i].first == name) return static_cast<SymbolId>(i);
    return std::nullopt;
}

const std::string& SymbolRegistry::name_of(SymbolId id) const {
    auto& s = state();
    std::lock_guard<std::mutex> lock(s.mutex);
    if (id >= s.entries.size()) throw std::out_of_range("SymbolRegistry: unknown symbol id");
    return s.entries[id].first;
}

const Dimension& SymbolRegistry::dimension_of(SymbolId id) const {
    auto& s = state();
    std::lock_guard<std::mutex> lock(s.mutex);
    if (id >= s.entries.size()) throw std::out_of_range("SymbolRegistry: unknown symbol id");
    return s.entries[id].second;
}

std::size_t SymbolRegistry::size() const {
    auto& s = state();
    std::lock_guard<std::mutex> lock(s.mutex);
    return s.entries.size();
}

} // namespace ncwell
