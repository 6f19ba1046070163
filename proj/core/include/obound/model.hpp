#ifndef OBOUND_MODEL_HPP
#define OBOUND_MODEL_HPP

#include <optional>
#include <string_view>

namespace obound {

/// Which physical model constrains an unmeasured overlap.
///  - PureQudit: pure states of unrestricted Hilbert-space dimension.
///  - Qubit: two-level systems, pure or mixed (the same interval applies).
///  - Classical: states diagonal in one shared reference basis.
enum class Model { PureQudit, Qubit, Classical };

constexpr const char* to_string(Model m) {
    switch (m) {
        case Model::PureQudit: return "qudit";
        case Model::Qubit: return "qubit";
        case Model::Classical: return "classical";
    }
    return "?";
}

inline std::optional<Model> model_from_string(std::string_view s) {
    if (s == "qudit" || s == "pure-qudit") return Model::PureQudit;
    if (s == "qubit") return Model::Qubit;
    if (s == "classical") return Model::Classical;
    return std::nullopt;
}

} // namespace obound

#endif // OBOUND_MODEL_HPP
