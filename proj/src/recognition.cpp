#include "phcavd/recognition.hpp"

namespace phcavd {

RecognitionResult is_phca(const Graph& g) {
    if (auto o = find_any_obstruction(g)) return {false, std::move(o)};
    return {true, std::nullopt};
}

bool is_interval_component(const Graph& c) {
    if (connected_components(c).size() > 1)
        throw std::logic_error("is_interval_component: graph is not connected");
    auto rec = is_phca(c);
    if (!rec.member)
        throw NotPhcaError("is_interval_component: input is not proper Helly circular-arc",
                           *rec.certificate);
    return !find_hole_avoiding(c, {}).has_value();
}

}  // namespace phcavd
