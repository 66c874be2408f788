#pragma once

#include <optional>
#include <stdexcept>

#include "phcavd/graph.hpp"
#include "phcavd/obstruction.hpp"

namespace phcavd {

struct RecognitionResult {
    bool member = false;
    std::optional<Obstruction> certificate;  // present iff not member
};

// Contract violation that carries the witness obstruction.
class NotPhcaError : public std::logic_error {
public:
    NotPhcaError(const std::string& msg, Obstruction cert)
        : std::logic_error(msg), certificate_(std::move(cert)) {}
    const Obstruction& certificate() const { return certificate_; }

private:
    Obstruction certificate_;
};

// Membership by obstruction absence; the certificate always verifies in g.
RecognitionResult is_phca(const Graph& g);

// For a connected PHCA component, hole-freeness is equivalent to admitting an
// interval representation (claw, net and tent are already excluded).
// Throws NotPhcaError / std::logic_error when the precondition fails.
bool is_interval_component(const Graph& c);

}  // namespace phcavd
