#pragma once

#include "json.hpp"

#include <string>

namespace tccert {

struct ReplayResult {
    bool ok = false;
    std::string detail;
};

/// Independent certificate checker: re-evaluates every witness product from
/// the structure constants embedded in the certificate, re-derives the
/// claimed lower bounds from the factor weights, and cross-checks the
/// interval invariants. Shares no ring/engine code with the producer.
ReplayResult replay_certificate(const nlohmann::json& cert);

}  // namespace tccert
