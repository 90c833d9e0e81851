#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

namespace tccert {

/// Command implementations behind the CLI; each prints a plaintext report
/// to `out` and returns the process exit code.

/// Betti profile of the document's space over its field (or the override).
int cmd_cohomology(const std::string& space_path, std::optional<std::uint64_t> char_override,
                   std::ostream& out);

/// Ring dimensions, basis labels, and structure constants as JSON.
int cmd_ring(const std::string& space_path, std::optional<std::uint64_t> char_override,
             std::ostream& out);

/// Certification: writes the certificate JSON to out_path (or the report
/// stream when empty) after replay validation. Exit 0 = exact interval,
/// 2 = honest non-exact interval, 1 = error.
int cmd_certify(const std::string& space_path, std::optional<std::uint64_t> char_override,
                const std::string& out_path, int depth, std::ostream& out);

/// Chain-level verification suite: prism identities and volumes up to
/// max_prism_k, the torus fundamental cycle, and its sign-fault negative
/// controls. inject_fault >= 0 flips that term's sign (test mode) and must
/// make verification fail.
int cmd_verify_core(int max_prism_k, int inject_fault, std::ostream& out);

}  // namespace tccert
