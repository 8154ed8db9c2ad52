#ifndef FKPP_IO_HPP
#define FKPP_IO_HPP

#include <array>
#include <string>
#include <vector>

#include <json.hpp>

// CSV cell formatting (full double precision, so tables round-trip
// exactly) and the run manifest that accompanies every CLI command.

namespace fkpp {

inline constexpr const char* tool_version = "0.1.0";

// Shortest representation that parses back to the same double would also
// work; fixed 17 significant digits keeps the files byte-deterministic
// across libc implementations.
std::string format_full(double v);

struct RunManifest {
    std::string version = tool_version;
    std::string command;
    nlohmann::json params;  // full configuration echo
    std::string outcome_tag;
    double event_time = 0.0;
    double final_sup_norm = 0.0;
    std::vector<std::array<double, 2>> norm_history;  // (t, sup norm)
    std::vector<std::string> snapshot_files;
    double wall_seconds = 0.0;
    std::string note;
};

void to_json(nlohmann::json& j, const RunManifest& m);
void from_json(const nlohmann::json& j, RunManifest& m);

}  // namespace fkpp

#endif
