#include "fkpp/io.hpp"

#include <cstdio>

namespace fkpp {

std::string format_full(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void to_json(nlohmann::json& j, const RunManifest& m) {
    j = nlohmann::json{{"tool_version", m.version},
                       {"command", m.command},
                       {"params", m.params},
                       {"outcome", m.outcome_tag},
                       {"event_time", m.event_time},
                       {"final_sup_norm", m.final_sup_norm},
                       {"norm_history", m.norm_history},
                       {"snapshots", m.snapshot_files},
                       {"wall_seconds", m.wall_seconds},
                       {"note", m.note}};
}

void from_json(const nlohmann::json& j, RunManifest& m) {
    j.at("tool_version").get_to(m.version);
    j.at("command").get_to(m.command);
    m.params = j.at("params");
    j.at("outcome").get_to(m.outcome_tag);
    j.at("event_time").get_to(m.event_time);
    j.at("final_sup_norm").get_to(m.final_sup_norm);
    j.at("norm_history").get_to(m.norm_history);
    j.at("snapshots").get_to(m.snapshot_files);
    j.at("wall_seconds").get_to(m.wall_seconds);
    j.at("note").get_to(m.note);
}

}  // namespace fkpp
