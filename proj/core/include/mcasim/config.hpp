#pragma once

#include <map>
#include <string>

#include "mcasim/interface_module.hpp"
#include "mcasim/memristor.hpp"
#include "mcasim/spintronic.hpp"

namespace mcasim {

using ConfigMap = std::map<std::string, std::string>;

/// Parses "key = value" lines; '#' starts a comment, blank lines ignored.
ConfigMap parse_config_text(const std::string& text);
ConfigMap parse_config_file(const std::string& path);

/// Every device parameter reachable from a config file, SI units.
struct DeviceConfig {
    MemristorParams memristor = MemristorParams::make_default();
    DWParams dw;
    ClockSchedule schedule;
    WriteController write_ctrl;
    double v_read = 0.5;   // crossbar row full-scale voltage
    double i_half = 1e-6;  // activation half-scale current
    double k = 4.0;        // saturation convention
};

/// Applies overrides onto base. Keys mirror field names, e.g. memristor.r_on,
/// dw.r_low, schedule.t_write, write.pulse_voltage, crossbar.v_read,
/// activation.i_half, activation.k. Unknown keys are an error.
DeviceConfig apply_config(const ConfigMap& cfg, DeviceConfig base = {});

}  // namespace mcasim
