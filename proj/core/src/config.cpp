#include "mcasim/config.hpp"

#include <fstream>
#include <sstream>

#include "mcasim/errors.hpp"

namespace mcasim {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

double to_double(const std::string& key, const std::string& value) {
    try {
        size_t pos = 0;
        const double v = std::stod(value, &pos);
        if (pos != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw argument_error("config: bad numeric value for " + key + ": '" + value + "'");
    }
}

int to_int(const std::string& key, const std::string& value) {
    try {
        size_t pos = 0;
        const int v = std::stoi(value, &pos);
        if (pos != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw argument_error("config: bad integer value for " + key + ": '" + value + "'");
    }
}

}  // namespace

ConfigMap parse_config_text(const std::string& text) {
    ConfigMap cfg;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw io_error("config: missing '=' on line " + std::to_string(lineno));
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw io_error("config: empty key or value on line " + std::to_string(lineno));
        cfg[key] = value;
    }
    return cfg;
}

ConfigMap parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open config file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

DeviceConfig apply_config(const ConfigMap& cfg, DeviceConfig base) {
    for (const auto& [key, value] : cfg) {
        auto d = [&] { return to_double(key, value); };
        if (key == "memristor.r_on") base.memristor.r_on = d();
        else if (key == "memristor.r_off") base.memristor.r_off = d();
        else if (key == "memristor.v_on") base.memristor.v_on = d();
        else if (key == "memristor.v_off") base.memristor.v_off = d();
        else if (key == "memristor.k_on") base.memristor.k_on = d();
        else if (key == "memristor.k_off") base.memristor.k_off = d();
        else if (key == "memristor.alpha_on") base.memristor.alpha_on = d();
        else if (key == "memristor.alpha_off") base.memristor.alpha_off = d();
        else if (key == "memristor.w_on") base.memristor.w_on = d();
        else if (key == "memristor.w_off") base.memristor.w_off = d();
        else if (key == "memristor.length") base.memristor.length = d();
        else if (key == "dw.strip_length") base.dw.strip_length = d();
        else if (key == "dw.strip_width") base.dw.strip_width = d();
        else if (key == "dw.strip_thickness") base.dw.strip_thickness = d();
        else if (key == "dw.dw_width") base.dw.dw_width = d();
        else if (key == "dw.mgo_thickness") base.dw.mgo_thickness = d();
        else if (key == "dw.m_sat") base.dw.m_sat = d();
        else if (key == "dw.r_low") base.dw.r_low = d();
        else if (key == "dw.r_high") base.dw.r_high = d();
        else if (key == "dw.v_bias") base.dw.v_bias = d();
        else if (key == "dw.mobility") base.dw.mobility = d();
        else if (key == "schedule.t_reset") base.schedule.t_reset = d();
        else if (key == "schedule.t_write") base.schedule.t_write = d();
        else if (key == "schedule.t_read") base.schedule.t_read = d();
        else if (key == "write.pulse_voltage") base.write_ctrl.pulse_voltage = d();
        else if (key == "write.pulse_width") base.write_ctrl.pulse_width = d();
        else if (key == "write.verify_voltage") base.write_ctrl.verify_voltage = d();
        else if (key == "write.tolerance") base.write_ctrl.tolerance = d();
        else if (key == "write.max_pulses") base.write_ctrl.max_pulses = to_int(key, value);
        else if (key == "crossbar.v_read") base.v_read = d();
        else if (key == "activation.i_half") base.i_half = d();
        else if (key == "activation.k") base.k = d();
        else throw argument_error("config: unknown key '" + key + "'");
    }
    base.memristor.validate();
    base.dw.validate();
    validate_schedule(base.schedule);
    return base;
}

}  // namespace mcasim
