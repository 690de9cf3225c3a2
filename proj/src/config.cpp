#include "qtraj/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qtraj {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(int line_no, const std::string& what) {
    throw std::invalid_argument("config line " + std::to_string(line_no) +
                                ": " + what);
}

double to_double(const std::string& v, int line_no) {
    try {
        std::size_t pos = 0;
        double d = std::stod(v, &pos);
        if (pos != v.size()) fail(line_no, "trailing characters in '" + v + "'");
        return d;
    } catch (const std::invalid_argument&) {
        fail(line_no, "expected a number, got '" + v + "'");
    } catch (const std::out_of_range&) {
        fail(line_no, "number out of range: '" + v + "'");
    }
}

long long to_int(const std::string& v, int line_no) {
    long long out = 0;
    auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc{} || p != v.data() + v.size()) {
        fail(line_no, "expected an integer, got '" + v + "'");
    }
    return out;
}

bool to_bool(const std::string& v, int line_no) {
    if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
    if (v == "false" || v == "0" || v == "no" || v == "off") return false;
    fail(line_no, "expected a boolean, got '" + v + "'");
}

}  // namespace

RunConfig parse_config(const std::string& text) {
    RunConfig cfg;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) fail(line_no, "expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (key.empty()) fail(line_no, "empty key");
        if (val.empty()) fail(line_no, "empty value for '" + key + "'");

        if (key == "g") cfg.model.g = to_double(val, line_no);
        else if (key == "kappa") cfg.model.kappa = to_double(val, line_no);
        else if (key == "gamma") cfg.model.gamma = to_double(val, line_no);
        else if (key == "Y") cfg.model.Y = to_double(val, line_no);
        else if (key == "J") cfg.model.J = to_double(val, line_no);
        else if (key == "U") cfg.model.U = to_double(val, line_no);
        else if (key == "dt") cfg.model.dt = to_double(val, line_no);
        else if (key == "steps") cfg.model.n_steps = to_int(val, line_no);
        else if (key == "seed") {
            cfg.model.seed = static_cast<std::uint64_t>(to_int(val, line_no));
        } else if (key == "trajectories") {
            cfg.n_trajectories = static_cast<int>(to_int(val, line_no));
        } else if (key == "backend") {
            try {
                cfg.backend = parse_backend(val);
            } catch (const std::invalid_argument& e) {
                fail(line_no, e.what());
            }
        } else if (key == "kind") cfg.kind = val;
        else if (key == "bins") cfg.n_bins = static_cast<int>(to_int(val, line_no));
        else if (key == "tau_max") cfg.tau_max = to_double(val, line_no);
        else if (key == "lookahead") {
            cfg.lookahead = static_cast<int>(to_int(val, line_no));
        } else if (key == "steady_norm") cfg.steady_norm = to_bool(val, line_no);
        else if (key == "corrections") cfg.corrections = to_bool(val, line_no);
        else if (key == "out") cfg.out = val;
        else fail(line_no, "unknown key '" + key + "'");
    }
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_config(buf.str());
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
}

}  // namespace qtraj
