#include "timsim/config_file.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "tim/error.hpp"
#include "timsim/csv.hpp"

namespace timsim {
namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

template <class T>
T parse_number(std::string_view key, std::string_view text) {
    T value{};
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end || text.empty())
        throw tim::ConfigError(std::string(key), "cannot parse '" + std::string(text) + "'");
    return value;
}

std::vector<int> parse_set(std::string_view key, std::string_view text) {
    std::vector<int> out;
    while (!text.empty()) {
        const auto comma = text.find(',');
        out.push_back(parse_number<int>(key, trim(text.substr(0, comma))));
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    if (out.empty()) throw tim::ConfigError(std::string(key), "empty tone set");
    return out;
}

}  // namespace

std::vector<double> RunConfig::powers() const {
    return tim::power_sweep(sweep_start, sweep_stop, sweep_points, sweep_scale);
}

void RunConfig::validate() const {
    tim.validate();
    if (tim.trials < 1000) throw tim::ConfigError("trials", "need at least 1000 trials");
    (void)powers();
    if (workers < 1) throw tim::ConfigError("workers", "must be >= 1");
}

void apply_setting(RunConfig& cfg, std::string_view key, std::string_view value) {
    auto& t = cfg.tim;
    const std::string k(key);
    if (key == "set") t.set = parse_set(key, value);
    else if (key == "bandwidth_hz") t.bandwidth_hz = parse_number<double>(key, value);
    else if (key == "nstar") t.nstar = parse_number<int>(key, value);
    else if (key == "samples_per_symbol") t.samples_per_symbol = parse_number<int>(key, value);
    else if (key == "power") t.power = parse_number<double>(key, value);
    else if (key == "channel_var") t.channel_var = parse_number<double>(key, value);
    else if (key == "noise_var") t.noise_var = parse_number<double>(key, value);
    else if (key == "a2") t.rectenna.a2 = parse_number<double>(key, value);
    else if (key == "a4") t.rectenna.a4 = parse_number<double>(key, value);
    else if (key == "seed") t.seed = parse_number<std::uint64_t>(key, value);
    else if (key == "trials") t.trials = parse_number<std::uint64_t>(key, value);
    else if (key == "sweep_start") cfg.sweep_start = parse_number<double>(key, value);
    else if (key == "sweep_stop") cfg.sweep_stop = parse_number<double>(key, value);
    else if (key == "sweep_points") cfg.sweep_points = parse_number<int>(key, value);
    else if (key == "sweep_scale") {
        if (value == "log") cfg.sweep_scale = tim::SweepScale::log;
        else if (value == "linear") cfg.sweep_scale = tim::SweepScale::linear;
        else throw tim::ConfigError(k, "expected 'log' or 'linear'");
    } else if (key == "workers") {
        cfg.workers = parse_number<unsigned>(key, value);
    } else if (key == "papr_averaging") {
        if (value == "joint") cfg.papr.averaging = tim::ChannelAveraging::joint;
        else if (value == "per_sample") cfg.papr.averaging = tim::ChannelAveraging::per_sample;
        else throw tim::ConfigError(k, "expected 'joint' or 'per_sample'");
    } else if (key == "papr_normalization") {
        if (value == "expected_power") cfg.papr.normalization = tim::PaprNormalization::expected_power;
        else if (value == "noise_scaled") cfg.papr.normalization = tim::PaprNormalization::noise_scaled;
        else throw tim::ConfigError(k, "expected 'expected_power' or 'noise_scaled'");
    } else {
        throw tim::ConfigError(k, "unknown key");
    }
}

RunConfig parse_config(std::string_view text, RunConfig base) {
    int line_no = 0;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw tim::ConfigError("line " + std::to_string(line_no), "expected 'key = value'");
        apply_setting(base, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    return base;
}

RunConfig load_config(const std::filesystem::path& path, RunConfig base) {
    std::ifstream in(path);
    if (!in) throw tim::ConfigError("config", "cannot read " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str(), std::move(base));
}

std::string format_config(const RunConfig& cfg) {
    const auto& t = cfg.tim;
    std::string set;
    for (std::size_t i = 0; i < t.set.size(); ++i) set += (i ? "," : "") + std::to_string(t.set[i]);
    std::ostringstream o;
    o << "set = " << set << '\n'
      << "bandwidth_hz = " << format_double(t.bandwidth_hz) << '\n'
      << "nstar = " << t.nstar << '\n'
      << "samples_per_symbol = " << t.samples_per_symbol << '\n'
      << "power = " << format_double(t.power) << '\n'
      << "channel_var = " << format_double(t.channel_var) << '\n'
      << "noise_var = " << format_double(t.noise_var) << '\n'
      << "a2 = " << format_double(t.rectenna.a2) << '\n'
      << "a4 = " << format_double(t.rectenna.a4) << '\n'
      << "seed = " << t.seed << '\n'
      << "trials = " << t.trials << '\n'
      << "sweep_start = " << format_double(cfg.sweep_start) << '\n'
      << "sweep_stop = " << format_double(cfg.sweep_stop) << '\n'
      << "sweep_points = " << cfg.sweep_points << '\n'
      << "sweep_scale = " << (cfg.sweep_scale == tim::SweepScale::log ? "log" : "linear") << '\n'
      << "papr_averaging = " << (cfg.papr.averaging == tim::ChannelAveraging::joint ? "joint" : "per_sample") << '\n'
      << "papr_normalization = "
      << (cfg.papr.normalization == tim::PaprNormalization::expected_power ? "expected_power" : "noise_scaled") << '\n';
    return o.str();
}

}  // namespace timsim
