#include "lorasic/config.hpp"

#include <charconv>
#include <string>
#include <vector>

#include "lorasic/errors.hpp"

namespace lorasic {
namespace {

std::string_view trim(std::string_view s)
{
    auto const first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    auto const last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_number(std::string_view key, std::string_view text)
{
    text = trim(text);
    double v = 0.0;
    auto const [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty())
        throw ConfigError(std::string(key) + ": expected a number, got '" + std::string(text) + "'");
    return v;
}

std::vector<double> parse_list(std::string_view key, std::string_view text)
{
    std::vector<double> out;
    while (true)
    {
        auto const comma = text.find(',');
        out.push_back(parse_number(key, text.substr(0, comma)));
        if (comma == std::string_view::npos)
            break;
        text.remove_prefix(comma + 1);
    }
    return out;
}

} // namespace

void apply_override(NetworkConfig& cfg, std::string_view key, std::string_view value)
{
    key = trim(key);
    value = trim(value);
    NetworkConfig next = cfg;

    if (key == "radius_m")
    {
        double const r = parse_number(key, value);
        if (!(r > 0.0))
            throw ConfigError("radius_m: must be positive");
        next.layout = RingLayout::equal_width(r);
    }
    else if (key == "ring_boundaries")
    {
        auto const radii = parse_list(key, value);
        if (radii.size() != static_cast<std::size_t>(kNumRings))
            throw ConfigError("ring_boundaries: expected six outer radii");
        next.layout.boundaries[0] = 0.0;
        for (int i = 0; i < kNumRings; ++i)
            next.layout.boundaries[i + 1] = radii[i];
    }
    else if (key == "carrier_hz")
        next.radio.carrier_hz = parse_number(key, value);
    else if (key == "bandwidth_hz")
        next.radio.bandwidth_hz = parse_number(key, value);
    else if (key == "tx_power_dbm")
        next.radio.tx_power_dbm = parse_number(key, value);
    else if (key == "noise_figure_db")
        next.radio.noise_figure_db = parse_number(key, value);
    else if (key == "path_loss_exp")
        next.radio.path_loss_exp = parse_number(key, value);
    else if (key == "gamma_db")
        next.radio.capture_threshold_db = parse_number(key, value);
    else if (key == "nbar")
        next.traffic.n_bar = parse_number(key, value);
    else if (key == "duty_cycle")
    {
        if (value == "table1")
        {
            for (int ring = 1; ring <= kNumRings; ++ring)
                next.traffic.duty_cycles[ring - 1] = next.sf_params(ring).duty_cycle;
        }
        else
        {
            next.traffic.duty_cycles.fill(parse_number(key, value));
        }
    }
    else
        throw ConfigError("unknown configuration key '" + std::string(key) + "'");

    try
    {
        next.validate();
    }
    catch (std::invalid_argument const& e)
    {
        throw ConfigError(std::string(key) + ": " + e.what());
    }
    cfg = std::move(next);
}

NetworkConfig parse_config(std::string_view text)
{
    NetworkConfig cfg = NetworkConfig::defaults();
    int line_no = 0;
    while (!text.empty())
    {
        auto const eol = text.find('\n');
        std::string_view line = text.substr(0, eol);
        text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);
        ++line_no;

        if (auto const hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;
        auto const eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ConfigError("line " + std::to_string(line_no) + ": expected key = value");
        apply_override(cfg, line.substr(0, eq), line.substr(eq + 1));
    }
    return cfg;
}

} // namespace lorasic
