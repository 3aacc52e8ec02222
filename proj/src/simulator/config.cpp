#include "sta/simulator/config.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

namespace sta::sim {

namespace {

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split(const std::string& value) {
    std::vector<std::string> out;
    std::stringstream in(value);
    std::string part;
    while (std::getline(in, part, ',')) out.push_back(trim(part));
    return out;
}

class LineReader {
public:
    LineReader(std::string source, int line) : source_(std::move(source)), line_(line) {}

    [[noreturn]] void fail(const std::string& message) const {
        throw ConfigError(source_ + ":" + std::to_string(line_) + ": " + message);
    }

    template <class T>
    T number(const std::string& text) const {
        T value{};
        const auto* end = text.data() + text.size();
        const auto [ptr, ec] = std::from_chars(text.data(), end, value);
        if (ec != std::errc{} || ptr != end || text.empty()) fail("not a number: '" + text + "'");
        return value;
    }

    template <class T, std::size_t N>
    std::array<T, N> numbers(const std::string& text) const {
        const auto parts = split(text);
        if (parts.size() != N) fail("expected " + std::to_string(N) + " comma-separated values, got '" + text + "'");
        std::array<T, N> out{};
        for (std::size_t k = 0; k < N; ++k) out[k] = number<T>(parts[k]);
        return out;
    }

private:
    std::string source_;
    int line_;
};

template <class T>
T& ensure(InitialCondition& ic) {
    if (!std::holds_alternative<T>(ic)) ic = T{};
    return std::get<T>(ic);
}

}  // namespace

fields::GridSpec SimConfig::grid() const {
    if (box <= 0) throw ConfigError("box must be positive");
    try {
        return fields::GridSpec(cells[0], cells[1], cells[2], box / cells[0]);
    } catch (const fields::GridError& e) {
        throw ConfigError(e.what());
    }
}

double SimConfig::time_step() const {
    if (dt > 0) return dt;
    return kMaxCourant * grid().h() / c;
}

void SimConfig::validate() const {
    const auto g = grid();
    if (c <= 0) throw ConfigError("c must be positive");
    if (mass < 0) throw ConfigError("mass must be non-negative");
    if (dt < 0) throw ConfigError("dt must be positive");
    if (steps < 0) throw ConfigError("steps must be non-negative");
    if (cadence < 1) throw ConfigError("cadence must be at least 1");
    const double step = time_step();
    if (c * step / g.h() > kMaxCourant * (1 + 1e-12)) {
        throw ConfigError("CFL violated: c dt / h = " + std::to_string(c * step / g.h()) + " > 0.5");
    }
    if (mass * c * step > 0.5) {
        throw ConfigError("mass term under-resolved: m c dt = " + std::to_string(mass * c * step) + " > 0.5");
    }
}

std::string to_string(SignatureMode mode) { return mode == SignatureMode::Minkowski ? "minkowski" : "euclidean"; }

void apply_config(SimConfig& cfg, std::string_view text, const std::string& source) {
    std::istringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;
    std::set<std::string> seen;
    while (std::getline(in, raw)) {
        ++line_no;
        if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        const std::string line = trim(raw);
        if (line.empty()) continue;
        const LineReader r(source, line_no);
        const auto eq = line.find('=');
        if (eq == std::string::npos) r.fail("expected 'key = value'");
        const std::string key = trim(std::string_view(line).substr(0, eq));
        const std::string value = trim(std::string_view(line).substr(eq + 1));
        if (!seen.insert(key).second) r.fail("duplicate key '" + key + "'");

        if (key == "grid") {
            const auto parts = split(value);
            if (parts.size() == 1) {
                const int n = r.number<int>(parts[0]);
                cfg.cells = {n, n, n};
            } else {
                cfg.cells = r.numbers<int, 3>(value);
            }
        } else if (key == "box") {
            cfg.box = r.number<double>(value);
        } else if (key == "mass") {
            cfg.mass = r.number<double>(value);
        } else if (key == "c") {
            cfg.c = r.number<double>(value);
        } else if (key == "dt") {
            cfg.dt = r.number<double>(value);
        } else if (key == "steps") {
            cfg.steps = r.number<long>(value);
        } else if (key == "cadence") {
            cfg.cadence = r.number<long>(value);
        } else if (key == "signature") {
            if (value == "minkowski" || value == "1,3") {
                cfg.signature = SignatureMode::Minkowski;
            } else if (value == "euclidean" || value == "4,0") {
                cfg.signature = SignatureMode::Euclidean;
            } else {
                r.fail("signature must be minkowski (1,3) or euclidean (4,0)");
            }
        } else if (key == "initial") {
            if (value == "plane-wave") {
                ensure<PlaneWave>(cfg.initial);
            } else if (value == "gaussian-monopole") {
                ensure<GaussianMonopole>(cfg.initial);
            } else if (value == "gaussian-charge") {
                ensure<GaussianCharge>(cfg.initial);
            } else if (value == "snapshot") {
                ensure<SnapshotFile>(cfg.initial);
            } else {
                r.fail("unknown initial condition '" + value + "'");
            }
        } else if (key == "wave-mode") {
            ensure<PlaneWave>(cfg.initial).mode = r.numbers<int, 3>(value);
        } else if (key == "polarization") {
            ensure<PlaneWave>(cfg.initial).polarization = r.numbers<double, 3>(value);
        } else if (key == "amplitude") {
            ensure<PlaneWave>(cfg.initial).amplitude = r.number<double>(value);
        } else if (key == "longitudinal-amplitude") {
            ensure<PlaneWave>(cfg.initial).longitudinal = r.number<double>(value);
        } else if (key == "charge" || key == "width") {
            const double v = r.number<double>(value);
            if (auto* m = std::get_if<GaussianMonopole>(&cfg.initial)) {
                (key == "charge" ? m->charge : m->width) = v;
            } else if (auto* q = std::get_if<GaussianCharge>(&cfg.initial)) {
                (key == "charge" ? q->charge : q->width) = v;
            } else {
                r.fail("'" + key + "' needs initial = gaussian-monopole or gaussian-charge first");
            }
        } else if (key == "snapshot") {
            ensure<SnapshotFile>(cfg.initial).path = value;
        } else {
            r.fail("unknown key '" + key + "'");
        }
    }
}

SimConfig load_config(const std::filesystem::path& path, SimConfig base) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    apply_config(base, buf.str(), path.string());
    if (auto* snap = std::get_if<SnapshotFile>(&base.initial); snap && snap->path.is_relative()) {
        snap->path = path.parent_path() / snap->path;
    }
    return base;
}

}  // namespace sta::sim
