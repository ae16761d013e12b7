#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "../percurve/dynamics.hpp"
#include "param.hpp"

namespace perbar {

enum class DomainKind { Parallelogram, Chart };

struct RenderConfig {
    int width = 512, height = 512;
    int maxiter = 200;
    double eps_attract = 1e-3;
    DomainKind domain = DomainKind::Parallelogram;
    Cx offset{0, 0};                                      // corner of the period parallelogram
    double x_min = -3, x_max = 3, y_min = -3, y_max = 3;  // window in the complex X-plane
    int sheet = 0;                                        // which Y over X in the chart window
    std::string palette = "bands";
    bool overlay_punctures = true, overlay_pcf = true;
    std::string output = "per25.ppm";
    unsigned threads = 0;
    int samples = 25;
    unsigned seed = 7;

    void validate() const {
        if (width <= 0 || height <= 0) throw std::invalid_argument("width and height must be positive");
        if (maxiter < 1) throw std::invalid_argument("maxiter must be at least 1");
        if (!(eps_attract > 0)) throw std::invalid_argument("eps_attract must be positive");
        if (palette != "bands" && palette != "gray") throw std::invalid_argument("unknown palette: " + palette);
        if (domain == DomainKind::Chart && !(x_min < x_max && y_min < y_max))
            throw std::invalid_argument("empty chart window");
        if (sheet != 0 && sheet != 1) throw std::invalid_argument("sheet must be 0 or 1");
    }
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// key = value lines; '#' starts a comment, [sections] are ignored, strings may be quoted.
inline RenderConfig parse_render_config(std::istream& in) {
    RenderConfig c;
    std::string line;
    int lineno = 0;
    auto trim = [](std::string s) {
        auto b = s.find_first_not_of(" \t\r"), e = s.find_last_not_of(" \t\r");
        return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    while (std::getline(in, line)) {
        ++lineno;
        bool quoted = false;
        for (size_t i = 0; i < line.size(); ++i) {
            if (line[i] == '"') quoted = !quoted;
            if (line[i] == '#' && !quoted) {
                line.resize(i);
                break;
            }
        }
        line = trim(line);
        if (line.empty() || line.front() == '[') continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
        std::string key = trim(line.substr(0, eq)), val = trim(line.substr(eq + 1));
        if (val.size() >= 2 && val.front() == '"' && val.back() == '"') val = val.substr(1, val.size() - 2);
        auto num = [&]() {
            try {
                size_t pos;
                double v = std::stod(val, &pos);
                if (pos != val.size()) throw std::invalid_argument("");
                return v;
            } catch (const std::exception&) {
                throw ConfigError("line " + std::to_string(lineno) + ": bad number for " + key);
            }
        };
        auto integer = [&]() {
            double v = num();
            if (v != std::floor(v)) throw ConfigError("line " + std::to_string(lineno) + ": " + key + " must be an integer");
            return static_cast<long>(v);
        };
        auto boolean = [&]() {
            if (val == "true") return true;
            if (val == "false") return false;
            throw ConfigError("line " + std::to_string(lineno) + ": " + key + " must be true or false");
        };
        if (key == "width") c.width = static_cast<int>(integer());
        else if (key == "height") c.height = static_cast<int>(integer());
        else if (key == "maxiter") c.maxiter = static_cast<int>(integer());
        else if (key == "eps_attract") c.eps_attract = num();
        else if (key == "domain") {
            if (val == "parallelogram") c.domain = DomainKind::Parallelogram;
            else if (val == "chart") c.domain = DomainKind::Chart;
            else throw ConfigError("line " + std::to_string(lineno) + ": domain is parallelogram or chart");
        } else if (key == "offset_re") c.offset.real(num());
        else if (key == "offset_im") c.offset.imag(num());
        else if (key == "x_min") c.x_min = num();
        else if (key == "x_max") c.x_max = num();
        else if (key == "y_min") c.y_min = num();
        else if (key == "y_max") c.y_max = num();
        else if (key == "sheet") c.sheet = static_cast<int>(integer());
        else if (key == "palette") c.palette = val;
        else if (key == "overlay_punctures") c.overlay_punctures = boolean();
        else if (key == "overlay_pcf") c.overlay_pcf = boolean();
        else if (key == "output") c.output = val;
        else if (key == "threads") c.threads = static_cast<unsigned>(integer());
        else if (key == "samples") c.samples = static_cast<int>(integer());
        else if (key == "seed") c.seed = static_cast<unsigned>(integer());
        else throw ConfigError("line " + std::to_string(lineno) + ": unknown key " + key);
    }
    try {
        c.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    return c;
}

inline RenderConfig load_render_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config " + path);
    return parse_render_config(in);
}

// ---------------------------------------------------------------------------------------------

struct Classification {
    bool attracted = false;
    int first_hit = 0;  // step at which the orbit of infinity entered the eps-neighbourhood
    double distance = 1;
};

// Orbit of the free critical point (infinity) against the marked cycle, chordal metric.
inline Classification classify(const DynMap& f, const RenderConfig& cfg) {
    PointP1<Cx> z = PointP1<Cx>::infinity();
    for (int k = 1; k <= cfg.maxiter; ++k) {
        z = f(z);
        double dist = f.distance_to_cycle(z);
        if (dist >= cfg.eps_attract) continue;
        // doubling window: stay close through step max(2k, k + 2 n), not capped by maxiter
        const int n = static_cast<int>(f.cycle.size());
        PointP1<Cx> w = z;
        double worst = dist;
        for (int j = k + 1; j <= std::max(2 * k, k + 2 * n) && worst < cfg.eps_attract; ++j) {
            w = f(w);
            worst = std::max(worst, f.distance_to_cycle(w));
        }
        if (worst < cfg.eps_attract) return {true, k, dist};
    }
    return {false, 0, f.distance_to_cycle(z)};
}

// ---------------------------------------------------------------------------------------------

struct Image {
    int width = 0, height = 0;
    std::vector<std::uint8_t> rgb;

    Image() = default;
    Image(int w, int h) : width(w), height(h), rgb(3 * static_cast<size_t>(w) * h, 0) {}
    void set(int i, int j, std::uint8_t r, std::uint8_t g, std::uint8_t b) {
        if (i < 0 || j < 0 || i >= width || j >= height) return;
        size_t o = 3 * (static_cast<size_t>(j) * width + i);
        rgb[o] = r;
        rgb[o + 1] = g;
        rgb[o + 2] = b;
    }
    std::string ppm() const {
        std::string s = "P6\n" + std::to_string(width) + " " + std::to_string(height) + "\n255\n";
        s.append(reinterpret_cast<const char*>(rgb.data()), rgb.size());
        return s;
    }
    void write_ppm(const std::string& path) const {
        std::ofstream out(path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open " + path + " for writing");
        std::string s = ppm();
        out.write(s.data(), static_cast<std::streamsize>(s.size()));
        if (!out) throw std::runtime_error("write failed: " + path);
    }
};

// Overlay marks given by chart coordinates; finite = false stands for the point at infinity [0:1:0].
struct ChartMark {
    bool finite = true;
    Cx X, Y;
};

struct Overlays {
    std::vector<ChartMark> punctures, pcf;
};

// Pixel classes: >= 1 attracted (first hit), 0 not attracted, -1 degenerate.
struct RenderResult {
    Image image;
    std::vector<int> cls;
    std::vector<std::array<int, 2>> pcf_pixels, puncture_pixels;

    int at(int i, int j) const { return cls[static_cast<size_t>(j) * image.width + i]; }
    int count(int c) const { return static_cast<int>(std::count(cls.begin(), cls.end(), c)); }
    int attracted() const {
        return static_cast<int>(std::count_if(cls.begin(), cls.end(), [](int c) { return c > 0; }));
    }
};

namespace detail {

inline std::array<std::uint8_t, 3> palette_color(const std::string& palette, int k) {
    if (palette == "gray") {
        auto v = static_cast<std::uint8_t>(255 - std::min(k, 40) * 5);
        return {v, v, v};
    }
    double h = std::fmod(k * 0.13, 1.0) * 6.0, s = 0.55, v = 0.95;
    int sector = static_cast<int>(h);
    double f = h - sector, p = v * (1 - s), q = v * (1 - s * f), t = v * (1 - s * (1 - f));
    double r = v, g = t, b = p;
    switch (sector % 6) {
        case 1: r = q; g = v; b = p; break;
        case 2: r = p; g = v; b = t; break;
        case 3: r = p; g = q; b = v; break;
        case 4: r = t; g = p; b = v; break;
        case 5: r = v; g = p; b = q; break;
        default: break;
    }
    return {static_cast<std::uint8_t>(std::lround(255 * r)), static_cast<std::uint8_t>(std::lround(255 * g)),
            static_cast<std::uint8_t>(std::lround(255 * b))};
}

// Y over X on the cubic, the two roots ordered by (real, imag).
inline std::optional<Cx> chart_y(const PlaneCurve& c, Cx X, int sheet) {
    std::vector<Cx> co(3, Cx(0));  // coefficients of y^0, y^1, y^2 at z = 1
    auto mons = plane_monomials(3);
    for (size_t m = 0; m < mons.size(); ++m) {
        auto [i, j, k] = mons[m];
        if (j > 2) {
            if (!is_zero(c.coeffs[m])) return std::nullopt;
            continue;
        }
        co[j] += to_cx(c.coeffs[m]) * std::pow(X, i);
    }
    if (std::abs(co[2]) < 1e-14) return std::nullopt;
    Cx disc = std::sqrt(co[1] * co[1] - 4.0 * co[2] * co[0]);
    std::array<Cx, 2> r{(-co[1] + disc) / (2.0 * co[2]), (-co[1] - disc) / (2.0 * co[2])};
    auto lt = [](Cx a, Cx b) { return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag(); };
    if (lt(r[1], r[0])) std::swap(r[0], r[1]);
    return r[sheet];
}

// Pixel containing u in the parallelogram offset + [0,1) w1 + [0,1) w2; row 0 is the top.
inline std::array<int, 2> pixel_of_u(Cx u, const Lattice& L, const RenderConfig& cfg) {
    Cx v = u - cfg.offset;
    double det = (std::conj(L.w1) * L.w2).imag();
    double a = (std::conj(v) * L.w2).imag() / det, b = (std::conj(L.w1) * v).imag() / det;
    a -= std::floor(a);
    b -= std::floor(b);
    int i = std::min(cfg.width - 1, static_cast<int>(a * cfg.width));
    int j = std::min(cfg.height - 1, static_cast<int>((1 - b) * cfg.height));
    return {i, j};
}

inline std::optional<std::array<int, 2>> pixel_of_mark(const ChartMark& m, const CurveData& cd, const RenderConfig& cfg) {
    if (cfg.domain == DomainKind::Parallelogram) {
        if (!m.finite) return pixel_of_u(Cx(0), cd.lattice, cfg);
        auto u = u_of_chart(m.X, m.Y, cd);
        if (!u) return std::nullopt;
        return pixel_of_u(*u, cd.lattice, cfg);
    }
    if (!m.finite) return std::nullopt;
    double a = (m.X.real() - cfg.x_min) / (cfg.x_max - cfg.x_min), b = (m.X.imag() - cfg.y_min) / (cfg.y_max - cfg.y_min);
    if (a < 0 || a >= 1 || b < 0 || b >= 1) return std::nullopt;
    auto y = chart_y(cd.cubic, m.X, cfg.sheet);
    if (!y || std::abs(*y - m.Y) > 1e-6 * (1 + std::abs(m.Y))) return std::nullopt;
    return std::array<int, 2>{static_cast<int>(a * cfg.width), static_cast<int>((1 - b) * cfg.height)};
}

inline void draw_disc(Image& img, std::array<int, 2> p, int radius, std::array<std::uint8_t, 3> c) {
    for (int dj = -radius; dj <= radius; ++dj)
        for (int di = -radius; di <= radius; ++di)
            if (di * di + dj * dj <= radius * radius) img.set(p[0] + di, p[1] + dj, c[0], c[1], c[2]);
}

}  // namespace detail

// Chart position of a pixel centre: u in the parallelogram, or X in the window with Y on the chosen sheet.
inline ParamResult pixel_point(int i, int j, const CurveData& cd, const RenderConfig& cfg) {
    double a = (i + 0.5) / cfg.width, b = 1.0 - (j + 0.5) / cfg.height;
    if (cfg.domain == DomainKind::Parallelogram) return param_point(cfg.offset + a * cd.lattice.w1 + b * cd.lattice.w2, cd);
    Cx X(cfg.x_min + a * (cfg.x_max - cfg.x_min), cfg.y_min + b * (cfg.y_max - cfg.y_min));
    auto Y = detail::chart_y(cd.cubic, X, cfg.sheet);
    if (!Y) return {};
    return chart_point(X, *Y);
}

inline int classify_pixel(int i, int j, const CurveData& cd, const RenderConfig& cfg) {
    ParamResult r;
    try {
        r = pixel_point(i, j, cd, cfg);
    } catch (const std::exception&) {
        return -1;
    }
    if (r.degenerate()) return -1;
    Classification c = classify(DynMap::from_hpoint(*r.point), cfg);
    return c.attracted ? c.first_hit : 0;
}

// Rows in parallel; each pixel is a pure function of (cfg, cd), so the output does not depend on threads.
inline RenderResult render(const RenderConfig& cfg, const CurveData& cd, const Overlays& ov = {}) {
    cfg.validate();
    RenderResult res;
    res.image = Image(cfg.width, cfg.height);
    res.cls.assign(static_cast<size_t>(cfg.width) * cfg.height, 0);
    unsigned nt = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < std::min<unsigned>(nt, cfg.height); ++t)
        pool.emplace_back([&] {
            for (int j; (j = next++) < cfg.height;)
                for (int i = 0; i < cfg.width; ++i) res.cls[static_cast<size_t>(j) * cfg.width + i] = classify_pixel(i, j, cd, cfg);
        });
    for (auto& t : pool) t.join();
    for (int j = 0; j < cfg.height; ++j)
        for (int i = 0; i < cfg.width; ++i) {
            int c = res.at(i, j);
            if (c < 0) res.image.set(i, j, 64, 64, 64);
            else if (c == 0) res.image.set(i, j, 0, 0, 0);
            else {
                auto col = detail::palette_color(cfg.palette, c);
                res.image.set(i, j, col[0], col[1], col[2]);
            }
        }
    const int rad = std::max(1, std::min(cfg.width, cfg.height) / 128);
    for (const auto& m : ov.punctures)
        if (auto p = detail::pixel_of_mark(m, cd, cfg)) {
            res.puncture_pixels.push_back(*p);
            if (cfg.overlay_punctures) detail::draw_disc(res.image, *p, rad, {220, 0, 0});
        }
    for (const auto& m : ov.pcf)
        if (auto p = detail::pixel_of_mark(m, cd, cfg)) {
            res.pcf_pixels.push_back(*p);
            if (cfg.overlay_pcf) detail::draw_disc(res.image, *p, rad, {0, 60, 255});
        }
    return res;
}

}  // namespace perbar
