// perbar: command-line front end for the Per_{d,n} toolkit.
#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <set>

#include "perbar.hpp"

using namespace perbar;

namespace {

struct Checks {
    std::ostream& os = std::cout;
    int failed = 0;
    void operator()(bool ok, const std::string& what) {
        os << (ok ? "  [ok]   " : "  [FAIL] ") << what << "\n";
        if (!ok) ++failed;
    }
};

int cmd_enumerate(int d, int n, bool dot, bool csv) {
    auto recs = enumerate_types(d, n);
    Checks check;
    std::vector<const StratumRecord*> passing;
    for (const auto& r : recs)
        if (r.passes_diagonal) passing.push_back(&r);
    if (csv) {
        std::cout << csv_header() << "\n";
        for (size_t i = 0; i < passing.size(); ++i) std::cout << csv_row(i, *passing[i], catalog_name(passing[i]->type)) << "\n";
    } else if (dot) {
        for (size_t i = 0; i < passing.size(); ++i) {
            std::string name = catalog_name(passing[i]->type);
            std::cout << to_dot(passing[i]->type, name.empty() ? "type_" + std::to_string(i) : name);
        }
    }
    std::cout << "# strata of H-bar_{" << d << "," << n << "} (boundary-strata tables)\n";
    std::cout << "# valid types: " << recs.size() << ", filter-passing types: " << passing.size() << "\n";
    std::set<std::string> found;
    for (auto* r : passing) found.insert(catalog_name(r->type));
    if (n == 5 && d == 2) {
        check(passing.size() == 20, "20 filter-passing types");
        for (const auto& e : catalog_n5()) {
            bool want = e.group == CatalogGroup::MeetsCurve || e.group == CatalogGroup::FilterOnly;
            check(found.count(e.name) == (want ? 1u : 0u), e.name + (want ? " passes" : " is rejected"));
        }
    }
    if (n == 4) {
        const std::vector<long> expect{(d - 1L) * (d - 2), 1, 1, d - 1L, d - 1L, 1, 1, 1};
        auto cat = catalog_n4();
        for (size_t i = 0; i < cat.size(); ++i) {
            if (d == 2 && cat[i].name == "gamma_1") continue;  // needs three distinct non-trivial roots of unity
            bool present = found.count(cat[i].name) == 1;
            long cc = present ? component_count(cat[i].build(d)) : -1;
            check(present && cc == expect[i],
                  cat[i].name + " passes with " + std::to_string(expect[i]) + " component(s)");
        }
    }
    return check.failed ? 1 : 0;
}

int cmd_punctures(int d, int n, bool as_json) {
    Checks check{std::cerr};
    if (n == 5) {
        if (d != 2) throw CLI::ValidationError("punctures", "n = 5 is supported for d = 2 only");
        auto rep = puncture_report(5);
        int total = 0;
        json arr = json::array();
        for (const auto& r : rep) {
            total += static_cast<int>(r.punctures.size());
            arr.push_back(to_json(r));
        }
        if (as_json) {
            std::cout << arr.dump(2) << "\n";
        } else {
            for (const auto& r : rep)
                for (const auto& p : r.punctures) {
                    std::cout << std::left << std::setw(9) << r.stratum << " field " << std::setw(11) << field_name(p.field);
                    for (const auto& [k, v] : p.stratum_coords) std::cout << " " << k << " = " << v.str();
                    std::cout << "\n";
                }
        }
        std::cerr << "# punctures of Per_{2,5} (punctured at 10 points)\n";
        std::set<std::string> fields;
        bool reduced = true;
        for (const auto& r : rep)
            for (const auto& p : r.punctures) {
                fields.insert(field_name(p.field));
                reduced = reduced && p.reduced;
            }
        std::ostringstream msg;
        msg << total << " punctures";
        std::cerr << "# fields:";
        for (const auto& f : fields) std::cerr << " " << f;
        std::cerr << "\n";
        check(total == 10, msg.str());
        check(fields == std::set<std::string>{"Q", "Q(i)", "Q(sqrt(5))"}, "fields are Q, Q(i), Q(sqrt(5))");
        check(reduced, "all punctures reduced");
        return check.failed ? 1 : 0;
    }
    if (n != 4) throw CLI::ValidationError("punctures", "n must be 4 or 5");
    if (d < 2 || d > 8) throw CLI::ValidationError("punctures", "d must be in 2..8 for n = 4");
    auto r = perd4_report(d);
    json arr = json::array();
    for (const auto& s : r.strata)
        arr.push_back({{"stratum", s.stratum}, {"points", s.points}, {"expected", s.expected}, {"pcf", s.pcf}});
    if (as_json) std::cout << arr.dump(2) << "\n";
    else
        for (const auto& s : r.strata)
            std::cout << std::left << std::setw(10) << s.stratum << (s.pcf ? " pcf points " : " punctures ") << s.points << "\n";
    std::cerr << "# punctures of Per_{" << d << ",4} (d^2 punctures)\n";
    check(r.counts_ok(), std::to_string(r.punctures) + " punctures, expected " + std::to_string(d * d));
    return check.failed ? 1 : 0;
}

int cmd_pcf(bool as_json) {
    auto pts = pcf_points_n5();
    Checks check{std::cerr};
    if (as_json) {
        json arr = json::array();
        for (const auto& p : pts) arr.push_back(to_json(p));
        std::cout << arr.dump(2) << "\n";
    } else {
        for (const auto& p : pts) {
            std::cout << std::left << std::setw(10) << p.stratum << " residual " << std::setw(12) << p.residual << " coords";
            for (const auto& z : p.coords) std::cout << " " << z;
            std::cout << "\n";
        }
    }
    std::cerr << "# PCF points of Per_{2,5} on gamma_I..gamma_IV (5 each)\n";
    std::map<std::string, int> per;
    bool good = true;
    for (const auto& p : pts) {
        ++per[p.stratum];
        good = good && p.residual < 1e-10 && std::isfinite(p.cond) && p.orbit_ok;
    }
    for (const auto* s : {"gamma_I", "gamma_II", "gamma_III", "gamma_IV"}) check(per[s] == 5, std::string(s) + ": 5 points");
    check(good, "residual < 1e-10, nonsingular Jacobian, orbit lands on the cycle");
    return check.failed ? 1 : 0;
}

PlaneCurve expected_cubic() {
    using P = MPoly<Rational>;
    P x = P::var(0), y = P::var(1), z = P::var(2);
    return PlaneCurve::from_poly(x.pow(3) + y.pow(2) * z - P(3) * x * y * z + x * z.pow(2), 3);
}

int cmd_fit_cubic(int samples, unsigned seed) {
    Checks check;
    std::vector<std::array<Cx, 3>> pts;
    for (const auto& h : sample_curve(2, 5, samples, seed)) pts.push_back(plane_point(h));
    PlaneCurve c = fit_plane_curve(pts, 3);
    std::cout << "# image of Per_{2,5}-bar in the (X, Y) chart (cubic identification)\n";
    std::cout << "cubic: " << c.str() << " = 0   (" << samples << " samples, seed " << seed << ")\n";
    check(c == expected_cubic(), "equals x^3 + y^2 z - 3xyz + xz^2");
    bool all = true;
    int count = 0;
    for (const auto& r : puncture_report(5))
        for (const auto& p : r.punctures) {
            const auto& a = *p.plane_image;
            all = all && c.eval(a[0], a[1], a[2]).zero();
            ++count;
        }
    check(all && count == 10, "all 10 exact puncture images lie on the cubic");
    return check.failed ? 1 : 0;
}

int cmd_verify_invariants() {
    Checks check;
    PlaneCurve c = expected_cubic();
    auto m = weierstrass_model(c);
    auto inv = invariants(m.curve);
    std::cout << "# Weierstrass model, invariants and Mordell-Weil data\n";
    std::cout << "long form: y^2 + (" << m.curve.a1 << ")xy + (" << m.curve.a3 << ")y = x^3 + (" << m.curve.a2 << ")x^2 + ("
              << m.curve.a4 << ")x + (" << m.curve.a6 << ")\n";
    std::cout << "Delta = " << inv.disc << ", j = " << inv.j << "\n";
    check(inv.j == Rational(35937, 17), "j = 35937/17");
    check(inv.c4 * inv.c4 * inv.c4 - inv.c6 * inv.c6 == 1728 * inv.disc, "c4^3 - c6^2 = 1728 Delta");
    PlaneCurve t = c.pullback({{{-1, 0, 1}, {-1, 1, 2}, {0, 0, 1}}});
    auto tinv = invariants(weierstrass_model(t).curve);
    std::cout << "transformed curve: " << t.str() << ", Delta = " << tinv.disc << "\n";
    check(abs(tinv.disc) == 17, "|Delta| = 17 after [-x+z : -x+y+2z : z]");
    Lattice L = periods(m.curve);
    std::cout << std::setprecision(8) << "periods: w1 = " << L.w1 << ", w2 = " << L.w2 << " (full periods)\n";
    check(std::abs(L.w1 - Cx(3.09416, 0)) < 1e-3 && std::abs(L.w2 - Cx(0, 2.74574)) < 1e-3, "periods (3.09416, 2.74574 i)");
    auto pts = named_punctures(puncture_report(5), m);
    std::cout << "rational punctures:\n";
    std::map<std::string, int> orders;
    for (const auto& name : {"p1", "p2", "p3", "p4"}) {
        auto o = point_order(m.curve, point_named(pts, name).point);
        orders[name] = o ? *o : 0;
        std::cout << "  " << name << " order " << orders[name] << "\n";
    }
    std::cout << "group table (+):\n       ";
    const std::vector<std::string> rat{"p2", "p1", "p3", "p4"};
    for (const auto& b : rat) std::cout << std::setw(4) << b;
    std::cout << "\n";
    bool closed = true;
    for (const auto& a : rat) {
        std::cout << "    " << std::setw(3) << a;
        for (const auto& b : rat) {
            auto s = ec_add(m.curve, point_named(pts, a).point, point_named(pts, b).point);
            std::string hit = "?";
            for (const auto& r : rat)
                if (point_named(pts, r).point == s) hit = r;
            closed = closed && hit != "?";
            std::cout << std::setw(4) << hit;
        }
        std::cout << "\n";
    }
    check(closed && orders["p2"] == 1 && orders["p3"] == 2 && orders["p1"] == 4 && orders["p4"] == 4,
          "rational points form Z/4Z");
    for (const auto& name : {"p5", "p6"}) {
        auto o = point_order(m.curve, point_named(pts, name).point, 18);
        check(!o, std::string(name) + ": ExceedsBound(18)");
    }
    auto rel = [&](const std::string& a, const std::string& b) {
        bool r = quotient_relation(m.curve, point_named(pts, a).point, point_named(pts, b).point);
        check(r, a + " + " + b + " is rational");
    };
    rel("p5", "p5'");
    rel("p6", "p6'");
    rel("p6", "p7");
    return check.failed ? 1 : 0;
}

int cmd_genus_table(int dmax) {
    if (dmax < 2 || dmax > 8) throw CLI::ValidationError("genus-table", "--dmax must be in 2..8");
    Checks check;
    std::cout << "# genus (d-1)(d-2)/2 and d^2 punctures of Per_{d,4}\n";
    std::cout << "d,genus,punctures,pcf_points,disc,disc_closed,disc_stated,distinct_roots\n";
    std::vector<Perd4Report> rows;
    for (int d = 2; d <= dmax; ++d) {
        auto r = perd4_report(d);
        std::cout << d << "," << r.genus << "," << r.punctures << "," << r.pcf_points << "," << r.disc << ","
                  << r.disc_closed << "," << r.disc_stated << "," << r.distinct_roots << "\n";
        rows.push_back(std::move(r));
    }
    for (const auto& r : rows) {
        std::string d = std::to_string(r.d);
        check(r.counts_ok(), "d = " + d + ": " + std::to_string(r.d * r.d) + " punctures");
        check(r.disc == r.disc_closed && r.disc != 0, "d = " + d + ": disc(g) = closed form, nonzero");
        if (r.disc != r.disc_stated)
            std::cout << "  [note] d = " << d << ": disc(g) differs from d^d((d+1)^(d-1) + (d-1)^(d+1)) = " << r.disc_stated << "\n";
        check(r.distinct_roots == r.d && r.one_is_root && !r.other_roots_of_unity, "d = " + d + ": d distinct roots, s = 1 among them");
    }
    return check.failed ? 1 : 0;
}

int cmd_render(const std::string& path, const std::string& out_override) {
    RenderConfig cfg = load_render_config(path);
    if (!out_override.empty()) cfg.output = out_override;
    Checks check;
    auto cd = CurveData::fitted(cfg.samples, cfg.seed);
    auto ov = default_overlays();
    auto res = render(cfg, cd, ov);
    res.image.write_ppm(cfg.output);
    std::cout << "# Mandelbrot analog in Per_{2,5} (" << cfg.width << "x" << cfg.height << ", maxiter " << cfg.maxiter
              << ", eps " << cfg.eps_attract << ")\n";
    std::cout << "wrote " << cfg.output << ": attracted " << res.attracted() << ", not attracted " << res.count(0)
              << ", degenerate " << res.count(-1) << "\n";
    check(res.attracted() > 0 && res.count(0) > 0, "mixed classifications");
    int pcf_ok = 0;
    for (const auto& p : res.pcf_pixels) pcf_ok += res.at(p[0], p[1]) > 0;
    check(!res.pcf_pixels.empty() && pcf_ok == static_cast<int>(res.pcf_pixels.size()),
          std::to_string(pcf_ok) + "/" + std::to_string(res.pcf_pixels.size()) + " PCF dots on attracted pixels");
    return check.failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Per_{d,n}: strata, punctures, PCF points, the elliptic model of Per_{2,5} and its parameter picture"};
    app.require_subcommand(1);

    int d = 2, n = 5, samples = 25, dmax = 6;
    unsigned seed = 7;
    bool dot = false, csv = false, as_json = false;
    std::string config, output;

    auto* en = app.add_subcommand("enumerate", "combinatorial types of boundary strata");
    en->add_option("--d", d, "degree")->required();
    en->add_option("--n", n, "period")->required();
    auto* dot_flag = en->add_flag("--dot", dot, "Graphviz output");
    en->add_flag("--csv", csv, "CSV output")->excludes(dot_flag);

    auto* pu = app.add_subcommand("punctures", "punctures of Per_{d,n}");
    pu->add_option("--d", d, "degree")->required();
    pu->add_option("--n", n, "period")->required();
    pu->add_flag("--json", as_json, "JSON output");

    auto* pc = app.add_subcommand("pcf", "PCF points of Per_{2,5}");
    pc->add_flag("--json", as_json, "JSON output");

    auto* fc = app.add_subcommand("fit-cubic", "fit the plane cubic through sampled points");
    fc->add_option("--samples", samples, "number of samples")->check(CLI::Range(20, 400));
    fc->add_option("--seed", seed, "sampling seed");

    auto* vi = app.add_subcommand("verify-invariants", "j, discriminant, group table, orders, periods");

    auto* gt = app.add_subcommand("genus-table", "Per_{d,4} for d = 2..dmax");
    gt->add_option("--dmax", dmax, "largest degree");

    auto* rd = app.add_subcommand("render", "render the parameter picture to PPM");
    rd->add_option("--config", config, "key = value config file")->required()->check(CLI::ExistingFile);
    rd->add_option("--output", output, "override the output path");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*en) return cmd_enumerate(d, n, dot, csv);
        if (*pu) return cmd_punctures(d, n, as_json);
        if (*pc) return cmd_pcf(as_json);
        if (*fc) return cmd_fit_cubic(samples, seed);
        if (*vi) return cmd_verify_invariants();
        if (*gt) return cmd_genus_table(dmax);
        if (*rd) return cmd_render(config, output);
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
