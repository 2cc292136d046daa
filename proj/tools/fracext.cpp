// Command-line front end: eval, verify and emit.
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fracext/fracext.hpp"

namespace {

using namespace fracext;

struct Options {
    std::string op;
    std::string suite;
    double sigma = std::numeric_limits<double>::quiet_NaN();
    int dim = 0;
    std::string function = "gaussian";
    std::string point;
    std::string grid;
    double y = std::numeric_limits<double>::quiet_NaN();
    std::string ygrid;
    std::string kind;
    int axis = 1;
    double delta = 1.0;
    double tol = 0.0;
    std::string route = "integral";
    std::string output;
};

enum Exit { kOk = 0, kSuiteFailed = 1, kUsage = 2, kAccuracy = 3 };

FracOrder parse_sigma(double sigma) {
    if (!(sigma > 0.0 && sigma < 1.0)) throw UsageError("sigma must be in (0,1)");
    return FracOrder(sigma);
}

// "min:max:n" on one axis
std::vector<double> parse_axis(const std::string& spec) {
    std::vector<double> parts;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ':')) {
        const auto v = detail::parse_numbers(item);
        if (v.size() != 1) throw UsageError("grid axis must be min:max:n, got '" + spec + "'");
        parts.push_back(v[0]);
    }
    if (parts.size() != 3) throw UsageError("grid axis must be min:max:n, got '" + spec + "'");
    const int m = static_cast<int>(parts[2]);
    if (m != parts[2] || m < 1) throw UsageError("grid node count must be a positive integer");
    if (m == 1) return {parts[0]};
    return uniform_grid(parts[0], parts[1], m);
}

std::vector<Point> parse_points(const Options& o) {
    if (!o.point.empty() && !o.grid.empty()) throw UsageError("give either --point or --grid, not both");
    std::vector<Point> pts;
    if (!o.point.empty()) {
        const auto v = detail::parse_numbers(o.point);
        if (v.empty() || v.size() > static_cast<size_t>(kMaxDim)) throw UsageError("--point needs 1 to 3 coordinates");
        Point p(static_cast<int>(v.size()));
        for (size_t i = 0; i < v.size(); ++i) p[static_cast<int>(i)] = v[i];
        pts.push_back(p);
    } else if (!o.grid.empty()) {
        std::vector<std::vector<double>> axes;
        std::stringstream ss(o.grid);
        std::string item;
        while (std::getline(ss, item, ',')) axes.push_back(parse_axis(item));
        if (axes.empty() || axes.size() > static_cast<size_t>(kMaxDim)) throw UsageError("--grid needs 1 to 3 axes");
        const int n = static_cast<int>(axes.size());
        size_t total = 1;
        for (const auto& a : axes) total *= a.size();
        for (size_t k = 0; k < total; ++k) {
            Point p(n);
            size_t rem = k;
            for (int i = n - 1; i >= 0; --i) {
                p[i] = axes[i][rem % axes[i].size()];
                rem /= axes[i].size();
            }
            pts.push_back(p);
        }
    } else {
        throw UsageError("need --point or --grid");
    }
    if (o.dim != 0 && o.dim != pts.front().dim) throw UsageError("--dim does not match the number of coordinates");
    return pts;
}

std::vector<double> parse_ygrid(const Options& o) {
    if (o.ygrid.empty()) return {};
    if (!std::isnan(o.y)) throw UsageError("give either --y or --ygrid, not both");
    return parse_axis(o.ygrid);
}

OperatorKind kind_for(const Options& o, OperatorKind fallback) {
    return o.kind.empty() ? fallback : parse_kind(o.kind);
}

QuadratureSpec spec_for(const Options& o) {
    QuadratureSpec spec = operator_spec();
    if (o.tol < 0.0) throw UsageError("--tol must be positive");
    if (o.tol > 0.0) {
        spec.abs_tol = o.tol;
        spec.rel_tol = o.tol;
    }
    return spec;
}

std::string sci(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.11e", v);
    return buf;
}

void print_points(const std::vector<Point>& xs, const std::vector<double>& values) {
    for (size_t i = 0; i < xs.size(); ++i) {
        if (xs.size() > 1)
            for (int k = 0; k < xs[i].dim; ++k) std::cout << sci(xs[i][k]) << ' ';
        std::cout << sci(values[i]) << '\n';
    }
}

void write_field(const ExtensionField& u, const std::string& path) {
    if (path.empty())
        emit_field_csv(u, std::cout);
    else
        emit_field_csv(u, path);
}

int run_eval(const Options& o) {
    static const std::vector<std::string> ops{"frac-laplacian", "frac-hermite", "extend", "conjugate", "trace"};
    if (std::find(ops.begin(), ops.end(), o.op) == ops.end()) throw UsageError("unknown operator '" + o.op + "'");
    const FracOrder order = parse_sigma(o.sigma);
    const auto xs = parse_points(o);
    const int n = xs.front().dim;
    const ScalarField f = make_catalog_function(o.function, n).field;
    if (f.dim != n) throw UsageError("function dimension does not match the point dimension");
    const QuadratureSpec spec = spec_for(o);
    const auto ys = parse_ygrid(o);
    if (o.op == "extend" || o.op == "conjugate") {
        const bool lap_only = o.op == "conjugate";
        const OperatorKind kind = kind_for(o, lap_only ? OperatorKind::Laplacian : OperatorKind::Hermite);
        if (lap_only && kind != OperatorKind::Laplacian)
            throw UnsupportedError("conjugate Poisson integrals are implemented for -Lap only");
        if (lap_only && (o.axis < 1 || o.axis > n)) throw UsageError("--axis must be between 1 and the dimension");
        if (!ys.empty()) {
            const auto u = lap_only ? conjugate_field(f, xs, ys, order, o.axis - 1, spec)
                                    : extension_field(f, xs, ys, order, kind, spec);
            write_field(u, o.output);
            return kOk;
        }
        if (std::isnan(o.y)) throw UsageError("'" + o.op + "' needs --y or --ygrid");
        std::vector<double> v(xs.size());
        parallel_for(xs.size(), [&](size_t i) {
            v[i] = lap_only ? conjugate_poisson(f, xs[i], o.y, order, o.axis - 1, kind, spec)
                            : poisson_extend(f, xs[i], o.y, order, kind, spec);
        });
        if (o.output.empty())
            print_points(xs, v);
        else
            emit_points_csv(xs, v, o.output);
        return kOk;
    }
    if (!ys.empty() || !std::isnan(o.y)) throw UsageError("--y and --ygrid apply to extend and conjugate only");
    std::vector<double> v(xs.size());
    if (o.op == "frac-laplacian" || o.op == "frac-hermite") {
        const OperatorKind own = o.op == "frac-laplacian" ? OperatorKind::Laplacian : OperatorKind::Hermite;
        if (kind_for(o, own) != own) throw UsageError("--kind contradicts the operator '" + o.op + "'");
        parallel_for(xs.size(), [&](size_t i) {
            v[i] = own == OperatorKind::Laplacian ? frac_laplacian_si(f, xs[i], order, o.delta, spec)
                                                  : frac_hermite(f, xs[i], order, o.delta, spec);
        });
    } else if (o.op == "trace") {
        const OperatorKind kind = kind_for(o, OperatorKind::Hermite);
        TraceRoute route;
        if (o.route == "integral")
            route = TraceRoute::Integral;
        else if (o.route == "regression")
            route = TraceRoute::Regression;
        else
            throw UsageError("--route must be integral or regression");
        parallel_for(xs.size(), [&](size_t i) { v[i] = neumann_trace(f, xs[i], order, kind, route, spec).limit_value; });
    }
    if (o.output.empty())
        print_points(xs, v);
    else
        emit_points_csv(xs, v, o.output);
    return kOk;
}

std::string csv_quote(const std::string& s) {
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

int run_verify(const Options& o) {
    const SuiteReport r = run_suite(o.suite);
    for (const auto& c : r.cases) {
        std::cout << status_name(c.status) << "  " << c.id << "  expected " << sci(c.expected) << "  observed "
                  << sci(c.observed) << "  tol " << sci(c.tolerance);
        if (!c.note.empty()) std::cout << "  (" << c.note << ")";
        std::cout << '\n';
    }
    char buf[160];
    std::snprintf(buf, sizeof buf, "suite %s: %zu cases, %d failed, %.2f s%s\n", r.suite_name.c_str(), r.cases.size(),
                  r.failures(), r.wall_time, r.gating ? "" : " (exploratory, non-gating)");
    std::cout << buf;
    if (!o.output.empty()) {
        std::ofstream os(o.output);
        if (!os) throw IoError("cannot open '" + o.output + "' for writing");
        os << "id,expected,observed,tolerance,status,note\n";
        for (const auto& c : r.cases)
            os << csv_quote(c.id) << ',' << full_precision(c.expected) << ',' << full_precision(c.observed) << ','
               << full_precision(c.tolerance) << ',' << status_name(c.status) << ',' << csv_quote(c.note) << '\n';
        if (!os) throw IoError("write to '" + o.output + "' failed");
    }
    return r.gating && !r.passed() ? kSuiteFailed : kOk;
}

int run_emit(const Options& o) {
    if (o.op != "extension" && o.op != "kernel") throw UsageError("unknown emit target '" + o.op + "'");
    const FracOrder order = parse_sigma(o.sigma);
    if (o.grid.empty() || o.ygrid.empty()) throw UsageError("emit needs --grid and --ygrid");
    Options grid_only = o;
    grid_only.point.clear();
    const auto xs = parse_points(grid_only);
    const auto ys = parse_ygrid(o);
    const int n = xs.front().dim;
    const OperatorKind kind = kind_for(o, OperatorKind::Hermite);
    const QuadratureSpec spec = spec_for(o);
    if (o.op == "extension") {
        const ScalarField f = make_catalog_function(o.function, n).field;
        if (f.dim != n) throw UsageError("function dimension does not match the grid dimension");
        write_field(extension_field(f, xs, ys, order, kind, spec), o.output);
    } else if (o.op == "kernel") {
        Point z(n);
        if (!o.point.empty()) {
            const auto v = detail::parse_numbers(o.point);
            if (v.size() != static_cast<size_t>(n)) throw UsageError("--point must match the grid dimension");
            for (int i = 0; i < n; ++i) z[i] = v[i];
        }
        write_field(kernel_field(z, xs, ys, order, kind), o.output);
    }
    return kOk;
}

void add_common(CLI::App* cmd, Options& o) {
    cmd->add_option("--sigma", o.sigma, "fractional order in (0,1)");
    cmd->add_option("--dim", o.dim, "dimension 1, 2 or 3 (default: from --point or --grid)");
    cmd->add_option("--function", o.function, "gaussian | hermite:k[,k2,k3] | bump | poly-decay:N | constant[:c]");
    cmd->add_option("--point", o.point, "comma-separated coordinates");
    cmd->add_option("--grid", o.grid, "min:max:n per axis, axes separated by commas");
    cmd->add_option("--y", o.y, "extension variable y > 0");
    cmd->add_option("--ygrid", o.ygrid, "min:max:n for y");
    cmd->add_option("--kind", o.kind, "laplacian | hermite");
    cmd->add_option("--axis", o.axis, "conjugate axis, 1-based");
    cmd->add_option("--delta", o.delta, "near-field radius of the singular-integral routes");
    cmd->add_option("--tol", o.tol, "absolute and relative quadrature tolerance");
    cmd->add_option("--route", o.route, "trace route: integral | regression");
    cmd->add_option("--output", o.output, "CSV output path");
}

} // namespace

int main(int argc, char** argv) {
    Options o;
    CLI::App app{"Fractional powers of -Lap and the harmonic oscillator, and their extension problems"};
    app.require_subcommand(1);
    auto* eval = app.add_subcommand("eval", "evaluate an operator on a catalog function");
    eval->add_option("operator", o.op, "frac-laplacian | frac-hermite | extend | conjugate | trace")->required();
    add_common(eval, o);
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", o.suite, "kernels | eigen | routes | extension | neumann | conjugate | principles | "
                                         "limits | harnack-probe")
        ->required();
    verify->add_option("--output", o.output, "CSV report path");
    auto* emit = app.add_subcommand("emit", "write sampled fields as CSV");
    emit->add_option("target", o.op, "extension | kernel")->required();
    add_common(emit, o);
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }
    try {
        if (*eval) return run_eval(o);
        if (*verify) return run_verify(o);
        return run_emit(o);
    } catch (const AccuracyError& e) {
        std::cerr << "accuracy error: " << e.what() << '\n';
        return kAccuracy;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kAccuracy;
    }
}
