#include "polylog/cli.hpp"

#include "polylog/representations.hpp"
#include "polylog/special/zeta.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <optional>

namespace polylog::cli {

namespace {

using nlohmann::json;

enum class Format { Text, Json, Csv };

struct Row {
    Complex s;
    Complex z;
    std::string route;
    Complex value;
    double error_estimate = 0.0;
    bool converged = true;
    std::optional<double> abs_dev;
    std::string failure; // non-empty when the route threw
};

json pair(Complex v)
{
    return json::array({v.real(), v.imag()});
}

json to_json(const Row& row)
{
    json j = {{"s", pair(row.s)},
              {"z", pair(row.z)},
              {"route", row.route},
              {"value", pair(row.value)},
              {"error_estimate", row.error_estimate},
              {"converged", row.converged}};
    if (row.abs_dev) {
        j["abs_dev"] = *row.abs_dev;
    }
    if (!row.failure.empty()) {
        j["failure"] = row.failure;
    }
    return j;
}

std::string sci(double x)
{
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.3e", x);
    return buffer;
}

std::string num17(double x)
{
    char buffer[40];
    std::snprintf(buffer, sizeof buffer, "%.17g", x);
    return buffer;
}

std::string route_label(Route route, Delta delta)
{
    std::string label(route_name(route));
    switch (route) {
    case Route::Theorem6a:
    case Route::Theorem6b:
    case Route::Theorem6c:
    case Route::Bernoulli7a:
    case Route::Bernoulli7b:
    case Route::Bernoulli7c:
        if (delta == Delta::Half) {
            label += "[delta=0.5]";
        }
        break;
    default:
        break;
    }
    return label;
}

bool needs_disc(Route route)
{
    return route != Route::Auto && route != Route::ClassicalExp && route != Route::InversionInt;
}

bool positive_integer(Complex s, unsigned& n)
{
    if (s.imag() != 0.0 || !(s.real() >= 1.0) || s.real() != std::round(s.real()) || s.real() > 1e6) {
        return false;
    }
    n = static_cast<unsigned>(s.real());
    return true;
}

std::vector<Route> applicable_routes(Complex s, Complex z)
{
    const double r = std::abs(z);
    const bool on_cut = z.imag() == 0.0 && z.real() > 1.0;
    unsigned n = 0;
    const bool integer = positive_integer(s, n);
    std::vector<Route> routes;
    if (r < 1.0) {
        routes.push_back(Route::Series);
    }
    if (s.real() > 0.0 && !on_cut && !(z == Complex(1.0) && !(s.real() > 1.0))) {
        routes.push_back(Route::ClassicalExp);
    }
    if (s.real() > 0.0 && r < 1.0) {
        routes.push_back(Route::ClassicalLog);
    }
    if (s.real() > 1.0 && r < 1.0) {
        routes.insert(routes.end(), {Route::Theorem6a, Route::Theorem6b, Route::Theorem6c});
    }
    if (integer && r < 1.0) {
        if (n % 2 == 1) {
            routes.push_back(Route::Bernoulli7a);
        } else {
            routes.insert(routes.end(), {Route::Bernoulli7b, Route::Bernoulli7c});
        }
    }
    if ((integer || s == Complex(0.0)) && r > 1.0 && !on_cut) {
        routes.push_back(Route::InversionInt);
    }
    return routes;
}

Row evaluate(Complex s, Complex z, Route route, Delta delta, double tol)
{
    Row row{s, z, route_label(route, delta), 0.0, 0.0, true, std::nullopt, {}};
    try {
        const PolylogResult result = li_eval(PolylogRequest{s, z, route, delta, tol});
        row.route = route_label(result.route, delta);
        row.value = result.value;
        row.error_estimate = result.error_estimate;
        row.converged = result.converged;
    } catch (const ResourceError& e) {
        row.converged = false;
        row.failure = e.what();
    }
    return row;
}

struct CommonOptions {
    std::string format = "text";
    double tol = 1e-10;
};

Format parse_format(const std::string& name)
{
    if (name == "json") {
        return Format::Json;
    }
    if (name == "csv") {
        return Format::Csv;
    }
    return Format::Text;
}

Delta parse_delta(double value)
{
    return value == 0.5 ? Delta::Half : Delta::One;
}

void add_common(CLI::App* cmd, CommonOptions& common)
{
    cmd->add_option("--tol", common.tol, "absolute tolerance")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--format", common.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
}

CLI::Option* add_delta(CLI::App* cmd, double& delta)
{
    return cmd->add_option("--delta", delta, "upper integration limit (1 or 0.5)")
        ->check(CLI::IsMember({1.0, 0.5}))
        ->capture_default_str();
}

// eval ----------------------------------------------------------------------

struct EvalConfig {
    std::string s;
    std::string z;
    std::string rep = "auto";
    double delta = 1.0;
    CommonOptions common;
};

int cmd_eval(const EvalConfig& config, std::ostream& out)
{
    const Complex s = parse_complex(config.s);
    const Complex z = parse_complex(config.z);
    const Delta delta = parse_delta(config.delta);

    std::vector<Route> routes;
    if (config.rep == "all") {
        routes = applicable_routes(s, z);
        if (routes.empty()) {
            throw UnsupportedError("no route applies to s = " + config.s + ", z = " + config.z);
        }
    } else {
        const auto route = parse_route(config.rep);
        if (!route) {
            throw UsageError("unknown representation '" + config.rep + "'");
        }
        if (needs_disc(*route) && !(std::abs(z) < 1.0)) {
            throw DomainError("route " + config.rep + " requires |z| < 1");
        }
        routes.push_back(*route);
    }

    std::vector<Row> rows;
    for (Route route : routes) {
        rows.push_back(evaluate(s, z, route, delta, config.common.tol));
    }

    switch (parse_format(config.common.format)) {
    case Format::Json: {
        if (rows.size() == 1) {
            out << to_json(rows.front()).dump() << '\n';
        } else {
            json list = json::array();
            for (const Row& row : rows) {
                list.push_back(to_json(row));
            }
            out << list.dump() << '\n';
        }
        break;
    }
    case Format::Csv:
        out << "s,z,route,value_re,value_im,error_estimate,converged\n";
        for (const Row& row : rows) {
            out << format_complex(row.s) << ',' << format_complex(row.z) << ',' << row.route << ','
                << num17(row.value.real()) << ',' << num17(row.value.imag()) << ',' << num17(row.error_estimate)
                << ',' << (row.converged ? "true" : "false") << '\n';
        }
        break;
    case Format::Text:
        for (const Row& row : rows) {
            if (!row.failure.empty()) {
                out << row.route << "  failed: " << row.failure << '\n';
                continue;
            }
            out << format_complex_fixed(row.value) << "  route " << row.route << "  error estimate "
                << sci(row.error_estimate) << (row.converged ? "" : "  NOT CONVERGED") << '\n';
        }
        break;
    }
    const bool all_converged = std::all_of(rows.begin(), rows.end(), [](const Row& r) { return r.converged; });
    return all_converged ? kExitOk : kExitNotConverged;
}

// crosscheck ----------------------------------------------------------------

struct CrosscheckConfig {
    std::vector<std::string> s_list = {"2", "2.5", "3", "4", "2.2+0.9i"};
    std::vector<double> radii = {0.3, 0.6, 0.9};
    int angles = 4;
    double delta = 1.0;
    CommonOptions common;
};

int cmd_crosscheck(const CrosscheckConfig& config, std::ostream& out)
{
    if (config.s_list.empty() || config.radii.empty() || config.angles < 1) {
        throw UsageError("crosscheck: the grid is empty");
    }
    std::vector<Complex> orders;
    for (const std::string& literal : config.s_list) {
        orders.push_back(parse_complex(literal));
    }
    for (double r : config.radii) {
        if (!(r >= 0.0 && r < 1.0)) {
            throw DomainError("crosscheck: radii must satisfy 0 <= |z| < 1 (series reference)");
        }
    }
    const Delta delta = parse_delta(config.delta);
    const double tol = config.common.tol;

    std::vector<Row> rows;
    for (Complex s : orders) {
        for (double r : config.radii) {
            for (int k = 0; k < config.angles; ++k) {
                const Complex z = std::polar(r, 2.0 * std::numbers::pi * k / config.angles);
                const PolylogResult reference = li_series(s, z, 1e-2 * tol);
                for (Route route : applicable_routes(s, z)) {
                    if (route == Route::Series) {
                        continue;
                    }
                    Row row = evaluate(s, z, route, delta, 0.1 * tol);
                    if (row.failure.empty()) {
                        row.abs_dev = std::abs(row.value - reference.value);
                    }
                    rows.push_back(std::move(row));
                }
            }
        }
    }

    double worst = 0.0;
    bool all_converged = true;
    for (const Row& row : rows) {
        all_converged = all_converged && row.converged;
        if (row.abs_dev) {
            worst = std::max(worst, *row.abs_dev);
        }
    }

    switch (parse_format(config.common.format)) {
    case Format::Json: {
        json list = json::array();
        for (const Row& row : rows) {
            list.push_back(to_json(row));
        }
        out << json{{"rows", list}, {"max_abs_dev", worst}, {"tol", tol}}.dump() << '\n';
        break;
    }
    case Format::Csv:
        out << "s,z,route,value_re,value_im,abs_dev\n";
        for (const Row& row : rows) {
            out << format_complex(row.s) << ',' << format_complex(row.z) << ',' << row.route << ','
                << num17(row.value.real()) << ',' << num17(row.value.imag()) << ','
                << (row.abs_dev ? num17(*row.abs_dev) : std::string("nan")) << '\n';
        }
        break;
    case Format::Text:
        for (const Row& row : rows) {
            char line[256];
            std::snprintf(line, sizeof line, "%-12s %-28s %-20s %-36s %s%s\n", format_complex(row.s).c_str(),
                          format_complex_fixed(row.z, 6).c_str(), row.route.c_str(),
                          format_complex_fixed(row.value).c_str(),
                          row.abs_dev ? sci(*row.abs_dev).c_str() : "-",
                          row.converged ? "" : "  NOT CONVERGED");
            out << line;
        }
        out << "max |dev| " << sci(worst) << " over " << rows.size() << " evaluations (tol " << sci(tol) << ")\n";
        break;
    }
    if (!all_converged) {
        return kExitNotConverged;
    }
    return worst <= tol ? kExitOk : kExitOracleFailure;
}

// zeta-odd ------------------------------------------------------------------

struct ZetaConfig {
    int n = 1;
    CommonOptions common;
};

int cmd_zeta_odd(const ZetaConfig& config, std::ostream& out)
{
    if (config.n < 1) {
        throw DomainError("zeta-odd: requires n >= 1");
    }
    const auto n = static_cast<unsigned>(config.n);
    const double reference = special::riemann_zeta(static_cast<double>(2 * n + 1)).real();
    const double tol = config.common.tol;

    struct Entry {
        std::string route;
        double delta;
        ZetaOddResult result;
        double abs_dev;
    };
    std::vector<Entry> entries;
    for (const auto& [name, tan_route] : {std::pair{"cot", false}, std::pair{"tan", true}}) {
        for (Delta delta : {Delta::One, Delta::Half}) {
            const ZetaOddResult r = tan_route ? zeta_odd_tan(n, delta, 0.1 * tol) : zeta_odd_cot(n, delta, 0.1 * tol);
            entries.push_back({name, delta_value(delta), r, std::fabs(r.value - reference)});
        }
    }

    switch (parse_format(config.common.format)) {
    case Format::Json: {
        json list = json::array();
        for (const Entry& e : entries) {
            list.push_back({{"route", e.route},
                            {"delta", e.delta},
                            {"value", e.result.value},
                            {"error_estimate", e.result.error_estimate},
                            {"converged", e.result.converged},
                            {"abs_dev", e.abs_dev}});
        }
        out << json{{"n", n}, {"argument", 2 * n + 1}, {"reference", reference}, {"routes", list}}.dump() << '\n';
        break;
    }
    case Format::Csv:
        out << "argument,route,delta,value,error_estimate,abs_dev\n";
        for (const Entry& e : entries) {
            out << 2 * n + 1 << ',' << e.route << ',' << e.delta << ',' << num17(e.result.value) << ','
                << num17(e.result.error_estimate) << ',' << num17(e.abs_dev) << '\n';
        }
        break;
    case Format::Text:
        out << "zeta(" << 2 * n + 1 << ") reference " << format_complex_fixed(reference) << '\n';
        for (const Entry& e : entries) {
            out << "  " << e.route << "  delta " << (e.delta == 1.0 ? "1  " : "0.5") << "  "
                << format_complex_fixed(e.result.value) << "  |dev| " << sci(e.abs_dev)
                << (e.result.converged ? "" : "  NOT CONVERGED") << '\n';
        }
        break;
    }
    bool converged = true;
    double worst = 0.0;
    for (const Entry& e : entries) {
        converged = converged && e.result.converged;
        worst = std::max(worst, e.abs_dev);
    }
    if (!converged) {
        return kExitNotConverged;
    }
    return worst <= tol ? kExitOk : kExitOracleFailure;
}

// lemma-check ---------------------------------------------------------------

struct LemmaConfig {
    int n_max = 8;
    std::vector<std::string> z_list;
    double threshold = 1e-9;
    std::string format = "text";
};

std::vector<Complex> default_lemma_points()
{
    std::vector<Complex> points;
    for (double r : {0.1, 0.5, 0.9}) {
        for (double angle : {0.0, std::numbers::pi / 3.0, std::numbers::pi / 2.0}) {
            points.push_back(std::polar(r, angle));
        }
    }
    return points;
}

int cmd_lemma_check(const LemmaConfig& config, std::ostream& out, const KernelFunction& kernel_fn)
{
    if (config.n_max < 1) {
        throw DomainError("lemma-check: requires n-max >= 1");
    }
    std::vector<Complex> points;
    for (const std::string& literal : config.z_list) {
        points.push_back(parse_complex(literal));
    }
    if (points.empty()) {
        points = default_lemma_points();
    }
    for (Complex z : points) {
        if (!(std::abs(z) < 1.0)) {
            throw DomainError("lemma-check: requires |z| < 1");
        }
    }

    struct Cell {
        TrigChannel channel;
        KernelKind kind;
        Delta delta;
        double worst = 0.0;
        bool converged = true;
    };
    std::vector<Cell> cells;
    for (TrigChannel channel : {TrigChannel::Cos, TrigChannel::Sin}) {
        for (KernelKind kind : {KernelKind::Cos, KernelKind::Sin}) {
            for (Delta delta : {Delta::One, Delta::Half}) {
                cells.push_back({channel, kind, delta});
            }
        }
    }
    std::size_t count = 0;
    for (Cell& cell : cells) {
        for (int n = 1; n <= config.n_max; ++n) {
            for (Complex z : points) {
                const auto un = static_cast<unsigned>(n);
                const quad::QuadratureResult q
                    = lemma_integral(cell.channel, cell.kind, un, z, cell.delta, 1e-12, kernel_fn);
                const Complex expected = lemma_expected(cell.channel, cell.kind, un, z, cell.delta);
                cell.worst = std::max(cell.worst, std::abs(q.value - expected));
                cell.converged = cell.converged && q.converged;
                ++count;
            }
        }
    }

    auto channel_name = [](TrigChannel c) { return c == TrigChannel::Cos ? "cos" : "sin"; };
    auto kernel_name = [](KernelKind k) { return k == KernelKind::Cos ? "Cos" : "Sin"; };
    double worst = 0.0;
    bool converged = true;
    for (const Cell& cell : cells) {
        worst = std::max(worst, cell.worst);
        converged = converged && cell.converged;
    }

    switch (parse_format(config.format)) {
    case Format::Json: {
        json list = json::array();
        for (const Cell& cell : cells) {
            list.push_back({{"channel", channel_name(cell.channel)},
                            {"kernel", kernel_name(cell.kind)},
                            {"delta", delta_value(cell.delta)},
                            {"worst_abs_dev", cell.worst},
                            {"converged", cell.converged}});
        }
        out << json{{"integrals", count}, {"worst_abs_dev", worst}, {"threshold", config.threshold}, {"cells", list}}
                   .dump()
            << '\n';
        break;
    }
    case Format::Csv:
        out << "channel,kernel,delta,worst_abs_dev,converged\n";
        for (const Cell& cell : cells) {
            out << channel_name(cell.channel) << ',' << kernel_name(cell.kind) << ',' << delta_value(cell.delta)
                << ',' << num17(cell.worst) << ',' << (cell.converged ? "true" : "false") << '\n';
        }
        break;
    case Format::Text:
        for (const Cell& cell : cells) {
            out << channel_name(cell.channel) << " x " << kernel_name(cell.kind) << "  delta "
                << (cell.delta == Delta::One ? "1  " : "0.5") << "  worst |dev| " << sci(cell.worst)
                << (cell.converged ? "" : "  NOT CONVERGED") << '\n';
        }
        out << count << " integrals, worst |dev| " << sci(worst) << " (threshold " << sci(config.threshold) << ")\n";
        break;
    }
    if (worst > config.threshold) {
        return kExitOracleFailure;
    }
    return converged ? kExitOk : kExitNotConverged;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const CliHooks& hooks)
{
    CLI::App app{"Polylogarithm evaluation through Poisson-kernel integral representations", "polylog"};
    app.require_subcommand(1);

    EvalConfig eval;
    CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate Li_s(z)");
    eval_cmd->add_option("--s", eval.s, "order, complex literal")->required();
    eval_cmd->add_option("--z", eval.z, "argument, complex literal")->required();
    eval_cmd->add_option("--rep", eval.rep, "representation, 'auto' or 'all'")->capture_default_str();
    add_delta(eval_cmd, eval.delta);
    add_common(eval_cmd, eval.common);

    CrosscheckConfig cross;
    CLI::App* cross_cmd = app.add_subcommand("crosscheck", "compare every applicable route with the series");
    cross_cmd->add_option("--s-list", cross.s_list, "orders")->delimiter(',')->capture_default_str();
    cross_cmd->add_option("--radii", cross.radii, "radii |z| < 1")->delimiter(',')->capture_default_str();
    cross_cmd->add_option("--angles", cross.angles, "angles per radius")->capture_default_str();
    add_delta(cross_cmd, cross.delta);
    add_common(cross_cmd, cross.common);

    ZetaConfig zeta;
    CLI::App* zeta_cmd = app.add_subcommand("zeta-odd", "zeta(2n+1) through the cot and tan integrals");
    zeta_cmd->add_option("--n", zeta.n, "n >= 1")->required();
    add_common(zeta_cmd, zeta.common);

    LemmaConfig lemma;
    CLI::App* lemma_cmd = app.add_subcommand("lemma-check", "trigonometric moments of the kernels");
    lemma_cmd->add_option("--n-max", lemma.n_max, "largest frequency")->capture_default_str();
    lemma_cmd->add_option("--z", lemma.z_list, "arguments (default: 9-point grid)")->delimiter(',');
    lemma_cmd->add_option("--tol", lemma.threshold, "pass threshold")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    lemma_cmd->add_option("--format", lemma.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitDomainError;
    }

    try {
        if (eval_cmd->parsed()) {
            return cmd_eval(eval, out);
        }
        if (cross_cmd->parsed()) {
            return cmd_crosscheck(cross, out);
        }
        if (zeta_cmd->parsed()) {
            return cmd_zeta_odd(zeta, out);
        }
        return cmd_lemma_check(lemma, out, hooks.kernel);
    } catch (const ResourceError& e) {
        err << "error: " << e.what() << '\n';
        return kExitNotConverged;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomainError;
    }
}

} // namespace polylog::cli
