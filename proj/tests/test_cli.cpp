#include "polylog/cli.hpp"
#include "polylog/representations.hpp"

#include <doctest.h>
#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

using namespace polylog;
using namespace polylog::cli;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string>& args, const CliHooks& hooks = {})
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(args, out, err, hooks);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text)
{
    std::vector<std::string> result;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        result.push_back(line);
    }
    return result;
}

std::vector<std::string> split(const std::string& line)
{
    std::vector<std::string> fields;
    std::istringstream in(line);
    for (std::string f; std::getline(in, f, ',');) {
        fields.push_back(f);
    }
    return fields;
}

Complex from_json(const json& pair)
{
    return {pair.at(0).get<double>(), pair.at(1).get<double>()};
}

} // namespace

TEST_SUITE("complex literals")
{
    TEST_CASE("accepted forms")
    {
        CHECK(parse_complex("2") == Complex(2.0));
        CHECK(parse_complex("-0.5") == Complex(-0.5));
        CHECK(parse_complex("3i") == Complex(0.0, 3.0));
        CHECK(parse_complex("-1.5i") == Complex(0.0, -1.5));
        CHECK(parse_complex("i") == Complex(0.0, 1.0));
        CHECK(parse_complex("-i") == Complex(0.0, -1.0));
        CHECK(parse_complex("2+3i") == Complex(2.0, 3.0));
        CHECK(parse_complex("2.2-0.9i") == Complex(2.2, -0.9));
        CHECK(parse_complex("1e-3+2E+1i") == Complex(1e-3, 20.0));
        CHECK(parse_complex("-1e-3-i") == Complex(-1e-3, -1.0));
    }

    TEST_CASE("rejected forms")
    {
        for (const char* bad : {"", "abc", "2+", "2 + 3i", "2+3", "i2", "1e999", "nan", "2+3j", "--1"}) {
            CAPTURE(bad);
            CHECK_THROWS_AS((void)parse_complex(bad), UsageError);
        }
    }

    TEST_CASE("format round-trips exactly")
    {
        for (Complex v : {Complex(0.1), Complex(0.0, -0.3), Complex(1.0 / 3.0, -2.0 / 7.0), Complex(1e-300, 4e300),
                          Complex(0.5822405264649674), Complex(-0.0, 0.0)}) {
            CHECK(parse_complex(format_complex(v)) == v);
        }
        CHECK(format_complex_fixed(Complex(0.5822405264649674)) == "0.582240526465");
        CHECK(format_complex_fixed(Complex(1.0, -2.0), 3) == "1.000-2.000i");
    }
}

TEST_SUITE("eval")
{
    TEST_CASE("text output")
    {
        const Run r = run({"eval", "--s", "2", "--z", "0.5"});
        CHECK(r.code == kExitOk);
        CHECK(r.out.rfind("0.582240526465  route series", 0) == 0);
        const Run zero = run({"eval", "--s", "3", "--z", "0"});
        CHECK(zero.code == kExitOk);
        CHECK(zero.out.rfind("0.000000000000  route", 0) == 0);
    }

    TEST_CASE("theorem precondition maps to exit 2")
    {
        const Run r = run({"eval", "--s", "1", "--z", "0.5", "--rep", "theorem6a"});
        CHECK(r.code == kExitDomainError);
        CHECK(r.err.find("Re s > 1") != std::string::npos);
        CHECK(r.out.empty());
    }

    TEST_CASE("json output re-parses to the library value exactly")
    {
        const Run r = run({"eval", "--s", "2.2+0.9i", "--z", "0.3-0.4i", "--format", "json", "--tol", "1e-12"});
        REQUIRE(r.code == kExitOk);
        const json doc = json::parse(r.out);
        const PolylogResult direct = li_eval({Complex(2.2, 0.9), Complex(0.3, -0.4), Route::Auto, Delta::One, 1e-12});
        CHECK(from_json(doc.at("value")) == direct.value);
        CHECK(doc.at("error_estimate").get<double>() == direct.error_estimate);
        CHECK(from_json(doc.at("s")) == Complex(2.2, 0.9));
        CHECK(from_json(doc.at("z")) == Complex(0.3, -0.4));
        CHECK(doc.at("route") == "series");
        CHECK(doc.at("converged") == true);
    }

    TEST_CASE("all routes in json and csv")
    {
        const Run j = run({"eval", "--s", "3", "--z", "0.6i", "--rep", "all", "--format", "json"});
        REQUIRE(j.code == kExitOk);
        const json doc = json::parse(j.out);
        REQUIRE(doc.is_array());
        CHECK(doc.size() == 7); // series, two classical, three theorem, odd Bernoulli
        const Complex ref = li_series(3.0, Complex(0.0, 0.6), 1e-14).value;
        for (const json& row : doc) {
            CAPTURE(row.dump());
            CHECK(std::abs(from_json(row.at("value")) - ref) <= 1e-9);
        }
        const Run c = run({"eval", "--s", "3", "--z", "0.6i", "--rep", "all", "--format", "csv"});
        REQUIRE(c.code == kExitOk);
        const auto rows = lines(c.out);
        CHECK(rows.front() == "s,z,route,value_re,value_im,error_estimate,converged");
        CHECK(rows.size() == doc.size() + 1);
        CHECK(split(rows[1]).size() == 7);
    }

    TEST_CASE("usage and domain errors")
    {
        CHECK(run({"eval", "--s", "2"}).code == kExitDomainError);
        CHECK(run({"eval", "--s", "2", "--z", "x"}).code == kExitDomainError);
        CHECK(run({"eval", "--s", "2", "--z", "0.5", "--rep", "bogus"}).code == kExitDomainError);
        CHECK(run({"eval", "--s", "2", "--z", "0.5", "--delta", "0.25"}).code == kExitDomainError);
        CHECK(run({"eval", "--s", "2.5", "--z", "2"}).code == kExitDomainError);
        CHECK(run({"frobnicate"}).code == kExitDomainError);
        CHECK(run({}).code == kExitDomainError);
        CHECK(run({"--help"}).code == kExitOk);
    }

    TEST_CASE("inversion through the dispatcher")
    {
        const Run r = run({"eval", "--s", "2", "--z", "-1.5i", "--format", "json"});
        REQUIRE(r.code == kExitOk);
        const json doc = json::parse(r.out);
        CHECK(doc.at("route") == "inversion-int");
        CHECK(std::abs(from_json(doc.at("value")) - Complex(-0.392707112217552, -1.27496944849438)) <= 1e-12);
    }
}

TEST_SUITE("crosscheck")
{
    TEST_CASE("small grid agrees with the series")
    {
        const Run r = run({"crosscheck", "--s-list", "2,2.5", "--radii", "0.4", "--angles", "3", "--format", "csv"});
        CHECK(r.code == kExitOk);
        const auto rows = lines(r.out);
        REQUIRE(rows.size() > 1);
        CHECK(rows.front() == "s,z,route,value_re,value_im,abs_dev");
        for (std::size_t i = 1; i < rows.size(); ++i) {
            const auto fields = split(rows[i]);
            REQUIRE(fields.size() == 6);
            if (fields[5] != "nan") {
                CHECK(std::stod(fields[5]) <= 1e-10);
            }
        }
    }

    TEST_CASE("radius on the unit circle is a domain error")
    {
        CHECK(run({"crosscheck", "--radii", "1"}).code == kExitDomainError);
    }

    TEST_CASE("json summary")
    {
        const Run r = run({"crosscheck", "--s-list", "3", "--radii", "0.7", "--angles", "2", "--format", "json"});
        CHECK(r.code == kExitOk);
        const json doc = json::parse(r.out);
        CHECK(doc.at("max_abs_dev").get<double>() <= doc.at("tol").get<double>());
        CHECK(doc.at("rows").size() > 0);
    }
}

TEST_SUITE("zeta-odd")
{
    TEST_CASE("values and references")
    {
        const Run r = run({"zeta-odd", "--n", "3", "--format", "json"});
        CHECK(r.code == kExitOk);
        const json doc = json::parse(r.out);
        CHECK(doc.at("argument") == 7);
        CHECK(std::abs(doc.at("reference").get<double>() - 1.008349277381923) <= 1e-14);
        REQUIRE(doc.at("routes").size() == 4);
        for (const json& route : doc.at("routes")) {
            CHECK(route.at("abs_dev").get<double>() <= 1e-9);
        }
        const Run text = run({"zeta-odd", "--n", "1"});
        CHECK(text.code == kExitOk);
        CHECK(text.out.find("1.202056903160") != std::string::npos);
    }

    TEST_CASE("n = 0 is rejected")
    {
        CHECK(run({"zeta-odd", "--n", "0"}).code == kExitDomainError);
    }
}

TEST_SUITE("lemma-check")
{
    using Cells = std::vector<std::vector<std::string>>;

    Cells cells_of(const Run& r)
    {
        Cells cells;
        const auto rows = lines(r.out);
        for (std::size_t i = 1; i < rows.size(); ++i) {
            cells.push_back(split(rows[i]));
        }
        return cells;
    }

    bool paired(const std::vector<std::string>& cell)
    {
        return (cell[0] == "sin" && cell[1] == "Sin") || (cell[0] == "cos" && cell[1] == "Cos");
    }

    TEST_CASE("full-period cells hold, half-period cross cells do not")
    {
        const Run r = run({"lemma-check", "--n-max", "3", "--format", "csv"});
        CHECK(r.code == kExitOracleFailure);
        const Cells cells = cells_of(r);
        REQUIRE(cells.size() == 8);
        for (const auto& cell : cells) {
            CAPTURE(r.out);
            const double worst = std::stod(cell[3]);
            if (cell[2] == "1" || paired(cell)) {
                CHECK(worst <= 1e-9);
            } else {
                CHECK(worst > 1e-3);
            }
        }
    }

    TEST_CASE("a sign-flipped kernel is caught")
    {
        CliHooks hooks;
        hooks.kernel = [](KernelKind kind, Complex z, double t) { return -kernel_unchecked(kind, z, t); };
        const Run r = run({"lemma-check", "--n-max", "2", "--format", "csv"}, hooks);
        CHECK(r.code == kExitOracleFailure);
        for (const auto& cell : cells_of(r)) {
            if (cell[2] == "1" && paired(cell)) {
                CHECK(std::stod(cell[3]) > 1e-3);
            }
        }
    }

    TEST_CASE("z = 0")
    {
        const Run r = run({"lemma-check", "--n-max", "1", "--z", "0", "--format", "json"});
        const json doc = json::parse(r.out);
        CHECK(doc.at("integrals") == 8);
        CHECK(std::abs(doc.at("worst_abs_dev").get<double>() - 1.0 / 3.141592653589793) <= 1e-12);
    }
}
