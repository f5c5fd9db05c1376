#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include <catch2/catch_amalgamated.hpp>

#include <ellcob/cli.hpp>

using namespace ellcob;

namespace
{

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    args.insert(args.begin(), "ellcob");
    std::vector<const char *> argv;
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string temp_file(const std::string &name, const std::string &content)
{
    const auto path = std::filesystem::temp_directory_path() / ("ellcob_test_" + name);
    std::ofstream(path) << content;
    return path.string();
}

std::string sample(const std::string &rel)
{
    return std::string(ELLCOB_SOURCE_DIR) + "/" + rel;
}

} // namespace

TEST_CASE("qexpand")
{
    CHECK(run({"qexpand", "delta1", "3"}).out == "1/4 + 6*q + 6*q^2 + O(q^3)\n");
    CHECK(run({"qexpand", "eps2", "2"}).out == "q^(1/2) + 8*q + O(q^(3/2))\n");
    CHECK(run({"qexpand", "E4", "--order", "2"}).out == "1 + 240*q + O(q^2)\n");
    CHECK(run({"qexpand", "Delta", "2"}).out == "q - 24*q^2 + O(q^3)\n");
    CHECK(run({"qexpand", "DeltaBar", "1"}).out == "1 + O(q)\n");
    CHECK(run({"qexpand", "delta2", "2"}).out == "-1/8 - 3*q^(1/2) + O(q)\n");

    const auto j = json::parse(run({"qexpand", "eps1", "2", "--json"}).out);
    CHECK(j["object"] == "eps1");
    CHECK(j["text"] == "1/16 - q + O(q^2)");
    CHECK(j["coefficients"] == json::parse(R"([[0,"1/16"],[2,"-1/1"]])"));
    CHECK(qseries_from_json(j["coefficients"], j["nu_order"]) == eps1(4));

    CHECK(run({"qexpand", "theta9", "2"}).code == cli::exit_usage);
    CHECK(run({"qexpand", "delta1", "2", "--order", "3"}).code == cli::exit_usage);
    CHECK(run({"qexpand", "delta1", "--order", "-1"}).code == cli::exit_usage);
    CHECK(run({}).code == cli::exit_usage);
    CHECK(run({"--help"}).code == cli::exit_ok);
}

TEST_CASE("genus")
{
    CHECK(run({"genus", "--input", sample("samples/cp2.json")}).out == "delta\n");
    CHECK(run({"genus", "--input", sample("samples/cp2.json"), "--flavor", "signature"}).out == "1\n");
    CHECK(run({"genus", "--input", sample("samples/k3.json"), "--flavor", "ahat"}).out == "2\n");
    CHECK(run({"genus", "--input", sample("samples/cp4.json"), "--flavor", "signature"}).out == "1\n");
    CHECK(run({"genus", "--input", sample("samples/k3.json"), "--flavor", "ell2", "--order", "2"}).out
          == "2 + 48*q^(1/2) + O(q)\n");
    CHECK(run({"genus", "--input", sample("samples/k3.json"), "--flavor", "ell1", "--order", "1"}).out == "-16 + O(q)\n");

    const auto j = json::parse(run({"genus", "--input", sample("samples/cp2.json"), "--json"}).out);
    CHECK(j["text"] == "delta");
    CHECK(j["value"] == json::parse(R"([[[1,0],"1/1"]])"));

    const auto kappa_only = temp_file("kappa_only.json", R"({"name":"x","dim":24,"kappa":[0,0,0,1]})");
    CHECK(run({"genus", "--input", kappa_only}).code == cli::exit_usage);
    CHECK(run({"genus", "--input", sample("samples/cp2.json"), "--flavor", "chi"}).code == cli::exit_usage);
    CHECK(run({"genus", "--input", "/nonexistent/record.json"}).code == cli::exit_usage);
    const auto bad = temp_file("bad.json", "{not json");
    CHECK(run({"genus", "--input", bad}).code == cli::exit_usage);
}

TEST_CASE("record validation")
{
    CHECK_THROWS(record_from_json(json::parse(R"({"dim":6,"pontryagin":{"[1]":1}})")));
    CHECK_THROWS(record_from_json(json::parse(R"({"dim":8,"pontryagin":{"[2]":1}})")));
    CHECK_THROWS(record_from_json(json::parse(R"({"dim":8,"pontryagin":{"[2]":1,"[1,1]":2,"[1]":3}})")));
    CHECK_THROWS(record_from_json(json::parse(R"({"dim":8,"kappa":[0,0,0,0]})")));
    CHECK_THROWS(record_from_json(json::parse(R"({"dim":24})")));
    CHECK_THROWS(record_from_json(json::parse(R"({"dim":24,"kappa":[0,0,0]})")));

    const auto r = record_from_json(json::parse(R"({"name":"a","dim":8,"pontryagin":{"[2]":10,"[1,1]":"25"}})"));
    CHECK((*r.pontryagin)[Partition({1, 1})] == 25);
    const auto back = record_from_json(record_to_json(r));
    CHECK(back.pontryagin == r.pontryagin);
    CHECK(back.name == "a");
}

TEST_CASE("classify")
{
    const auto zero = temp_file("zero.json", R"({"name":"z","dim":24,"kappa":[0,0,0,0]})");
    auto r = run({"classify", "--input", zero});
    CHECK(r.code == cli::exit_ok);
    CHECK(json::parse(r.out)["bounds_string"] == true);

    const auto m4 = temp_file("m4.json", R"({"name":"m4","dim":24,"kappa":[0,0,0,1]})");
    r = run({"classify", "--input", m4});
    CHECK(json::parse(r.out)["basis_coordinates"] == json::array({0, 0, 0, 1}));

    const auto m = temp_file("m.json", R"({"name":"m","dim":24,"kappa":[1,0,0,0]})");
    r = run({"classify", "--input", m});
    CHECK(json::parse(r.out)["witten_genus_text"].get<std::string>().rfind("1 - 24*q", 0) == 0);

    r = run({"classify", "--input", sample("samples/half_kappa.json")});
    CHECK(r.code == cli::exit_inconsistent);
    CHECK(json::parse(r.out)["bounds_string"].is_null());

    CHECK(run({"classify", "--input", sample("samples/cp2.json")}).code == cli::exit_usage);

    // Pontryagin numbers of the zero class plus a matching / clashing kappa
    std::string zeros = "{";
    for (const auto &p : partitions(6)) {
        zeros += (zeros.size() > 1 ? "," : "") + std::string("\"") + p.str() + "\":0";
    }
    zeros += "}";
    const auto both = temp_file("both.json", R"({"name":"b","dim":24,"kappa":[0,0,0,0],"pontryagin":)" + zeros + "}");
    CHECK(run({"classify", "--input", both}).code == cli::exit_ok);
    const auto clash = temp_file("clash.json", R"({"name":"c","dim":24,"kappa":[0,0,0,1],"pontryagin":)" + zeros + "}");
    r = run({"classify", "--input", clash});
    CHECK(r.code == cli::exit_inconsistent);
    CHECK(r.out.find("kappa-matches-record") != std::string::npos);
}

TEST_CASE("batch classification keeps input order")
{
    auto r = run({"classify", "--input", sample("data/catalog.json")});
    CHECK(r.code == cli::exit_ok);
    const auto j = json::parse(r.out);
    REQUIRE(j.size() == 5);
    const std::array<const char *, 5> names{"M1", "M2", "M3", "M4", "zero"};
    for (std::size_t i = 0; i < 5; ++i) {
        CHECK(j[i]["name"] == names[i]);
        if (i < 4) {
            json unit = json::array({0, 0, 0, 0});
            unit[i] = 1;
            CHECK(j[i]["basis_coordinates"] == unit);
            CHECK(j[i]["bounds_string"] == false);
        } else {
            CHECK(j[i]["bounds_string"] == true);
        }
    }
    // the catalogue is the basis matrix
    const Matrix4 k = basis_matrix_K();
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t row = 0; row < 4; ++row) {
            CHECK(Rational(integer_from_json(j[i]["kappa"][row])) == k(row, i));
        }
    }
    // byte-deterministic
    CHECK(run({"classify", "--input", sample("data/catalog.json")}).out == r.out);
}

TEST_CASE("verify")
{
    const auto r = run({"verify", "fast"});
    CHECK(r.code == cli::exit_ok);
    CHECK(r.out.find("FAIL") == std::string::npos);
    const auto full = run({"verify", "full", "--json"});
    CHECK(full.code == cli::exit_ok);
    const auto j = json::parse(full.out);
    CHECK(j["passed"] == true);
    bool saw_quartic = false, saw_hnf = false;
    for (const auto &c : j["checks"]) {
        saw_quartic = saw_quartic || (c["name"] == "jacobi-quartic-f1" && c["status"] == "pass");
        saw_hnf = saw_hnf || (c["name"] == "image-hnf" && c["detail"] == "diag(1,24,1,8)" && c["status"] == "pass");
    }
    CHECK(saw_quartic);
    CHECK(saw_hnf);
    CHECK(run({"verify", "medium"}).code == cli::exit_usage);
}

TEST_CASE("executable exit codes")
{
    const auto status = [](const std::string &args) {
        const std::string cmd = std::string(ELLCOB_CLI_PATH) + " " + args + " > /dev/null 2>&1";
        FILE *p = popen(cmd.c_str(), "r");
        REQUIRE(p != nullptr);
        const int s = pclose(p);
        return WIFEXITED(s) ? WEXITSTATUS(s) : -1;
    };
    CHECK(status("qexpand delta1 3") == 0);
    CHECK(status("qexpand nothing") == 1);
    CHECK(status("--bogus") == 1);
    CHECK(status("classify --input " + sample("samples/half_kappa.json")) == 2);
    CHECK(status("classify --input " + sample("data/catalog.json")) == 0);
}
