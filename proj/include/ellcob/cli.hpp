#ifndef ELLCOB_CLI_HPP
#define ELLCOB_CLI_HPP

#include <fstream>
#include <functional>
#include <future>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <ellcob/io.hpp>
#include <ellcob/modular.hpp>
#include <ellcob/string24.hpp>
#include <ellcob/twist.hpp>
#include <ellcob/verify.hpp>

// Command dispatch for the `ellcob` executable. Everything writes to the
// supplied streams and returns the process exit code:
//   0 success, 1 usage or I/O error, 2 mathematical inconsistency in the input.
//
// --order N counts grid steps past an object's leading exponent; the grid is
// q^(1/2) for the half-integral objects (delta2, eps2, ell2) and q otherwise.

namespace ellcob::cli
{

inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 1;
inline constexpr int exit_inconsistent = 2;
inline constexpr int max_order = 400;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct QObject {
    std::string name;
    std::size_t lead_nu; // leading exponent in nu = q^(1/2)
    std::size_t step_nu; // 1 for the half-integral grid, 2 for the integral one
    std::function<QRational(std::size_t)> make;
};

inline const std::vector<QObject> &qobjects()
{
    static const std::vector<QObject> objects{
        {"delta1", 0, 2, [](std::size_t n) { return delta1(n); }},
        {"eps1", 0, 2, [](std::size_t n) { return eps1(n); }},
        {"delta2", 0, 1, [](std::size_t n) { return delta2(n); }},
        {"eps2", 1, 1, [](std::size_t n) { return eps2(n); }},
        {"E4", 0, 2, [](std::size_t n) { return e4(n); }},
        {"Delta", 2, 2, [](std::size_t n) { return discriminant(n); }},
        {"DeltaBar", 0, 2, [](std::size_t n) { return delta_bar(n); }},
    };
    return objects;
}

inline const QObject &find_qobject(const std::string &name)
{
    for (const auto &o : qobjects()) {
        if (o.name == name) {
            return o;
        }
    }
    std::string known;
    for (const auto &o : qobjects()) {
        known += (known.empty() ? "" : ", ") + o.name;
    }
    throw UsageError("unknown object '" + name + "' (expected one of " + known + ")");
}

inline std::size_t grid_nu_order(std::size_t lead_nu, std::size_t step_nu, int steps)
{
    if (steps < 0 || steps > max_order) {
        throw UsageError("--order must lie in [0, " + std::to_string(max_order) + "]");
    }
    return lead_nu + static_cast<std::size_t>(steps) * step_nu;
}

inline json qexpand_json(const std::string &name, int steps, const QRational &s)
{
    return json{{"object", name},
                {"order", steps},
                {"nu_order", s.order()},
                {"coefficients", series_to_json(s)},
                {"text", format_qseries(s)}};
}

inline int cmd_qexpand(const std::string &name, int steps, bool as_json, std::ostream &out)
{
    const auto &obj = find_qobject(name);
    const auto s = obj.make(grid_nu_order(obj.lead_nu, obj.step_nu, steps));
    if (as_json) {
        out << qexpand_json(name, steps, s).dump(2) << "\n";
    } else {
        out << format_qseries(s) << "\n";
    }
    return exit_ok;
}

inline json read_json_file(const std::string &path)
{
    std::ifstream in(path);
    if (!in) {
        throw UsageError("cannot open input file '" + path + "'");
    }
    try {
        return json::parse(in);
    } catch (const json::parse_error &e) {
        throw UsageError("malformed JSON in '" + path + "': " + e.what());
    }
}

// Object or array of objects.
inline std::vector<ManifoldRecord> read_records(const std::string &path, bool &is_batch)
{
    const json doc = read_json_file(path);
    std::vector<ManifoldRecord> records;
    is_batch = doc.is_array();
    const auto one = [&](const json &j, std::size_t i) {
        try {
            records.push_back(record_from_json(j));
        } catch (const std::exception &e) {
            throw UsageError("record " + std::to_string(i) + ": " + e.what());
        }
    };
    if (is_batch) {
        for (std::size_t i = 0; i < doc.size(); ++i) {
            one(doc[i], i);
        }
    } else {
        one(doc, 0);
    }
    return records;
}

enum class Flavor { elliptic, signature, ahat, ell1, ell2 };

inline Flavor parse_flavor(const std::string &s)
{
    if (s == "elliptic") {
        return Flavor::elliptic;
    }
    if (s == "signature") {
        return Flavor::signature;
    }
    if (s == "ahat") {
        return Flavor::ahat;
    }
    if (s == "ell1") {
        return Flavor::ell1;
    }
    if (s == "ell2") {
        return Flavor::ell2;
    }
    throw UsageError("unknown flavor '" + s + "'");
}

inline json genus_value(const ManifoldRecord &rec, Flavor flavor, int steps)
{
    if (!rec.pontryagin) {
        throw UsageError("record '" + rec.name + "' has no Pontryagin numbers");
    }
    const auto &v = *rec.pontryagin;
    json j{{"name", rec.name}};
    switch (flavor) {
    case Flavor::elliptic: {
        const auto p = elliptic_genus(v);
        j["value"] = to_json(p);
        j["text"] = p.pretty();
        break;
    }
    case Flavor::signature:
    case Flavor::ahat: {
        const auto poly = flavor == Flavor::signature ? signature_polynomial(v.k()) : ahat_polynomial(v.k());
        const Rational r = evaluate_genus(poly, v);
        j["value"] = to_json(r);
        j["text"] = r.pretty();
        break;
    }
    case Flavor::ell1:
    case Flavor::ell2: {
        const bool first = flavor == Flavor::ell1;
        const auto nu = grid_nu_order(0, first ? 2 : 1, steps);
        const auto s = first ? ell1(v, nu) : ell2(v, nu);
        j["value"] = series_to_json(s);
        j["nu_order"] = s.order();
        j["text"] = format_qseries(s);
        break;
    }
    }
    return j;
}

inline int cmd_genus(const std::string &path, const std::string &flavor_name, int steps, bool as_json,
                     std::ostream &out)
{
    const Flavor flavor = parse_flavor(flavor_name);
    bool batch = false;
    const auto records = read_records(path, batch);
    json results = json::array();
    for (const auto &rec : records) {
        results.push_back(genus_value(rec, flavor, steps));
        results.back()["flavor"] = flavor_name;
    }
    if (as_json) {
        out << (batch ? results : results[0]).dump(2) << "\n";
    } else {
        for (const auto &r : results) {
            out << r["text"].get<std::string>() << "\n";
        }
    }
    return exit_ok;
}

inline ClassificationReport classify_record(const ManifoldRecord &rec, std::size_t nu_order)
{
    if (rec.dim != 24) {
        throw UsageError("record '" + rec.name + "': classification needs dim 24, got " + std::to_string(rec.dim));
    }
    if (!rec.pontryagin) {
        return classify(*rec.kappa, nu_order);
    }
    auto r = classify(*rec.pontryagin, nu_order);
    if (rec.kappa) {
        const bool match = r.kappa && r.kappa->to_vector() == *rec.kappa;
        r.consistency.push_back({"kappa-matches-record", match, detail::vec_str(*rec.kappa)});
        if (!match && !r.refused()) {
            r.bounds_string.reset();
            r.error = "supplied kappa disagrees with the Pontryagin numbers";
        }
    }
    return r;
}

inline int cmd_classify(const std::string &path, int steps, std::ostream &out)
{
    bool batch = false;
    const auto records = read_records(path, batch);
    const std::size_t nu = grid_nu_order(0, 2, steps);
    std::vector<std::future<ClassificationReport>> jobs;
    for (const auto &rec : records) {
        jobs.push_back(std::async(std::launch::async, [&rec, nu] { return classify_record(rec, nu); }));
    }
    json results = json::array();
    bool refused = false;
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        const auto r = jobs[i].get();
        refused = refused || r.refused();
        results.push_back(report_to_json(r, records[i].name));
    }
    out << (batch ? results : results[0]).dump(2) << "\n";
    return refused ? exit_inconsistent : exit_ok;
}

inline int cmd_verify(const std::string &level_name, bool as_json, std::ostream &out)
{
    VerifyLevel level;
    if (level_name == "fast") {
        level = VerifyLevel::fast;
    } else if (level_name == "full") {
        level = VerifyLevel::full;
    } else {
        throw UsageError("verify level must be 'fast' or 'full'");
    }
    const auto result = run_verification(level);
    if (as_json) {
        json checks = json::array();
        for (const auto &c : result.checks) {
            checks.push_back({{"name", c.name}, {"status", c.passed ? "pass" : "fail"}, {"detail", c.detail}});
        }
        out << json{{"level", level_name}, {"passed", result.all_passed()}, {"checks", checks}}.dump(2) << "\n";
    } else {
        for (const auto &c : result.checks) {
            out << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
        }
    }
    return result.all_passed() ? exit_ok : exit_inconsistent;
}

inline int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Elliptic genera, q-expansions and string bordism in dimension 24", "ellcob"};
    app.require_subcommand(1);

    std::string name;
    std::optional<int> pos_order;
    std::optional<int> order;
    bool as_json = false;
    std::string input;
    std::string flavor = "elliptic";
    std::string level = "fast";

    auto *qexpand = app.add_subcommand("qexpand", "print a q-expansion");
    qexpand->add_option("object", name, "delta1, eps1, delta2, eps2, E4, Delta or DeltaBar")->required();
    qexpand->add_option("steps", pos_order, "same as --order");
    qexpand->add_option("--order", order, "grid steps past the leading exponent (default 3)");
    qexpand->add_flag("--json", as_json, "JSON output");

    auto *genus = app.add_subcommand("genus", "evaluate a genus on a manifold record");
    genus->add_option("--input", input, "record file (object or array)")->required();
    genus->add_option("--flavor", flavor, "elliptic, signature, ahat, ell1 or ell2");
    genus->add_option("--order", order, "grid steps for ell1/ell2 (default 3)");
    genus->add_flag("--json", as_json, "JSON output");

    auto *classify_cmd = app.add_subcommand("classify", "classify 24-dimensional records");
    classify_cmd->add_option("--input", input, "record file (object or array)")->required();
    classify_cmd->add_option("--order", order, "q-order of the Witten genus (default 3)");
    classify_cmd->add_flag("--json", as_json, "JSON output (always on)");

    auto *verify = app.add_subcommand("verify", "run the identity checks");
    verify->add_option("level", level, "fast or full");
    verify->add_flag("--json", as_json, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (qexpand->parsed()) {
            if (pos_order && order && *pos_order != *order) {
                throw UsageError("conflicting orders given");
            }
            return cmd_qexpand(name, order.value_or(pos_order.value_or(3)), as_json, out);
        }
        if (genus->parsed()) {
            return cmd_genus(input, flavor, order.value_or(3), as_json, out);
        }
        if (classify_cmd->parsed()) {
            return cmd_classify(input, order.value_or(3), out);
        }
        return cmd_verify(level, as_json, out);
    } catch (const UsageError &e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::domain_error &e) {
        err << "inconsistent input: " << e.what() << "\n";
        return exit_inconsistent;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
}

} // namespace ellcob::cli

#endif
