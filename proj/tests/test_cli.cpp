// End-to-end checks of the charvar binary: exit codes, JSON shape,
// determinism of reruns. Takes the binary path as argv[1].
#include <cstdio>
#include <cstdlib>
#include <string>

#include <nlohmann/json.hpp>

namespace {

int failures = 0;

#define REQUIRE(cond)                                                   \
    do {                                                                \
        if (!(cond)) {                                                  \
            ++failures;                                                 \
            std::fprintf(stderr, "FAIL %s:%d  %s\n", __FILE__, __LINE__, \
                         #cond);                                        \
        }                                                               \
    } while (0)

struct RunOut {
    int rc = -1;
    std::string out;
};

RunOut run(const std::string& cmd) {
    RunOut r;
    FILE* f = popen((cmd + " 2>/dev/null").c_str(), "r");
    if (!f) return r;
    char buf[4096];
    size_t k;
    while ((k = fread(buf, 1, sizeof buf, f)) > 0) r.out.append(buf, k);
    int st = pclose(f);
    r.rc = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

// every numeric value in a report must be integral
void assert_no_floats(const nlohmann::json& j) {
    if (j.is_number_float()) {
        ++failures;
        std::fprintf(stderr, "FAIL float value in report: %s\n",
                     j.dump().c_str());
    } else if (j.is_object() || j.is_array()) {
        for (const auto& v : j) assert_no_floats(v);
    }
}

nlohmann::json parse_report(const RunOut& r) {
    nlohmann::json j = nlohmann::json::parse(r.out, nullptr, false);
    REQUIRE(!j.is_discarded());
    if (j.is_discarded()) return nlohmann::json::object();
    REQUIRE(j.contains("check"));
    REQUIRE(j.contains("version"));
    REQUIRE(j.contains("inputs"));
    REQUIRE(j.contains("status"));
    REQUIRE(j.contains("payload"));
    REQUIRE(j["version"] == "0.1.0");
    assert_no_floats(j);
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: test_cli <charvar-binary>\n");
        return 2;
    }
    const std::string bin = argv[1];

    {
        RunOut r = run(bin + " check whitehead-divisor");
        REQUIRE(r.rc == 0);
        auto j = parse_report(r);
        REQUIRE(j["status"] == "pass");
        REQUIRE(j["check"] == "check.whitehead-divisor");
        REQUIRE(j.contains("elapsed_ms"));
    }

    {
        RunOut r = run(bin + " check smooth --n 1 --emit-gb --no-timings");
        REQUIRE(r.rc == 0);
        auto j = parse_report(r);
        REQUIRE(j["status"] == "pass");
        REQUIRE(j["inputs"]["n"] == 1);
        REQUIRE(!j.contains("elapsed_ms"));
        // singular system is the unit ideal, so the reduced basis is just 1
        REQUIRE(j["payload"]["groebner_basis"].size() == 1);
    }

    {
        RunOut r = run(bin + " check nongeometric --n 4");
        REQUIRE(r.rc == 0);
        REQUIRE(parse_report(r)["status"] == "pass");
    }

    {
        RunOut r = run(bin + " check geometric-mult --n 2 --emit-gb");
        REQUIRE(r.rc == 0);
        auto j = parse_report(r);
        REQUIRE(j["status"] == "pass");
        REQUIRE(j["payload"]["groebner_bases"].contains("torsion_side"));
        REQUIRE(j["payload"]["groebner_bases"].contains("certificate_side"));
    }

    {
        RunOut r = run(bin + " check diagonal --pretty");
        REQUIRE(r.rc == 0);
        REQUIRE(r.out.find('\n') != std::string::npos);
        REQUIRE(parse_report(r)["status"] == "pass");
    }

    {
        RunOut r = run(bin + " oracle reps --n 2 --p 7");
        REQUIRE(r.rc == 0);
        auto j = parse_report(r);
        REQUIRE(j["status"] == "pass");
        REQUIRE(j["payload"]["violations"] == 0);
    }

    // seeded oracles record the seed and rerun byte-identically
    {
        const std::string cmd =
            bin + " oracle peripheral --samples 25 --no-timings";
        RunOut a = run(cmd);
        RunOut b = run(cmd);
        REQUIRE(a.rc == 0);
        REQUIRE(a.out == b.out);
        auto j = parse_report(a);
        REQUIRE(j["seed"] == 20260822);
        RunOut c = run(cmd + " --seed 7");
        REQUIRE(c.rc == 0);
        REQUIRE(parse_report(c)["seed"] == 7);
    }

    {
        RunOut r = run(bin + " oracle order3 --samples 25 --seed 11");
        REQUIRE(r.rc == 0);
        REQUIRE(parse_report(r)["status"] == "pass");
    }

    {
        RunOut r = run(bin + " lfunction --n 1 --p 5 --point 3,3,4");
        REQUIRE(r.rc == 0);
        auto j = parse_report(r);
        REQUIRE(j["status"] == "pass");
        REQUIRE(j["payload"]["verdict"] == "pass");
        REQUIRE(j["payload"]["solved_for"] == "z");
    }

    {
        // on the curve but acyclic: reported, not judged
        RunOut r = run(bin + " lfunction --n 1 --p 5 --point 0,0,0");
        REQUIRE(r.rc == 0);
        REQUIRE(parse_report(r)["status"] == "report-only");
    }

    {
        RunOut r = run(bin + " lfunction --n 1 --p 5 --point 1,1,1");
        REQUIRE(r.rc == 2);
        REQUIRE(parse_report(r)["status"] == "error");
    }

    {
        RunOut r = run(bin + " lfunction survey --n 1 --p 5 --no-timings");
        REQUIRE(r.rc == 0);
        auto j = parse_report(r);
        REQUIRE(j["status"] == "pass");
        REQUIRE(j["payload"]["study_set_size"] == 3);
        REQUIRE(j["payload"]["reports"].size() == 3);
        RunOut again = run(bin + " lfunction survey --n 1 --p 5 --no-timings");
        REQUIRE(again.out == r.out);
    }

    {
        RunOut r = run(bin + " bogus");
        REQUIRE(r.rc == 2);
    }

    {
        RunOut r = run(bin + " oracle reps --n 1 --p 9");
        REQUIRE(r.rc == 2);
        REQUIRE(parse_report(r)["status"] == "error");
    }

    {
        RunOut r = run(bin + " verify-all --budget-s 0");
        REQUIRE(r.rc == 2);
        auto j = parse_report(r);
        REQUIRE(j["status"] == "error");
        REQUIRE(j["payload"]["criteria"].empty());
    }

    {
        // a one-second budget lets the cheap gates through, then skips
        RunOut r = run(bin + " verify-all --budget-s 1");
        REQUIRE(r.rc == 2);
        auto j = parse_report(r);
        REQUIRE(j["status"] == "error");
        bool saw_pass = false, saw_skip = false;
        for (const auto& c : j["payload"]["criteria"]) {
            if (c["status"] == "pass") saw_pass = true;
            if (c["status"] == "skipped") saw_skip = true;
        }
        REQUIRE(saw_pass);
        REQUIRE(saw_skip);
    }

    {
        RunOut r = run(bin + " verify-all");
        REQUIRE(r.rc == 0);
        auto j = parse_report(r);
        REQUIRE(j["status"] == "pass");
        REQUIRE(j["payload"]["criteria"].size() == 10);
        for (const auto& c : j["payload"]["criteria"])
            REQUIRE(c["status"] == "pass");
    }

    {
        const std::string path = "/tmp/charvar_cli_out.json";
        std::remove(path.c_str());
        RunOut r = run(bin + " check diagonal --out " + path);
        REQUIRE(r.rc == 0);
        REQUIRE(r.out.empty());
        FILE* f = std::fopen(path.c_str(), "rb");
        REQUIRE(f != nullptr);
        if (f) {
            std::string s;
            char buf[4096];
            size_t k;
            while ((k = fread(buf, 1, sizeof buf, f)) > 0) s.append(buf, k);
            std::fclose(f);
            RunOut fake{0, s};
            REQUIRE(parse_report(fake)["status"] == "pass");
            std::remove(path.c_str());
        }
    }

    {
        RunOut r = run(bin + " --version");
        REQUIRE(r.rc == 0);
        REQUIRE(r.out.find("0.1.0") != std::string::npos);
        RunOut h = run(bin + " --help");
        REQUIRE(h.rc == 0);
    }

    if (failures == 0) {
        std::printf("test_cli: all assertions pass\n");
        return 0;
    }
    std::printf("test_cli: %d failure(s)\n", failures);
    return 1;
}
