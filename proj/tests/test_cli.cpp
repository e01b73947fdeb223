#include <doctest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args) {
    std::string cmd = std::string(CYCLEMETER_CLI) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

nlohmann::json parse(const Run& r) { return nlohmann::json::parse(r.out); }

} // namespace

TEST_CASE("hn") {
    auto r = run("hn --family ewens --theta 1 --n 10");
    REQUIRE(r.code == 0);
    auto rows = parse(r)["rows"];
    CHECK(rows.size() == 10);
    CHECK(rows[9]["h_n"] == "1");
    CHECK(rows[9]["ratio"].get<double>() == doctest::Approx(1.0));

    auto two = parse(run("hn --family ewens --theta 2 --n 5"))["rows"];
    CHECK(two[4]["n"] == 5);
    CHECK(two[4]["h_n"] == "6");

    auto poly = parse(run("hn --family polylog --delta 1 --n 3"))["rows"];
    CHECK_FALSE(poly[2].contains("ratio"));

    CHECK(run("hn --family nosuch").code == 2);
    CHECK(run("hn --family ewens --theta x").code == 2);
    CHECK(run("hn --bogus-flag").code == 2);
    CHECK(run("hn --family ewens --n 12 --oracle").code == 0);
    auto csv = run("hn --family ewens --theta 2 --n 2 --format csv");
    CHECK(csv.out == "n,h_n,asymptotic_hn,ratio\n1,2,1.0000000000000002,1.9999999999999996\n2,3,2.0000000000000004,1.4999999999999998\n");
}

TEST_CASE("dist") {
    auto k = parse(run("dist --target k --family ewens --theta 1 --n 3"))["pmf"];
    REQUIRE(k.size() == 3);
    CHECK(k[0]["mass"] == "1/3");
    CHECK(k[1]["mass"] == "1/2");
    CHECK(k[2]["mass"] == "1/6");

    auto c = parse(run("dist --target cycles --b 2 --n 2 --family ewens --theta 1"))["pmf"];
    REQUIRE(c.size() == 2);
    CHECK(c[0]["counts"] == nlohmann::json::array({0, 1}));
    CHECK(c[0]["mass"] == "1/2");
    CHECK(c[1]["counts"] == nlohmann::json::array({2, 0}));
    CHECK(c[1]["mass"] == "1/2");

    for (const char* fam : {"--family ewens --theta 1/2", "--family theta-shift", "--family polylog --delta -1/2",
                            "--family polylog --delta 1", "--family exp-weight --c 1 --theta-exp -1",
                            "--family alpha-exp --alpha 0.5", "--family spatial --boltzmann 1,1/2",
                            "--family exp-poly --poly 1,1"}) {
        CAPTURE(fam);
        CHECK(run(std::string("dist --target k --n 12 --oracle ") + fam).code == 0);
        CHECK(run(std::string("dist --target cycles --b 3 --n 12 --oracle ") + fam).code == 0);
    }
    CHECK(run("dist --target k --family ewens --theta 0 --n 3").code == 2);
    CHECK(run("dist --target nope --n 3").code == 2);
    auto d = parse(run("dist --target k --family ewens --theta 2 --n 40 --backend double"))["pmf"];
    CHECK(d.size() == 40);
}

TEST_CASE("sample") {
    auto r = run("sample --n 1 --count 3");
    CHECK(r.code == 0);
    CHECK(r.out == "{\"permutation\":[1]}\n{\"permutation\":[1]}\n{\"permutation\":[1]}\n");
    auto a = run("sample --family ewens --theta 2 --n 8 --count 200 --seed 11");
    auto b = run("sample --family ewens --theta 2 --n 8 --count 200 --seed 11");
    CHECK(a.out == b.out);
    CHECK(a.out != run("sample --family ewens --theta 2 --n 8 --count 200 --seed 12").out);
    auto t = run("sample --n 8 --count 5 --cycle-type-only");
    std::istringstream lines(t.out);
    std::string line;
    int count = 0, total = 0;
    while (std::getline(lines, line)) {
        ++count;
        total = 0;
        auto parsed = nlohmann::json::parse(line);
        for (int part : parsed["cycle_type"]) total += part;
        CHECK(total == 8);
    }
    CHECK(count == 5);
    CHECK(run("sample --family polylog --delta -1/2 --n 6 --count 2").code == 0);
    CHECK(run("sample --family exp-poly --n 3").code == 2);
}

TEST_CASE("report") {
    auto clt = run("report --kind clt --family ewens --theta 1 --n-grid 100,1000 --assert-trends");
    REQUIRE(clt.code == 0);
    auto doc = parse(clt);
    auto rows = doc[0]["rows"];
    CHECK(rows.size() == 2);
    CHECK(rows[1]["value"].get<double>() < rows[0]["value"].get<double>());

    auto mp = parse(run("report --kind mod-poisson --family ewens --theta 2 --n-grid 100,200 --s-grid 0"));
    for (const auto& row : mp[0]["rows"]) CHECK(row["value"].get<double>() <= 1e-12);

    auto pv = run("report --kind poisson-vector --family ewens --theta 2 --b 2 --n-grid 25,50,100 --format csv");
    CHECK(pv.code == 0);
    CHECK(pv.out.rfind("n,metric,value,reference_rate_value\n", 0) == 0);

    auto ld = parse(run("report --kind large-dev --family ewens --theta 1 --n 600 --k auto+3sigma"));
    CHECK(ld.contains("exact"));
    CHECK(ld.contains("estimate"));

    CHECK(run("report --kind clt --family polylog --delta 1 --n-grid 10").code == 2);
    CHECK(run("report --kind clt --family polylog --delta -1/2 --n-grid 10").code == 2);
    CHECK(run("report --kind nope").code == 2);
    // Small n grids can rise; the assertion must catch it.
    CHECK(run("report --kind clt --family ewens --theta 5 --n-grid 2,3,4,5,6 --assert-trends").code == 4);
}

TEST_CASE("config file") {
    const char* path = "cyclemeter_test_config.json";
    {
        std::ofstream out(path);
        out << R"({"n": 4, "families": {"shifted": {"family": "theta-shift", "theta": "2", "shift": "1/2"}}})";
    }
    auto r = parse(run(std::string("hn --config ") + path + " --family shifted"));
    CHECK(r["rows"].size() == 4);
    CHECK(r["rows"][0]["h_n"] == "5/2");
    auto over = parse(run(std::string("hn --config ") + path + " --family shifted --n 2"));
    CHECK(over["rows"].size() == 2);
    CHECK(run("hn --config /nonexistent.json").code == 2);
    std::remove(path);
}
