#include <catch_amalgamated.hpp>
#include <json.hpp>

#include "dihomol/equivariant.hpp"
#include "dihomol/report.hpp"
#include "oracle.hpp"

using namespace dihomol;
using nlohmann::json;

TEST_CASE("degree labels") {
    CHECK(degree_label(-4) == "-4 (H^4)");
    CHECK(degree_label(3) == "3 (H^-3)");
}

TEST_CASE("table, csv and json agree") {
    const BettiTable t = homology(fixed_cyclic_window(presets::point(Field::rationals()), {-4, 1}));
    CHECK(render_csv(t) == "degree,dimension\n0,1\n-1,0\n-2,1\n-3,0\n");
    const std::string table = render_table(t);
    CHECK(table.rfind("HC- over Q, degrees 0..-3 (edges 1 and -4 excluded)\n", 0) == 0);
    CHECK(table.find("-2 (H^2)  1\n") != std::string::npos);
    const json j = json::parse(render_json(t));
    CHECK(j["schema"] == "dihomol/1");
    CHECK(j["theory"] == "HC-");
    CHECK(j["excluded_edges"] == json::array({-4, 1}));
    CHECK(j["betti"][2] == json({{"degree", -2}, {"cohomological_degree", 2}, {"dimension", 1}}));
}

TEST_CASE("a dumped F2 complex re-reduces to the same Betti numbers") {
    const ComplexWindow c = fixed_dihedral_window(presets::sphere_even(Field::prime(2), 2), {-9, 1});
    const json j = json::parse(dump_complex_json(c));
    REQUIRE(j["field"] == "F2");
    std::map<int, std::size_t> dim;
    for (const auto& d : j["degrees"]) dim[d["degree"].get<int>()] = d["basis"].size();
    std::map<int, std::size_t> rk;
    for (const auto& d : j["differentials"]) {
        const std::size_t rows = d["rows"], cols = d["cols"];
        std::vector<std::vector<std::uint64_t>> m(rows, std::vector<std::uint64_t>(cols, 0));
        for (const auto& e : d["entries"]) m[e[0].get<std::size_t>()][e[1].get<std::size_t>()] = std::stoull(e[2].get<std::string>());
        rk[d["degree"].get<int>()] = oracle::rank_mod(m, 2);
    }
    const BettiTable t = homology(c);
    for (int k = -8; k <= 0; ++k) CHECK(t.at(k) == dim[k] - rk[k] - rk[k + 1]);
    CHECK(t.at(-8) == 25);
}

TEST_CASE("page json lists generators") {
    const PageReport p = e2_page(presets::sphere_even(Field::rationals(), 2), {-5, 1});
    const json j = json::parse(render_page_json(p));
    CHECK(j["collapse"] == true);
    CHECK(j["entries"][0]["generators"][0].is_string());
    CHECK(render_page_grid(p).find("collapse: yes") != std::string::npos);
}
