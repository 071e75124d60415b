#include <catch_amalgamated.hpp>

#include <json.hpp>

#include "dihomol/dga.hpp"

using namespace dihomol;

namespace {

const Field Q = Field::rationals();

std::string sphere_doc(const std::string& extra) {
    return R"({"field": "Q", "generators": [{"name": "1", "cohomological_degree": 0},
               {"name": "a", "cohomological_degree": 2}], "unit": "1")" +
           extra + "}";
}

std::string parse_location(const std::string& doc) {
    try {
        parse_algebra(doc);
    } catch (const AlgebraParseError& e) {
        return e.location();
    }
    return "no error";
}

}  // namespace

TEST_CASE("presets satisfy the axioms") {
    for (const Field& f : {Q, Field::prime(2), Field::prime(5)}) {
        for (const char* token : {"point", "sphere2", "sphere_even(4)", "truncated_poly(2,4)", "truncated_poly(3,2)",
                                  "noncommutative_odd"}) {
            INFO(token << " over " << f.name());
            CHECK(validate(presets::from_token(token, f)).ok());
        }
    }
    CHECK_THROWS_AS(presets::from_token("torus", Q), std::invalid_argument);
}

TEST_CASE("sphere preset structure") {
    const InvolutiveDGA s = presets::sphere_even(Q, 2);
    REQUIRE(s.dimension() == 2);
    const std::size_t a = *s.find("a");
    CHECK(s.degree(a) == -2);
    CHECK(s.product(a, a).empty());
    CHECK(s.involution(a) == SparseVector::unit(Q, a));
    CHECK(is_graded_commutative(s));
    CHECK_FALSE(is_graded_commutative(presets::noncommutative_odd(Q)));
    const ReducedBasis rb = reduced_basis(s);
    CHECK(rb.names == std::vector<std::string>{"a"});
}

TEST_CASE("validation names the broken axiom") {
    const std::string leibniz = R"({"field": "Q", "generators": [{"name": "1", "cohomological_degree": 0},
        {"name": "x", "cohomological_degree": 3}, {"name": "y", "cohomological_degree": 4},
        {"name": "z", "cohomological_degree": 7}], "unit": "1",
        "product": [["x", "y", [["z", 1]]], ["y", "x", [["z", -1]]]],
        "differential": [["x", [["y", 1]]]], "involution": "identity"})";
    try {
        parse_algebra(leibniz);
        FAIL("expected a validation error");
    } catch (const ValidationError& e) {
        CHECK(e.report().failed("leibniz"));
        CHECK(e.report().failed("anti-multiplicative"));
    }

    const std::string not_involutive = sphere_doc(R"(, "involution": [["a", [["a", 2]]]])");
    try {
        parse_algebra(not_involutive);
        FAIL("expected a validation error");
    } catch (const ValidationError& e) {
        CHECK(e.report().failed("involution-square"));
    }
}

TEST_CASE("parse errors carry a location") {
    CHECK(parse_location("{\"field\": \"Q\",\n  oops}") == "line 2, column 3");
    CHECK(parse_location("[]") == "/");
    CHECK(parse_location(R"({"generators": []})") == "/field");
    CHECK(parse_location(sphere_doc(R"(, "product": [["a", "b", []]], "involution": "identity")")) == "/product/0/1");
    CHECK(parse_location(sphere_doc(R"(, "product": [["a", "a", [["a", "1/0"]]]], "involution": "identity")")) ==
          "/product/0/2/0/1");
    CHECK(parse_location(sphere_doc("")) == "/involution");
    CHECK(parse_location(sphere_doc(R"(, "unit": "b", "involution": "identity")")) == "/unit");
    CHECK(parse_location(R"({"field": {"Fp": 4}, "generators": [{"name": "1", "cohomological_degree": 0}], "unit": "1"})") ==
          "/field");
}

TEST_CASE("auto involution needs graded commutativity") {
    CHECK_NOTHROW(parse_algebra(sphere_doc(R"(, "involution": "auto")")));
    const InvolutiveDGA nc = presets::noncommutative_odd(Q);
    nlohmann::json doc = nlohmann::json::parse(serialize_algebra(nc));
    doc["involution"] = "auto";
    CHECK(parse_location(doc.dump()) == "/involution");
}

TEST_CASE("serialization round trip") {
    for (const Field& f : {Q, Field::prime(3)}) {
        for (const char* token : {"point", "sphere2", "truncated_poly(2,4)", "noncommutative_odd"}) {
            const InvolutiveDGA a = presets::from_token(token, f);
            const InvolutiveDGA b = parse_algebra(serialize_algebra(a));
            CHECK(b.field() == a.field());
            CHECK(b.basis() == a.basis());
            CHECK(b.unit() == a.unit());
            CHECK(b.differential_map() == a.differential_map());
            CHECK(b.involution_map() == a.involution_map());
            for (std::size_t i = 0; i < a.dimension(); ++i) {
                for (std::size_t j = 0; j < a.dimension(); ++j) CHECK(b.product(i, j) == a.product(i, j));
            }
            CHECK(serialize_algebra(b) == serialize_algebra(a));
        }
    }
}

TEST_CASE("explicit involution and bar cap survive a round trip") {
    const std::string doc = sphere_doc(R"(, "involution": [["1", [["1", 1]]], ["a", [["a", "-2/2"]]]], "max_bar_length": 4)");
    const InvolutiveDGA a = parse_algebra(doc);
    CHECK(a.max_bar_length() == 4);
    CHECK(a.involution(1).coeff(1, Q) == Scalar(Q, -1));
    CHECK(parse_algebra(serialize_algebra(a)).max_bar_length() == 4);
}
