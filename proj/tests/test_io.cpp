#include <catch_amalgamated.hpp>

#include <cmath>
#include <sstream>

#include "generators.hpp"
#include "qseq/errors.hpp"
#include "qseq/io.hpp"

using namespace qseq;
using io::json;

TEST_CASE("sequence JSON round-trip", "[io]") {
    gen::Rng rng(51);
    for (int t = 0; t < 200; ++t) {
        const auto p = gen::positive(rng, 20);
        const auto text = io::to_json(p).dump();
        CHECK(io::sequence_from_json(json::parse(text)) == p);  // bit-exact
    }
    const json j = io::to_json(WindowSequence{-2, {1, 2, 3}});
    CHECK(j["start"] == -2);
    CHECK(j["values"].size() == 3);
    CHECK(io::sequence_from_json(json::parse(R"({"values":[1,2,3]})")).start() == 0);
    CHECK_THROWS_AS(io::sequence_from_json(json::parse(R"({"start":0})")), DomainError);
    CHECK_THROWS_AS(io::sequence_from_json(json::parse(R"({"values":["a",1,2]})")), DomainError);
    CHECK_THROWS_AS(io::sequence_from_json(json::parse(R"({"values":[1,2]})")), DomainError);
}

TEST_CASE("affine representation JSON", "[io]") {
    const AffineRep rep{0.1, -2.5, 0.75, 3};
    const auto back = io::affine_rep_from_json(json::parse(io::to_json(rep).dump()));
    CHECK(back.a == rep.a);
    CHECK(back.b == rep.b);
    CHECK(back.q == rep.q);
    CHECK(back.start == rep.start);
    CHECK_THROWS_AS(io::affine_rep_from_json(json::parse(R"({"a":1})")), DomainError);
}

TEST_CASE("classification and bound JSON", "[io]") {
    const WindowSequence p{0, {0, 1, 2, 1, 0}};
    const auto j = io::to_json(classify(p, 1.0), chord_ratios(p));
    CHECK(j["verdict"] == "QConcave");
    CHECK(j["convexity_threshold"] == 0.5);
    CHECK(j["concavity_threshold"] == 1.0);
    CHECK(j["ratios"] == json::array({1.0, 0.5, 1.0}));

    const auto none = io::to_json(classify(WindowSequence{0, {1, 0, 1}}, 1.0), {});
    CHECK(none["concavity_threshold"].is_null());

    const auto b = io::to_json(BoundReport{0.75, true, BoundSource::ArithmeticExact});
    CHECK(b["value"] == 0.75);
    CHECK(b["exact"] == true);
    CHECK(b["source"] == "ArithmeticExact");
}

TEST_CASE("problem and result JSON", "[io]") {
    const auto prob = ContractionProblem::with_default_weights(3, {0.0, -1.0});
    const auto j = io::to_json(prob, true);
    CHECK(j["weights"] == "default");
    const auto back = io::problem_from_json(j);
    CHECK(std::ranges::equal(back.weights(), prob.weights()));
    CHECK(std::ranges::equal(back.gamma(), prob.gamma()));

    const auto explicit_weights = io::problem_from_json(io::to_json(prob));
    CHECK(std::ranges::equal(explicit_weights.weights(), prob.weights()));
    CHECK(io::problem_from_json(json::parse(R"({"n":1,"gamma":[2]})")).dimension() == 1);
    CHECK_THROWS_AS(io::problem_from_json(json::parse(R"({"n":2,"gamma":[1],"weights":[1]})")), DomainError);
    CHECK_THROWS_AS(io::problem_from_json(json::parse(R"({"n":2,"gamma":[1,2]})")), DomainError);
    CHECK_THROWS_AS(io::problem_from_json(json::parse(R"({"gamma":[1]})")), DomainError);

    const auto r = solve_fixed_point(prob);
    const auto rb = io::result_from_json(json::parse(io::to_json(r).dump()));
    CHECK(rb.point == r.point);
    CHECK(rb.iterations == r.iterations);
    CHECK(rb.residual_norm == r.residual_norm);
    CHECK(rb.certificate.q == r.certificate.q);
    CHECK(rb.certificate.q_star == r.certificate.q_star);
}

TEST_CASE("number lists and mean specs", "[io]") {
    CHECK(io::parse_number_list("1, 2.5,-3") == std::vector<double>{1, 2.5, -3});
    CHECK(io::parse_number_list("+4") == std::vector<double>{4});
    CHECK(io::parse_number_list("1e-3") == std::vector<double>{1e-3});
    CHECK(io::parse_number_list("").empty());
    CHECK_THROWS_AS(io::parse_number_list("1,,2"), DomainError);
    CHECK_THROWS_AS(io::parse_number_list("1;2"), DomainError);
    CHECK_THROWS_AS(io::parse_number_list("abc"), DomainError);

    CHECK(io::parse_mean_spec("inf").is_maximum());
    CHECK(io::parse_mean_spec("max").is_maximum());
    CHECK(io::parse_mean_spec("-inf").is_minimum());
    CHECK(io::parse_mean_spec("0").is_geometric());
    CHECK(io::parse_mean_spec("1").is_arithmetic());
    CHECK(io::parse_mean_spec("2.5").exponent() == 2.5);
    CHECK_THROWS_AS(io::parse_mean_spec("nan"), DomainError);
    CHECK_THROWS_AS(io::parse_mean_spec("x"), DomainError);
}

TEST_CASE("CSV flattening", "[io]") {
    const json doc = {{"a", 1.5}, {"b", {{"c", json::array({1, 2})}}}, {"s", "txt"}, {"n", nullptr}};
    CHECK(io::to_csv(doc) == "key,value\na,1.5\nb.c.0,1\nb.c.1,2\nn,\ns,txt\n");
    CHECK(io::to_csv(json(3.25)) == "key,value\nvalue,3.25\n");
}

TEST_CASE("doubles survive a text round-trip exactly", "[io][property]") {
    gen::Rng rng(52);
    for (int t = 0; t < 2000; ++t) {
        const double x = std::ldexp(gen::uniform(rng, -1, 1), static_cast<int>(gen::integer(rng, -300, 300)));
        CHECK(json::parse(json(x).dump()).get<double>() == x);
        CHECK(io::parse_number_list(json(x).dump()).front() == x);
    }
}
