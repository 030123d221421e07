#include "qseq/io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>

#include "qseq/errors.hpp"

namespace qseq::io {
namespace {

template <typename F>
auto guarded(const char* what, F&& f) {
    try {
        return f();
    } catch (const json::exception& e) {
        throw DomainError(std::string(what) + ": " + e.what());
    }
}

json number_or_null(const std::optional<double>& v) {
    if (v && std::isfinite(*v)) return *v;
    return nullptr;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

double parse_number(std::string_view token) {
    token = trim(token);
    if (!token.empty() && token.front() == '+') token.remove_prefix(1);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
        throw DomainError("cannot parse number '" + std::string(token) + "'");
    }
    return value;
}

void flatten(const json& node, const std::string& key, std::string& out) {
    if (node.is_object()) {
        for (const auto& [k, v] : node.items()) flatten(v, key.empty() ? k : key + "." + k, out);
        return;
    }
    if (node.is_array()) {
        for (std::size_t i = 0; i < node.size(); ++i) {
            flatten(node[i], key.empty() ? std::to_string(i) : key + "." + std::to_string(i), out);
        }
        return;
    }
    out += key;
    out += ',';
    if (node.is_string()) {
        out += node.get<std::string>();
    } else if (!node.is_null()) {
        out += node.dump();
    }
    out += '\n';
}

}  // namespace

json to_json(const WindowSequence& p) {
    return {{"start", p.start()}, {"values", std::vector<double>(p.values().begin(), p.values().end())}};
}

WindowSequence sequence_from_json(const json& j) {
    return guarded("sequence JSON", [&] {
        return WindowSequence{j.value("start", Index{0}), j.at("values").get<std::vector<double>>()};
    });
}

json to_json(const AffineRep& rep) {
    return {{"a", rep.a}, {"b", rep.b}, {"q", rep.q}, {"start", rep.start}};
}

AffineRep affine_rep_from_json(const json& j) {
    return guarded("affine JSON", [&] {
        return AffineRep{j.at("a").get<double>(), j.at("b").get<double>(), j.at("q").get<double>(),
                         j.value("start", Index{0})};
    });
}

json to_json(const Classification& c, const std::vector<double>& ratios) {
    return {{"verdict", to_string(c.verdict)},
            {"convexity_threshold", number_or_null(c.convexity_threshold)},
            {"concavity_threshold", number_or_null(c.concavity_threshold)},
            {"ratios", ratios}};
}

json to_json(const BoundReport& b) {
    return {{"value", b.value}, {"exact", b.exact}, {"source", to_string(b.source)}};
}

json to_json(const ContractionProblem& prob, bool default_weights) {
    json j{{"n", prob.dimension()},
           {"gamma", std::vector<double>(prob.gamma().begin(), prob.gamma().end())}};
    if (default_weights) {
        j["weights"] = "default";
    } else {
        j["weights"] = std::vector<double>(prob.weights().begin(), prob.weights().end());
    }
    return j;
}

ContractionProblem problem_from_json(const json& j) {
    return guarded("problem JSON", [&] {
        const auto n = j.at("n").get<Index>();
        auto gamma = j.at("gamma").get<std::vector<double>>();
        if (!j.contains("weights") || (j["weights"].is_string() && j["weights"] == "default")) {
            return ContractionProblem::with_default_weights(n, std::move(gamma));
        }
        auto weights = j["weights"].get<std::vector<double>>();
        if (static_cast<Index>(weights.size()) != n) {
            throw DomainError("problem JSON: weights must have n entries");
        }
        return ContractionProblem{std::move(gamma), std::move(weights)};
    });
}

json to_json(const FixedPointResult& r) {
    return {{"point", r.point},
            {"iterations", r.iterations},
            {"residual", r.residual_norm},
            {"q", r.certificate.q},
            {"q_star", r.certificate.q_star}};
}

FixedPointResult result_from_json(const json& j) {
    return guarded("result JSON", [&] {
        FixedPointResult r;
        r.point = j.at("point").get<std::vector<double>>();
        r.iterations = j.at("iterations").get<Index>();
        r.residual_norm = j.at("residual").get<double>();
        r.certificate.q = j.at("q").get<double>();
        r.certificate.q_star = j.at("q_star").get<double>();
        r.certificate.is_contraction = r.certificate.q_star < 1.0;
        return r;
    });
}

std::vector<double> parse_number_list(std::string_view text) {
    std::vector<double> values;
    if (trim(text).empty()) return values;
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = text.find(',', pos);
        values.push_back(parse_number(text.substr(pos, comma - pos)));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return values;
}

MeanSpec parse_mean_spec(std::string_view text) {
    const std::string_view t = trim(text);
    if (t == "inf" || t == "+inf" || t == "infinity" || t == "max") return MeanSpec::maximum();
    if (t == "-inf" || t == "-infinity" || t == "min") return MeanSpec::minimum();
    const double r = parse_number(t);
    if (std::isnan(r)) throw DomainError("mean exponent must not be NaN");
    return MeanSpec(r);
}

std::string to_csv(const json& doc) {
    std::string out = "key,value\n";
    if (doc.is_primitive()) {
        flatten(doc, "value", out);
    } else {
        flatten(doc, "", out);
    }
    return out;
}

}  // namespace qseq::io
