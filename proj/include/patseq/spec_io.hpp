#pragma once

// Pattern-set files and decision records.
//
// A pattern-set file is a JSON document {base, modulus, patterns, label?}
// where patterns is a list of {word, weight}. Words are digit strings for
// base <= 10 and digit lists for any base; weights are integers, with a
// decimal-string form for values outside the int64 range. Serialization is
// canonical (fixed key order, words in lexicographic order), so saving a
// loaded canonical file reproduces it byte for byte.

#include "patseq/digits.hpp"
#include "patseq/numeric.hpp"
#include "patseq/transfer.hpp"
#include "patseq/weighted_set.hpp"

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace patseq {

struct PatternSpec {
    WeightedSet set;
    std::string label; // empty when unlabeled
};

namespace spec_io_detail {

inline std::uint32_t parse_context_int(const nlohmann::ordered_json& j, const char* name) {
    if (!j.is_number_integer())
        throw std::invalid_argument(std::string("spec field '") + name + "' must be an integer");
    const long long v = j.get<long long>();
    if (v < 2 || v > std::numeric_limits<std::uint32_t>::max())
        throw std::invalid_argument(std::string("spec field '") + name + "' out of range");
    return static_cast<std::uint32_t>(v);
}

inline Word parse_word(const nlohmann::ordered_json& j, std::uint32_t base) {
    if (j.is_string()) {
        if (base > 10)
            throw std::invalid_argument("pattern word: string form is only defined for base <= 10");
        return Word::parse(j.get<std::string>(), base);
    }
    if (j.is_array()) {
        std::vector<Digit> digits;
        digits.reserve(j.size());
        for (const auto& d : j) {
            if (!d.is_number_integer())
                throw std::invalid_argument("pattern word: digits must be integers");
            const long long v = d.get<long long>();
            if (v < 0 || v >= static_cast<long long>(base))
                throw std::invalid_argument("pattern word: digit out of range for base");
            digits.push_back(static_cast<Digit>(v));
        }
        return Word(base, std::move(digits));
    }
    throw std::invalid_argument("pattern word: expected a digit string or a digit list");
}

inline BigInt parse_weight(const nlohmann::ordered_json& j) {
    if (j.is_number_integer()) {
        if (j.is_number_unsigned()) return BigInt(j.get<std::uint64_t>());
        return BigInt(j.get<std::int64_t>());
    }
    if (j.is_string()) return BigInt(j.get<std::string>());
    throw std::invalid_argument("pattern weight: expected an integer or a decimal string");
}

} // namespace spec_io_detail

inline PatternSpec parse_spec(const std::string& text) {
    const nlohmann::ordered_json j = nlohmann::ordered_json::parse(text);
    if (!j.is_object()) throw std::invalid_argument("spec file: top-level value must be an object");
    const std::uint32_t base = spec_io_detail::parse_context_int(j.at("base"), "base");
    const std::uint32_t modulus = spec_io_detail::parse_context_int(j.at("modulus"), "modulus");
    WeightedSet set(base, modulus);
    const auto& patterns = j.at("patterns");
    if (!patterns.is_array()) throw std::invalid_argument("spec field 'patterns' must be a list");
    for (const auto& p : patterns) {
        const Word w = spec_io_detail::parse_word(p.at("word"), base);
        const BigInt c = spec_io_detail::parse_weight(p.at("weight"));
        if (c == 0) throw std::invalid_argument("pattern weight: must be nonzero");
        set.add(w, c);
    }
    std::string label;
    if (j.contains("label")) {
        if (!j.at("label").is_string()) throw std::invalid_argument("spec field 'label' must be a string");
        label = j.at("label").get<std::string>();
    }
    return PatternSpec{std::move(set), std::move(label)};
}

inline nlohmann::ordered_json spec_to_json(const PatternSpec& spec) {
    nlohmann::ordered_json j;
    if (!spec.label.empty()) j["label"] = spec.label;
    j["base"] = spec.set.base();
    j["modulus"] = spec.set.modulus();
    auto patterns = nlohmann::ordered_json::array();
    for (const auto& [w, c] : spec.set.entries()) {
        nlohmann::ordered_json p;
        if (spec.set.base() <= 10) {
            p["word"] = w.to_string();
        } else {
            auto digits = nlohmann::ordered_json::array();
            for (Digit d : w.digits) digits.push_back(d);
            p["word"] = std::move(digits);
        }
        if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max())
            p["weight"] = c.convert_to<std::int64_t>();
        else
            p["weight"] = c.str();
        patterns.push_back(std::move(p));
    }
    j["patterns"] = std::move(patterns);
    return j;
}

inline std::string serialize_spec(const PatternSpec& spec) { return spec_to_json(spec).dump(2) + "\n"; }

inline PatternSpec load_spec(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open spec file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_spec(buf.str());
}

inline void save_spec(const std::filesystem::path& path, const PatternSpec& spec) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write spec file: " + path.string());
    out << serialize_spec(spec);
}

inline std::string rational_string(const BigRat& r) {
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    return den == 1 ? num.str() : num.str() + "/" + den.str();
}

inline nlohmann::ordered_json decision_to_json(const StarDecision& d, const WeightedSet& s) {
    nlohmann::ordered_json j;
    j["holds"] = d.holds;
    j["degenerate"] = d.degenerate;
    j["b_is_eigenvalue"] = d.b_is_eigenvalue;
    j["kernel_condition"] = d.kernel_condition;
    if (d.kernel_min_power)
        j["kernel_min_power"] = *d.kernel_min_power;
    else
        j["kernel_min_power"] = nullptr;
    if (d.det_certificate) {
        auto coeffs = nlohmann::ordered_json::array();
        for (const BigRat& c : d.det_certificate->coeff) coeffs.push_back(rational_string(c));
        j["det_certificate"] = std::move(coeffs);
    } else {
        j["det_certificate"] = nullptr;
    }
    j["dimensions"] = nlohmann::ordered_json::array({d.dimension, d.dimension});
    j["l"] = d.l;
    j["base"] = s.base();
    j["modulus"] = s.modulus();
    return j;
}

} // namespace patseq
