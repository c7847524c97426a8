#include "czeta/cli/records.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <sstream>

#include "czeta/errors.hpp"
#include "json.hpp"

namespace czeta::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::array<std::pair<RecordKind, std::string_view>, 5> kKindNames{{
    {RecordKind::ExactRational, "exact_rational"},
    {RecordKind::ExactPiMonomial, "exact_pi_monomial"},
    {RecordKind::NumericComplex, "numeric_complex"},
    {RecordKind::BooleanCheck, "boolean_check"},
    {RecordKind::Residual, "residual"},
}};

RecordKind kind_from_name(std::string_view name) {
    for (const auto& [kind, text] : kKindNames) {
        if (text == name) {
            return kind;
        }
    }
    throw ParseError("unknown record kind '" + std::string(name) + "'");
}

Json payload_json(const OutputRecord& r) {
    switch (r.kind()) {
        case RecordKind::ExactRational:
            return std::get<BigRational>(r.payload()).str();
        case RecordKind::ExactPiMonomial: {
            const auto& v = std::get<PiValue>(r.payload());
            Json j = Json::object();
            j["coeff"] = v.coefficient().str();
            j["pi_exp"] = v.pi_exponent();
            return j;
        }
        case RecordKind::NumericComplex: {
            const auto z = std::get<ComplexValue>(r.payload());
            Json j = Json::object();
            j["re"] = z.real();
            j["im"] = z.imag();
            return j;
        }
        case RecordKind::BooleanCheck:
            return std::get<bool>(r.payload());
        case RecordKind::Residual:
            return std::get<double>(r.payload());
    }
    return nullptr;
}

std::string csv_cell(const std::string& text) {
    if (text.find_first_of(",\"\n") == std::string::npos) {
        return text;
    }
    std::string out = "\"";
    for (const char c : text) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + "\"";
}

std::string md_cell(const std::string& text) {
    std::string out;
    for (const char c : text) {
        if (c == '|') {
            out += '\\';
        }
        out += c;
    }
    return out;
}

double json_number(const Json& j, const char* what) {
    if (!j.is_number()) {
        throw ParseError(std::string("expected a number for ") + what);
    }
    return j.get<double>();
}

}  // namespace

std::string_view kind_name(RecordKind kind) {
    for (const auto& [k, text] : kKindNames) {
        if (k == kind) {
            return text;
        }
    }
    return "unknown";
}

Format parse_format(std::string_view text) {
    if (text == "json") {
        return Format::Json;
    }
    if (text == "csv") {
        return Format::Csv;
    }
    if (text == "md") {
        return Format::Markdown;
    }
    throw ParseError("unknown format '" + std::string(text) + "' (expected json, csv or md)");
}

OutputRecord::OutputRecord(RecordKind kind, Payload payload, std::string route, std::string argument)
    : kind_(kind), payload_(std::move(payload)), route_(std::move(route)), argument_(std::move(argument)) {}

OutputRecord OutputRecord::exact_rational(BigRational value, std::string route, std::string argument) {
    return {RecordKind::ExactRational, std::move(value), std::move(route), std::move(argument)};
}

OutputRecord OutputRecord::exact_pi(PiValue value, std::string route, std::string argument) {
    return {RecordKind::ExactPiMonomial, std::move(value), std::move(route), std::move(argument)};
}

OutputRecord OutputRecord::numeric(ComplexValue value, std::string route, std::string argument) {
    require_finite(value, "numeric record");
    return {RecordKind::NumericComplex, value, std::move(route), std::move(argument)};
}

OutputRecord OutputRecord::check(bool passed, std::string route, std::string argument) {
    return {RecordKind::BooleanCheck, passed, std::move(route), std::move(argument)};
}

OutputRecord OutputRecord::residual(double value, std::string route, std::string argument) {
    if (!std::isfinite(value)) {
        throw DomainError("residual must be finite");
    }
    return {RecordKind::Residual, value, std::move(route), std::move(argument)};
}

OutputRecord OutputRecord::as_float() const {
    switch (kind_) {
        case RecordKind::ExactRational:
            return numeric(ComplexValue(std::get<BigRational>(payload_).to_double(), 0.0), route_, argument_);
        case RecordKind::ExactPiMonomial:
            return numeric(ComplexValue(std::get<PiValue>(payload_).to_double(), 0.0), route_, argument_);
        default:
            return *this;
    }
}

std::string OutputRecord::value_text(Format format) const {
    switch (kind_) {
        case RecordKind::ExactRational:
            return std::get<BigRational>(payload_).str();
        case RecordKind::ExactPiMonomial:
            return std::get<PiValue>(payload_).str();
        case RecordKind::NumericComplex:
            return format_complex(std::get<ComplexValue>(payload_));
        case RecordKind::BooleanCheck: {
            const bool passed = std::get<bool>(payload_);
            if (format == Format::Markdown) {
                return passed ? "pass" : "fail";
            }
            return passed ? "true" : "false";
        }
        case RecordKind::Residual:
            return format_double(std::get<double>(payload_));
    }
    return {};
}

std::string format_double(double x) {
    std::array<char, 64> buf{};
    const auto result = std::to_chars(buf.data(), buf.data() + buf.size(), x);
    return std::string(buf.data(), result.ptr);
}

std::string format_complex(ComplexValue z) {
    const double im = z.imag();
    const bool negative = std::signbit(im);
    return format_double(z.real()) + (negative ? "-" : "+") + format_double(negative ? -im : im) + "i";
}

std::string render(const std::vector<OutputRecord>& records, Format format) {
    if (format == Format::Json) {
        Json arr = Json::array();
        for (const auto& r : records) {
            Json j = Json::object();
            j["kind"] = std::string(kind_name(r.kind()));
            j["payload"] = payload_json(r);
            j["route"] = r.route();
            j["argument"] = r.argument();
            arr.push_back(std::move(j));
        }
        return arr.dump();
    }
    std::ostringstream out;
    if (format == Format::Csv) {
        out << "kind,argument,route,value";
        for (const auto& r : records) {
            out << '\n'
                << kind_name(r.kind()) << ',' << csv_cell(r.argument()) << ',' << csv_cell(r.route()) << ','
                << csv_cell(r.value_text(format));
        }
        return out.str();
    }
    out << "| kind | argument | route | value |\n|---|---|---|---|";
    for (const auto& r : records) {
        out << "\n| " << kind_name(r.kind()) << " | " << md_cell(r.argument()) << " | " << md_cell(r.route())
            << " | " << md_cell(r.value_text(format)) << " |";
    }
    return out.str();
}

namespace {

OutputRecord record_from_json(const Json& item) {
    if (!item.is_object() || !item.contains("kind") || !item.contains("payload") || !item.contains("route") ||
        !item.contains("argument")) {
        throw ParseError("record needs kind, payload, route and argument");
    }
    const RecordKind kind = kind_from_name(item["kind"].get<std::string>());
    auto route = item["route"].get<std::string>();
    auto argument = item["argument"].get<std::string>();
    const Json& p = item["payload"];
    switch (kind) {
        case RecordKind::ExactRational:
            if (!p.is_string()) {
                throw ParseError("exact_rational payload must be a \"p/q\" string");
            }
            return OutputRecord::exact_rational(BigRational::parse(p.get<std::string>()), std::move(route),
                                                std::move(argument));
        case RecordKind::ExactPiMonomial:
            if (!p.is_object() || !p.contains("coeff") || !p.contains("pi_exp") || !p["coeff"].is_string() ||
                !p["pi_exp"].is_number_integer()) {
                throw ParseError("exact_pi_monomial payload must be {\"coeff\",\"pi_exp\"}");
            }
            return OutputRecord::exact_pi(
                PiValue(BigRational::parse(p["coeff"].get<std::string>()), p["pi_exp"].get<int>()), std::move(route),
                std::move(argument));
        case RecordKind::NumericComplex:
            if (!p.is_object() || !p.contains("re") || !p.contains("im")) {
                throw ParseError("numeric_complex payload must be {\"re\",\"im\"}");
            }
            return OutputRecord::numeric(ComplexValue(json_number(p["re"], "re"), json_number(p["im"], "im")),
                                         std::move(route), std::move(argument));
        case RecordKind::BooleanCheck:
            if (!p.is_boolean()) {
                throw ParseError("boolean_check payload must be true or false");
            }
            return OutputRecord::check(p.get<bool>(), std::move(route), std::move(argument));
        case RecordKind::Residual:
            return OutputRecord::residual(json_number(p, "residual"), std::move(route), std::move(argument));
    }
    throw ParseError("unhandled record kind");
}

}  // namespace

std::vector<OutputRecord> parse_records(std::string_view json_text) {
    Json doc;
    try {
        doc = Json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_array()) {
        throw ParseError("expected a JSON array of records");
    }
    std::vector<OutputRecord> out;
    out.reserve(doc.size());
    for (const auto& item : doc) {
        try {
            out.push_back(record_from_json(item));
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(std::string("malformed record: ") + e.what());
        }
    }
    return out;
}

}  // namespace czeta::cli
