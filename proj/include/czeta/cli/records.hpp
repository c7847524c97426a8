#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "czeta/big_rational.hpp"
#include "czeta/numeric/complex_math.hpp"
#include "czeta/pi_value.hpp"

namespace czeta::cli {

enum class RecordKind { ExactRational, ExactPiMonomial, NumericComplex, BooleanCheck, Residual };

enum class Format { Json, Csv, Markdown };

std::string_view kind_name(RecordKind kind);

/// Throws ParseError for anything but json, csv, md.
Format parse_format(std::string_view text);

/// One line of CLI output. The payload type always matches the kind; use
/// the factories.
class OutputRecord {
public:
    using Payload = std::variant<BigRational, PiValue, ComplexValue, bool, double>;

    static OutputRecord exact_rational(BigRational value, std::string route, std::string argument);
    static OutputRecord exact_pi(PiValue value, std::string route, std::string argument);
    static OutputRecord numeric(ComplexValue value, std::string route, std::string argument);
    static OutputRecord check(bool passed, std::string route, std::string argument);
    static OutputRecord residual(double value, std::string route, std::string argument);

    RecordKind kind() const { return kind_; }
    const Payload& payload() const { return payload_; }
    const std::string& route() const { return route_; }
    const std::string& argument() const { return argument_; }

    /// Exact kinds become numeric_complex; everything else is unchanged.
    OutputRecord as_float() const;

    /// The value column of CSV and Markdown.
    std::string value_text(Format format) const;

    friend bool operator==(const OutputRecord&, const OutputRecord&) = default;

private:
    OutputRecord(RecordKind kind, Payload payload, std::string route, std::string argument);

    RecordKind kind_;
    Payload payload_;
    std::string route_;
    std::string argument_;
};

/// Shortest decimal that reads back as the same double.
std::string format_double(double x);

/// "re+imi" with format_double on each part.
std::string format_complex(ComplexValue z);

/// No trailing newline. An empty list is "[]" in JSON and a bare header
/// otherwise.
std::string render(const std::vector<OutputRecord>& records, Format format);

/// Inverse of render(..., Format::Json). Throws ParseError.
std::vector<OutputRecord> parse_records(std::string_view json_text);

}  // namespace czeta::cli
