#include "ire/rational.hpp"

#include "ire/error.hpp"

namespace ire {

Rat parse_rational(const std::string& text) {
  auto bad = [&] { fail(ErrorCode::ParseError, "bad rational '" + text + "'"); };
  if (text.empty()) bad();
  size_t slash = text.find('/');
  auto parse_int = [&](const std::string& part) -> Int {
    if (part.empty() || (part.size() == 1 && (part[0] == '-' || part[0] == '+'))) bad();
    for (size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0; i < part.size(); ++i)
      if (!isdigit(static_cast<unsigned char>(part[i]))) bad();
    return Int(part);
  };
  Int num = parse_int(text.substr(0, slash));
  Int den = 1;
  if (slash != std::string::npos) {
    den = parse_int(text.substr(slash + 1));
    if (den == 0) bad();
  }
  return Rat(num, den);
}

std::string format_rational(const Rat& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicateLabel: return "DuplicateLabel";
    case ErrorCode::NotABijection: return "NotABijection";
    case ErrorCode::UnknownLabel: return "UnknownLabel";
    case ErrorCode::NotAnIET: return "NotAnIET";
    case ErrorCode::MalformedTwoRow: return "MalformedTwoRow";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NotInEndpointSpace: return "NotInEndpointSpace";
    case ErrorCode::NotInLengthSpace: return "NotInLengthSpace";
    case ErrorCode::MissingAnchor: return "MissingAnchor";
    case ErrorCode::DuplicateAnchor: return "DuplicateAnchor";
    case ErrorCode::StepNotApplicable: return "StepNotApplicable";
    case ErrorCode::NotInImage: return "NotInImage";
    case ErrorCode::TieDetected: return "TieDetected";
    case ErrorCode::DegenerateCycle: return "DegenerateCycle";
    case ErrorCode::NotPositive: return "NotPositive";
    case ErrorCode::ExplicitBranchOutOfRange: return "ExplicitBranchOutOfRange";
    case ErrorCode::PointOutsideInterval: return "PointOutsideInterval";
    case ErrorCode::InternalInvariantViolation: return "InternalInvariantViolation";
  }
  return "UnknownError";
}

}  // namespace ire
