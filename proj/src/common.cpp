#include "fiva/common.hpp"

#include <cmath>

namespace fiva {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::DegenerateMatrix: return "DegenerateMatrix";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::InputTooShort: return "InputTooShort";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::FormatMismatch: return "FormatMismatch";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::InsufficientData: return "InsufficientData";
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::MetricsUnavailable: return "MetricsUnavailable";
    case ErrorCode::MetricsUndefined: return "MetricsUndefined";
    case ErrorCode::UnsupportedChannelCount: return "UnsupportedChannelCount";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::IoError: return "IoError";
  }
  return "UnknownError";
}

bool Spectrogram::all_finite() const {
  for (const cplx& v : data) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  }
  return true;
}

}  // namespace fiva
