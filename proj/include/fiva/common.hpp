// Shared value types and the error model used across the library.
#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace fiva {

using cplx = std::complex<double>;
using CVec = std::vector<cplx>;

enum class ErrorCode {
  InvalidInput,
  DegenerateMatrix,
  SingularMatrix,
  InputTooShort,
  ShapeMismatch,
  FormatMismatch,
  ParseError,
  Unsupported,
  InsufficientData,
  DegenerateInput,
  MetricsUnavailable,
  MetricsUndefined,
  UnsupportedChannelCount,
  ValidationError,
  IoError,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Multichannel time-domain signal, channel-major.
struct Waveform {
  double sample_rate = 0.0;
  std::vector<std::vector<double>> channels;

  int n_channels() const { return static_cast<int>(channels.size()); }
  std::size_t n_samples() const {
    return channels.empty() ? 0 : channels[0].size();
  }
};

// Complex STFT tensor indexed (frequency f, frame t, channel k).
struct Spectrogram {
  int freqs = 0;
  int frames = 0;
  int channels = 0;
  std::vector<cplx> data;  // layout: ((f * frames) + t) * channels + k

  Spectrogram() = default;
  Spectrogram(int f, int t, int k)
      : freqs(f), frames(t), channels(k),
        data(static_cast<std::size_t>(f) * t * k) {}

  cplx& at(int f, int t, int k) {
    return data[(static_cast<std::size_t>(f) * frames + t) * channels + k];
  }
  const cplx& at(int f, int t, int k) const {
    return data[(static_cast<std::size_t>(f) * frames + t) * channels + k];
  }

  bool all_finite() const;
};

}  // namespace fiva
