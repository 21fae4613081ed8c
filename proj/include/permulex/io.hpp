#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "permulex/ergodicity.hpp"
#include "permulex/interval_morphism.hpp"
#include "permulex/order.hpp"
#include "permulex/spectral.hpp"
#include "permulex/sturmian.hpp"
#include "permulex/word.hpp"

namespace permulex {

inline constexpr const char* kVersion = "1.0.0";

/// Contents of a morphism spec file.
struct MorphismSpec {
  std::string name;
  std::size_t alphabet_size = 0;
  std::vector<Word> images;
  Letter seed = 0;
  std::size_t power = 1;

  /// phi^power.
  Morphism morphism() const;
};

/// Throws ParseError for malformed JSON and ValidationError for a
/// well-formed file with bad content; messages name the field.
MorphismSpec parse_spec_text(const std::string& text, const std::string& source = "<string>");
MorphismSpec parse_spec(const std::string& path);

struct AnalyzeOptions {
  std::size_t prefix = kDefaultTypePrefix;
  std::size_t depth = kDefaultTypeDepth;
  mpfr_prec_t precision = kDefaultPrecision;
  bool force_ball = false;
  /// Replace phi by its least monotone power (up to max_power) when phi
  /// itself is not monotone.
  bool auto_power = false;
  std::size_t max_power = 5;
  /// Negative control: exchange the first adjacent pair of types that write
  /// the same letter before building the layout.
  bool swap_types = false;
};

/// Why an analysis stopped before a construction was available.
struct Rejection {
  std::string reason;
  std::string message;
  ExitCode code = ExitCode::Rejected;
};

/// Every stage of the pipeline, filled as far as it got.
struct Analysis {
  MorphismSpec spec;
  AnalyzeOptions options;
  Morphism phi{1, {{0, 0}}};
  std::size_t power = 1;
  Primitivity primitivity;
  std::optional<SpectralData> spectral;
  std::optional<MonotonicityVerdict> monotonicity;
  std::optional<MonotonePowerSearch> power_search;
  std::optional<std::size_t> period;
  std::optional<TypeTable> table;
  std::optional<ConstructionInputs> inputs;
  std::optional<IntervalMorphism> construction;
  std::optional<Rejection> rejection;

  bool ok() const noexcept { return !rejection; }
};

/// Runs primitivity, spectral data, monotonicity (with the power search
/// when asked), a periodicity guard, the type order, the layout and the
/// interval morphism. Analysis rejections are recorded, not thrown;
/// arithmetic exhaustion still propagates.
Analysis analyze(const MorphismSpec& spec, const AnalyzeOptions& opts = {});

/// JSON report; exact values as strings that parse_scalar reads back.
std::string analysis_report(const Analysis& a);

enum class Format { Csv, Json };

struct SequenceRow {
  std::size_t index = 0;
  std::string value;
  std::string decimal;
  std::size_t rank = 0;
};

std::vector<SequenceRow> sequence_rows(const std::vector<Scalar>& values);
std::string format_rows(const std::vector<SequenceRow>& rows, Format format, const std::string& title);

struct VerifyOptions {
  std::size_t n = 1000;
  std::size_t depth = 4096;
  /// Dyadic intervals (d/2^k, (d+1)/2^k] with k up to this are checked.
  std::size_t dyadic_levels = 3;
  double canonical_tol = 0.02;
  std::size_t factor_len = 4;
  std::size_t window = std::size_t{1} << 12;
  std::size_t prefix = std::size_t{1} << 16;
  double ergodic_tol = 0.05;
  std::optional<SturmianParams> sturmian;
};

struct VerifySummary {
  VerificationReport oracle;
  std::vector<IntervalFrequency> canonicality;
  double worst_deviation = 0.0;
  ErgodicVerdict ergodic;
  std::optional<SturmianCrossCheck> sturmian;
  bool pass = false;
};

/// Requires a successful analysis.
VerifySummary verify(const Analysis& a, const VerifyOptions& opts);
std::string verify_report(const Analysis& a, const VerifyOptions& opts, const VerifySummary& s);

}  // namespace permulex
