#pragma once

// Command-line front end. Exit codes: 0 ok, 1 usage error, 2 certification
// failure, 3 non-monotone violation indicator.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qfisep/criterion.hpp"
#include "qfisep/errors.hpp"
#include "qfisep/observable_set.hpp"

namespace qfisep::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitCertification = 2;
inline constexpr int kExitNonMonotone = 3;

/// Thrown for invalid flag combinations detected after parsing.
class UsageError : public Error {
 public:
  explicit UsageError(const std::string& what) : Error(what) {}
};

struct Grid {
  double start = 0.0;
  double stop = 1.0;
  int count = 101;
};

/// "START:STOP:COUNT" with count >= 2 and 0 <= start < stop <= 1.
Grid parse_grid(const std::string& text);

struct Fiducial {
  int dim = 0;
  ComplexVector amplitudes;
};

/// Line 1: dimension d; then d lines "re im". Throws InvalidVector on
/// malformed input.
Fiducial read_fiducial(std::istream& in);
Fiducial read_fiducial_file(const std::string& path);

enum class ObsKind { Loo, Sic };

/// Built-in LOO / SIC for `dim`, or the SIC generated by a fiducial file.
/// Throws UsageError for SIC at d not in {2, 3} without a fiducial.
ObservableSet make_observable_set(ObsKind kind, int dim,
                                  const std::optional<std::string>& fiducial_path);

struct SweepConfig {
  FamilyKind family = FamilyKind::Isotropic;
  int local_dim = 3;
  ObsKind obs_a = ObsKind::Sic;
  ObsKind obs_b = ObsKind::Sic;
  bool unoptimized = true;
  bool optimized = true;
  Grid grid;
  std::optional<std::string> fiducial_path;
  std::optional<std::string> out_path;
  std::uint64_t seed = 0;
  int jobs = 1;

  /// Throws UsageError on invalid settings.
  void validate() const;
};

/// %.12g formatting used by every CSV column.
std::string format_number(double value);

inline constexpr const char* kSweepCsvHeader =
    "eta,unopt_total,opt_total,bound,xi_trace_norm,unopt_violated,opt_violated";

void write_sweep_csv(std::ostream& out, const std::vector<CriterionReport>& rows);

/// Rows of the reproduce-fig2 files: the same grid evaluated with LOO and
/// SIC pairs. Reports must be aligned by index.
void write_comparison_csv(std::ostream& out, const std::vector<CriterionReport>& loo,
                          const std::vector<CriterionReport>& sic);

/// Entry point shared by the executable and the tests.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qfisep::cli
