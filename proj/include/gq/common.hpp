#pragma once

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace gq {

// Error categories double as CLI exit codes.
enum class ErrorCategory : int {
  config = 1,
  artifact = 2,
  pipeline = 3,
  numeric = 4,
  geometry = 5,
  planning = 6,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory cat, const std::string& msg)
      : std::runtime_error(msg), category_(cat) {}
  ErrorCategory category() const { return category_; }

 private:
  ErrorCategory category_;
};

#define GQ_DEFINE_ERROR(Name, Category)                       \
  class Name : public Error {                                 \
   public:                                                    \
    explicit Name(const std::string& msg)                     \
        : Error(ErrorCategory::Category, msg) {}              \
  }

GQ_DEFINE_ERROR(ConfigError, config);
GQ_DEFINE_ERROR(MalformedFileError, artifact);
GQ_DEFINE_ERROR(CorruptDatasetError, artifact);
GQ_DEFINE_ERROR(MissingArtifactError, artifact);
GQ_DEFINE_ERROR(PipelineError, pipeline);
GQ_DEFINE_ERROR(NumericError, numeric);
GQ_DEFINE_ERROR(DivergenceError, numeric);
GQ_DEFINE_ERROR(ZeroStdError, numeric);
GQ_DEFINE_ERROR(EmptyGeometryError, geometry);
GQ_DEFINE_ERROR(DegenerateGeometryError, geometry);
GQ_DEFINE_ERROR(DegenerateContactError, geometry);
GQ_DEFINE_ERROR(OffFrameError, geometry);
GQ_DEFINE_ERROR(SpecError, config);
GQ_DEFINE_ERROR(NoFeasibleGraspError, planning);
GQ_DEFINE_ERROR(NoObjectError, planning);

#undef GQ_DEFINE_ERROR

// Line-delimited structured logging: `level=info a=1 msg="..."` on stderr.
using LogFields = std::initializer_list<std::pair<std::string_view, std::string>>;

void log_line(std::string_view level, LogFields fields);
void log_info(std::string_view msg, LogFields fields = {});
void log_warn(std::string_view msg, LogFields fields = {});
void log_error(std::string_view msg, LogFields fields = {});

std::string format_double(double v);

}  // namespace gq
