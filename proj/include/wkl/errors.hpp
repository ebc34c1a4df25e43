#pragma once

#include <stdexcept>
#include <string>

namespace wkl {

enum class Errc {
  UnsupportedModel,
  WeightInconsistent,
  NegativeWeight,
  NotInDJ,
  WAUnreachable,
  ZeroWeight,
  NotComparable,
  Parse,
  Internal,
};

/// Library error carrying a machine-readable code alongside the message.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) {
  throw Error(code, msg);
}

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::UnsupportedModel: return "UnsupportedModel";
    case Errc::WeightInconsistent: return "WeightInconsistent";
    case Errc::NegativeWeight: return "NegativeWeight";
    case Errc::NotInDJ: return "NotInDJ";
    case Errc::WAUnreachable: return "WAUnreachable";
    case Errc::ZeroWeight: return "ZeroWeight";
    case Errc::NotComparable: return "NotComparable";
    case Errc::Parse: return "Parse";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace wkl
