#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pbwtidx {

enum class Errc {
  UnknownCharacter,
  ReservedSentinel,
  RankOutOfRange,
  RaggedCollection,
  EmptyInput,
  IndexOutOfRange,
  PermutationNotStored,
  PatternOverrun,
  NoStoredColumnAtOrBelow,
  ModeMismatch,
  InvalidArgument,
  CorruptIndex,
  Io,
};

std::string_view errc_name(Errc code) noexcept;

/// Every failure raised by the library. `code()` identifies the failure class;
/// `what()` is "<ErrcName>: <detail>".
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace pbwtidx
