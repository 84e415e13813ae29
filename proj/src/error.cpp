#include "pbwtidx/error.hpp"

namespace pbwtidx {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::UnknownCharacter: return "UnknownCharacter";
    case Errc::ReservedSentinel: return "ReservedSentinel";
    case Errc::RankOutOfRange: return "RankOutOfRange";
    case Errc::RaggedCollection: return "RaggedCollection";
    case Errc::EmptyInput: return "EmptyInput";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::PermutationNotStored: return "PermutationNotStored";
    case Errc::PatternOverrun: return "PatternOverrun";
    case Errc::NoStoredColumnAtOrBelow: return "NoStoredColumnAtOrBelow";
    case Errc::ModeMismatch: return "ModeMismatch";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::CorruptIndex: return "CorruptIndex";
    case Errc::Io: return "Io";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& detail)
    : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code) {}

}  // namespace pbwtidx
