#include "idiom/error.hpp"

namespace idiom {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidInput: return "InvalidInput";
    case Errc::NotALattice: return "NotALattice";
    case Errc::NoBounds: return "NoBounds";
    case Errc::CycleDetected: return "CycleDetected";
    case Errc::ElementBelowBase: return "ElementBelowBase";
    case Errc::OutOfInterval: return "OutOfInterval";
    case Errc::InvalidInterval: return "InvalidInterval";
    case Errc::MixedLattices: return "MixedLattices";
    case Errc::NotBasic: return "NotBasic";
    case Errc::NotTotal: return "NotTotal";
    case Errc::NotInflator: return "NotInflator";
    case Errc::NotNucleus: return "NotNucleus";
    case Errc::NotDivision: return "NotDivision";
    case Errc::NotMorphism: return "NotMorphism";
    case Errc::SizeLimit: return "SizeLimit";
    case Errc::InvalidAllocation: return "InvalidAllocation";
    case Errc::InvalidAspect: return "InvalidAspect";
    case Errc::NotInert: return "NotInert";
    case Errc::InvalidSeq: return "InvalidSeq";
    case Errc::NotBasicOperator: return "NotBasicOperator";
    case Errc::NotPrime: return "NotPrime";
    case Errc::GenerationFailed: return "GenerationFailed";
    case Errc::InternalCheckFailed: return "InternalCheckFailed";
  }
  return "Unknown";
}

}  // namespace idiom
