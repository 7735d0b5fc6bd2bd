#include "concordia/error.hpp"

namespace concordia {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::RingMismatch: return "RingMismatch";
    case ErrorCode::ZeroElement: return "ZeroElement";
    case ErrorCode::ValueGroupMismatch: return "ValueGroupMismatch";
    case ErrorCode::DegenerateBaseChange: return "DegenerateBaseChange";
    case ErrorCode::NotReducedValid: return "NotReducedValid";
    case ErrorCode::UnknownExample: return "UnknownExample";
    case ErrorCode::MissingParameter: return "MissingParameter";
    case ErrorCode::NotAChainMap: return "NotAChainMap";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::InvalidComplex: return "InvalidComplex";
    case ErrorCode::UnsupportedPresentation: return "UnsupportedPresentation";
    case ErrorCode::RankNotOne: return "RankNotOne";
    case ErrorCode::CycleInTorsion: return "CycleInTorsion";
    case ErrorCode::NonIntegral: return "NonIntegral";
    case ErrorCode::MissingSignature: return "MissingSignature";
    case ErrorCode::NotNonorientableValid: return "NotNonorientableValid";
    case ErrorCode::DirectionMismatch: return "DirectionMismatch";
    case ErrorCode::UnknownKnot: return "UnknownKnot";
    case ErrorCode::GroebnerDegreeCap: return "GroebnerDegreeCap";
    case ErrorCode::IntegrityError: return "IntegrityError";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace concordia
