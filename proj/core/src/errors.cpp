#include "ke/errors.hpp"

namespace ke {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyCollection:    return "EmptyCollection";
    case ErrorCode::NotRelevant:        return "NotRelevant";
    case ErrorCode::TooLarge:           return "TooLarge";
    case ErrorCode::NotAMember:         return "NotAMember";
    case ErrorCode::CollectionTooSmall: return "CollectionTooSmall";
    case ErrorCode::HypothesisFails:    return "HypothesisFails";
    case ErrorCode::PreconditionFails:  return "PreconditionFails";
    case ErrorCode::NotDistinct:        return "NotDistinct";
    case ErrorCode::VertexOutOfRange:   return "VertexOutOfRange";
    case ErrorCode::EmptySet:           return "EmptySet";
    case ErrorCode::DuplicateMember:    return "DuplicateMember";
    case ErrorCode::InvalidElement:     return "InvalidElement";
    case ErrorCode::ParseError:         return "ParseError";
    case ErrorCode::UnknownTheorem:     return "UnknownTheorem";
  }
  return "UnknownError";
}

}  // namespace ke
