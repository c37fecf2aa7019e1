#include "surftri/error.hpp"

namespace surftri {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::InvalidArgument: return "INVALID_ARGUMENT";
    case Errc::Parse: return "PARSE";
    case Errc::Io: return "IO";
    case Errc::NonTriangle: return "NON_TRIANGLE";
    case Errc::EdgeDegree: return "EDGE_DEGREE";
    case Errc::SharedEdges: return "SHARED_EDGES";
    case Errc::Pinched: return "PINCHED";
    case Errc::Disconnected: return "DISCONNECTED";
    case Errc::LabelRange: return "LABEL_RANGE";
    case Errc::NoSuchEdge: return "NO_SUCH_EDGE";
    case Errc::NotContractible: return "NOT_CONTRACTIBLE";
    case Errc::IllegalSite: return "ILLEGAL_SITE";
    case Errc::NotFlippable: return "NOT_FLIPPABLE";
    case Errc::InvalidResult: return "INVALID_RESULT";
    case Errc::WrongOrientability: return "WRONG_ORIENTABILITY";
    case Errc::WrongDegree: return "WRONG_DEGREE";
    case Errc::InvalidCycle: return "INVALID_CYCLE";
    case Errc::BadH: return "BAD_H";
    case Errc::ImpossibleType: return "IMPOSSIBLE_TYPE";
    case Errc::IncompleteSeeds: return "INCOMPLETE_SEEDS";
    case Errc::LongRunRequired: return "LONG_RUN_REQUIRED";
    case Errc::NoNonseparating3Cycle: return "NO_NONSEPARATING_3CYCLE";
    case Errc::MixedInput: return "MIXED_INPUT";
    case Errc::BadG: return "BAD_G";
    case Errc::UnsupportedSurface: return "UNSUPPORTED_SURFACE";
  }
  return "UNKNOWN";
}

}  // namespace surftri
