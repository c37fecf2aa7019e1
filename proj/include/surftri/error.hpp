#pragma once

#include <stdexcept>
#include <string>

namespace surftri {

enum class Errc {
  InvalidArgument,
  Parse,
  Io,
  NonTriangle,
  EdgeDegree,
  SharedEdges,
  Pinched,
  Disconnected,
  LabelRange,
  NoSuchEdge,
  NotContractible,
  IllegalSite,
  NotFlippable,
  InvalidResult,
  WrongOrientability,
  WrongDegree,
  InvalidCycle,
  BadH,
  ImpossibleType,
  IncompleteSeeds,
  LongRunRequired,
  NoNonseparating3Cycle,
  MixedInput,
  BadG,
  UnsupportedSurface,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace surftri
