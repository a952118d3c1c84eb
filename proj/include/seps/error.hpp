#pragma once

#include <stdexcept>
#include <string>

namespace seps {

enum class ErrorKind {
  InvalidPoset,
  NotALattice,
  NotDistributive,
  SizeLimitExceeded,
  InvalidInvolution,
  InvalidInvolutionPoset,
  InvolutionRequired,
  InputNotSubmodular,
  InputNotSymmetric,
  NotAnInterval,
  NotASublattice,
  MissingTopOrBottom,
  NotASubuniverse,
  NotSymmetricInterval,
  NotSubmodular,
  TooSmall,
  ProofPreconditionUnmet,
  InternalContradiction,
  ParseError,
};

const char* to_string(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidPoset: return "InvalidPoset";
    case ErrorKind::NotALattice: return "NotALattice";
    case ErrorKind::NotDistributive: return "NotDistributive";
    case ErrorKind::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorKind::InvalidInvolution: return "InvalidInvolution";
    case ErrorKind::InvalidInvolutionPoset: return "InvalidInvolutionPoset";
    case ErrorKind::InvolutionRequired: return "InvolutionRequired";
    case ErrorKind::InputNotSubmodular: return "InputNotSubmodular";
    case ErrorKind::InputNotSymmetric: return "InputNotSymmetric";
    case ErrorKind::NotAnInterval: return "NotAnInterval";
    case ErrorKind::NotASublattice: return "NotASublattice";
    case ErrorKind::MissingTopOrBottom: return "MissingTopOrBottom";
    case ErrorKind::NotASubuniverse: return "NotASubuniverse";
    case ErrorKind::NotSymmetricInterval: return "NotSymmetricInterval";
    case ErrorKind::NotSubmodular: return "NotSubmodular";
    case ErrorKind::TooSmall: return "TooSmall";
    case ErrorKind::ProofPreconditionUnmet: return "ProofPreconditionUnmet";
    case ErrorKind::InternalContradiction: return "InternalContradiction";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Error";
}

}  // namespace seps
