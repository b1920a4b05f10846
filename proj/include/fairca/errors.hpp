#pragma once
//------------------------------------------------------------------------------
//
//   Copyright 2026 The fairca authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------

#include <stdexcept>
#include <string>

namespace fairca {

/// Broad failure categories; each maps to a process exit code so scripted
/// callers can distinguish bad input from solver or settlement failures.
enum class ErrorKind {
  parse,        // exit 2
  validation,   // exit 2
  solver,       // exit 3
  settlement,   // exit 4
  cross_check,  // exit 5
};

class AuctionError : public std::runtime_error {
 public:
  AuctionError(ErrorKind kind, std::string name, const std::string& what)
      : std::runtime_error(what), kind_(kind), name_(std::move(name)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& name() const noexcept { return name_; }

  int exit_code() const noexcept {
    switch (kind_) {
      case ErrorKind::parse:
      case ErrorKind::validation:
        return 2;
      case ErrorKind::solver:
        return 3;
      case ErrorKind::settlement:
        return 4;
      case ErrorKind::cross_check:
        return 5;
    }
    return 1;
  }

 private:
  ErrorKind kind_;
  std::string name_;
};

struct ParseError : AuctionError {
  explicit ParseError(const std::string& what)
      : AuctionError(ErrorKind::parse, "ParseError", what) {}
};

struct ValidationError : AuctionError {
  explicit ValidationError(const std::string& what)
      : AuctionError(ErrorKind::validation, "ValidationError", what) {}
};

/// Package is empty or references resources outside the auction.
struct InvalidPackage : AuctionError {
  explicit InvalidPackage(const std::string& what)
      : AuctionError(ErrorKind::validation, "InvalidPackage", what) {}
};

/// A settlement operation touched a fairness table that is still sealed.
struct SealedTableError : AuctionError {
  explicit SealedTableError(const std::string& what)
      : AuctionError(ErrorKind::settlement, "SealedTableError", what) {}
};

/// Instance exceeds the exhaustive-enumeration resource bound.
struct OracleScaleError : AuctionError {
  explicit OracleScaleError(const std::string& what)
      : AuctionError(ErrorKind::solver, "OracleScaleError", what) {}
};

/// The instance is degenerate beyond what the solvers track exactly, e.g.
/// more revenue-tied optimal allocations than the collection bound.
struct SolverLimitError : AuctionError {
  explicit SolverLimitError(const std::string& what)
      : AuctionError(ErrorKind::solver, "SolverLimitError", what) {}
};

/// Vickrey pricing was asked to price an instance containing a tie group.
struct TieNotPriceable : AuctionError {
  explicit TieNotPriceable(const std::string& what)
      : AuctionError(ErrorKind::settlement, "TieNotPriceable", what) {}
};

/// An auctioneer fair value of zero makes the redistribution ratio undefined.
struct DegenerateFairValue : AuctionError {
  explicit DegenerateFairValue(const std::string& what)
      : AuctionError(ErrorKind::settlement, "DegenerateFairValue", what) {}
};

struct InvalidTieGroup : AuctionError {
  explicit InvalidTieGroup(const std::string& what)
      : AuctionError(ErrorKind::settlement, "InvalidTieGroup", what) {}
};

/// A sweep's base instance breaks the hypotheses the check relies on.
struct HypothesisViolation : AuctionError {
  explicit HypothesisViolation(const std::string& what)
      : AuctionError(ErrorKind::settlement, "HypothesisViolation", what) {}
};

/// A sweep grid does not span every regime the check must cover.
struct IncompleteGrid : AuctionError {
  explicit IncompleteGrid(const std::string& what)
      : AuctionError(ErrorKind::validation, "IncompleteGrid", what) {}
};

/// The two winner-determination routes disagreed on the same instance.
struct SolverMismatch : AuctionError {
  explicit SolverMismatch(const std::string& what)
      : AuctionError(ErrorKind::cross_check, "SolverMismatch", what) {}
};

}  // namespace fairca
