// Copyright 2026 The Pushin Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace pushin {

/// A caller broke an operation's precondition (alphabet mismatch, unknown
/// action, malformed order, ...).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The operation needs a finite language but the automaton has a live cycle.
class InfiniteLanguage : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class EmptyLanguage : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Text-format error with a source position. Lines and columns are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string source, std::size_t line, std::size_t column, const std::string& message);

  const std::string& source() const noexcept { return source_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::string source_;
  std::size_t line_;
  std::size_t column_;
};

/// A file could not be read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A black-box oracle failed while answering a query. Carries the offending
/// test sequence.
class OracleError : public std::runtime_error {
 public:
  OracleError(std::vector<std::string> word, const std::string& message);

  const std::vector<std::string>& word() const noexcept { return word_; }

 private:
  std::vector<std::string> word_;
};

}  // namespace pushin
