/*
   Copyright 2026 The hecke-fusion Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <stdexcept>
#include <string>

namespace hecke {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
  public:
    DivisionByZero() : Error("division by zero") {}
};

/// A generic-mode divisor whose numerator is not a product of linear forms
/// (d + q_s - q_t). Signals a programming error, not a mathematical one.
class NonAdmissibleDivisor : public Error {
  public:
    explicit NonAdmissibleDivisor(const std::string& what) : Error("non-admissible divisor: " + what) {}
};

class PoleAtEvaluationPoint : public Error {
  public:
    explicit PoleAtEvaluationPoint(const std::string& where) : Error("pole at evaluation point " + where) {}
};

class SeparationViolated : public Error {
  public:
    explicit SeparationViolated(const std::string& what) : Error("separation condition violated: " + what) {}
};

class ZeroDenominator : public Error {
  public:
    explicit ZeroDenominator(const std::string& what) : Error("zero denominator: " + what) {}
};

class NodeOutsideDiagram : public Error {
  public:
    explicit NodeOutsideDiagram(const std::string& what) : Error("node outside diagram: " + what) {}
};

class EntryOutOfRange : public Error {
  public:
    explicit EntryOutOfRange(const std::string& what) : Error("entry out of range: " + what) {}
};

class NotRemovable : public Error {
  public:
    explicit NotRemovable(const std::string& what) : Error("node is not removable: " + what) {}
};

class SpectralCollision : public Error {
  public:
    SpectralCollision() : Error("spectral parameters coincide") {}
};

/// An identity the construction relies on failed at runtime.
class InvariantBreach : public Error {
  public:
    explicit InvariantBreach(const std::string& what) : Error("invariant breach: " + what) {}
};

class ParseError : public Error {
  public:
    explicit ParseError(const std::string& what) : Error("parse error: " + what) {}
};

}  // namespace hecke
