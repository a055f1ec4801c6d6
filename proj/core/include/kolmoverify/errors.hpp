// Copyright 2026 The kolmoverify Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef KOLMOVERIFY_ERRORS_HPP_
#define KOLMOVERIFY_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace kolmoverify {

// Base class for every error raised by the library. Callers that only care
// about "something in kolmoverify failed" can catch this.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define KOLMOVERIFY_DEFINE_ERROR(Name)        \
  class Name : public Error {                 \
   public:                                    \
    using Error::Error;                       \
  }

KOLMOVERIFY_DEFINE_ERROR(BudgetTooLarge);
KOLMOVERIFY_DEFINE_ERROR(ExpansionTooLarge);
KOLMOVERIFY_DEFINE_ERROR(ZeroMassEvent);
KOLMOVERIFY_DEFINE_ERROR(TooManyQubits);
KOLMOVERIFY_DEFINE_ERROR(SeedTooLarge);
KOLMOVERIFY_DEFINE_ERROR(OracleMismatch);
KOLMOVERIFY_DEFINE_ERROR(WrongArity);
KOLMOVERIFY_DEFINE_ERROR(UnsupportedSpec);
KOLMOVERIFY_DEFINE_ERROR(ParseError);

#undef KOLMOVERIFY_DEFINE_ERROR

}  // namespace kolmoverify

#endif  // KOLMOVERIFY_ERRORS_HPP_
