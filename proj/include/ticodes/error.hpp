// Copyright 2026 The ticodes Authors
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

#ifndef TICODES_ERROR_HPP
#define TICODES_ERROR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ticodes {

/// Base class of every domain error raised by the library.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string &what) : std::runtime_error(what) {
    }
};

class ContextMismatch : public Error {
  public:
    using Error::Error;
};

class OverflowError : public Error {
  public:
    using Error::Error;
};

class DimensionMismatch : public Error {
  public:
    using Error::Error;
};

class InfiniteQuotientError : public Error {
  public:
    using Error::Error;
};

class CapExceeded : public Error {
  public:
    using Error::Error;
};

/// Parse failure with a 1-based source position (line 0 means "single-line input").
class ParseError : public Error {
  public:
    ParseError(const std::string &message, size_t line, size_t column)
        : Error(format(message, line, column)), message_(message), line_(line), column_(column) {
    }

    const std::string &message() const {
        return message_;
    }
    size_t line() const {
        return line_;
    }
    size_t column() const {
        return column_;
    }

  private:
    static std::string format(const std::string &message, size_t line, size_t column) {
        if (line == 0) {
            return "column " + std::to_string(column) + ": " + message;
        }
        return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message;
    }

    std::string message_;
    size_t line_;
    size_t column_;
};

namespace detail {

inline int64_t checked_add(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_add_overflow(a, b, &r)) {
        throw OverflowError("integer overflow in addition");
    }
    return r;
}

inline int64_t checked_sub(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) {
        throw OverflowError("integer overflow in subtraction");
    }
    return r;
}

inline int64_t checked_mul(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw OverflowError("integer overflow in multiplication");
    }
    return r;
}

inline int64_t checked_neg(int64_t a) {
    return checked_sub(0, a);
}

/// Non-negative residue of a modulo m (m > 0).
inline int64_t mod_floor(int64_t a, int64_t m) {
    int64_t r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace detail

}  // namespace ticodes

#endif
