#pragma once

#include <stdexcept>
#include <string>

namespace braidkex {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Word grammar violations and out-of-range generator indices.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

// Precondition violations on braid arithmetic (strand-count mismatch, bad n, ...).
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(what) {}
};

// Malformed bytes: bad magic, truncation, non-bijective factor tables, ...
class WireError : public Error {
public:
    explicit WireError(const std::string& what) : Error(what) {}
};

// Handshake state machine misuse: wrong phase, wrong message kind.
class ProtocolError : public Error {
public:
    explicit ProtocolError(const std::string& what) : Error(what) {}
};

}  // namespace braidkex
