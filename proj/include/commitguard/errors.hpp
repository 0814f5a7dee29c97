#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace commitguard {

// Base class for everything thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// --- scheduler-bug class: API misuse, never a workload problem ---

class IllegalTransition : public Error {
public:
    IllegalTransition(const std::string& from, const std::string& to)
        : Error("illegal lifecycle transition " + from + " -> " + to) {}
};

class WrongAccount : public Error {
public:
    explicit WrongAccount(const std::string& detail)
        : Error("commitment admitted to the wrong account: " + detail) {}
};

class AlreadyAdmitted : public Error {
public:
    explicit AlreadyAdmitted(std::uint64_t cid)
        : Error("commitment " + std::to_string(cid) + " was already admitted"), cid(cid) {}
    std::uint64_t cid;
};

class NotActive : public Error {
public:
    explicit NotActive(std::uint64_t cid)
        : Error("commitment " + std::to_string(cid) + " is not active"), cid(cid) {}
    std::uint64_t cid;
};

class EmptyQueue : public Error {
public:
    EmptyQueue() : Error("select_next called with an empty waiting queue") {}
};

// --- workload / configuration problems ---

class TemplateMismatch : public Error {
public:
    explicit TemplateMismatch(const std::string& detail)
        : Error("commitment content does not match its responsibility template: " + detail) {}
};

class UnregisteredDebtor : public Error {
public:
    UnregisteredDebtor(const std::string& service, const std::string& network)
        : Error("service '" + service + "' is not registered in network '" + network + "'"),
          service(service), network(network) {}
    std::string service;
    std::string network;
};

class UnsortedEvents : public Error {
public:
    explicit UnsortedEvents(std::size_t index)
        : Error("event " + std::to_string(index) + " is earlier than its predecessor"),
          index(index) {}
    std::size_t index;
};

class InvalidEvent : public Error {
public:
    InvalidEvent(std::size_t index, const std::string& reason)
        : Error("event " + std::to_string(index) + ": " + reason), index(index) {}
    std::size_t index;
};

class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& reason) : Error("invalid config: " + reason) {}
};

class WatchdogExpired : public Error {
public:
    WatchdogExpired(std::uint64_t cid, std::int64_t waited, std::int64_t max_wait)
        : Error("commitment " + std::to_string(cid) + " waited " + std::to_string(waited) +
                " ticks (max " + std::to_string(max_wait) + ")"),
          cid(cid), waited(waited), max_wait(max_wait) {}
    std::uint64_t cid;
    std::int64_t waited;
    std::int64_t max_wait;
};

// --- parsing / io ---

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& reason)
        : Error("line " + std::to_string(line) + ": " + reason), line(line) {}
    std::size_t line;
};

class UnknownAction : public ParseError {
public:
    UnknownAction(std::size_t line, const std::string& what)
        : ParseError(line, "unknown action '" + what + "'") {}
};

class MalformedLog : public Error {
public:
    explicit MalformedLog(const std::string& reason) : Error("malformed log: " + reason) {}
};

class IoError : public Error {
public:
    IoError(const std::string& path, const std::string& reason)
        : Error(path + ": " + reason) {}
};

}  // namespace commitguard
