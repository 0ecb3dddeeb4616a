#pragma once

#include <stdexcept>
#include <string>

namespace keycomb {

struct InvalidComposition : std::runtime_error {
    explicit InvalidComposition(const std::string& what) : std::runtime_error(what) {}
};

struct NotMember : std::runtime_error {
    explicit NotMember(const std::string& what) : std::runtime_error(what) {}
};

struct CapExceeded : std::runtime_error {
    std::size_t size;
    CapExceeded(const std::string& what, std::size_t size_) : std::runtime_error(what), size(size_) {}
};

struct OverflowError : std::runtime_error {
    explicit OverflowError(const std::string& what) : std::runtime_error(what) {}
};

struct NotGenericDiagram : std::runtime_error {
    explicit NotGenericDiagram(const std::string& what) : std::runtime_error(what) {}
};

struct UnsupportedCase : std::runtime_error {
    explicit UnsupportedCase(const std::string& what) : std::runtime_error(what) {}
};

} // namespace keycomb
