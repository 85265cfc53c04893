#pragma once

#include "equimorse/character.hpp"
#include "equimorse/types.hpp"

#include <doctest.h>

#include <filesystem>
#include <functional>
#include <string>

namespace equimorse::test {

inline std::string error_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.what();
  }
  return "<no error>";
}

inline bool contains(const std::string& text, const std::string& needle) {
  return text.find(needle) != std::string::npos;
}

inline std::filesystem::path fixture(const std::string& name) {
  return std::filesystem::path(EQUIMORSE_FIXTURE_DIR) / name;
}

inline WindowedCharacter ch(const std::string& text, const Window& w) {
  return WindowedCharacter::parse(text, w);
}

}  // namespace equimorse::test

#define CHECK_ERROR(expr, needle) \
  CHECK_MESSAGE(::equimorse::test::contains(::equimorse::test::error_of([&] { (void)(expr); }), needle), \
                ::equimorse::test::error_of([&] { (void)(expr); }))
