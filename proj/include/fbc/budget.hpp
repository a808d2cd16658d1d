#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fbc {

/// Raised when an operation would produce intermediate words longer than the
/// configured cap, or when a bounded search exhausts its state budget.
class BudgetExceeded : public std::length_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::length_error(what) {}
};

/// Global cap on the length of any intermediate word, in letters.
std::size_t word_length_cap();
void set_word_length_cap(std::size_t cap);

inline void check_word_budget(std::size_t len) {
  if (len > word_length_cap())
    throw BudgetExceeded("word length " + std::to_string(len) +
                         " exceeds cap " + std::to_string(word_length_cap()));
}

}  // namespace fbc
