#include "fbc/budget.hpp"

#include <atomic>

namespace fbc {

namespace {
std::atomic<std::size_t> g_word_cap{1'000'000};
}

std::size_t word_length_cap() { return g_word_cap.load(); }
void set_word_length_cap(std::size_t cap) { g_word_cap.store(cap); }

}  // namespace fbc
