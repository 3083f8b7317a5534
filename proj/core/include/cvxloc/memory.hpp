#pragma once

// Allocator for lookup tables. Blocks are aligned to a 64-byte cache line;
// blocks of at least 2 MiB are aligned to 2 MiB and, on Linux, advised for
// transparent huge pages.

#include <cstddef>
#include <new>
#include <vector>

namespace cvxloc {

void* table_allocate(std::size_t bytes);
void table_deallocate(void* p, std::size_t bytes) noexcept;

template <class T>
struct TableAllocator {
  using value_type = T;

  TableAllocator() = default;
  template <class U>
  TableAllocator(const TableAllocator<U>&) noexcept {}

  T* allocate(std::size_t n) { return static_cast<T*>(table_allocate(n * sizeof(T))); }
  void deallocate(T* p, std::size_t n) noexcept { table_deallocate(p, n * sizeof(T)); }

  template <class U>
  bool operator==(const TableAllocator<U>&) const noexcept {
    return true;
  }
};

template <class T>
using TableVector = std::vector<T, TableAllocator<T>>;

}  // namespace cvxloc
