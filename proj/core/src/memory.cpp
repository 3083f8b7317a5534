#include "cvxloc/memory.hpp"

#include <cstdlib>

#if defined(__linux__)
#include <sys/mman.h>
#endif

namespace cvxloc {

namespace {

constexpr std::size_t kHugePage = std::size_t{2} << 20;
constexpr std::align_val_t kLine{64};

}  // namespace

void* table_allocate(std::size_t bytes) {
  if (bytes < kHugePage) return ::operator new(bytes, kLine);
  const std::size_t rounded = (bytes + kHugePage - 1) / kHugePage * kHugePage;
  void* p = std::aligned_alloc(kHugePage, rounded);
  if (!p) throw std::bad_alloc();
#if defined(__linux__) && defined(MADV_HUGEPAGE)
  ::madvise(p, rounded, MADV_HUGEPAGE);
#endif
  return p;
}

void table_deallocate(void* p, std::size_t bytes) noexcept {
  if (bytes < kHugePage) {
    ::operator delete(p, kLine);
  } else {
    std::free(p);
  }
}

}  // namespace cvxloc
