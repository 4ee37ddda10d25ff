#include "bp/core/sync.hpp"

#include "bp/core/hash.hpp"

namespace bp {

std::uint64_t SyncStatement::hash() const {
  CanonicalHasher h;
  h.tag('Y');
  h.u64(request.size());
  for (const auto& e : request) h.u64(e.hash());
  h.u64(wait_for.hash());
  h.u64(block.hash());
  h.byte(hot ? 1 : 0);
  if (hint) {
    h.tag('+');
    h.u64(hint->hash());
  } else {
    h.tag('-');
  }
  return h.digest();
}

}  // namespace bp
