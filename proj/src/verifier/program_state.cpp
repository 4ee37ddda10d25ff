#include "bp/verifier/program_state.hpp"

#include <algorithm>

#include "bp/core/hash.hpp"

namespace bp {

ProgramState::Entry::Entry(std::string bthread, std::size_t def_index,
                           int priority, Value state, SyncStatement statement)
    : bthread_(std::move(bthread)),
      def_index_(def_index),
      priority_(priority),
      state_(std::move(state)),
      statement_(std::move(statement)) {
  CanonicalHasher h;
  h.tag('T');
  h.text(bthread_);
  h.u64(state_.hash());
  h.u64(statement_.hash());
  hash_ = h.digest();
}

ProgramState::ProgramState(std::vector<EntryPtr> live_entries)
    : entries_(std::move(live_entries)) {
  finalize();
}

void ProgramState::finalize() {
  std::sort(entries_.begin(), entries_.end(),
            [](const EntryPtr& a, const EntryPtr& b) {
              return a->bthread() < b->bthread();
            });
  CanonicalHasher h;
  h.tag('P');
  h.u64(entries_.size());
  for (const auto& entry : entries_) h.u64(entry->hash());
  hash_ = h.digest();
}

bool ProgramState::hot() const {
  return std::any_of(entries_.begin(), entries_.end(), [](const EntryPtr& e) {
    return e->statement().hot;
  });
}

bool ProgramState::any_requests() const {
  return std::any_of(entries_.begin(), entries_.end(), [](const EntryPtr& e) {
    return !e->statement().request.empty();
  });
}

SyncSnapshot ProgramState::snapshot() const {
  std::vector<EntryPtr> ordered = entries_;
  std::sort(ordered.begin(), ordered.end(),
            [](const EntryPtr& a, const EntryPtr& b) {
              return a->def_index() < b->def_index();
            });
  SyncSnapshot snap;
  snap.entries.reserve(ordered.size());
  for (const auto& entry : ordered) {
    snap.entries.push_back(
        {entry->bthread(), entry->priority(), entry->statement()});
  }
  return snap;
}

bool operator==(const ProgramState& a, const ProgramState& b) {
  if (a.hash_ != b.hash_) return false;
  if (a.entries_.size() != b.entries_.size()) return false;
  for (std::size_t i = 0; i < a.entries_.size(); ++i) {
    if (a.entries_[i] == b.entries_[i]) continue;  // shared entry fast path
    if (!(*a.entries_[i] == *b.entries_[i])) return false;
  }
  return true;
}

}  // namespace bp
