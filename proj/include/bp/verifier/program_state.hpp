#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "bp/core/bthread.hpp"
#include "bp/strategy/strategy.hpp"

namespace bp {

/// The canonical snapshot of a whole b-program at a synchronization point:
/// every live b-thread's state value and pending statement, sorted by
/// b-thread name. Finished b-threads are dropped — two configurations that
/// differ only in which b-threads once existed are the same state.
///
/// Equal program configurations yield deeply-equal ProgramStates and equal
/// canonical hashes. States are immutable values, safe to share and to send
/// between threads; successor states share unchanged entries.
class ProgramState {
 public:
  class Entry {
   public:
    Entry(std::string bthread, std::size_t def_index, int priority,
          Value state, SyncStatement statement);

    const std::string& bthread() const { return bthread_; }
    std::size_t def_index() const { return def_index_; }
    int priority() const { return priority_; }
    const Value& state() const { return state_; }
    const SyncStatement& statement() const { return statement_; }

    std::uint64_t hash() const { return hash_; }

    friend bool operator==(const Entry& a, const Entry& b) {
      return a.hash_ == b.hash_ && a.bthread_ == b.bthread_ &&
             a.state_ == b.state_ && a.statement_ == b.statement_;
    }

   private:
    std::string bthread_;
    std::size_t def_index_;  // into the owning program's registration order
    int priority_;           // def metadata, implied by the name
    Value state_;
    SyncStatement statement_;
    std::uint64_t hash_;  // computed once; entries are immutable
  };

  using EntryPtr = std::shared_ptr<const Entry>;

  ProgramState() { finalize(); }
  explicit ProgramState(std::vector<EntryPtr> live_entries);

  const std::vector<EntryPtr>& entries() const { return entries_; }
  std::uint64_t hash() const { return hash_; }

  /// A program state is hot iff at least one live statement is hot.
  bool hot() const;

  bool any_requests() const;

  /// Live entries as a strategy snapshot, in b-program registration order.
  SyncSnapshot snapshot() const;

  friend bool operator==(const ProgramState& a, const ProgramState& b);
  friend bool operator!=(const ProgramState& a, const ProgramState& b) {
    return !(a == b);
  }

 private:
  void finalize();

  std::vector<EntryPtr> entries_;  // sorted by b-thread name
  std::uint64_t hash_ = 0;
};

}  // namespace bp
