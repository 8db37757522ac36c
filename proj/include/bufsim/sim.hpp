#pragma once

#include <cstdint>
#include <functional>
#include <queue>
#include <stdexcept>
#include <unordered_set>
#include <utility>
#include <vector>

#include "bufsim/time.hpp"

namespace bufsim {

// Deterministic discrete-event kernel. Events with equal fire time execute
// in schedule order (fire_at, sequence) so simultaneous enqueue/dequeue
// activity resolves the same way on every run.
class EventQueue {
public:
    struct Handle {
        uint64_t seq = 0;
    };

    struct RunStats {
        uint64_t executed = 0;
    };

    SimTime now() const { return now_; }

    Handle schedule(SimTime fire_at, std::function<void()> action) {
        if (fire_at < now_)
            throw std::logic_error("EventQueue::schedule: event scheduled in the past");
        uint64_t seq = next_seq_++;
        heap_.push(Entry{fire_at, seq, std::move(action)});
        return Handle{seq};
    }

    Handle schedule_in(SimTime delay, std::function<void()> action) {
        return schedule(now_ + delay, std::move(action));
    }

    void cancel(Handle h) { cancelled_.insert(h.seq); }

    // Executes every event with fire_at <= t, then advances the clock to t.
    RunStats run_until(SimTime t) {
        if (t < now_) throw std::logic_error("EventQueue::run_until: target before current clock");
        RunStats stats;
        while (!heap_.empty() && heap_.top().fire_at <= t) {
            Entry e = std::move(const_cast<Entry&>(heap_.top()));
            heap_.pop();
            if (!cancelled_.empty()) {
                auto it = cancelled_.find(e.seq);
                if (it != cancelled_.end()) {
                    cancelled_.erase(it);
                    continue;
                }
            }
            now_ = e.fire_at;
            if (trace_) trace_->emplace_back(e.fire_at, e.seq);
            e.action();
            ++stats.executed;
            total_executed_++;
        }
        now_ = t;
        return stats;
    }

    // Runs until the pending set is exhausted (tests and drain phases).
    RunStats run_all() {
        RunStats stats;
        while (!heap_.empty()) {
            SimTime t = heap_.top().fire_at;
            auto s = run_until(t);
            stats.executed += s.executed;
        }
        return stats;
    }

    bool empty() const { return heap_.size() <= cancelled_.size(); }
    uint64_t total_executed() const { return total_executed_; }

    // Optional execution trace (fire_at, sequence) used by determinism checks.
    void set_trace(std::vector<std::pair<SimTime, uint64_t>>* sink) { trace_ = sink; }

private:
    struct Entry {
        SimTime fire_at;
        uint64_t seq;
        std::function<void()> action;
    };
    struct Later {
        bool operator()(const Entry& a, const Entry& b) const {
            if (a.fire_at != b.fire_at) return a.fire_at > b.fire_at;
            return a.seq > b.seq;
        }
    };

    SimTime now_ = 0;
    uint64_t next_seq_ = 0;
    uint64_t total_executed_ = 0;
    std::priority_queue<Entry, std::vector<Entry>, Later> heap_;
    std::unordered_set<uint64_t> cancelled_;
    std::vector<std::pair<SimTime, uint64_t>>* trace_ = nullptr;
};

}  // namespace bufsim
