#include "f1m/kzengine.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <future>
#include <stdexcept>
#include <utility>

namespace f1m {
namespace {

enum : signed char { kOut = -1, kUndecided = 0, kIn = 1 };

std::vector<Mask> graded_order(int n) {
  std::vector<Mask> order;
  order.reserve(std::size_t{1} << n);
  for (Mask m = 0; m < (Mask{1} << n); ++m) order.push_back(m);
  std::stable_sort(order.begin(), order.end(), [](Mask a, Mask b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  return order;
}

struct Search {
  std::vector<Mask> order;
  std::vector<signed char> status;
  std::function<void(const std::vector<signed char>&)> leaf;

  // Returns (forced_in, forced_out) for subset c given all decided subsets.
  std::pair<bool, bool> forced(Mask c) const {
    bool in = false, out = false;
    for (Mask a = (c - 1) & c; a; a = (a - 1) & c) {
      signed char sa = status[a], sb = status[c ^ a];
      if (sa == kIn) {
        if (sb == kIn) in = true;
        else if (sb == kOut) out = true;
      } else if (sa == kOut && sb == kIn) {
        out = true;
      }
      if (in && out) break;
    }
    return {in, out};
  }

  void run(std::size_t idx) {
    if (idx == order.size()) {
      leaf(status);
      return;
    }
    Mask c = order[idx];
    auto [fin, fout] = forced(c);
    if (fin && fout) return;  // contradiction
    if (fin || fout) {
      status[c] = fin ? kIn : kOut;
      run(idx + 1);
    } else {
      status[c] = kIn;
      run(idx + 1);
      status[c] = kOut;
      run(idx + 1);
    }
    status[c] = kUndecided;
  }

  // Like run(), but stops after `splits` free branch points and records the
  // partial assignment as a task for a worker to finish.
  void split(std::size_t idx, int splits,
             std::vector<std::pair<std::vector<signed char>, std::size_t>>& tasks) {
    if (idx == order.size() || splits == 0) {
      tasks.emplace_back(status, idx);
      return;
    }
    Mask c = order[idx];
    auto [fin, fout] = forced(c);
    if (fin && fout) return;
    if (fin || fout) {
      status[c] = fin ? kIn : kOut;
      split(idx + 1, splits, tasks);
    } else {
      status[c] = kIn;
      split(idx + 1, splits - 1, tasks);
      status[c] = kOut;
      split(idx + 1, splits - 1, tasks);
    }
    status[c] = kUndecided;
  }
};

SetFamily family_of(int n, const std::vector<signed char>& status) {
  SetFamily f(n);
  for (Mask m = 0; m < (Mask{1} << n); ++m)
    if (status[m] == kIn) f.set(m);
  return f;
}

template <typename PerLeaf>
void search_parallel(int n, int threads, PerLeaf per_task_leaf_factory) {
  Search s;
  s.order = graded_order(n);
  s.status.assign(std::size_t{1} << n, kUndecided);
  s.status[0] = kIn;  // the empty set is always a member

  if (threads <= 1 || n < 3) {
    auto leaf = per_task_leaf_factory(0);
    s.leaf = leaf;
    s.run(1);
    return;
  }

  std::vector<std::pair<std::vector<signed char>, std::size_t>> tasks;
  s.split(1, 5, tasks);

  std::vector<std::future<void>> futs;
  std::size_t next = 0;
  for (std::size_t t = 0; t < tasks.size(); ++t) {
    futs.push_back(std::async(std::launch::async, [&, t] {
      Search w;
      w.order = graded_order(n);
      w.status = tasks[t].first;
      w.leaf = per_task_leaf_factory(t);
      w.run(tasks[t].second);
    }));
    if (futs.size() >= static_cast<std::size_t>(threads)) {
      futs[next++].wait();
    }
  }
  for (auto& f : futs) f.wait();
}

}  // namespace

void for_each_kz(int n, const std::function<void(const SetFamily&)>& emit) {
  if (n < 0 || n > kMaxAmbient) throw std::invalid_argument("for_each_kz: n out of range");
  Search s;
  s.order = graded_order(n);
  s.status.assign(std::size_t{1} << n, kUndecided);
  s.status[0] = kIn;
  s.leaf = [&](const std::vector<signed char>& st) { emit(family_of(n, st)); };
  s.run(1);
}

std::vector<SetFamily> enumerate_kz(int n, int threads) {
  if (n < 0 || n > kMaxAmbient) throw std::invalid_argument("enumerate_kz: n out of range");
  std::vector<std::vector<SetFamily>> buckets(1);
  if (threads <= 1 || n < 3) {
    search_parallel(n, 1, [&](std::size_t) {
      return [&, n](const std::vector<signed char>& st) {
        buckets[0].push_back(family_of(n, st));
      };
    });
  } else {
    buckets.assign(4096, {});
    search_parallel(n, threads, [&, n](std::size_t task) {
      auto* bucket = &buckets.at(task);
      return [bucket, n](const std::vector<signed char>& st) {
        bucket->push_back(family_of(n, st));
      };
    });
  }
  std::vector<SetFamily> out;
  for (auto& b : buckets) out.insert(out.end(), b.begin(), b.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t count_kz(int n, int threads) {
  if (n < 0 || n > kMaxAmbient) throw std::invalid_argument("count_kz: n out of range");
  std::vector<std::uint64_t> counts(threads <= 1 || n < 3 ? 1 : 4096, 0);
  search_parallel(n, threads, [&](std::size_t task) {
    auto* c = &counts.at(task);
    return [c](const std::vector<signed char>&) { ++*c; };
  });
  std::uint64_t total = 0;
  for (auto c : counts) total += c;
  return total;
}

}  // namespace f1m
