#include "adabet/sampling_pool.hpp"

#include <stdexcept>

namespace adabet {

SamplingPool::SamplingPool(const Graph& graph, std::uint64_t seed, Stream stream, unsigned workers)
    : start_(static_cast<std::ptrdiff_t>(workers) + 1), done_(static_cast<std::ptrdiff_t>(workers) + 1) {
  if (workers == 0) throw std::invalid_argument("worker count must be at least 1");
  if (graph.num_nodes() < 2) throw std::invalid_argument("sampling needs at least two nodes");
  slots_.reserve(workers);
  for (unsigned i = 0; i < workers; ++i) {
    slots_.push_back(std::make_unique<Slot>(graph, make_rng(seed, stream, i)));
  }
  if (workers > 1) {
    threads_.reserve(workers);
    for (unsigned i = 0; i < workers; ++i) {
      threads_.emplace_back([this, i] { worker_loop(i); });
    }
  }
}

SamplingPool::~SamplingPool() {
  if (!threads_.empty()) {
    stopping_.store(true, std::memory_order_release);
    start_.arrive_and_wait();
    threads_.clear();  // joins before the barriers go away
  }
}

void SamplingPool::run_slot(Slot& slot) {
  try {
    for (std::uint64_t i = 0; i < slot.quota; ++i) {
      slot.sampler.sample(slot.rng, slot.sample);
      slot.edges += slot.sample.edges_visited;
      if (slot.sample.connected) ++slot.connected;
      slot.touched.insert(slot.touched.end(), slot.sample.internal_nodes.begin(),
                          slot.sample.internal_nodes.end());
    }
  } catch (...) {
    slot.error = std::current_exception();
  }
}

void SamplingPool::worker_loop(std::size_t index) {
  for (;;) {
    start_.arrive_and_wait();
    if (stopping_.load(std::memory_order_acquire)) return;
    run_slot(*slots_[index]);
    done_.arrive_and_wait();
  }
}

void SamplingPool::draw(std::uint64_t count, std::span<std::uint64_t> tallies) {
  const std::uint64_t w = slots_.size();
  for (std::uint64_t i = 0; i < w; ++i) {
    slots_[i]->quota = count / w + (i < count % w ? 1 : 0);
  }
  if (threads_.empty()) {
    run_slot(*slots_.front());
  } else {
    start_.arrive_and_wait();
    done_.arrive_and_wait();
  }

  for (auto& slot : slots_) {
    if (slot->error) {
      auto error = slot->error;
      slot->error = nullptr;
      std::rethrow_exception(error);
    }
    for (const NodeId v : slot->touched) ++tallies[v];
    internal_total_ += slot->touched.size();
    edges_visited_ += slot->edges;
    connected_ += slot->connected;
    slot->touched.clear();
    slot->edges = 0;
    slot->connected = 0;
  }
  samples_drawn_ += count;
}

}  // namespace adabet
