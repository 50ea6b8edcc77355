#include <unistd.h>

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <cstdio>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "ffm/errors.hpp"
#include "ffm/moments.hpp"

namespace ffm {

namespace {

using json = nlohmann::ordered_json;
namespace fs = std::filesystem;

struct Checkpoint {
  std::uint64_t next_chunk = 0;
  std::uint64_t dump_offset = 0;
  MomentAccumulator acc;
};

// Write-then-rename so a reader sees either the old or the new file.
void write_atomically(const fs::path& path, const std::string& text) {
  const fs::path tmp = path.string() + ".tmp";
  std::FILE* f = std::fopen(tmp.c_str(), "wb");
  if (!f) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
  const bool ok = std::fwrite(text.data(), 1, text.size(), f) == text.size() && std::fflush(f) == 0 &&
                  ::fsync(::fileno(f)) == 0;
  if (std::fclose(f) != 0 || !ok) throw std::runtime_error("failed writing " + tmp.string());
  fs::rename(tmp, path);
}

std::string checkpoint_text(std::uint32_t q, int g, std::uint64_t total_chunks, const Checkpoint& c) {
  json j;
  j["q"] = q;
  j["g"] = g;
  j["chunk_size"] = kChunkSize;
  j["next_chunk_index"] = c.next_chunk;
  j["total_chunks"] = total_chunks;
  j["dump_offset"] = c.dump_offset;
  j["accumulator"] = json::parse(accumulator_to_json(c.acc));
  return j.dump(2) + "\n";
}

Checkpoint read_checkpoint(const fs::path& path, std::uint32_t q, int g, int max_moment, std::uint64_t total_chunks) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read checkpoint " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  json j;
  try {
    j = json::parse(ss.str());
  } catch (const json::exception& e) {
    throw UsageError("checkpoint " + path.string() + " is not valid JSON: " + e.what());
  }
  auto refuse = [&](const std::string& what) {
    throw UsageError("refusing to resume from " + path.string() + ": " + what);
  };
  try {
    if (j.at("q").get<std::uint32_t>() != q) refuse("it was written for q = " + j.at("q").dump());
    if (j.at("g").get<int>() != g) refuse("it was written for g = " + j.at("g").dump());
    if (j.at("chunk_size").get<std::uint64_t>() != kChunkSize) refuse("chunk size " + j.at("chunk_size").dump());
    if (j.at("total_chunks").get<std::uint64_t>() != total_chunks) refuse("total chunk count differs");
    Checkpoint c;
    c.next_chunk = j.at("next_chunk_index").get<std::uint64_t>();
    c.dump_offset = j.at("dump_offset").get<std::uint64_t>();
    c.acc = accumulator_from_json(j.at("accumulator").dump());
    if (c.acc.q != q || c.acc.g != g) refuse("accumulator parameters differ");
    if (c.acc.max_moment != max_moment) refuse("it accumulates moments up to k = " + std::to_string(c.acc.max_moment));
    if (c.next_chunk > total_chunks) refuse("next chunk index beyond the end");
    return c;
  } catch (const json::exception& e) {
    throw UsageError("checkpoint " + path.string() + " is malformed: " + e.what());
  }
}

struct ChunkResult {
  MomentAccumulator acc;
  std::string dump;
};

}  // namespace

SweepReport sweep(FieldSpec field, int g, const SweepOptions& opt) {
  if (g < 0) throw UsageError("genus must be non-negative");
  if (opt.workers < 1) throw UsageError("need at least one worker");
  const auto t0 = std::chrono::steady_clock::now();
  const std::uint32_t q = field.q();
  const int degree = 2 * g + 1;
  const std::uint64_t total = monic_count(field, degree);
  const std::uint64_t total_chunks = (total + kChunkSize - 1) / kChunkSize;
  const HalfSumEvaluator evaluator(field, g);

  Checkpoint state{0, 0, MomentAccumulator(q, g, opt.max_moment)};
  const bool resuming = opt.checkpoint && fs::exists(*opt.checkpoint);
  if (resuming) state = read_checkpoint(*opt.checkpoint, q, g, opt.max_moment, total_chunks);

  std::ofstream dump;
  if (opt.dump) {
    if (resuming && state.next_chunk > 0) {
      if (state.dump_offset == 0) throw UsageError("checkpoint was written without a per-prime dump");
      if (!fs::exists(*opt.dump) || fs::file_size(*opt.dump) < state.dump_offset) {
        throw UsageError("per-prime dump " + opt.dump->string() + " is shorter than the checkpoint records");
      }
      // Drop records of chunks that were written but never committed.
      fs::resize_file(*opt.dump, state.dump_offset);
      dump.open(*opt.dump, std::ios::binary | std::ios::app);
    } else {
      dump.open(*opt.dump, std::ios::binary | std::ios::trunc);
      const std::string header = "poly,X,Y,central_value_float\n";
      dump << header;
      state.dump_offset = header.size();
    }
    dump.flush();
    if (!dump) throw std::runtime_error("cannot write per-prime dump " + opt.dump->string());
  }
  if (opt.checkpoint) write_atomically(*opt.checkpoint, checkpoint_text(q, g, total_chunks, state));

  auto process = [&](std::uint64_t chunk) {
    ChunkResult res{MomentAccumulator(q, g, opt.max_moment), {}};
    const std::uint64_t lo = chunk * kChunkSize;
    const std::uint64_t hi = std::min(total, lo + kChunkSize);
    char buf[64];
    for (std::uint64_t i = lo; i < hi; ++i) {
      const Poly P = monic_from_index(field, degree, i);
      if (!irreducible_unchecked(P)) continue;
      const auto r = evaluator.evaluate(P);
      res.acc.add(r);
      if (opt.dump) {
        std::snprintf(buf, sizeof buf, "%.15g", r.value.approx());
        res.dump += '"' + to_string(P) + "\"," + to_decimal(r.value.x) + ',' + to_decimal(r.value.y) + ',' + buf + '\n';
      }
    }
    return res;
  };

  std::mutex mu;
  std::condition_variable cv;
  std::map<std::uint64_t, ChunkResult> pending;
  std::atomic<std::uint64_t> claim{state.next_chunk};
  std::uint64_t committed_here = 0;
  bool stop = false;
  std::exception_ptr failure;
  const std::uint64_t window = 2 * static_cast<std::uint64_t>(opt.workers) + 2;

  auto commit_ready = [&]() {
    // Called with mu held.
    while (!stop) {
      auto it = pending.find(state.next_chunk);
      if (it == pending.end()) break;
      state.acc.merge(it->second.acc);
      if (opt.dump && !it->second.dump.empty()) {
        dump << it->second.dump;
        dump.flush();
        if (!dump) throw std::runtime_error("failed writing per-prime dump " + opt.dump->string());
        state.dump_offset += it->second.dump.size();
      }
      pending.erase(it);
      ++state.next_chunk;
      if (opt.checkpoint) write_atomically(*opt.checkpoint, checkpoint_text(q, g, total_chunks, state));
      ++committed_here;
      if (opt.progress) opt.progress(state.next_chunk, total_chunks);
      if (opt.halt_after_chunks && committed_here >= *opt.halt_after_chunks) stop = true;
    }
  };

  auto worker = [&]() {
    try {
      while (true) {
        const std::uint64_t chunk = claim.fetch_add(1);
        if (chunk >= total_chunks) return;
        {
          std::unique_lock lk(mu);
          cv.wait(lk, [&] { return stop || chunk < state.next_chunk + window; });
          if (stop) return;
        }
        ChunkResult res = process(chunk);
        std::lock_guard lk(mu);
        if (stop) return;
        pending.emplace(chunk, std::move(res));
        commit_ready();
        cv.notify_all();
      }
    } catch (...) {
      std::lock_guard lk(mu);
      if (!failure) failure = std::current_exception();
      stop = true;
      cv.notify_all();
    }
  };

  const bool halt_now = opt.halt_after_chunks && *opt.halt_after_chunks == 0;
  if (!halt_now && state.next_chunk < total_chunks) {
    std::vector<std::thread> threads;
    for (unsigned i = 1; i < opt.workers; ++i) threads.emplace_back(worker);
    worker();
    for (auto& t : threads) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  if (state.next_chunk < total_chunks) throw SweepHalted(state.next_chunk);

  SweepReport report = make_report(state.acc, total);
  report.workers = opt.workers;
  report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

}  // namespace ffm
