#pragma once

#include <array>
#include <optional>
#include <queue>
#include <string>
#include <unordered_map>
#include <vector>

#include "channel.hpp"
#include "mac.hpp"
#include "metrics.hpp"
#include "minstrel.hpp"
#include "mobility.hpp"
#include "params.hpp"
#include "phy.hpp"
#include "rng.hpp"
#include "traffic.hpp"
#include "units.hpp"

namespace wifisim {

enum class EventKind : std::uint8_t {
  PacketReady,
  TxStart,
  TxEnd,
  RxBegin,
  RxResolve,
  AckTimeout,
  BackoffExpire,
  StatsUpdate,
  Checkpoint,
};

struct Event {
  SimTime time = 0;
  std::uint64_t seq = 0;  // insertion order, ties pop FIFO
  EventKind kind = EventKind::Checkpoint;
  std::uint8_t node = 0;
  std::uint32_t frame_id = 0;
  std::uint64_t gen = 0;  // staleness guard for cancellable events
};

/// Deterministic event queue: pops in (time, insertion sequence) order and
/// refuses to schedule into the past.
class EventQueue {
 public:
  void schedule(SimTime t, EventKind kind, std::uint8_t node = 0, std::uint32_t frame_id = 0,
                std::uint64_t gen = 0);
  std::optional<Event> pop();
  bool empty() const { return heap_.empty(); }
  SimTime now() const { return now_; }

 private:
  struct Later {
    bool operator()(const Event& a, const Event& b) const {
      if (a.time != b.time) return a.time > b.time;
      return a.seq > b.seq;
    }
  };
  std::priority_queue<Event, std::vector<Event>, Later> heap_;
  std::uint64_t next_seq_ = 0;
  SimTime now_ = 0;
};

constexpr std::uint8_t kApId = 0;
constexpr std::uint8_t kSutId = 1;
constexpr std::uint8_t kIntId = 2;
constexpr std::uint32_t kNoFrame = 0xffffffff;

struct RawRow {
  std::uint32_t seq = 0;
  SimTime gen_time = 0;
  int bin = -1;
  char outcome = '?';  // 'a' acked, 'd' dropped, 'f' in flight
  SimTime latency = -1;
  int attempts = 0;
};

struct NodeTotals {
  std::uint64_t generated = 0;  // application generations in [0, t_end)
  std::uint64_t pulled = 0;
  std::uint64_t acked = 0;
  std::uint64_t dropped = 0;
};

/// One discrete-event simulation instance: an AP, the station under test and
/// optionally an interferer, sharing a single medium. Strictly
/// single-threaded; parallelism happens across instances only.
class Simulation {
 public:
  Simulation(const Params& params, Configuration config, Trajectory sut_trajectory, SimTime t_end,
             std::uint64_t instance_seed, std::string trace_label = {});

  void run();
  /// Processes events up to and including time t (test hook).
  void run_until(SimTime t);

  int node_count() const { return n_nodes_; }
  SimTime now() const { return queue_.now(); }
  SimTime end_time() const { return t_end_; }

  /// True when any on-air energy at the node meets the carrier-sense
  /// threshold (includes the node's own transmissions).
  bool carrier_sense_busy(int node) const;

  const BinTable& bins() const { return bins_; }
  const std::vector<RawRow>& raw_log() const { return raw_; }
  const std::string& minstrel_trace() const { return trace_; }
  NodeTotals totals(int node) const;
  const Minstrel& minstrel(int node) const;
  Point node_position(int node) const;

  /// Test hook: start a transmission from a node outside the MAC state
  /// machine (carrier-sense and interference behave as for real traffic).
  std::uint32_t test_start_transmission(int src, int dst, FrameKind kind, int psdu_bytes,
                                        int mcs_index);

 private:
  enum class Phase : std::uint8_t { Idle, Contend, Transmitting, WaitAck };

  struct PacketInfo {
    std::uint32_t seq = 0;
    SimTime gen_time = 0;
    SimTime init_time = -1;
    int bin = -1;
  };

  struct Node {
    std::uint8_t id = 0;
    bool is_ap = false;
    bool has_source = false;
    Trajectory traj;
    int psdu_bytes = 0;

    // medium view
    int busy_count = 0;
    SimTime idle_since = 0;
    bool transmitting = false;
    std::vector<std::pair<std::uint32_t, double>> active_rx;  // frame id -> rx power mW
    std::uint32_t lock_frame = kNoFrame;
    double lock_worst_mw = 0.0;

    // DCF
    Phase phase = Phase::Idle;
    int cw = 15;
    int attempts_used = 0;
    int backoff_remaining = 0;
    SimTime backoff_anchor = 0;
    bool backoff_pending = false;
    std::uint64_t backoff_gen = 0;
    std::uint64_t ack_gen = 0;
    int last_data_mcs = 0;
    PacketInfo cur;
    RetryChain chain;
    std::uint32_t next_seq = 0;

    // rate adaptation + traffic
    Minstrel minstrel;
    SourceCursor source;

    Rng rng_backoff, rng_minstrel, rng_rx, rng_traffic;

    std::uint64_t pulled = 0;
    std::uint64_t acked = 0;
    std::uint64_t dropped = 0;
  };

  struct OnAir {
    Frame frame;
    SimTime tx_start = 0;
    SimTime tx_end = 0;
    Point tx_position;
    std::array<double, 3> rx_power_dbm{};
    int refs = 0;
  };

  void dispatch(const Event& e);
  void on_packet_ready(Node& n);
  void on_backoff_expire(Node& n, std::uint64_t gen);
  void on_tx_start(Node& n, std::uint32_t frame_id);
  void on_tx_end(Node& n, std::uint32_t frame_id);
  void on_rx_begin(Node& n, std::uint32_t frame_id);
  void on_rx_resolve(Node& n, std::uint32_t frame_id);
  void on_ack_timeout(Node& n, std::uint64_t gen);
  void on_stats_update(Node& n);

  std::uint32_t add_frame(const Frame& f, SimTime tx_start);
  void begin_transmission(std::uint32_t frame_id);
  void transmit_data(Node& n);
  void deliver(Node& n, const Frame& f);
  void finalize_packet(Node& n, bool acked, SimTime latency);
  void schedule_packet_ready(Node& n);
  void start_contention(Node& n);
  void arm_backoff(Node& n);
  void pause_backoff(Node& n);
  void busy_inc(Node& n);
  void busy_dec(Node& n);
  double interference_sum_mw(const Node& n, std::uint32_t exclude) const;
  void deref_frame(std::uint32_t frame_id);
  void record_trace_row(const Node& n);
  void finish_in_flight();

  Params params_;
  DerivedParams d_;
  Configuration config_;
  SimTime t_end_ = 0;
  SimTime warmup_ = 0;
  std::string trace_label_;

  EventQueue queue_;
  std::array<Node, 3> nodes_;
  int n_nodes_ = 2;
  std::unordered_map<std::uint32_t, OnAir> frames_;
  std::uint32_t next_frame_id_ = 0;

  std::array<SimTime, kNumMcs> ack_timeout_ns_{};
  double noise_mw_ = 0.0;

  BinTable bins_;
  std::vector<RawRow> raw_;
  std::string trace_;
  bool finished_ = false;
};

/// Places the nodes for a configuration (spec'd geometry: AP at the origin,
/// the interferer 2 m off-axis at its configured distance).
Point interferer_position(const Params& p, Configuration config);

}  // namespace wifisim
