#pragma once

#include <array>
#include <string_view>

#include "units.hpp"

namespace wifisim {

enum class Modulation : std::uint8_t { Bpsk, Qpsk, Qam16, Qam64 };

/// One IEEE 802.11a modulation-and-coding scheme.
struct McsEntry {
  int index;              // 0..7
  double data_rate_mbps;  // 6..54
  int n_dbps;             // data bits per OFDM symbol
  Modulation modulation;
  int coding_num;  // coding rate numerator
  int coding_den;  // coding rate denominator
};

constexpr int kNumMcs = 8;

const std::array<McsEntry, kNumMcs>& mcs_table();
const McsEntry& mcs(int index);

std::string_view modulation_name(Modulation m);

/// OFDM PPDU duration for a PSDU of the given length: 20 us of preamble and
/// SIGNAL plus 4 us per data symbol, where each symbol carries n_dbps bits of
/// the 16-bit SERVICE field, the PSDU, and 6 tail bits. Exact integer
/// arithmetic.
int frame_duration_us(const McsEntry& m, int psdu_bytes);
inline SimTime frame_duration(const McsEntry& m, int psdu_bytes) {
  return static_cast<SimTime>(frame_duration_us(m, psdu_bytes)) * kMicrosecond;
}

/// Packet error rate of one attempt at the given SNR. Analytic BER per
/// modulation combined with a convolutional-code union bound, mapped to PER
/// over 8 * psdu_bytes coded bits. Monotone: non-increasing in snr_db,
/// non-decreasing in psdu_bytes and in MCS index.
double per(const McsEntry& m, double snr_db, int psdu_bytes);

/// SNR as a plain dB difference. The interference-plus-noise term must
/// already be combined in the linear (mW) domain.
inline double snr_db(double rx_power_dbm, double interference_plus_noise_dbm) {
  return rx_power_dbm - interference_plus_noise_dbm;
}

/// Control-response rate: highest mandatory rate (6, 12, 24 Mb/s) not above
/// the data rate.
int ack_rate_index_for(int data_mcs_index);

constexpr int kAckPsduBytes = 14;

struct PhyParams {
  double tx_power_dbm = 16.0206;
  double noise_floor_dbm = -93.9897000433602;  // -174 dBm/Hz + 10 log10(20 MHz) + 7 dB NF
  double rx_sensitivity_dbm = 0.0;             // calibrated against the channel, see params.cpp
  double cs_threshold_dbm = 0.0;
  SimTime preamble_plus_signal = 20 * kMicrosecond;
  SimTime symbol_time = 4 * kMicrosecond;
  SimTime sifs = 16 * kMicrosecond;
  SimTime slot = 9 * kMicrosecond;
  SimTime difs = 34 * kMicrosecond;  // sifs + 2 * slot
};

double default_noise_floor_dbm(double channel_width_hz, double noise_figure_db);

}  // namespace wifisim
