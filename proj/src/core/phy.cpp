#include "phy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wifisim {

const std::array<McsEntry, kNumMcs>& mcs_table() {
  static const std::array<McsEntry, kNumMcs> table = {{
      {0, 6.0, 24, Modulation::Bpsk, 1, 2},
      {1, 9.0, 36, Modulation::Bpsk, 3, 4},
      {2, 12.0, 48, Modulation::Qpsk, 1, 2},
      {3, 18.0, 72, Modulation::Qpsk, 3, 4},
      {4, 24.0, 96, Modulation::Qam16, 1, 2},
      {5, 36.0, 144, Modulation::Qam16, 3, 4},
      {6, 48.0, 192, Modulation::Qam64, 2, 3},
      {7, 54.0, 216, Modulation::Qam64, 3, 4},
  }};
  return table;
}

const McsEntry& mcs(int index) {
  if (index < 0 || index >= kNumMcs) throw std::out_of_range("mcs index out of range");
  return mcs_table()[static_cast<std::size_t>(index)];
}

std::string_view modulation_name(Modulation m) {
  switch (m) {
    case Modulation::Bpsk: return "BPSK";
    case Modulation::Qpsk: return "QPSK";
    case Modulation::Qam16: return "16QAM";
    case Modulation::Qam64: return "64QAM";
  }
  return "?";
}

int frame_duration_us(const McsEntry& m, int psdu_bytes) {
  if (psdu_bytes < 0) throw std::invalid_argument("psdu_bytes must be >= 0");
  // 16 SERVICE bits + PSDU + 6 tail bits, ceil to whole symbols.
  const long long bits = 16 + 8LL * psdu_bytes + 6;
  const long long symbols = (bits + m.n_dbps - 1) / m.n_dbps;
  return static_cast<int>(20 + 4 * symbols);
}

namespace {

// Uncoded bit error rate per modulation at linear SNR.
double raw_ber(Modulation mod, double snr_linear) {
  switch (mod) {
    case Modulation::Bpsk:
      return 0.5 * std::erfc(std::sqrt(snr_linear));
    case Modulation::Qpsk:
      return 0.5 * std::erfc(std::sqrt(snr_linear / 2.0));
    case Modulation::Qam16:
      return 0.375 * std::erfc(std::sqrt(snr_linear / 10.0));
    case Modulation::Qam64:
      return (7.0 / 24.0) * std::erfc(std::sqrt(snr_linear / 42.0));
  }
  return 1.0;
}

// First-event union bound for the K=7 convolutional code, by puncturing
// pattern. b = 1, 2, 3 for rates 1/2, 2/3, 3/4.
double coded_bit_error(double ber, int b) {
  if (ber <= 0.0) return 0.0;
  const double d = std::sqrt(4.0 * ber * (1.0 - ber));
  auto dn = [d](int n) { return std::pow(d, n); };
  double pe = 0.0;
  switch (b) {
    case 1:
      pe = 0.5 * (36.0 * dn(10) + 211.0 * dn(12) + 1404.0 * dn(14) + 11633.0 * dn(16) +
                  77433.0 * dn(18) + 502690.0 * dn(20) + 3322763.0 * dn(22) +
                  21292910.0 * dn(24) + 134365911.0 * dn(26));
      break;
    case 2:
      pe = (1.0 / 4.0) * (3.0 * dn(6) + 70.0 * dn(7) + 285.0 * dn(8) + 1276.0 * dn(9) +
                          6160.0 * dn(10) + 27128.0 * dn(11) + 117019.0 * dn(12) +
                          498860.0 * dn(13) + 2103891.0 * dn(14) + 8784123.0 * dn(15));
      break;
    case 3:
      pe = (1.0 / 6.0) * (42.0 * dn(5) + 201.0 * dn(6) + 1492.0 * dn(7) + 10469.0 * dn(8) +
                          62935.0 * dn(9) + 379644.0 * dn(10) + 2253373.0 * dn(11) +
                          13073811.0 * dn(12) + 75152755.0 * dn(13) + 428005675.0 * dn(14));
      break;
    default:
      throw std::logic_error("unknown puncturing class");
  }
  return std::min(pe, 1.0);
}

int puncturing_class(const McsEntry& m) {
  if (m.coding_num == 1 && m.coding_den == 2) return 1;
  if (m.coding_num == 2 && m.coding_den == 3) return 2;
  return 3;  // 3/4
}

}  // namespace

double per(const McsEntry& m, double snr_db, int psdu_bytes) {
  if (psdu_bytes < 1) throw std::invalid_argument("psdu_bytes must be >= 1");
  const double snr_linear = std::pow(10.0, snr_db / 10.0);
  const double ber = raw_ber(m.modulation, snr_linear);
  const double pe = coded_bit_error(ber, puncturing_class(m));
  const double nbits = 8.0 * psdu_bytes;
  const double success = std::pow(1.0 - pe, nbits);
  return std::clamp(1.0 - success, 0.0, 1.0);
}

int ack_rate_index_for(int data_mcs_index) {
  if (data_mcs_index < 0 || data_mcs_index >= kNumMcs)
    throw std::out_of_range("mcs index out of range");
  if (data_mcs_index <= 1) return 0;  // 6, 9 Mb/s -> 6
  if (data_mcs_index <= 3) return 2;  // 12, 18 -> 12
  return 4;                           // 24..54 -> 24
}

double default_noise_floor_dbm(double channel_width_hz, double noise_figure_db) {
  return -174.0 + 10.0 * std::log10(channel_width_hz) + noise_figure_db;
}

}  // namespace wifisim
