#pragma once

#include <string>
#include <string_view>

#include "cutwave/wavelet.hpp"

namespace cutwave {

// Compressed signal text:
//   <n> <m> <keep> <budget>
//   cut <node> u1 v1 u2 v2 ...
//   coef <node> <value>
//   avg <value>              (only when the average was kept)
// Values are written with 17 significant digits so decoding is lossless.
std::string format_compressed(const CompressedSignal& c);
CompressedSignal parse_compressed(std::string_view text);

// Tree text:
//   n <n> nodes <count>
//   node <id> <level> <parent|-> <adapted|structural> members: v1 v2 ...
std::string format_tree(const WaveletTree& t);
WaveletTree parse_tree(std::string_view text);

}  // namespace cutwave
