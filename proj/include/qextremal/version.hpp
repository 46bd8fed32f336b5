#ifndef QEXTREMAL_VERSION_HPP
#define QEXTREMAL_VERSION_HPP

namespace qext {

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace qext

#endif
