#ifndef BLOCKFACT_VERSION_HPP_
#define BLOCKFACT_VERSION_HPP_

namespace blockfact {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace blockfact

#endif  // BLOCKFACT_VERSION_HPP_
