#ifndef CORPUSCOPE_VERSION_HPP
#define CORPUSCOPE_VERSION_HPP

namespace corpuscope {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace corpuscope

#endif
