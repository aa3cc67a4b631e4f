#ifndef OPTOMECH_VERSION_HPP
#define OPTOMECH_VERSION_HPP

namespace optomech {

inline constexpr const char* kVersion = "0.1.0";

}

#endif
