#ifndef DEGREELAB_VERSION_HPP
#define DEGREELAB_VERSION_HPP

namespace degreelab {

inline constexpr const char* version_string = "0.1.0";

} // namespace degreelab

#endif
