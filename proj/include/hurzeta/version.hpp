#ifndef HURZETA_VERSION_HPP
#define HURZETA_VERSION_HPP

namespace hurzeta {

inline constexpr const char* kVersion = "1.0.0";

} // namespace hurzeta

#endif // HURZETA_VERSION_HPP
