#ifndef MININDEX_VERSION_HPP_
#define MININDEX_VERSION_HPP_

namespace minindex {

inline constexpr char const* kVersion = "0.1.0";

}  // namespace minindex

#endif  /* MININDEX_VERSION_HPP_ */
