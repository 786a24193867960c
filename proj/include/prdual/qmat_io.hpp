#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "prdual/matrix.hpp"

namespace prdual {

// .qmat: first line "u v", then u lines of v whitespace-separated rationals
// written "p" or "p/q". Blank lines and '#' comments are skipped.
QMatrix parse_qmat(std::string_view text);
QMatrix read_qmat(const std::filesystem::path& path);
std::string format_qmat(const QMatrix& m);

}  // namespace prdual
