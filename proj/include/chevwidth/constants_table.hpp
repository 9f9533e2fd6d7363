#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "chevwidth/io.hpp"

namespace chevwidth {

/// Every N_{a,b,i,j} for ordered pairs b != +-a, as rows a, b, i, j, root, N.
io::json constants_table(const RootSystem& R);
std::string constants_csv(const RootSystem& R);

std::uint64_t fnv1a64(std::string_view bytes);
/// "fnv1a64:" followed by 16 hex digits, over the compact dump of `entries`.
std::string table_hash(const io::json& entries);

using CommutatorTable = std::map<std::pair<RootId, RootId>, std::vector<CommutatorTerm>>;

struct CachedConstants {
  CommutatorTable table;
  /// "disabled", "created", "hit" or "rebuilt".
  std::string status;
};

/// Reads <dir>/constants-<label>.json when its hash matches the content,
/// otherwise recomputes and rewrites it. An empty `dir` disables the cache.
CachedConstants load_constants(const RootSystem& R, const std::string& dir);

}  // namespace chevwidth
