#include "chevwidth/constants_table.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "chevwidth/errors.hpp"

namespace chevwidth {

io::json constants_table(const RootSystem& R) {
  const ChevalleyBasis& B = ChevalleyBasis::get(R);
  io::json rows = io::json::array();
  for (RootId a = 0; a < R.num_roots(); ++a)
    for (RootId b = 0; b < R.num_roots(); ++b) {
      if (b == a || b == R.negate(a)) continue;
      for (const auto& t : B.commutator(a, b)) rows.push_back(io::json::array({a, b, t.i, t.j, t.root, t.coeff}));
    }
  return io::json{{"system", R.label()}, {"columns", {"a", "b", "i", "j", "root", "N"}}, {"entries", rows}};
}

std::string constants_csv(const RootSystem& R) {
  std::ostringstream out;
  out << "a,b,i,j,root,N\n";
  const io::json table = constants_table(R);
  for (const auto& row : table["entries"])
    out << row[0] << ',' << row[1] << ',' << row[2] << ',' << row[3] << ',' << row[4] << ',' << row[5] << '\n';
  return out.str();
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string table_hash(const io::json& entries) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(entries.dump())));
  return std::string("fnv1a64:") + buf;
}

namespace {

CommutatorTable to_table(const RootSystem& R, const io::json& entries) {
  CommutatorTable t;
  for (const auto& row : entries) {
    require(row.is_array() && row.size() == 6, ErrorCode::ParseError, "constants row must have six fields");
    const RootId a = row[0], b = row[1], root = row[4];
    for (RootId x : {a, b, root})
      require(x >= 0 && x < R.num_roots(), ErrorCode::ParseError, "root index out of range in constants table");
    t[{a, b}].push_back(CommutatorTerm{row[2].get<int>(), row[3].get<int>(), root, row[5].get<int>()});
  }
  return t;
}

}  // namespace

CachedConstants load_constants(const RootSystem& R, const std::string& dir) {
  if (dir.empty()) return {to_table(R, constants_table(R)["entries"]), "disabled"};
  namespace fs = std::filesystem;
  const fs::path path = fs::path(dir) / ("constants-" + R.label() + ".json");
  std::string status = "created";
  if (fs::exists(path)) {
    try {
      const io::json cached = io::load_file(path.string());
      if (cached.value("system", "") == R.label() && cached.contains("entries") &&
          cached.value("hash", "") == table_hash(cached["entries"]))
        return {to_table(R, cached["entries"]), "hit"};
    } catch (const Error&) {
    } catch (const io::json::exception&) {
    }
    status = "rebuilt";
  }
  io::json fresh = constants_table(R);
  fresh["hash"] = table_hash(fresh["entries"]);
  fs::create_directories(path.parent_path());
  io::write_file(path.string(), io::dump(fresh));
  return {to_table(R, fresh["entries"]), status};
}

}  // namespace chevwidth
