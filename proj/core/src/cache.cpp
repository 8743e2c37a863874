#include "casimir/cache.hpp"

#include <fstream>
#include <random>
#include <sstream>
#include <system_error>
#include <thread>

#include "casimir/serialization.hpp"

namespace casimir {

namespace fs = std::filesystem;

IrreducibleCache::IrreducibleCache(const RootSystem& rs, std::optional<fs::path> dir) : rs_(rs), dir_(std::move(dir)) {
  if (dir_) {
    std::error_code ec;
    fs::create_directories(*dir_, ec);
    if (ec) dir_.reset();
  }
}

std::shared_ptr<const Character> IrreducibleCache::get(const Weight& lambda) {
  {
    std::lock_guard lock(mutex_);
    if (auto it = memo_.find(lambda); it != memo_.end()) return it->second;
  }
  std::shared_ptr<const Character> chi = load(lambda);
  if (chi) {
    ++disk_hits_;
  } else {
    chi = std::make_shared<const Character>(irreducible_character(rs_, lambda));
    ++computed_;
    store(lambda, *chi);
  }
  std::lock_guard lock(mutex_);
  return memo_.emplace(lambda, chi).first->second;
}

std::shared_ptr<const Character> IrreducibleCache::load(const Weight& lambda) const {
  if (!dir_) return nullptr;
  std::ifstream in(*dir_ / character_file_name(rs_.type(), lambda));
  if (!in) return nullptr;
  try {
    const Json doc = Json::parse(in);
    Weight stored;
    Character chi = character_from_json(rs_, doc, &stored);
    if (stored != lambda) return nullptr;
    return std::make_shared<const Character>(std::move(chi));
  } catch (const std::exception&) {
    return nullptr;
  }
}

void IrreducibleCache::store(const Weight& lambda, const Character& chi) const {
  if (!dir_) return;
  const fs::path target = *dir_ / character_file_name(rs_.type(), lambda);
  std::ostringstream suffix;
  suffix << ".tmp." << std::this_thread::get_id() << "." << std::random_device{}();
  const fs::path tmp = target.string() + suffix.str();
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << character_to_json(chi, lambda).dump() << '\n';
    if (!out) {
      std::error_code ec;
      fs::remove(tmp, ec);
      return;
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) fs::remove(tmp, ec);
}

}  // namespace casimir
