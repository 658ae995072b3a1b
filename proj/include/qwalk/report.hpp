#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "qwalk/parrondo.hpp"

namespace qwalk {

/// 12-significant-digit decimal text, the format used in every CSV.
std::string fmt12(double v);

void write_histogram_csv(std::ostream& out,
                         const std::vector<std::pair<Position, double>>& rows);
void write_region_csv(std::ostream& out, const RegionMap& map);
void write_persistence_csv(std::ostream& out, const PersistenceScan& scan);
void write_caps_csv(std::ostream& out, const std::vector<WalkCap>& caps);

std::string histogram_svg(const std::vector<std::pair<Position, double>>& rows);
std::string region_svg(const RegionMap& map,
                       const std::vector<std::pair<std::string, CoinState>>& marks);
std::string persistence_svg(const PersistenceScan& scan);

}  // namespace qwalk
