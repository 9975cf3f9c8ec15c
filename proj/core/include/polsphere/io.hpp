#pragma once

#include <functional>
#include <iosfwd>
#include <string>

#include "polsphere/measures.hpp"
#include "polsphere/multipole.hpp"
#include "polsphere/qfunction.hpp"

namespace polsphere {

// Doubles rendered with 17 significant digits, enough to round-trip exactly.
std::string format_g17(double v);

// Flat multipole records: header S2,K,q,re,im with S2 = 2S, sectors
// ascending, then rank, then component.
void write_multipoles_csv(std::ostream& os, const MultipoleTable& table);
void write_multipoles_json(std::ostream& os, const MultipoleTable& table);

// One row per grid node: theta,phi,weight,Q_total,Q_0,...,Q_kmax.
void write_qfield_csv(std::ostream& os, const QField& field);
void write_qfield_json(std::ostream& os, const QField& field);

// K,area rows followed by a total row; JSON adds the grid metadata.
void write_area_csv(std::ostream& os, const AreaReport& report);
void write_area_json(std::ostream& os, const AreaReport& report);

// Opens path, writes via fn, throws Error when the stream fails.
void write_file(const std::string& path,
                const std::function<void(std::ostream&)>& fn);

} // namespace polsphere
