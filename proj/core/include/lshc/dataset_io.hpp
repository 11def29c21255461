#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "lshc/classifier.hpp"

namespace lshc {

// CSV layout: header row, then d feature columns followed by a binary label
// column. Reals are written with 17 significant digits so values round-trip
// exactly. Parse errors report the 1-based line number.

void write_labeled_csv(std::ostream& out, std::span<const LabeledExample> data);
void write_labeled_csv(const std::string& path, std::span<const LabeledExample> data);

std::vector<LabeledExample> read_labeled_csv(std::istream& in, const std::string& name);
std::vector<LabeledExample> read_labeled_csv(const std::string& path);

// Feature-only rows for prediction. If the header's last column is named
// "label" that column is dropped, so training files work as query files.
std::vector<std::vector<double>> read_points_csv(std::istream& in, const std::string& name);
std::vector<std::vector<double>> read_points_csv(const std::string& path);

}  // namespace lshc
