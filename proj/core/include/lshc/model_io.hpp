#pragma once

#include <iosfwd>
#include <string>

#include "lshc/classifier.hpp"

namespace lshc {

// Versioned flat text format for trained models. Reals are written as C99
// hexfloats, so a loaded model reproduces the original bit for bit and
// predicts identically; bucket entries are emitted in sorted key order, so
// equal models serialize to identical bytes. The retained bucket table is
// not part of the format.
void save_model(const ClassifierModel& model, std::ostream& out);
void save_model(const ClassifierModel& model, const std::string& path);

ClassifierModel load_model(std::istream& in);
ClassifierModel load_model(const std::string& path);

}  // namespace lshc
