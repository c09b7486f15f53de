#pragma once

#include <string>

#include "bagwise/model.hpp"

namespace bagwise {

// Versioned JSON model document: kind, hyper-parameter echo, label mapping
// and full-precision parameter arrays. MI-SVM models carry their witness
// metadata.
std::string model_to_json(const TrainedModel& model);
TrainedModel model_from_json(const std::string& text);

void save_model(const std::string& path, const TrainedModel& model);
TrainedModel load_model(const std::string& path);

}  // namespace bagwise
