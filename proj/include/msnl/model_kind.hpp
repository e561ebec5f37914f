#ifndef MSNL_MODEL_KIND_HPP_
#define MSNL_MODEL_KIND_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace msnl {

/// kMsnl is the ADMM-trained symmetric model; kNlf the plain nonnegative
/// latent factor baseline.
enum class ModelKind { kMsnl, kNlf };

inline std::string_view to_string(ModelKind kind) {
  return kind == ModelKind::kMsnl ? "msnl" : "nlf";
}

inline ModelKind parse_model_kind(std::string_view name) {
  if (name == "msnl") return ModelKind::kMsnl;
  if (name == "nlf") return ModelKind::kNlf;
  throw std::invalid_argument("unknown model '" + std::string(name) +
                              "' (expected msnl or nlf)");
}

}  // namespace msnl

#endif  // MSNL_MODEL_KIND_HPP_
