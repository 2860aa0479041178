#include "maxekpp/solver_config.hpp"

#include <stdexcept>

namespace maxekpp {

void validate_config(const SolverConfig& cfg) {
  if (cfg.k < 1) throw std::invalid_argument("k must be >= 1");
  if (cfg.time_limit_s && *cfg.time_limit_s < 0.0)
    throw std::invalid_argument("time limit must be nonnegative");
  if (cfg.lb && *cfg.lb < 0.0)
    throw std::invalid_argument("lb must be nonnegative");
  if (cfg.ub && *cfg.ub < 0.0)
    throw std::invalid_argument("ub must be nonnegative");
  if (cfg.lb && cfg.ub && *cfg.lb > *cfg.ub)
    throw std::invalid_argument("lb exceeds ub");
  if (cfg.max_components && *cfg.max_components < 1)
    throw std::invalid_argument("max_components must be >= 1");
  if (cfg.worker_count < 1)
    throw std::invalid_argument("worker_count must be >= 1");
}

}  // namespace maxekpp
