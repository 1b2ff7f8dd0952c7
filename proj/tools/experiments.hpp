#ifndef GUP_TOOLS_EXPERIMENTS_HPP
#define GUP_TOOLS_EXPERIMENTS_HPP

#include <optional>
#include <string>
#include <vector>

namespace gup::cli {

inline constexpr const char* kToolVersion = "1.0.0";

// exit codes shared by every experiment
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitNumerical = 3;

struct CommonOptions {
  double beta = 1.0;
  double hbar = 1.0;
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  int max_subdivisions = 4000;
  std::string out_dir = ".";
  std::string format = "csv";  // csv | json
};

struct GramOptions {
  std::string family = "sym-eigen";   // sym-eigen | kmm-eigen | maxloc
  std::string measure = "standard";   // standard | kmm
  double eps = 0.0;
  int n_min = -20;
  int n_max = 20;
};

struct ParsevalOptions {
  double eps = 1.0;  // lattice offset of the target state
  std::vector<int> truncations = {1, 2, 5, 10, 20, 50, 100, 200, 500, 1000};
};

struct MlOverlapsOptions {
  int lattice_m_max = 3;  // ml-eigen rows at separations 2m, |m| <= this
};

struct ProfilesOptions {
  std::string state = "maxloc";  // sym-eigen | maxloc
  double xi = 0.0;
  std::string mode = "both";     // exact | linearized | both
  std::optional<double> x_min;   // defaults to xi - 5 length units
  std::optional<double> x_max;
  int x_count = 41;
};

struct GupCheckOptions {
  std::string state = "maxloc";  // maxloc | gaussian
  double xi = 0.0;
  std::vector<double> sigmas = {0.5, 1.0, 2.0};
};

struct VacuumOptions {
  double mass = 0.0;
  std::string which = "both";  // modified | unmodified | both
  std::optional<double> cutoff;  // extra truncated-density rows when set
  std::vector<double> scan_cutoffs = {10.0, 100.0, 1000.0, 10000.0};
};

int run_gram(const CommonOptions& common, const GramOptions& opt);
int run_parseval(const CommonOptions& common, const ParsevalOptions& opt);
int run_ml_overlaps(const CommonOptions& common, const MlOverlapsOptions& opt);
int run_profiles(const CommonOptions& common, const ProfilesOptions& opt);
int run_gup_check(const CommonOptions& common, const GupCheckOptions& opt);
int run_symmetry(const CommonOptions& common);
int run_vacuum(const CommonOptions& common, const VacuumOptions& opt);

void emit_error_json(const std::string& kind, const std::string& message);

}  // namespace gup::cli

#endif  // GUP_TOOLS_EXPERIMENTS_HPP
