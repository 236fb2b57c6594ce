#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace evlogic::cli {

enum class Format { Text, Json, Dot };

struct Shared {
  std::string mode = "intended";
  bool strict = false;
  std::uint64_t seed = 0;
  std::string format = "text";
};

struct CheckArgs {
  std::string model;
  std::string formula;
  std::string world;
};

struct ScenarioArgs {
  std::string model;
  std::string world;
  std::string relative_to;
};

struct UpdateArgs {
  std::string model;
  std::string formula;
  bool closed = false;
  std::string out;
};

struct RepresentArgs {
  std::string model;
  std::string logic = "flat";
  int verify_depth = 2;
  std::size_t max_worlds = 3;
  std::string out;
};

struct PMorphismArgs {
  std::string source;
  std::string target;
  std::string map;
  int depth = 2;
};

struct ValidateArgs {
  std::string axiom;
  std::string cls;
  std::size_t max_worlds = 3;
  std::size_t max_proper_sets = 3;
  int depth = 2;
  std::size_t random = 0;
  std::string source = "both";
  std::string out = "counterexample.json";
  bool all = false;
};

// Each returns the process exit code: 0 verdict produced (and positive),
// 1 negative verdict or counterexample. Input errors throw.
int run_check(const Shared& s, const CheckArgs& a);
int run_classify(const Shared& s, const std::string& model);
int run_scenarios(const Shared& s, const ScenarioArgs& a);
int run_derive(const Shared& s, const std::string& model, const std::string& out);
int run_add_evidence(const Shared& s, const UpdateArgs& a);
int run_harmony(const Shared& s, const UpdateArgs& a);
int run_represent(const Shared& s, const RepresentArgs& a);
int run_filter(const Shared& s, const UpdateArgs& a);
int run_pmorphism(const Shared& s, const PMorphismArgs& a);
int run_validate(const Shared& s, const ValidateArgs& a);
int run_examples(const Shared& s);

}  // namespace evlogic::cli
