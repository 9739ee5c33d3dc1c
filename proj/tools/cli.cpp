#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "slocc/enumerate.hpp"
#include "slocc/errors.hpp"

namespace slocc::cli {

namespace {

MatrixPair read_state(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MalformedInput("cannot read " + path);
  std::ostringstream text;
  text << in.rdbuf();
  try {
    return parse_state(text.str());
  } catch (const MalformedInput& e) {
    throw MalformedInput(path + ": " + e.what());
  }
}

std::vector<GaussRat> random_params(std::mt19937_64& rng, std::size_t count) {
  std::vector<GaussRat> out;
  std::set<GaussRat> used{GaussRat(0), GaussRat(1)};
  while (out.size() < count) {
    GaussRat v(static_cast<long>(rng() % 19) - 9, static_cast<long>(rng() % 7) - 3);
    if (used.insert(v).second) out.push_back(v);
  }
  return out;
}

struct Options {
  std::vector<std::string> paths;
  std::size_t m = 0;
  std::size_t n = 0;
  bool json = false;
  std::size_t class_index = 0;
  std::uint64_t seed = 1;
  std::size_t trials = 3;
};

int cmd_enumerate(const Options& o, std::ostream& out) {
  auto families = enumerate_families(o.m, o.n);
  if (o.json) {
    out << '[' << render_families(o.m, o.n, families) << "]\n";
    return ok;
  }
  for (std::size_t i = 0; i < families.size(); ++i) {
    const auto& f = families[i];
    out << i << "  " << f.key << "  params " << f.param_count << " (" << f.constraints << ")\n";
  }
  std::size_t max_rank = 0;
  for (const auto& f : families) max_rank += f.canonical.sig.n == o.m;
  out << "generic rank " << o.m << ": " << max_rank << '\n';
  out << "count: " << families.size() << '\n';
  return ok;
}

int cmd_random(const Options& o, std::ostream& out) {
  auto families = enumerate_families(o.m, o.n);
  if (o.class_index >= families.size()) {
    throw DimensionOutOfRange("class index " + std::to_string(o.class_index) + " out of range; " +
                              std::to_string(o.m) + "x" + std::to_string(o.n) + " has " +
                              std::to_string(families.size()) + " families");
  }
  const ClassFamily& f = families[o.class_index];
  std::mt19937_64 rng(o.seed);
  MatrixPair s = instantiate(f, random_params(rng, f.param_count));
  out << serialize_state(apply(random_ilo(o.m, o.n, rng()), s)) << '\n';
  return ok;
}

int cmd_verify(const Options& o, const Classifier& classifier, std::ostream& out) {
  OrbitReport total;
  std::mt19937_64 rng(o.seed);
  if (o.trials > 0) {
    for (std::size_t m = 1; m <= 6; ++m) {
      for (std::size_t n = m; n <= std::min<std::size_t>(2 * m, 7); ++n) {
        for (const auto& f : enumerate_families(m, n)) {
          MatrixPair s = instantiate(f, default_params(f));
          OrbitReport r = orbit_invariance(s, o.trials, rng(), classifier);
          total.trials += r.trials;
          total.failures.insert(total.failures.end(), r.failures.begin(), r.failures.end());

          std::uint64_t oracle_seed = rng();
          for (const auto& msg : oracle_mismatches(apply(random_ilo(m, n, oracle_seed), s))) {
            total.failures.push_back({oracle_seed, f.key, msg});
          }
        }
      }
    }
  }
  out << render_report(total) << '\n';
  return total.failures.empty() ? ok : verify_failed;
}

}  // namespace

int run(int argc, char** argv, const Classifier& classifier, std::ostream& out, std::ostream& err) {
  CLI::App app{"SLOCC classification of 2 x M x N states by matrix pencils"};
  app.require_subcommand(1);
  Options o;

  auto* classify_cmd = app.add_subcommand("classify", "print the canonical form of a state");
  classify_cmd->add_option("file", o.paths, "state JSON")->required()->expected(1);

  auto* equiv_cmd = app.add_subcommand("equiv", "test two states for SLOCC equivalence");
  equiv_cmd->add_option("files", o.paths, "two state JSON files")->required()->expected(2);

  auto* enum_cmd = app.add_subcommand("enumerate", "list the genuine class families");
  enum_cmd->add_option("m", o.m)->required();
  enum_cmd->add_option("n", o.n)->required();
  enum_cmd->add_flag("--json", o.json, "JSON table");

  auto* random_cmd = app.add_subcommand("random", "print a random member of a class");
  random_cmd->add_option("m", o.m)->required();
  random_cmd->add_option("n", o.n)->required();
  random_cmd->add_option("--class", o.class_index, "family index")->required();
  random_cmd->add_option("--seed", o.seed);

  auto* verify_cmd = app.add_subcommand("verify", "orbit-invariance and oracle sweep over m <= 6, n <= 7");
  verify_cmd->add_option("--trials", o.trials, "random ILOs per family");
  verify_cmd->add_option("--seed", o.seed);

  auto* stab_cmd = app.add_subcommand("stab-dim", "print the stabilizer dimension of a state");
  stab_cmd->add_option("file", o.paths, "state JSON")->required()->expected(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? ok : bad_input;
  }

  try {
    if (*classify_cmd) {
      out << render(classifier(read_state(o.paths[0]))) << '\n';
      return ok;
    }
    if (*equiv_cmd) {
      MatrixPair a = read_state(o.paths[0]);
      MatrixPair b = read_state(o.paths[1]);
      CanonicalForm ca = classifier(a), cb = classifier(b);
      bool same = ca == cb;
      out << (same ? "EQUIVALENT" : "INEQUIVALENT") << '\n' << ca.encoding << '\n' << cb.encoding << '\n';
      return same ? ok : inequivalent;
    }
    if (*enum_cmd) return cmd_enumerate(o, out);
    if (*random_cmd) return cmd_random(o, out);
    if (*verify_cmd) return cmd_verify(o, classifier, out);
    if (*stab_cmd) {
      out << stabilizer_dimension(read_state(o.paths[0])) << '\n';
      return ok;
    }
  } catch (const MalformedInput& e) {
    err << "error: " << e.what() << '\n';
    return bad_input;
  } catch (const EigenvalueOutsideField& e) {
    err << "error: " << e.what() << '\n';
    return outside_field;
  } catch (const DimensionOutOfRange& e) {
    err << "error: " << e.what() << '\n';
    return out_of_range;
  } catch (const ConstraintViolation& e) {
    err << "error: " << e.what() << '\n';
    return out_of_range;
  } catch (const Error& e) {
    err << "internal error: " << e.what() << '\n';
    return verify_failed;
  }
  return bad_input;
}

}  // namespace slocc::cli
