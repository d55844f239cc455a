// o2n: build and check o(2n) representations in the pattern basis.
//
//   o2n dim      --n 2 --lambda 0,-1
//   o2n patterns --n 2 --lambda 0,-1 [--format json]
//   o2n build    --n 3 --lambda -1/2,-1/2,-1/2 --out rep.json [--jobs 4]
//   o2n matrix   --n 2 --lambda 0,-1 --gen "F(1,2)"
//   o2n verify   --suite all (--archive rep.json | --n 2 --lambda 0,-1)
//   o2n branch   --n 2 --lambda 0,-1

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "o2n/archive.hpp"
#include "o2n/error.hpp"
#include "o2n/operators.hpp"
#include "o2n/representation.hpp"
#include "o2n/verify.hpp"

namespace {

constexpr int kExitFail = 1;
constexpr int kExitInput = 2;
constexpr int kExitBuild = 3;

struct Common {
  int n = 0;
  std::string lambda;
  int jobs = 1;
  std::string format = "text";
};

void add_weight_options(CLI::App* cmd, Common& c, bool required = true) {
  auto* n = cmd->add_option("--n", c.n, "rank (the algebra is o(2n))")->check(CLI::Range(1, 64));
  auto* l = cmd->add_option("--lambda", c.lambda, "highest weight, e.g. 0,-1 or -1/2,-1/2");
  if (required) {
    n->required();
    l->required();
  }
}

o2n::HighestWeight weight_of(const Common& c) { return o2n::parse_highest_weight(c.n, c.lambda); }

o2n::Representation build(const Common& c) { return o2n::build_representation(weight_of(c), {c.jobs}); }

int cmd_dim(const Common& c) {
  const auto hw = weight_of(c);
  const o2n::Integer w = o2n::weyl_dim(hw);
  const std::size_t count = o2n::enumerate(hw).size();
  std::cout << w.get_str() << " " << count << "\n";
  return w == static_cast<unsigned long>(count) ? 0 : kExitFail;
}

int cmd_patterns(const Common& c) {
  const auto pats = o2n::enumerate(weight_of(c));
  if (c.format == "json") {
    o2n::Json j = o2n::Json::array();
    for (const auto& p : pats) j.push_back(o2n::to_json(p));
    std::cout << j.dump(1) << "\n";
  } else {
    for (std::size_t i = 0; i < pats.size(); ++i) std::cout << i << " " << pats[i].str() << "\n";
  }
  return 0;
}

int cmd_build(const Common& c, const std::string& out) {
  const std::string text = o2n::serialize_archive(build(c));
  if (out.empty() || out == "-") {
    std::cout << text;
  } else {
    std::ofstream f(out, std::ios::binary);
    if (!(f << text)) throw o2n::Error("cannot write " + out);
  }
  return 0;
}

int cmd_matrix(const Common& c, const std::string& gen) {
  const auto rep = build(c);
  const o2n::SparseOperator op = rep.gen(o2n::parse_gen(gen, c.n));
  if (c.format == "json") {
    std::cout << o2n::to_json(op).dump() << "\n";
  } else {
    for (std::size_t s = 0; s < op.dim(); ++s)
      for (const auto& e : op.column(s)) std::cout << s << " " << e.target << " " << o2n::to_string(e.value) << "\n";
  }
  return 0;
}

int cmd_verify(const Common& c, const std::string& suite, const std::string& archive) {
  o2n::Representation rep = [&] {
    if (archive.empty()) return build(c);
    std::ifstream f(archive, std::ios::binary);
    if (!f) throw o2n::ArchiveError("cannot read " + archive);
    std::stringstream ss;
    ss << f.rdbuf();
    return o2n::parse_archive(ss.str());
  }();
  const auto reports = o2n::run_suite(rep, suite, c.jobs);
  o2n::Json j = o2n::Json::array();
  bool ok = true;
  for (const auto& r : reports) {
    j.push_back(o2n::to_json(r));
    ok = ok && r.pass;
  }
  std::cout << j.dump(1) << "\n";
  return ok ? 0 : kExitFail;
}

int cmd_branch(const Common& c) {
  const auto hw = weight_of(c);
  const auto table = o2n::branching(hw);
  std::cout << o2n::to_json(table).dump() << "\n";
  o2n::Integer total = 0;
  std::string terms;
  for (const auto& [mu, m] : table) {
    const o2n::Integer d = o2n::weyl_dim({hw.n - 1, mu});
    total += d * static_cast<unsigned long>(m);
    terms += (terms.empty() ? "" : " + ") + std::to_string(m) + "*" + d.get_str();
  }
  const o2n::Integer want = o2n::weyl_dim(hw);
  std::cerr << "sum c(mu) dim V'(mu) = " << terms << " = " << total.get_str() << (total == want ? " == " : " != ")
            << "dim V(lambda) = " << want.get_str() << "\n";
  return total == want ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact o(2n) representations in the Gelfand-Tsetlin pattern basis"};
  app.require_subcommand(1);
  Common c;
  std::string out, gen, suite = "all", archive;

  auto* dim = app.add_subcommand("dim", "print the Weyl dimension and the pattern count");
  add_weight_options(dim, c);
  auto* pats = app.add_subcommand("patterns", "list the basis patterns in index order");
  add_weight_options(pats, c);
  pats->add_option("--format", c.format)->check(CLI::IsMember({"text", "json"}));
  auto* bld = app.add_subcommand("build", "construct all generators and write an archive");
  add_weight_options(bld, c);
  bld->add_option("--out", out, "archive path (default: stdout)");
  bld->add_option("--jobs", c.jobs)->check(CLI::Range(1, 1024));
  auto* mat = app.add_subcommand("matrix", "print one generator matrix");
  add_weight_options(mat, c);
  mat->add_option("--gen", gen, "generator label F(i,j)")->required();
  mat->add_option("--format", c.format)->check(CLI::IsMember({"text", "json"}));
  mat->add_option("--jobs", c.jobs)->check(CLI::Range(1, 1024));
  auto* ver = app.add_subcommand("verify", "run verification suites");
  add_weight_options(ver, c, false);
  ver->add_option("--suite", suite)
      ->check(CLI::IsMember({"brackets", "weights", "highest", "dim", "branching", "casimir", "irreducible", "all"}));
  ver->add_option("--archive", archive, "verify a stored archive instead of building");
  ver->add_option("--jobs", c.jobs)->check(CLI::Range(1, 1024));
  auto* br = app.add_subcommand("branch", "restriction to o(2n-2) as JSON");
  add_weight_options(br, c);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*dim) return cmd_dim(c);
    if (*pats) return cmd_patterns(c);
    if (*bld) return cmd_build(c, out);
    if (*mat) return cmd_matrix(c, gen);
    if (*ver) {
      if (archive.empty() && (c.n == 0 || c.lambda.empty())) {
        std::cerr << "verify: give --archive or both --n and --lambda\n";
        return kExitInput;
      }
      return cmd_verify(c, suite, archive);
    }
    if (*br) return cmd_branch(c);
  } catch (const o2n::InvalidWeight& e) {
    std::cerr << "invalid highest weight: " << e.what() << "\n";
    return kExitInput;
  } catch (const o2n::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitInput;
  } catch (const o2n::RegularizationError& e) {
    std::cerr << "regularization failed: " << e.what() << "\n";
    return kExitBuild;
  } catch (const o2n::CompletionError& e) {
    std::cerr << "construction failed: " << e.what() << "\n";
    return kExitBuild;
  } catch (const o2n::ClosureIncomplete& e) {
    std::cerr << "construction failed: " << e.what() << "\n";
    return kExitBuild;
  } catch (const o2n::ArchiveError& e) {
    std::cerr << "archive: " << e.what() << "\n";
    return kExitFail;
  } catch (const o2n::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return 0;
}
