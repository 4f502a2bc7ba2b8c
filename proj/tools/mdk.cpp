// mdk: command-line front end for multidiagonal matrices stored as JSON.
//
// Exit codes: 0 success, 1 parse/usage/IO error, 2 shape or mode mismatch or
// inapplicable method, 3 singular matrix, 4 `check` found a discrepancy.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mdk/mdk.hpp"

namespace {

enum Exit : int {
  kOk = 0,
  kParse = 1,
  kMismatch = 2,
  kSingular = 3,
  kCheckFailed = 4,
};

struct Options {
  std::optional<std::string> mode;
  double tol = 1e-10;
  double zero_tol = mdk::kDefaultZeroTolerance;
};

/// Thrown for command-level conditions that map to exit code 2.
struct Inapplicable : mdk::Error {
  using mdk::Error::Error;
};

mdk::AnyMatrix load(const std::string& path, const Options& opt) {
  auto m = mdk::read_matrix(path);
  if (!opt.mode || mdk::mode_of(m) == *opt.mode) return m;
  return std::visit(
      [&](const auto& a) -> mdk::AnyMatrix {
        if (*opt.mode == "exact") return mdk::convert<mdk::ExactScalar>(a);
        return mdk::convert<mdk::FloatScalar>(a);
      },
      m);
}

template <mdk::Field F>
const mdk::MDMatrix<F>& same_kind(const mdk::AnyMatrix& m, const std::string& path) {
  const auto* a = std::get_if<mdk::MDMatrix<F>>(&m);
  if (!a) {
    throw mdk::ShapeMismatch(path + " is in " + std::string(mdk::mode_of(m)) + " mode, expected " +
                             std::string(F::mode_name));
  }
  return *a;
}

int cmd_mul(const std::string& in1, const std::string& in2, const std::string& out, const Options& opt) {
  const auto a = load(in1, opt);
  const auto b = load(in2, opt);
  const auto product = std::visit(
      [&](const auto& lhs) -> mdk::AnyMatrix {
        using F = typename std::decay_t<decltype(lhs)>::scalar_type;
        return mdk::mul(lhs, same_kind<F>(b, in2));
      },
      a);
  mdk::write_matrix(out, product);
  return kOk;
}

template <mdk::Field F>
mdk::MDMatrix<F> invert(const mdk::MDMatrix<F>& a, const std::string& method) {
  const bool thm2_ok = mdk::is_k_tridiagonal(a) && a.n() + 1 <= 2 * a.k();
  if (method == "thm2" || (method == "auto" && thm2_ok)) {
    if (!mdk::is_k_tridiagonal(a)) throw Inapplicable("--method thm2 needs a k-tridiagonal matrix");
    if (!thm2_ok) throw Inapplicable("--method thm2 needs n + 1 <= 2k");
    return mdk::inv_thm2(mdk::KTridiagonal<F>::from_matrix(a));
  }
  if (method == "ch") {
    if constexpr (!F::is_exact) {
      throw Inapplicable("--method ch needs exact mode");
    } else {
      return mdk::inv_cayley_hamilton(a);
    }
  }
  return mdk::inv_general(a);
}

int cmd_inv(const std::string& in, const std::string& out, const std::string& method, const Options& opt) {
  const auto a = load(in, opt);
  const auto inverse =
      std::visit([&](const auto& m) -> mdk::AnyMatrix { return invert(m, method); }, a);
  mdk::write_matrix(out, inverse);
  return kOk;
}

int cmd_det(const std::string& in, const Options& opt) {
  const auto a = load(in, opt);
  const auto text = std::visit(
      [](const auto& m) {
        using F = typename std::decay_t<decltype(m)>::scalar_type;
        if (mdk::is_k_tridiagonal(m)) {
          return mdk::det_k_tridiagonal(mdk::KTridiagonal<F>::from_matrix(m)).to_string();
        }
        return mdk::reference::dense_det(mdk::to_dense(m)).to_string();
      },
      a);
  std::cout << text << '\n';
  return kOk;
}

int cmd_pow(const std::string& in, std::int64_t power, const std::string& out, const Options& opt) {
  const auto a = load(in, opt);
  const auto result =
      std::visit([&](const auto& m) -> mdk::AnyMatrix { return mdk::pow_signed(m, power); }, a);
  mdk::write_matrix(out, result);
  return kOk;
}

struct Discrepancy {
  double worst = 0.0;
  std::size_t row = 0;
  std::size_t col = 0;
  bool any = false;
};

template <mdk::Field F>
Discrepancy compare(const mdk::DenseMatrix<F>& got, const mdk::DenseMatrix<F>& want) {
  Discrepancy d;
  for (std::size_t i = 0; i < got.dim(); ++i) {
    for (std::size_t j = 0; j < got.dim(); ++j) {
      const F diff = got(i, j) - want(i, j);
      if (diff == F{}) continue;
      const double mag = diff.magnitude();
      if (!d.any || mag > d.worst) d = {mag, i, j, true};
    }
  }
  return d;
}

template <mdk::Field F>
bool acceptable(const mdk::DenseMatrix<F>& got, const mdk::DenseMatrix<F>& want, double tol) {
  if constexpr (F::is_exact) {
    return got == want;
  } else {
    return mdk::reference::max_abs_diff(got, want) <= tol;
  }
}

template <mdk::Field F>
int report(const char* what, const mdk::DenseMatrix<F>& got, const mdk::DenseMatrix<F>& want,
           const Options& opt) {
  const auto d = compare(got, want);
  if (acceptable(got, want, opt.tol)) {
    std::cout << "ok: " << what << " agrees with the dense oracle (max discrepancy " << d.worst << ")\n";
    return kOk;
  }
  std::cerr << "mismatch: " << what << " differs from the dense oracle; max discrepancy " << d.worst
            << " at (" << d.row << ", " << d.col << ")\n";
  return kCheckFailed;
}

int cmd_check(const std::vector<std::string>& files, const Options& opt) {
  if (files.size() != 2 && files.size() != 3) {
    throw mdk::ParseError("check takes A X (inverse) or A B C (product)");
  }
  std::vector<mdk::AnyMatrix> ms;
  for (const auto& f : files) ms.push_back(load(f, opt));

  return std::visit(
      [&](const auto& a) -> int {
        using F = typename std::decay_t<decltype(a)>::scalar_type;
        std::vector<mdk::DenseMatrix<F>> dense;
        for (std::size_t i = 0; i < ms.size(); ++i) {
          const auto& m = same_kind<F>(ms[i], files[i]);
          if (m.n() != a.n() || m.k() != a.k()) {
            throw mdk::ShapeMismatch(files[i] + " has (n, k) different from " + files[0]);
          }
          dense.push_back(mdk::to_dense(m));
        }
        using mdk::reference::dense_mul;
        if (dense.size() == 3) return report("product", dense[2], dense_mul(dense[0], dense[1]), opt);
        const auto e = mdk::DenseMatrix<F>::identity(a.dim());
        const int right = report("A*X", dense_mul(dense[0], dense[1]), e, opt);
        const int left = report("X*A", dense_mul(dense[1], dense[0]), e, opt);
        return right != kOk ? right : left;
      },
      ms.front());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multidiagonal (equally spaced) matrix toolkit"};
  app.require_subcommand(1);

  Options opt;
  std::string mode;
  app.add_option("--mode", mode, "Coerce inputs to this scalar mode")
      ->check(CLI::IsMember({"exact", "float"}));
  app.add_option("--tol", opt.tol, "Float-mode tolerance for check")->capture_default_str();
  app.add_option("--zero-tol", opt.zero_tol, "Float-mode zero-test tolerance")->capture_default_str();

  std::string in1, in2, out, method = "auto";
  std::int64_t power = 0;
  std::vector<std::string> check_files;

  auto* mul = app.add_subcommand("mul", "Multiply two matrices");
  mul->add_option("a", in1, "Left factor")->required();
  mul->add_option("b", in2, "Right factor")->required();
  mul->add_option("out", out, "Output file")->required();

  auto* inv = app.add_subcommand("inv", "Invert a matrix");
  inv->add_option("a", in1, "Input matrix")->required();
  inv->add_option("out", out, "Output file")->required();
  inv->add_option("--method", method, "auto | thm2 | ch | general")
      ->capture_default_str()
      ->check(CLI::IsMember({"auto", "thm2", "ch", "general"}));

  auto* det = app.add_subcommand("det", "Print the determinant");
  det->add_option("a", in1, "Input matrix")->required();

  auto* pw = app.add_subcommand("pow", "Raise to a signed integer power");
  pw->add_option("a", in1, "Input matrix")->required();
  pw->add_option("out", out, "Output file")->required();
  pw->add_option("-m,--power", power, "Exponent (may be negative)")->required();

  auto* check = app.add_subcommand("check", "Verify A B C (C = A*B) or A X (X = A^-1) against the dense oracle");
  check->add_option("files", check_files, "Matrix files")->required()->expected(2, 3);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }
  if (!mode.empty()) opt.mode = mode;

  try {
    mdk::FloatScalar::set_zero_tolerance(opt.zero_tol);
    if (*mul) return cmd_mul(in1, in2, out, opt);
    if (*inv) return cmd_inv(in1, out, method, opt);
    if (*det) return cmd_det(in1, opt);
    if (*pw) return cmd_pow(in1, power, out, opt);
    if (*check) return cmd_check(check_files, opt);
  } catch (const mdk::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParse;
  } catch (const mdk::SingularMatrix& e) {
    std::cerr << "error: singular matrix: " << e.what() << '\n';
    return kSingular;
  } catch (const mdk::ShapeMismatch& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kMismatch;
  } catch (const mdk::ModeUnsupported& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kMismatch;
  } catch (const Inapplicable& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kMismatch;
  } catch (const mdk::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParse;
  }
  return kParse;
}
