#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "dickson/cli.hpp"
#include "dickson/error.hpp"
#include "dickson/field.hpp"
#include "dickson/moment.hpp"
#include "dickson/parallel.hpp"
#include "dickson/perm.hpp"
#include "dickson/rdp.hpp"
#include "dickson/verify.hpp"

namespace py = pybind11;
using namespace dickson;

namespace {

// Elements cross the boundary as enumeration indices.
FqElem elem(const FieldCtx& ctx, std::uint64_t index) {
  if (index >= ctx.q()) throw py::index_error("element index out of range");
  return ctx.from_index(index);
}

py::object witness(const FieldCtx& ctx, const PermReport& r) {
  if (!r.witness) return py::none();
  return py::make_tuple(ctx.index(r.witness->first), ctx.index(r.witness->second));
}

std::size_t jobs_or_default(std::size_t jobs) { return jobs ? jobs : default_jobs(); }

}  // namespace

PYBIND11_MODULE(_dicksonlab, m) {
  m.doc() = "Reversed Dickson polynomials D_{n,k}(a, x) over F_q, p > 3";

  static py::exception<Error> error(m, "DicksonError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      error((std::string(errc_name(e.code())) + ": " + e.what()).c_str());
    }
  });

  py::class_<FieldCtx>(m, "Field")
      .def(py::init(&make_field), py::arg("p"), py::arg("e") = 1)
      .def_property_readonly("p", &FieldCtx::p)
      .def_property_readonly("e", &FieldCtx::e)
      .def_property_readonly("q", &FieldCtx::q)
      .def_property_readonly("modulus", &FieldCtx::base_modulus)
      .def_property_readonly("nonresidue",
                             [](const FieldCtx& f) { return f.index(f.ext_nonresidue()); })
      .def("render", [](const FieldCtx& f, std::uint64_t i) { return f.render(elem(f, i)); })
      .def("digits", [](const FieldCtx& f, std::uint64_t i) { return f.digits(elem(f, i)); })
      .def("index", [](const FieldCtx& f, std::int64_t v) { return f.index(f.from_int(v)); },
           "Index of the integer v reduced into F_p")
      .def("add", [](const FieldCtx& f, std::uint64_t a, std::uint64_t b) {
        return f.index(f.add(elem(f, a), elem(f, b)));
      })
      .def("mul", [](const FieldCtx& f, std::uint64_t a, std::uint64_t b) {
        return f.index(f.mul(elem(f, a), elem(f, b)));
      })
      .def("inv", [](const FieldCtx& f, std::uint64_t a) { return f.index(f.inv(elem(f, a))); })
      .def("pow", [](const FieldCtx& f, std::uint64_t a, std::int64_t n) {
        return f.index(f.pow_signed(elem(f, a), n));
      })
      .def("__repr__", [](const FieldCtx& f) {
        std::ostringstream os;
        os << "Field(p=" << f.p() << ", e=" << f.e() << ")";
        return os.str();
      });

  m.def(
      "evaluate",
      [](const FieldCtx& f, Exponent n, std::int64_t k, std::uint64_t x, std::uint64_t a) {
        const FqElem xe = elem(f, x), ae = elem(f, a);
        if (ae == f.one()) return f.index(eval_recursion(f, reduced_index(f, n, xe), k, xe));
        return f.index(eval_coeff_sum(f, RdpParams::make(f, n, k, ae), xe));
      },
      py::arg("field"), py::arg("n"), py::arg("k"), py::arg("x"), py::arg("a") = 1,
      "D_{n,k}(a, x) as an element index");

  m.def(
      "evaluate_all",
      [](const FieldCtx& f, std::string_view method, Exponent n, std::int64_t k, std::uint64_t x) {
        const FqElem xe = elem(f, x);
        if (method == "coeff") return f.index(eval_coeff_sum(f, {n, k, f.one()}, xe));
        if (method == "recursion") return f.index(eval_recursion(f, n, k, xe));
        if (method == "matrix") return f.index(eval_recursion_matrix(f, n, k, xe));
        if (method == "functional") return f.index(eval_functional(f, n, k, xe));
        throw py::value_error("method must be coeff, recursion, matrix or functional");
      },
      py::arg("field"), py::arg("method"), py::arg("n"), py::arg("k"), py::arg("x"));

  m.def(
      "coefficients",
      [](const FieldCtx& f, Exponent n, std::int64_t k, std::uint64_t a) {
        std::vector<std::uint64_t> out;
        for (const auto& c : rdp_poly(f, RdpParams::make(f, n, k, elem(f, a))).coeffs)
          out.push_back(f.index(c));
        return out;
      },
      py::arg("field"), py::arg("n"), py::arg("k"), py::arg("a") = 1,
      "Coefficients of D_{n,k}(a, x) in x, low-to-high, as element indices");

  m.def(
      "is_pp",
      [](const FieldCtx& f, Exponent n, std::int64_t k, std::string_view method) {
        PermReport r;
        if (method == "brute") r = is_pp_brute(f, n, k);
        else if (method == "two-to-one") r = two_to_one_characterization(f, n, k);
        else throw py::value_error("method must be brute or two-to-one");
        return py::make_tuple(r.is_pp, witness(f, r));
      },
      py::arg("field"), py::arg("n"), py::arg("k"), py::arg("method") = "brute",
      "(is_pp, witness pair of element indices or None)");

  m.def(
      "scan_pp",
      [](const FieldCtx& f, std::int64_t k, Exponent lo, Exponent hi, std::size_t jobs,
         bool allow_large) {
        std::vector<PermReport> rows;
        {
          py::gil_scoped_release release;
          rows = pp_scan(f, k, lo, hi, {jobs_or_default(jobs), allow_large});
        }
        py::list out;
        for (const auto& r : rows) {
          py::dict d;
          d["n"] = r.n;
          d["k"] = r.k;
          d["is_pp"] = r.is_pp;
          d["witness"] = witness(f, r);
          d["mod6_class"] = r.n % 6;
          out.append(d);
        }
        return out;
      },
      py::arg("field"), py::arg("k"), py::arg("lo"), py::arg("hi"), py::arg("jobs") = 0,
      py::arg("allow_large") = false);

  m.def(
      "moments",
      [](const FieldCtx& f, std::int64_t k, Exponent lo, Exponent hi, std::size_t jobs) {
        std::vector<MomentRow> rows;
        {
          py::gil_scoped_release release;
          rows = moment_table(f, k, lo, hi, jobs_or_default(jobs));
        }
        py::list out;
        for (const auto& r : rows) {
          py::dict d;
          d["n"] = r.n;
          d["k"] = k;
          d["direct"] = f.index(r.direct);
          d["reconstructed"] = f.index(r.reconstructed);
          d["agrees"] = r.agrees;
          out.append(d);
        }
        return out;
      },
      py::arg("field"), py::arg("k"), py::arg("lo"), py::arg("hi"), py::arg("jobs") = 0);

  m.def(
      "first_moment",
      [](const FieldCtx& f, Exponent n, std::int64_t k, bool reconstructed) {
        return f.index(reconstructed ? first_moment_theorem(f, n, k) : first_moment_direct(f, n, k));
      },
      py::arg("field"), py::arg("n"), py::arg("k"), py::arg("reconstructed") = false);

  m.def(
      "b_table", [](const FieldCtx& f) { return compute_b(f).b; }, py::arg("field"));

  m.def(
      "verify",
      [](const FieldCtx& f, const std::vector<std::string>& skip, bool allow_large, std::size_t jobs) {
        VerifyOptions options;
        options.skip.insert(skip.begin(), skip.end());
        options.allow_large = allow_large;
        options.jobs = jobs_or_default(jobs);
        VerifyReport report;
        {
          py::gil_scoped_release release;
          report = run_verification(f, options);
        }
        py::list checks;
        for (const auto& c : report.checks) {
          py::dict d;
          d["id"] = c.id();
          d["passed"] = c.passed;
          d["detail"] = c.detail;
          d["seconds"] = c.seconds;
          checks.append(d);
        }
        py::list items;
        for (const auto& e : errata()) {
          const ErratumState st = erratum_state(e, report);
          py::dict d;
          d["id"] = e.id;
          d["status"] = st == ErratumState::Validated ? "validated"
                        : st == ErratumState::Failed  ? "failed"
                                                      : "not-run";
          d["checks"] = e.checks;
          items.append(d);
        }
        py::dict out;
        out["passed"] = report.all_passed();
        out["checks"] = checks;
        out["errata"] = items;
        out["notes"] = report.notes;
        return out;
      },
      py::arg("field"), py::arg("skip") = std::vector<std::string>{}, py::arg("allow_large") = false,
      py::arg("jobs") = 0);

  m.def(
      "run_cli",
      [](std::vector<std::string> args) {
        std::vector<const char*> argv{"dicksonlab"};
        for (const auto& a : args) argv.push_back(a.c_str());
        std::ostringstream out, err;
        int code;
        {
          py::gil_scoped_release release;
          code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
        }
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "(exit code, stdout text, stderr text)");
}
