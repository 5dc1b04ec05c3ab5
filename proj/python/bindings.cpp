// Python bindings for the main operations: numpy arrays in, numpy arrays or
// plain dicts out. Spectra cross the boundary as complex arrays with the
// coefficient for frequency n at index N + n.

#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "quadsum/bmo.hpp"
#include "quadsum/config.hpp"
#include "quadsum/experiment.hpp"
#include "quadsum/expr.hpp"
#include "quadsum/fourier.hpp"
#include "quadsum/functions.hpp"
#include "quadsum/means.hpp"
#include "quadsum/orlicz.hpp"
#include "quadsum/report.hpp"
#include "quadsum/singular.hpp"

namespace py = pybind11;
using namespace quadsum;

namespace {

SampledField1D field_1d_from(py::array_t<double, py::array::c_style | py::array::forcecast> a) {
    if (a.ndim() != 1) throw std::invalid_argument("expected a 1D array");
    int g = static_cast<int>(a.shape(0));
    std::vector<double> v(a.data(), a.data() + g);
    return make_field_1d(make_grid(g), std::move(v));
}

SampledField2D field_2d_from(py::array_t<double, py::array::c_style | py::array::forcecast> a) {
    if (a.ndim() != 2 || a.shape(0) != a.shape(1)) {
        throw std::invalid_argument("expected a square 2D array");
    }
    int g = static_cast<int>(a.shape(0));
    std::vector<double> v(a.data(), a.data() + static_cast<size_t>(g) * g);
    return make_field_2d(make_grid(g), std::move(v));
}

py::array_t<double> to_numpy(const SampledField1D& f) {
    py::array_t<double> out(std::vector<py::ssize_t>{static_cast<py::ssize_t>(f.values.size())});
    std::copy(f.values.begin(), f.values.end(), out.mutable_data());
    return out;
}

py::array_t<double> to_numpy(const SampledField2D& f) {
    py::array_t<double> out({f.grid.size, f.grid.size});
    std::copy(f.values.begin(), f.values.end(), out.mutable_data());
    return out;
}

py::array_t<Complex> to_numpy(const Spectrum1D& s) {
    py::array_t<Complex> out(std::vector<py::ssize_t>{static_cast<py::ssize_t>(s.coef.size())});
    std::copy(s.coef.begin(), s.coef.end(), out.mutable_data());
    return out;
}

py::array_t<Complex> to_numpy(const Spectrum2D& s) {
    py::array_t<Complex> out({2 * s.max_m + 1, 2 * s.max_n + 1});
    std::copy(s.coef.begin(), s.coef.end(), out.mutable_data());
    return out;
}

Spectrum1D spectrum_1d_from(py::array_t<Complex, py::array::c_style | py::array::forcecast> a) {
    if (a.ndim() != 1 || a.shape(0) % 2 == 0) {
        throw std::invalid_argument("expected an odd-length 1D complex array");
    }
    Spectrum1D s = zero_spectrum_1d(static_cast<int>(a.shape(0)) / 2);
    std::copy(a.data(), a.data() + a.shape(0), s.coef.begin());
    return s;
}

Spectrum2D spectrum_2d_from(py::array_t<Complex, py::array::c_style | py::array::forcecast> a) {
    if (a.ndim() != 2 || a.shape(0) % 2 == 0 || a.shape(1) % 2 == 0) {
        throw std::invalid_argument("expected an odd-by-odd 2D complex array");
    }
    Spectrum2D s = zero_spectrum_2d(static_cast<int>(a.shape(0)) / 2,
                                    static_cast<int>(a.shape(1)) / 2);
    std::copy(a.data(), a.data() + a.size(), s.coef.begin());
    return s;
}

singular::PvKernel kernel_from(const std::string& name, int order) {
    if (name == "conjugate") return singular::PvKernel::conjugate();
    if (name == "cosine") return singular::PvKernel::cosine(order);
    if (name == "sine") return singular::PvKernel::sine(order);
    throw std::invalid_argument("kernel must be conjugate, cosine or sine");
}

functionals::YoungFunction young_from(const std::string& name) {
    if (name == "phi") return functionals::young_phi();
    if (name == "psi") return functionals::young_psi();
    throw std::invalid_argument("young function must be phi or psi");
}

functionals::MeanSpec mean_from(const std::string& kind, double p, double a,
                                const std::function<double(double)>& psi) {
    using functionals::MeanSpec;
    if (kind == "power") return MeanSpec::power(p);
    if (kind == "phi") return MeanSpec::young_phi();
    if (kind == "exp") return MeanSpec::exponential(a);
    if (kind == "psi") return MeanSpec::general(psi);
    throw std::invalid_argument("mean kind must be power, phi, exp or psi");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "quadratic partial sums of double Fourier series: operators and functionals";

    m.def("grid_nodes", [](int g) {
        PeriodicGrid grid = make_grid(g);
        std::vector<py::ssize_t> shape{g};
        py::array_t<double> primal(shape), offset(shape);
        for (int j = 0; j < g; ++j) {
            primal.mutable_data()[j] = grid.primal_node(j);
            offset.mutable_data()[j] = grid.offset_node(j);
        }
        return py::make_tuple(primal, offset);
    }, py::arg("size"), "primal and offset nodes of the periodic grid");

    m.def("analyze_1d", [](py::array_t<double, py::array::c_style | py::array::forcecast> f,
                           int max_freq) {
        return to_numpy(fourier::analyze_1d(field_1d_from(f), max_freq));
    }, py::arg("samples"), py::arg("max_freq"));

    m.def("analyze_2d", [](py::array_t<double, py::array::c_style | py::array::forcecast> f,
                           int max_m, int max_n) {
        return to_numpy(fourier::analyze_2d(field_2d_from(f), max_m, max_n));
    }, py::arg("samples"), py::arg("max_m"), py::arg("max_n"));

    m.def("partial_sum_1d", [](py::array_t<Complex> s, int n, double x) {
        return fourier::partial_sum_1d(spectrum_1d_from(s), n, x);
    }, py::arg("spectrum"), py::arg("n"), py::arg("x"));

    m.def("partial_sum_grid", [](py::array_t<Complex> s, int n, int g) {
        return to_numpy(fourier::partial_sum_1d(spectrum_1d_from(s), n, make_grid(g)));
    }, py::arg("spectrum"), py::arg("n"), py::arg("grid"));

    m.def("cesaro_mean", [](py::array_t<Complex> s, int n, double x) {
        return fourier::cesaro_mean(spectrum_1d_from(s), n, x);
    }, py::arg("spectrum"), py::arg("n"), py::arg("x"));

    m.def("rectangular_sum", [](py::array_t<Complex> s, int m, int n, int g) {
        return to_numpy(fourier::rectangular_sum(spectrum_2d_from(s), m, n, make_grid(g)));
    }, py::arg("spectrum"), py::arg("m"), py::arg("n"), py::arg("grid"));

    m.def("synthesize_1d", [](py::array_t<Complex> s, int g) {
        return to_numpy(fourier::synthesize_1d(spectrum_1d_from(s), make_grid(g)));
    }, py::arg("spectrum"), py::arg("grid"));

    m.def("synthesize_2d", [](py::array_t<Complex> s, int g) {
        return to_numpy(fourier::synthesize_2d(spectrum_2d_from(s), make_grid(g)));
    }, py::arg("spectrum"), py::arg("grid"));

    m.def("dirichlet_kernels", [](int n, double t) {
        return fourier::dirichlet_kernels(n, t);
    }, py::arg("n"), py::arg("t"), "(D_n(t), conjugate D_n(t))");

    m.def("pv_transform", [](py::array_t<double, py::array::c_style | py::array::forcecast> f,
                             const std::string& kernel, int order, bool linear) {
        return to_numpy(singular::pv_transform(field_1d_from(f), kernel_from(kernel, order),
                                               linear ? singular::Interp::Linear
                                                      : singular::Interp::Spectral));
    }, py::arg("samples"), py::arg("kernel"), py::arg("order") = 0, py::arg("linear") = false);

    m.def("conjugate_function", [](py::array_t<Complex> s) {
        return to_numpy(singular::conjugate_function(spectrum_1d_from(s)));
    }, py::arg("spectrum"));

    m.def("conjugate_partial_sum", [](py::array_t<Complex> s, int n, int g) {
        return to_numpy(singular::conjugate_partial_sum(spectrum_1d_from(s), n, make_grid(g)));
    }, py::arg("spectrum"), py::arg("n"), py::arg("grid"));

    m.def("u_transform", [](py::array_t<double, py::array::c_style | py::array::forcecast> f,
                            int n) {
        return to_numpy(singular::u_transform(field_1d_from(f), n));
    }, py::arg("samples"), py::arg("n"));

    m.def("modified_quadratic_sum",
          [](py::array_t<double, py::array::c_style | py::array::forcecast> f, int n) {
              return to_numpy(singular::modified_quadratic_sum(field_2d_from(f), n));
          }, py::arg("samples"), py::arg("n"));

    m.def("correction_terms",
          [](py::array_t<double, py::array::c_style | py::array::forcecast> f, int n) {
              singular::CorrectionReport rep = singular::correction_terms(field_2d_from(f), n);
              py::dict out;
              out["s1"] = to_numpy(rep.s1);
              out["s2"] = to_numpy(rep.s2);
              out["s3"] = to_numpy(rep.s3);
              out["residual"] = rep.residual;
              return out;
          }, py::arg("samples"), py::arg("n"));

    m.def("tan_identity_residual", &singular::tan_identity_residual, py::arg("u"), py::arg("v"),
          py::arg("margin") = 1e-3);

    m.def("diagonal_conjugate",
          [](py::array_t<double, py::array::c_style | py::array::forcecast> f) {
              return to_numpy(singular::diagonal_conjugate(field_2d_from(f)));
          }, py::arg("samples"));

    m.def("ij_decomposition",
          [](py::array_t<double, py::array::c_style | py::array::forcecast> f, int n) {
              singular::IjReport rep = singular::ij_decomposition(field_2d_from(f), n);
              py::dict out;
              out["i"] = to_numpy(rep.i_term);
              out["j"] = to_numpy(rep.j_term);
              out["i_sheared"] = to_numpy(rep.i_sheared);
              out["i0"] = to_numpy(rep.i0);
              out["i1"] = to_numpy(rep.i1);
              out["i2"] = to_numpy(rep.i2);
              out["split_residual"] = rep.split_residual;
              out["chain_residual"] = rep.chain_residual;
              out["shear_gap"] = rep.shear_gap;
              return out;
          }, py::arg("samples"), py::arg("n"));

    m.def("slice_transforms",
          [](py::array_t<double, py::array::c_style | py::array::forcecast> f) {
              singular::SliceReport rep = singular::slice_transforms(field_2d_from(f));
              int g = rep.size;
              py::array_t<double> f1({g, g, g}), f2({g, g, g});
              std::copy(rep.f1.begin(), rep.f1.end(), f1.mutable_data());
              std::copy(rep.f2.begin(), rep.f2.end(), f2.mutable_data());
              py::dict out;
              out["f1"] = f1;
              out["f2"] = f2;
              out["l1_f1"] = rep.l1_f1;
              out["l1_f2"] = rep.l1_f2;
              return out;
          }, py::arg("samples"));

    m.def("bmo_norm_step", [](const std::vector<double>& values, int refinement) {
        functionals::BmoResult r =
            functionals::bmo_norm_step(functionals::make_step_sequence(values), refinement);
        py::dict out;
        out["total"] = r.total;
        out["oscillation"] = r.oscillation;
        out["mean"] = r.mean_abs;
        out["a"] = r.a;
        out["b"] = r.b;
        return out;
    }, py::arg("values"), py::arg("refinement") = 16);

    m.def("bmo_sequence", [](const std::vector<double>& values, int refinement, int max_prefix) {
        return functionals::bmo_sequence(values, refinement, max_prefix);
    }, py::arg("values"), py::arg("refinement") = 16, py::arg("max_prefix") = 64);

    m.def("bmo_of_partial_sums", [](py::array_t<Complex> s, double x, double y, int truncation,
                                    int refinement) {
        return functionals::bmo_of_partial_sums(spectrum_2d_from(s), x, y, truncation, refinement);
    }, py::arg("spectrum"), py::arg("x"), py::arg("y"), py::arg("truncation"),
          py::arg("refinement") = 16);

    m.def("luxemburg_norm", [](const std::vector<double>& values, const std::string& young) {
        return functionals::luxemburg_norm(functionals::make_step_sequence(values),
                                           young_from(young));
    }, py::arg("values"), py::arg("young") = "psi",
          "Luxemburg norm of a step function on [0,1]");

    m.def("luxemburg_norm_2d",
          [](py::array_t<double, py::array::c_style | py::array::forcecast> f,
             const std::string& young) {
              return functionals::luxemburg_norm(field_2d_from(f), young_from(young));
          }, py::arg("samples"), py::arg("young") = "psi");

    m.def("llogl_norm", [](py::array_t<double, py::array::c_style | py::array::forcecast> f) {
        return harness::llogl_norm(field_2d_from(f));
    }, py::arg("samples"));

    m.def("strong_mean_1d", [](py::array_t<Complex> s, double x, int n, const std::string& kind,
                               double p, double a, const std::function<double(double)>& psi) {
        return functionals::strong_mean_1d(spectrum_1d_from(s), x, n, mean_from(kind, p, a, psi));
    }, py::arg("spectrum"), py::arg("x"), py::arg("n"), py::arg("kind") = "exp",
          py::arg("p") = 2.0, py::arg("a") = 1.0, py::arg("psi") = nullptr);

    m.def("summability_mean_2d", [](py::array_t<Complex> s, double x, double y, int n,
                                    const std::string& kind, double p, double a,
                                    const std::function<double(double)>& psi) {
        return functionals::summability_mean_2d(spectrum_2d_from(s), x, y, n,
                                                mean_from(kind, p, a, psi));
    }, py::arg("spectrum"), py::arg("x"), py::arg("y"), py::arg("n"), py::arg("kind") = "exp",
          py::arg("p") = 2.0, py::arg("a") = 1.0, py::arg("psi") = nullptr);

    m.def("b_functional", [](py::array_t<Complex> s, double x, double y, int truncation) {
        return functionals::b_functional(spectrum_2d_from(s), x, y, truncation);
    }, py::arg("spectrum"), py::arg("x"), py::arg("y"), py::arg("truncation"));

    m.def("eval_expression", [](const std::string& src, double x, double y) {
        return harness::FunctionExpr::parse(src).eval(x, y);
    }, py::arg("src"), py::arg("x"), py::arg("y") = 0.0);

    m.def("sample_expression", [](const std::string& src, int g) {
        return to_numpy(
            harness::sample_expression(harness::FunctionExpr::parse(src), make_grid(g)));
    }, py::arg("src"), py::arg("grid"));

    m.def("weak_type_csv", [](const std::string& config_text) {
        return harness::render_csv(
            harness::weak_type_experiment(harness::parse_config_text(config_text)));
    }, py::arg("config_text"));

    m.def("convergence_csv", [](const std::string& config_text) {
        return harness::render_csv(
            harness::convergence_experiment(harness::parse_config_text(config_text)));
    }, py::arg("config_text"));
}
