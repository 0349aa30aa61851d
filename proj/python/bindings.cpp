#include <pybind11/eigen.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "axitomo/error.hpp"
#include "axitomo/frame.hpp"
#include "axitomo/geometry.hpp"
#include "axitomo/io.hpp"
#include "axitomo/projector.hpp"
#include "axitomo/sim.hpp"
#include "axitomo/solver.hpp"

namespace py = pybind11;
using namespace axitomo;

namespace {

using Array = py::array_t<double, py::array::c_style | py::array::forcecast>;

std::vector<double> to_vector(const Array& a)
{
    return std::vector<double>(a.data(), a.data() + a.size());
}

template <typename T>
py::array_t<T> to_array(const std::vector<T>& v)
{
    py::array_t<T> out(static_cast<py::ssize_t>(v.size()));
    std::copy(v.begin(), v.end(), out.mutable_data());
    return out;
}

py::array_t<double> to_array_2d(const std::vector<double>& v, std::size_t rows, std::size_t cols)
{
    py::array_t<double> out({static_cast<py::ssize_t>(rows), static_cast<py::ssize_t>(cols)});
    std::copy(v.begin(), v.end(), out.mutable_data());
    return out;
}

Image image_from(const Array& a)
{
    if (a.ndim() != 2)
        throw ShapeError("expected a 2-D array");
    return Image(static_cast<std::size_t>(a.shape(0)), static_cast<std::size_t>(a.shape(1)), to_vector(a));
}

FilterBank bank_from(const Eigen::MatrixXd& b)
{
    const int r = static_cast<int>(std::lround(std::sqrt(static_cast<double>(b.rows()))));
    return FilterBank(r, b);
}

CoefficientStack stack_from(const Array& a)
{
    if (a.ndim() != 3)
        throw ShapeError("expected a 3-D coefficient array (channels, rows, cols)");
    const auto ch = a.shape(0);
    const auto rows = static_cast<std::size_t>(a.shape(1));
    const auto cols = static_cast<std::size_t>(a.shape(2));
    CoefficientStack s{rows, cols, Eigen::MatrixXd(ch, static_cast<Eigen::Index>(rows * cols))};
    const double* d = a.data();
    for (Eigen::Index i = 0; i < ch; ++i)
        for (Eigen::Index j = 0; j < s.coeffs.cols(); ++j)
            s.coeffs(i, j) = d[i * s.coeffs.cols() + j];
    return s;
}

py::array_t<double> stack_to(const CoefficientStack& s)
{
    py::array_t<double> out({static_cast<py::ssize_t>(s.channels()), static_cast<py::ssize_t>(s.rows),
                             static_cast<py::ssize_t>(s.cols)});
    double* d = out.mutable_data();
    for (Eigen::Index i = 0; i < s.coeffs.rows(); ++i)
        for (Eigen::Index j = 0; j < s.coeffs.cols(); ++j)
            d[i * s.coeffs.cols() + j] = s.coeffs(i, j);
    return out;
}

}  // namespace

PYBIND11_MODULE(_axitomo, m)
{
    m.doc() = "Axisymmetric object reconstruction from a single cone-beam projection";

    static py::exception<Error> base_error(m, "AxitomoError");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p)
                std::rethrow_exception(p);
        } catch (const IndexError& e) {
            PyErr_SetString(PyExc_IndexError, e.what());
        } catch (const Error& e) {
            py::set_error(base_error, e.what());
        }
    });

    py::class_<ConeBeamGeometry>(m, "ConeBeamGeometry")
        .def(py::init([](double source_x, double detector_x, double pitch_y, double pitch_z, int p, int q) {
                 ConeBeamGeometry g{source_x, detector_x, pitch_y, pitch_z, p, q};
                 g.validate();
                 return g;
             }),
             py::arg("source_x") = 40.0, py::arg("detector_x") = -50.0, py::arg("pitch_y") = 0.005,
             py::arg("pitch_z") = 0.005, py::arg("p") = 1, py::arg("q") = 1)
        .def_readwrite("source_x", &ConeBeamGeometry::source_x)
        .def_readwrite("detector_x", &ConeBeamGeometry::detector_x)
        .def_readwrite("pitch_y", &ConeBeamGeometry::pitch_y)
        .def_readwrite("pitch_z", &ConeBeamGeometry::pitch_z)
        .def_readwrite("p", &ConeBeamGeometry::p)
        .def_readwrite("q", &ConeBeamGeometry::q)
        .def_property_readonly("ray_count", &ConeBeamGeometry::ray_count)
        .def("ray_index", &ConeBeamGeometry::ray_index);

    py::class_<RadialGrid>(m, "RadialGrid")
        .def(py::init([](int m_, int n, double dr, double dz) {
                 RadialGrid g{m_, n, dr, dz};
                 g.validate();
                 return g;
             }),
             py::arg("m"), py::arg("n"), py::arg("dr"), py::arg("dz"))
        .def_readwrite("m", &RadialGrid::m)
        .def_readwrite("n", &RadialGrid::n)
        .def_readwrite("dr", &RadialGrid::dr)
        .def_readwrite("dz", &RadialGrid::dz)
        .def_property_readonly("cell_count", &RadialGrid::cell_count)
        .def("column", &RadialGrid::column);

    py::class_<Ray>(m, "Ray")
        .def(py::init<>())
        .def_readwrite("gamma", &Ray::gamma)
        .def_readwrite("alpha", &Ray::alpha);

    m.def("ray_from_detector", &ray_from_detector, py::arg("geometry"), py::arg("s"), py::arg("t"));
    m.def("planar_min_radius", &planar_min_radius);
    m.def("min_annulus_index", &min_annulus_index);
    m.def("cylinder_hits", [](const ConeBeamGeometry& g, const Ray& r, double rho) -> std::optional<std::pair<double, double>> {
        auto h = cylinder_hits(g, r, rho);
        if (!h)
            return std::nullopt;
        return std::make_pair(h->t0, h->t1);
    });

    py::class_<SystemMatrix>(m, "SystemMatrix")
        .def_property_readonly("shape", [](const SystemMatrix& a) { return py::make_tuple(a.rows(), a.cols()); })
        .def_property_readonly("nnz", &SystemMatrix::nnz)
        .def_property_readonly("indptr", [](const SystemMatrix& a) { return to_array(a.row_offsets()); })
        .def_property_readonly("indices", [](const SystemMatrix& a) { return to_array(a.col_indices()); })
        .def_property_readonly("data", [](const SystemMatrix& a) { return to_array(a.values()); })
        .def("matvec", [](const SystemMatrix& a, const Array& u) { return to_array(matvec(a, to_vector(u))); })
        .def("rmatvec", [](const SystemMatrix& a, const Array& w) { return to_array(rmatvec(a, to_vector(w))); })
        .def("norm", [](const SystemMatrix& a, int iters) { return operator_norm(a, iters); }, py::arg("iters") = 100)
        .def("save", [](const SystemMatrix& a, const std::string& path) { io::write_system_matrix(path, a); })
        .def_static("load", [](const std::string& path) { return io::read_system_matrix(path); });

    m.def("build_system_matrix", &build_system_matrix, py::arg("geometry"), py::arg("grid"),
          py::arg("use_symmetry") = true, py::call_guard<py::gil_scoped_release>());

    m.def("spectral_initial_bank", [](int r) { return spectral_initial_bank(r).filters; }, py::arg("r") = 7);
    m.def("analysis", [](const Eigen::MatrixXd& b, const Array& image) {
        return stack_to(analysis(bank_from(b), image_from(image)));
    });
    m.def("synthesis", [](const Eigen::MatrixXd& b, const Array& coeffs) {
        const Image img = synthesis(bank_from(b), stack_from(coeffs));
        return to_array_2d(img.data, img.rows, img.cols);
    });
    m.def("hard_threshold", [](const Array& coeffs, double thresh) {
        Array out(coeffs.request());
        py::array_t<double> res(out.request().shape);
        const double* s = coeffs.data();
        double* d = res.mutable_data();
        for (py::ssize_t k = 0; k < coeffs.size(); ++k)
            d[k] = std::abs(s[k]) > thresh ? s[k] : 0.0;
        return res;
    });
    m.def("procrustes_update",
          [](const Eigen::MatrixXd& v, const Eigen::MatrixXd& g) { return procrustes_update(v, g).filters; });
    m.def(
        "learn_filter_bank",
        [](const Array& image, const Eigen::MatrixXd& initial, double thresh, int n_alt) {
            LearnOptions opt;
            opt.n_alt = n_alt;
            auto res = learn_filter_bank_traced(image_from(image), bank_from(initial), thresh, opt);
            return py::make_tuple(res.bank.filters, res.objective);
        },
        py::arg("image"), py::arg("initial"), py::arg("thresh"), py::arg("n_alt") = 20);

    m.def("rasterize_default_phantom", [](const RadialGrid& grid) {
        const Volume v = rasterize(default_phantom(), grid);
        return to_array_2d(v.values, 2 * static_cast<std::size_t>(grid.n), static_cast<std::size_t>(grid.m));
    });
    m.def(
        "simulate",
        [](const SystemMatrix& a, const ConeBeamGeometry& geom, const RadialGrid& grid, const Array& u,
           double noise_variance, std::uint64_t seed) {
            const ProjectionData g = simulate(a, geom, Volume(grid, to_vector(u)), noise_variance, seed);
            return to_array(g.values);
        },
        py::arg("matrix"), py::arg("geometry"), py::arg("grid"), py::arg("volume"), py::arg("noise_variance") = 0.0,
        py::arg("seed") = 0);
    m.def("rmse", [](const Array& u, const Array& ref) {
        return rmse(std::span<const double>(u.data(), static_cast<std::size_t>(u.size())),
                    std::span<const double>(ref.data(), static_cast<std::size_t>(ref.size())));
    });

    py::class_<SolverParams>(m, "SolverParams")
        .def(py::init<>())
        .def_readwrite("lambda_", &SolverParams::lambda)
        .def_readwrite("gamma1", &SolverParams::gamma1)
        .def_readwrite("tau", &SolverParams::tau)
        .def_readwrite("sigma", &SolverParams::sigma)
        .def_readwrite("theta", &SolverParams::theta)
        .def_readwrite("n1", &SolverParams::n1)
        .def_readwrite("n2", &SolverParams::n2)
        .def_readwrite("eps", &SolverParams::eps)
        .def_readwrite("r", &SolverParams::r)
        .def_readwrite("n_alt", &SolverParams::n_alt)
        .def_readwrite("lambda_tv", &SolverParams::lambda_tv)
        .def_readwrite("tv_iters", &SolverParams::tv_iters)
        .def_readwrite("power_iters", &SolverParams::power_iters);

    m.def(
        "tv_reconstruct",
        [](const SystemMatrix& a, const RadialGrid& grid, const ConeBeamGeometry& geom, const Array& g,
           double lambda_tv, int n_iter) {
            ProjectionData data(geom, to_vector(g));
            const Volume u = [&] {
                py::gil_scoped_release release;
                const ProjectionOperator op(a);
                return tv_reconstruct(op, grid, data, lambda_tv, n_iter, op.norm());
            }();
            return to_array_2d(u.values, 2 * static_cast<std::size_t>(grid.n), static_cast<std::size_t>(grid.m));
        },
        py::arg("matrix"), py::arg("grid"), py::arg("geometry"), py::arg("projection"), py::arg("lambda_tv"),
        py::arg("n_iter") = 500);
    m.def(
        "reconstruct",
        [](const SystemMatrix& a, const RadialGrid& grid, const ConeBeamGeometry& geom, const Array& g,
           const SolverParams& params) {
            ProjectionData data(geom, to_vector(g));
            ReconstructionResult res = [&] {
                py::gil_scoped_release release;
                const ProjectionOperator op(a);
                return reconstruct(op, grid, data, params);
            }();
            py::list log;
            for (const auto& e : res.log) {
                py::dict d;
                d["iteration"] = e.iteration;
                d["objective"] = e.objective;
                d["data_residual"] = e.data_residual;
                d["frame_residual"] = e.frame_residual;
                d["relative_change"] = e.relative_change;
                log.append(d);
            }
            const auto rows = 2 * static_cast<std::size_t>(grid.n);
            const auto cols = static_cast<std::size_t>(grid.m);
            py::dict out;
            out["u"] = to_array_2d(res.u.values, rows, cols);
            out["u_init"] = to_array_2d(res.u_init.values, rows, cols);
            out["bank"] = res.bank.filters;
            out["op_norm"] = res.op_norm;
            out["log"] = log;
            return out;
        },
        py::arg("matrix"), py::arg("grid"), py::arg("geometry"), py::arg("projection"), py::arg("params"));
}
