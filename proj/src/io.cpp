#include "pme/io.hpp"

#include <cstdio>
#include <fstream>

namespace pme {

namespace {

std::string fmt17(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::ofstream open_or_throw(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open for writing: " + path);
    return out;
}

}  // namespace

void write_csv(const Snapshot& snapshot, const MeshGrid& mesh, const std::string& path) {
    auto out = open_or_throw(path);
    out << "x,y,c,chat\n";
    for (int i = 0; i < mesh.num_nodes(); ++i) {
        out << fmt17(mesh.node_x(i)) << ',' << fmt17(mesh.node_y(i)) << ','
            << fmt17(snapshot.c[static_cast<std::size_t>(i)]) << ','
            << fmt17(snapshot.chat[static_cast<std::size_t>(i)]) << '\n';
    }
    if (!out) throw IoError("write failed: " + path);
}

void write_diagnostics_csv(const std::vector<DiagnosticsRecord>& records,
                           const std::vector<double>& thetas, const std::string& path) {
    auto out = open_or_throw(path);
    out << "step,time,min_c,max_c,min_chat,max_chat,mass_c";
    for (double th : thetas) out << ",support_area_theta_" << fmt17(th);
    out << ",picard_iterations,converged,picard_error,blow_up\n";
    for (const auto& r : records) {
        out << r.step << ',' << fmt17(r.time) << ',' << fmt17(r.min_c) << ',' << fmt17(r.max_c)
            << ',' << fmt17(r.min_chat) << ',' << fmt17(r.max_chat) << ',' << fmt17(r.mass_c);
        for (std::size_t k = 0; k < thetas.size(); ++k) {
            out << ',' << (k < r.support_areas.size() ? fmt17(r.support_areas[k]) : "nan");
        }
        out << ',' << r.picard_iterations << ',' << (r.converged ? 1 : 0) << ','
            << fmt17(r.picard_error) << ',' << (r.blow_up ? 1 : 0) << '\n';
    }
    if (!out) throw IoError("write failed: " + path);
}

void write_vtk(const Snapshot& snapshot, const MeshGrid& mesh, const std::string& path) {
    auto out = open_or_throw(path);
    out << "# vtk DataFile Version 3.0\n";
    out << "pme snapshot step " << snapshot.step << "\n";
    out << "ASCII\n";
    out << "DATASET STRUCTURED_POINTS\n";
    out << "DIMENSIONS " << mesh.nx + 1 << ' ' << mesh.ny + 1 << " 1\n";
    out << "ORIGIN " << fmt17(mesh.xmin) << ' ' << fmt17(mesh.ymin) << " 0\n";
    out << "SPACING " << fmt17(mesh.hx) << ' ' << fmt17(mesh.hy) << " 1\n";
    out << "POINT_DATA " << mesh.num_nodes() << "\n";
    out << "SCALARS c double 1\nLOOKUP_TABLE default\n";
    for (double v : snapshot.c) out << fmt17(v) << '\n';
    out << "SCALARS chat double 1\nLOOKUP_TABLE default\n";
    for (double v : snapshot.chat) out << fmt17(v) << '\n';
    if (!out) throw IoError("write failed: " + path);
}

}  // namespace pme
