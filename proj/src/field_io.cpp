#include "mcfs/field_io.hpp"

#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

#include "mcfs/errors.hpp"

namespace mcfs {

namespace {
// Node data is stored little-endian; this library targets little-endian
// hosts and asserts so at runtime.
bool host_little_endian() {
    const std::uint32_t v = 1;
    std::uint8_t b;
    std::memcpy(&b, &v, 1);
    return b == 1;
}
}  // namespace

void write_lsf(const LevelSetField& field, const std::string& path) {
    if (!host_little_endian()) throw std::runtime_error("write_lsf: big-endian host unsupported");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("write_lsf: cannot open " + path);

    const auto& res = field.spec.resolution();
    char header[512];
    std::snprintf(header, sizeof(header),
                  "lsf 1\norigin %.17g %.17g %.17g\nresolution %d %d %d\nspacing %.17g\n"
                  "band_width %.17g\ntime %.17g\nsdf %d\ndata\n",
                  field.spec.origin()[0], field.spec.origin()[1], field.spec.origin()[2], res[0],
                  res[1], res[2], field.spec.spacing(), field.band_width, field.time,
                  field.sdf_flag ? 1 : 0);
    out << header;

    std::vector<float> buf(field.values.size());
    for (std::size_t i = 0; i < field.values.size(); ++i) buf[i] = float(field.values[i]);
    out.write(reinterpret_cast<const char*>(buf.data()),
              std::streamsize(buf.size() * sizeof(float)));
    if (!out) throw std::runtime_error("write_lsf: write failed for " + path);
}

LevelSetField read_lsf(const std::string& path) {
    if (!host_little_endian()) throw std::runtime_error("read_lsf: big-endian host unsupported");
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("read_lsf: cannot open " + path);

    Vec3 origin;
    Vec3i res;
    double spacing = 0, band = 0, time = 0;
    int sdf = 0;
    std::string line, key;
    bool seen_data = false;
    std::getline(in, line);
    if (line != "lsf 1") throw std::runtime_error("read_lsf: bad magic in " + path);
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        ls >> key;
        if (key == "origin")
            ls >> origin[0] >> origin[1] >> origin[2];
        else if (key == "resolution")
            ls >> res[0] >> res[1] >> res[2];
        else if (key == "spacing")
            ls >> spacing;
        else if (key == "band_width")
            ls >> band;
        else if (key == "time")
            ls >> time;
        else if (key == "sdf")
            ls >> sdf;
        else if (key == "data") {
            seen_data = true;
            break;
        } else
            throw std::runtime_error("read_lsf: unknown header key '" + key + "'");
    }
    if (!seen_data) throw std::runtime_error("read_lsf: missing data section");

    LevelSetField field(GridSpec(origin, spacing, res), band);
    field.time = time;
    field.sdf_flag = (sdf != 0);
    std::vector<float> buf(field.values.size());
    in.read(reinterpret_cast<char*>(buf.data()), std::streamsize(buf.size() * sizeof(float)));
    if (std::size_t(in.gcount()) != buf.size() * sizeof(float))
        throw std::runtime_error("read_lsf: truncated node data in " + path);
    for (std::size_t i = 0; i < buf.size(); ++i) field.values[i] = double(buf[i]);
    return field;
}

void write_obj(const SurfaceMesh& mesh, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("write_obj: cannot open " + path);
    char line[256];
    std::snprintf(line, sizeof(line), "# t %.17g\n", mesh.time);
    out << line;
    for (const auto& v : mesh.vertices) {
        std::snprintf(line, sizeof(line), "v %.9g %.9g %.9g\n", v[0], v[1], v[2]);
        out << line;
    }
    for (const auto& n : mesh.normals) {
        std::snprintf(line, sizeof(line), "vn %.9g %.9g %.9g\n", n[0], n[1], n[2]);
        out << line;
    }
    for (const auto& t : mesh.triangles) {
        std::snprintf(line, sizeof(line), "f %d//%d %d//%d %d//%d\n", t[0] + 1, t[0] + 1, t[1] + 1,
                      t[1] + 1, t[2] + 1, t[2] + 1);
        out << line;
    }

    if (!mesh.mean_curvature.empty()) {
        std::ofstream csv(path + ".curv.csv");
        csv << "vertex,H,lambda1,lambda2\n";
        for (std::size_t v = 0; v < mesh.mean_curvature.size(); ++v) {
            std::snprintf(line, sizeof(line), "%zu,%.9g,%.9g,%.9g\n", v, mesh.mean_curvature[v],
                          mesh.lambda1[v], mesh.lambda2[v]);
            csv << line;
        }
    }
}

}  // namespace mcfs
