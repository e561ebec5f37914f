#include "msnl/io/factor_io.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>

#include "msnl/core/errors.hpp"

namespace msnl {

static_assert(std::endian::native == std::endian::little,
              "factor files are written in host byte order");

namespace {

constexpr char kMagic[8] = {'M', 'S', 'N', 'L', 'F', 'A', 'C', 'T'};

template <class T>
void put(std::ostream& out, T value) {
  out.write(reinterpret_cast<const char*>(&value), sizeof(T));
}

template <class T>
T get(std::istream& in) {
  T value{};
  if (!in.read(reinterpret_cast<char*>(&value), sizeof(T))) {
    throw IoError("truncated factor file");
  }
  return value;
}

void put_string(std::ostream& out, const std::string& s) {
  put<std::uint64_t>(out, s.size());
  out.write(s.data(), static_cast<std::streamsize>(s.size()));
}

std::string get_string(std::istream& in) {
  const auto size = get<std::uint64_t>(in);
  if (size > (1u << 30)) throw IoError("corrupt factor file (string length)");
  std::string s(size, '\0');
  if (!in.read(s.data(), static_cast<std::streamsize>(size))) {
    throw IoError("truncated factor file");
  }
  return s;
}

template <class Derived>
void put_block(std::ostream& out, const Eigen::PlainObjectBase<Derived>& m) {
  out.write(reinterpret_cast<const char*>(m.data()),
            static_cast<std::streamsize>(m.size() * sizeof(double)));
}

template <class Derived>
void get_block(std::istream& in, Eigen::PlainObjectBase<Derived>& m) {
  if (!in.read(reinterpret_cast<char*>(m.data()),
               static_cast<std::streamsize>(m.size() * sizeof(double)))) {
    throw IoError("truncated factor file");
  }
}

}  // namespace

std::size_t FactorFile::node_count() const {
  return std::visit([](const auto& s) { return s.node_count(); }, state);
}

int FactorFile::dim() const {
  return std::visit([](const auto& s) { return s.dim(); }, state);
}

double FactorFile::predict(NodeIndex m, NodeIndex n) const {
  if (const auto* s = std::get_if<FactorState>(&state)) return msnl::predict(*s, m, n);
  return nlf_predict(std::get<NlfState>(state), m, n);
}

void write_factors(const FactorFile& file, std::ostream& out) {
  out.write(kMagic, sizeof(kMagic));
  put<std::uint32_t>(out, kFactorFormatVersion);
  put<std::uint32_t>(out, file.kind() == ModelKind::kMsnl ? 0 : 1);
  put<std::uint64_t>(out, file.node_count());
  put<std::uint64_t>(out, static_cast<std::uint64_t>(file.dim()));
  put_string(out, nlohmann::json(file.config).dump());
  put_string(out, file.dataset_ref);
  if (const auto* s = std::get_if<FactorState>(&file.state)) {
    put_block(out, s->theta1);
    put_block(out, s->theta2);
    for (const auto* m : {&s->q, &s->y, &s->p, &s->x, &s->u, &s->v, &s->w}) {
      put_block(out, *m);
    }
  } else {
    const auto& n = std::get<NlfState>(file.state);
    put_block(out, n.p);
    put_block(out, n.x);
  }
}

FactorFile read_factors(std::istream& in) {
  char magic[sizeof(kMagic)];
  if (!in.read(magic, sizeof(magic)) || std::memcmp(magic, kMagic, sizeof(kMagic)) != 0) {
    throw IoError("not a factor file");
  }
  const auto version = get<std::uint32_t>(in);
  if (version != kFactorFormatVersion) {
    throw IoError("unsupported factor file version " + std::to_string(version));
  }
  const auto kind = get<std::uint32_t>(in);
  if (kind > 1) throw IoError("unknown model kind in factor file");
  const auto rows = static_cast<Eigen::Index>(get<std::uint64_t>(in));
  const auto dim = static_cast<Eigen::Index>(get<std::uint64_t>(in));
  if (rows < 0 || dim < 1 || dim > 1 << 20) throw IoError("corrupt factor file (shape)");

  FactorFile file;
  try {
    file.config = nlohmann::json::parse(get_string(in)).get<TrainConfig>();
  } catch (const nlohmann::json::exception& err) {
    throw IoError(std::string("corrupt config in factor file: ") + err.what());
  }
  file.dataset_ref = get_string(in);
  if (kind == 0) {
    FactorState s;
    s.theta1.resize(rows);
    s.theta2.resize(rows);
    get_block(in, s.theta1);
    get_block(in, s.theta2);
    for (auto* m : {&s.q, &s.y, &s.p, &s.x, &s.u, &s.v, &s.w}) {
      m->resize(rows, dim);
      get_block(in, *m);
    }
    file.state = std::move(s);
  } else {
    NlfState n;
    n.p.resize(rows, dim);
    n.x.resize(rows, dim);
    get_block(in, n.p);
    get_block(in, n.x);
    file.state = std::move(n);
  }
  return file;
}

void save_factors(const FactorFile& file, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  write_factors(file, out);
  if (!out) throw IoError("write failed for '" + path.string() + "'");
}

FactorFile load_factors(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  return read_factors(in);
}

}  // namespace msnl
