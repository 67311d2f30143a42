#include "qlat/qlat.h"

#include <cstdlib>
#include <cstring>
#include <algorithm>
#include <fstream>
#include <limits>
#include <string>

#include "qlat/cut_project.hpp"
#include "qlat/error.hpp"
#include "qlat/icosian.hpp"
#include "qlat/quasilattice.hpp"
#include "qlat/reflection_group.hpp"
#include "qlat/text.hpp"

struct qlat_group {
  qlat::ReflectionGroup group;
};

struct qlat_patch {
  qlat::Patch patch;
};

namespace {

thread_local std::string g_last_error;

template <class F>
qlat_status guard(F&& f) {
  try {
    g_last_error.clear();
    f();
    return QLAT_OK;
  } catch (const qlat::DomainError& e) {
    g_last_error = e.what();
    return QLAT_ERR_DOMAIN;
  } catch (const qlat::UnsupportedError& e) {
    g_last_error = e.what();
    return QLAT_ERR_UNSUPPORTED;
  } catch (const qlat::ParseError& e) {
    g_last_error = e.what();
    return QLAT_ERR_PARSE;
  } catch (const qlat::IoError& e) {
    g_last_error = e.what();
    return QLAT_ERR_IO;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return QLAT_ERR_ARGUMENT;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return QLAT_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return QLAT_ERR_INTERNAL;
  }
}

void require(const void* p, const char* name) {
  if (!p) throw std::invalid_argument(std::string(name) + " must not be null");
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

extern "C" {

const char* qlat_last_error(void) { return g_last_error.c_str(); }

void qlat_free_string(char* s) { std::free(s); }

const char* qlat_version(void) { return "0.1.0"; }

qlat_status qlat_root_count(const char* system, size_t* count) {
  return guard([&] {
    require(system, "system");
    require(count, "count");
    *count = qlat::float_roots(qlat::RootSystemId::parse(system)).size();
  });
}

qlat_status qlat_roots_json(const char* system, char** json) {
  return guard([&] {
    require(system, "system");
    require(json, "json");
    const auto id = qlat::RootSystemId::parse(system);
    *json = dup_string(qlat::roots_json(id, qlat::roots(id)).dump());
  });
}

qlat_status qlat_group_generate(const char* system, qlat_group** out) {
  return guard([&] {
    require(system, "system");
    require(out, "out");
    *out = new qlat_group{qlat::ReflectionGroup::generate(qlat::RootSystemId::parse(system))};
  });
}

void qlat_group_free(qlat_group* g) { delete g; }

qlat_status qlat_group_order(const qlat_group* g, size_t* order) {
  return guard([&] {
    require(g, "group");
    require(order, "order");
    *order = g->group.order();
  });
}

qlat_status qlat_group_json(const qlat_group* g, char** json) {
  return guard([&] {
    require(g, "group");
    require(json, "json");
    *json = dup_string(qlat::group_json(g->group).dump());
  });
}

qlat_status qlat_group_orbit_json(const qlat_group* g, const char* vector, char** json) {
  return guard([&] {
    require(g, "group");
    require(vector, "vector");
    require(json, "json");
    const auto v = qlat::parse_exact_vector(vector, g->group.frame().kappa);
    if (v.dim() != g->group.frame().dim()) throw qlat::DomainError("vector dimension does not match the group");
    qlat::Json list = qlat::Json::array();
    for (const auto& x : g->group.orbit(v)) list.push_back(qlat::to_json(x));
    *json = dup_string(qlat::Json{{"size", list.size()}, {"orbit", list}}.dump());
  });
}

qlat_status qlat_h4_quaternion_census(size_t* parameterizations, size_t* distinct, size_t* min_fiber,
                                      size_t* max_fiber) {
  return guard([&] {
    const auto c = qlat::h4_quaternion_pair_census();
    if (parameterizations) *parameterizations = c.parameterizations;
    if (distinct) *distinct = c.distinct;
    if (min_fiber) *min_fiber = c.min_fiber;
    if (max_fiber) *max_fiber = c.max_fiber;
  });
}

qlat_status qlat_icosian_closure(size_t* products, size_t* failures) {
  return guard([&] {
    const auto c = qlat::icosian_closure();
    if (products) *products = c.products;
    if (failures) *failures = c.failures;
  });
}

qlat_status qlat_icosian_ring_member(const char* quaternion, int* member) {
  return guard([&] {
    require(quaternion, "quaternion");
    require(member, "member");
    const auto v = qlat::parse_exact_vector(quaternion, qlat::kGolden);
    if (v.dim() != 4) throw qlat::DomainError("a quaternion has four coordinates");
    *member = qlat::is_in_icosian_ring(qlat::Quaternion(v)) ? 1 : 0;
  });
}

qlat_status qlat_ql_member(const char* ql, const char* vector, int* member) {
  return guard([&] {
    require(ql, "ql");
    require(vector, "vector");
    require(member, "member");
    const auto m = qlat::ql(qlat::parse_ql_id(ql));
    *member = m.contains(qlat::parse_exact_vector(vector, m.kappa())) ? 1 : 0;
  });
}

qlat_status qlat_ql_scale(const char* ql, const char* factor, long long power, char** verdict) {
  return guard([&] {
    require(ql, "ql");
    require(factor, "factor");
    require(verdict, "verdict");
    const auto m = qlat::ql(qlat::parse_ql_id(ql));
    const auto c = qlat::scale_classification(m, qlat::parse_quadratic(factor, m.kappa()), power);
    *verdict = dup_string(qlat::to_string(c.verdict));
  });
}

qlat_status qlat_residues_json(char** json) {
  return guard([&] {
    require(json, "json");
    *json = dup_string(qlat::residues_json(qlat::enumerate_h4_residues()).dump());
  });
}

qlat_status qlat_verify_table1_json(char** json, size_t* passed, size_t* total) {
  return guard([&] {
    const auto rep = qlat::verify_table1();
    if (passed) *passed = rep.passed();
    if (total) *total = rep.rows.size();
    if (json) *json = dup_string(qlat::table1_json(rep).dump());
  });
}

qlat_status qlat_patch_generate(const char* target, const char* window, double window_scale, double radius,
                                qlat_patch** out) {
  return guard([&] {
    require(target, "target");
    require(window, "window");
    require(out, "out");
    const auto emb = qlat::embedding(qlat::parse_ql_id(target));
    const qlat::Window w{qlat::parse_window_shape(window), window_scale};
    *out = new qlat_patch{qlat::generate_patch(emb, w, radius)};
  });
}

void qlat_patch_free(qlat_patch* p) { delete p; }

qlat_status qlat_patch_size(const qlat_patch* p, size_t* size, size_t* dim) {
  return guard([&] {
    require(p, "patch");
    if (size) *size = p->patch.points.size();
    if (dim) *dim = p->patch.points.empty() ? 0 : p->patch.points.front().position.size();
  });
}

qlat_status qlat_patch_positions(const qlat_patch* p, double* out, size_t capacity) {
  return guard([&] {
    require(p, "patch");
    require(out, "out");
    std::size_t i = 0;
    for (const auto& pt : p->patch.points) {
      for (double x : pt.position) {
        if (i == capacity) throw std::invalid_argument("output buffer too small");
        out[i++] = x;
      }
    }
  });
}

qlat_status qlat_patch_write_csv(const qlat_patch* p, const char* path) {
  return guard([&] {
    require(p, "patch");
    require(path, "path");
    std::ofstream os(path);
    if (!os) throw qlat::IoError(std::string("cannot open ") + path + " for writing");
    qlat::write_patch_csv(os, p->patch);
    if (!os) throw qlat::IoError(std::string("write to ") + path + " failed");
  });
}

qlat_status qlat_read_patch_positions(const char* path, double** out, size_t* size, size_t* dim) {
  return guard([&] {
    require(path, "path");
    require(out, "out");
    require(size, "size");
    require(dim, "dim");
    std::ifstream is(path);
    if (!is) throw qlat::IoError(std::string("cannot open ") + path);
    const auto pts = qlat::read_patch_positions(is);
    const std::size_t d = pts.empty() ? 0 : pts.front().size();
    double* buf = static_cast<double*>(std::malloc(std::max<std::size_t>(1, pts.size() * d) * sizeof(double)));
    if (!buf) throw std::bad_alloc();
    for (std::size_t i = 0; i < pts.size(); ++i) std::copy(pts[i].begin(), pts[i].end(), buf + i * d);
    *out = buf;
    *size = pts.size();
    *dim = d;
  });
}

void qlat_free_doubles(double* p) { std::free(p); }

qlat_status qlat_reciprocal_point(const char* target, const long long* dual, size_t n, double* k, size_t dim) {
  return guard([&] {
    require(target, "target");
    require(dual, "dual");
    require(k, "k");
    const auto emb = qlat::embedding(qlat::parse_ql_id(target));
    if (dim != emb.dim) throw std::invalid_argument("k buffer must hold " + std::to_string(emb.dim) + " values");
    const auto r = qlat::reciprocal_point(emb, std::vector<long long>(dual, dual + n));
    for (std::size_t i = 0; i < dim; ++i) k[i] = r.parallel[i];
  });
}

qlat_status qlat_structure_factors(const double* points, size_t n, size_t dim, const double* ks, size_t m,
                                   double* out) {
  return guard([&] {
    require(points, "points");
    require(ks, "ks");
    require(out, "out");
    if (dim == 0) throw std::invalid_argument("dimension must be positive");
    std::vector<qlat::FloatVector> pts(n), kv(m);
    for (std::size_t i = 0; i < n; ++i) pts[i].assign(points + i * dim, points + (i + 1) * dim);
    for (std::size_t i = 0; i < m; ++i) kv[i].assign(ks + i * dim, ks + (i + 1) * dim);
    const auto s = qlat::structure_factors(pts, kv);
    std::copy(s.begin(), s.end(), out);
  });
}

qlat_status qlat_e8_report_json(char** json) {
  return guard([&] {
    require(json, "json");
    *json = dup_string(qlat::e8_report_json(qlat::project_e8()).dump());
  });
}

qlat_status qlat_fundamental_unit(int kappa, long long* a, long long* b, long long* delta, int* norm_sign) {
  return guard([&] {
    const auto u = qlat::fundamental_unit(kappa);
    const qlat::Integer limit(std::numeric_limits<long long>::max());
    if (u.a > limit || u.b > limit) throw qlat::DomainError("fundamental unit does not fit in 64-bit integers");
    if (a) *a = u.a.convert_to<long long>();
    if (b) *b = u.b.convert_to<long long>();
    if (delta) *delta = u.delta.convert_to<long long>();
    if (norm_sign) *norm_sign = u.norm_sign;
  });
}

qlat_status qlat_totient(unsigned long long n, unsigned long long* out) {
  return guard([&] {
    require(out, "out");
    *out = qlat::totient(n);
  });
}

}  // extern "C"
