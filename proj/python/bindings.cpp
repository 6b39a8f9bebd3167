// Python bindings. Instances and reports cross the boundary as plain
// dicts/lists with the same layout as the CLI's JSON.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wtap/baseline.hpp"
#include "wtap/bench.hpp"
#include "wtap/decomposition.hpp"
#include "wtap/generators.hpp"
#include "wtap/greedy.hpp"
#include "wtap/io.hpp"
#include "wtap/oracle.hpp"
#include "wtap/ratio_search.hpp"
#include "wtap/report.hpp"

namespace py = pybind11;

namespace {

nlohmann::json to_native(const py::handle& obj) {
  if (py::isinstance<py::str>(obj)) return nlohmann::json::parse(obj.cast<std::string>());
  const auto dumps = py::module_::import("json").attr("dumps");
  return nlohmann::json::parse(dumps(obj).cast<std::string>());
}

py::object to_python(const nlohmann::ordered_json& doc) {
  return py::module_::import("json").attr("loads")(doc.dump());
}

// Accepts "p/q" strings, ints and fractions.Fraction alike.
wtap::Rational to_rational(const py::handle& obj) { return wtap::Rational::parse(py::str(obj).cast<std::string>()); }

wtap::Instance load(const py::handle& obj) { return wtap::Instance::build(wtap::instance_from_json(to_native(obj))); }

struct Context {
  wtap::Instance inst;
  wtap::LinkPool pool;
  std::vector<wtap::LinkId> up;
  std::vector<wtap::LinkId> search;

  explicit Context(wtap::Instance i) : inst(std::move(i)), pool(inst) {
    up = wtap::materialize_paths(pool, wtap::cheapest_disjoint_uplink_cover(inst));
    std::sort(up.begin(), up.end());
    search = pool.original_ids();
    search.insert(search.end(), up.begin(), up.end());
    std::sort(search.begin(), search.end());
    search.erase(std::unique(search.begin(), search.end()), search.end());
  }
  Context(const Context&) = delete;
  Context& operator=(const Context&) = delete;
};

py::object validate(const py::handle& instance) {
  auto issues = nlohmann::ordered_json::array();
  for (const auto& i : wtap::validate(wtap::instance_from_json(to_native(instance)))) {
    issues.push_back({{"code", wtap::to_string(i.code)}, {"subject", i.subject}, {"message", i.message}});
  }
  return to_python(issues);
}

py::object solve(const py::handle& instance, const std::string& algorithm, const py::handle& eps,
                 std::optional<int> k, bool full_shadows) {
  const auto inst = load(instance);
  if (algorithm == "uplink2") {
    auto doc = wtap::to_json(inst, wtap::cheapest_disjoint_uplink_cover(inst));
    doc["solution"] = wtap::to_json(wtap::two_approx_only(inst));
    return to_python(doc);
  }
  if (algorithm != "relgreedy") throw std::invalid_argument("unknown algorithm '" + algorithm + "'");
  const auto e = to_rational(eps);
  py::gil_scoped_release release;
  const auto run = wtap::relative_greedy(inst, e, {k, full_shadows});
  py::gil_scoped_acquire acquire;
  return to_python(wtap::to_json(run, e));
}

py::object exact(const py::handle& instance, std::size_t max_links) {
  const auto inst = load(instance);
  wtap::OracleBudget budget;
  budget.max_links = max_links;
  auto doc = wtap::to_json(wtap::exact_opt(inst, budget));
  doc["scale"] = inst.scale();
  return to_python(doc);
}

py::object best_ratio(const py::handle& instance, int k) {
  Context ctx(load(instance));
  if (ctx.up.empty()) throw wtap::EmptyUpLinkSet();
  return to_python(wtap::to_json(ctx.pool, wtap::best_ratio_component(ctx.pool, ctx.up, k, ctx.search), k));
}

py::object max_slack(const py::handle& instance, const py::handle& rho, int k) {
  Context ctx(load(instance));
  return to_python(wtap::to_json(ctx.pool, wtap::slack_max(ctx.pool, ctx.up, k, to_rational(rho), ctx.search), k));
}

py::object decompose(const py::handle& instance, const std::vector<wtap::LinkId>& cover, const py::handle& eps) {
  Context ctx(load(instance));
  for (auto id : cover) {
    if (id < 0 || static_cast<std::size_t>(id) >= ctx.inst.links().size()) {
      throw std::invalid_argument("link id " + std::to_string(id) + " out of range");
    }
  }
  if (!wtap::covers_all_edges(ctx.pool, cover)) throw std::invalid_argument("links do not cover every edge");
  const auto d = wtap::decompose(ctx.pool, cover, ctx.up, to_rational(eps));
  return to_python(wtap::to_json(ctx.pool, d, wtap::verify_dependency_graph(ctx.pool, cover, ctx.up),
                                 wtap::verify_decomposition(ctx.pool, cover, ctx.up, d)));
}

py::object bench(const py::handle& config, int jobs) {
  const auto native = to_native(config);
  wtap::BenchReport report;
  {
    py::gil_scoped_release release;
    report = wtap::run_bench(native, {jobs, false});
  }
  return to_python(wtap::bench_to_json(report));
}

}  // namespace

PYBIND11_MODULE(_wtap, m) {
  m.doc() = "Weighted tree augmentation solvers and oracles";
  m.attr("__version__") = wtap::kVersion;

  static py::exception<wtap::BudgetExceeded> budget_error(m, "BudgetExceeded", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const wtap::BudgetExceeded& e) {
      py::set_error(budget_error, e.what());
    } catch (const wtap::ValidationError& e) {
      py::set_error(PyExc_ValueError, e.what());
    } catch (const wtap::ParseError& e) {
      py::set_error(PyExc_ValueError, e.what());
    } catch (const nlohmann::json::exception& e) {
      py::set_error(PyExc_ValueError, e.what());
    }
  });

  m.def("validate", &validate, py::arg("instance"), "List of problems with an instance (empty when valid).");
  m.def("gen_random", [](int n, int links, wtap::Weight weight_max, std::uint64_t seed) {
    return to_python(wtap::instance_to_json(wtap::gen_random(n, links, weight_max, seed)));
  }, py::arg("n"), py::arg("links"), py::arg("weight_max") = 10, py::arg("seed") = 1);
  m.def("gen_fig2", [](int d, wtap::Weight big_m) { return to_python(wtap::instance_to_json(wtap::gen_fig2(d, big_m))); },
        py::arg("d"), py::arg("M"));
  m.def("gen_fig3", [](int size) { return to_python(wtap::instance_to_json(wtap::gen_fig3(size))); }, py::arg("m"));
  m.def("solve", &solve, py::arg("instance"), py::arg("algorithm") = "relgreedy", py::arg("eps") = "1",
        py::arg("k") = py::none(), py::arg("full_shadows") = false);
  m.def("exact", &exact, py::arg("instance"), py::arg("max_links") = 20);
  m.def("best_ratio", &best_ratio, py::arg("instance"), py::arg("k") = 2,
        "Best-ratio k-thin component against the baseline up-links.");
  m.def("max_slack", &max_slack, py::arg("instance"), py::arg("rho"), py::arg("k") = 2);
  m.def("decompose", &decompose, py::arg("instance"), py::arg("cover"), py::arg("eps") = "1");
  m.def("bench", &bench, py::arg("config"), py::arg("jobs") = 1);
}
