#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pwbsim/archmodel.hpp"
#include "pwbsim/dataset.hpp"
#include "pwbsim/devices.hpp"
#include "pwbsim/experiment.hpp"
#include "pwbsim/mlp.hpp"
#include "pwbsim/nonideal.hpp"
#include "pwbsim/trace.hpp"

namespace py = pybind11;

using namespace pwbsim;

namespace {

py::dict technology_dict(const devices::MemoryTechnology& t) {
  py::dict d;
  d["name"] = t.name;
  d["alias"] = t.alias;
  d["endurance_cycles"] = t.endurance_cycles;
  d["endurance_is_lower_bound"] = t.endurance_is_lower_bound;
  d["retention_s"] = t.retention_s ? py::cast(*t.retention_s) : py::none();
  d["write_energy_j"] = t.write_energy_j;
  d["write_time_s"] = t.write_time_s;
  d["area_um2"] = t.area_um2;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Photonic weight-bank processor simulator: device figures of merit, "
            "non-ideality emulation, and architecture cost models.";

  // devices
  m.def("finesse", &devices::finesse, py::arg("fsr"), py::arg("fwhm"));
  m.def("compute_time", &devices::compute_time, py::arg("path_length_m"),
        py::arg("group_index"), py::arg("finesse"), py::arg("ring_radius_m"));
  m.def("write_time_from_frequency", &devices::write_time_from_frequency,
        py::arg("frequency_hz"));
  m.def("bit_precision", &devices::bit_precision, py::arg("mu_max"), py::arg("mu_min"),
        py::arg("sigma"));
  m.def("lorentzian_transmission", &devices::lorentzian_transmission, py::arg("detuning_nm"),
        py::arg("fwhm_nm"), py::arg("er_db"));
  m.def("resonance_shift", &devices::resonance_shift, py::arg("volts"),
        py::arg("tuning_pm_per_v") = 6.22);
  m.def("technologies", [] {
    py::list out;
    for (const auto& t : devices::technology_registry()) out.append(technology_dict(t));
    return out;
  });
  m.def("technology", [](const std::string& name) { return technology_dict(devices::technology(name)); },
        py::arg("name"));

  // nonideal
  m.def(
      "quantize",
      [](double w, std::optional<int> bits, double w_max) {
        if (!bits) return w;
        return nonideal::quantize(w, *bits, w_max);
      },
      py::arg("w"), py::arg("bits"), py::arg("w_max") = 3.0);
  m.def("laser_noise_rms", &nonideal::laser_noise_rms, py::arg("rin_db_per_hz"),
        py::arg("bandwidth_hz"));
  m.def(
      "decayed_weight",
      [](double w0, std::uint64_t k, double ratio) {
        return nonideal::decayed_weight(w0, k, nonideal::DecayConfig::from_ratio(ratio));
      },
      py::arg("w0"), py::arg("k"), py::arg("ratio"));
  m.def(
      "insertion_gain",
      [](double db_per_mrr, int mrrs_per_bank) {
        return nonideal::InsertionLoss{db_per_mrr, mrrs_per_bank, true}.linear_gain();
      },
      py::arg("db_per_mrr") = 0.125, py::arg("mrrs_per_bank") = 80);

  // archmodel
  m.def(
      "p_sram_dac",
      [](std::uint64_t n, double p_dac_w, double p_sram_static_w, double p_sram_dynamic_w) {
        archmodel::PowerModelParams p;
        p.n = n;
        p.p_dac_w = p_dac_w;
        p.p_sram_static_w = p_sram_static_w;
        p.p_sram_dynamic_w = p_sram_dynamic_w;
        return archmodel::p_sram_dac(p);
      },
      py::arg("n"), py::arg("p_dac_w") = 5e-3, py::arg("p_sram_static_w") = 10e-6,
      py::arg("p_sram_dynamic_w") = 1e-3);
  m.def(
      "p_deoam",
      [](std::uint64_t n, double p_dac_w, double activity, double capacitance_f,
         double frequency_hz, double voltage_v) {
        archmodel::PowerModelParams p;
        p.n = n;
        p.p_dac_w = p_dac_w;
        p.activity = activity;
        p.capacitance_f = capacitance_f;
        p.frequency_hz = frequency_hz;
        p.voltage_v = voltage_v;
        return archmodel::p_deoam(p);
      },
      py::arg("n"), py::arg("p_dac_w") = 5e-3, py::arg("activity") = 1.0,
      py::arg("capacitance_f") = 14.005e-12, py::arg("frequency_hz") = 7.9e6,
      py::arg("voltage_v") = 2.0);
  m.def(
      "crossover_n",
      [](double p_dac_w, double p_sram_static_w, double p_sram_dynamic_w, double activity,
         double capacitance_f, double frequency_hz, double voltage_v) -> py::object {
        archmodel::PowerModelParams p;
        p.p_dac_w = p_dac_w;
        p.p_sram_static_w = p_sram_static_w;
        p.p_sram_dynamic_w = p_sram_dynamic_w;
        p.activity = activity;
        p.capacitance_f = capacitance_f;
        p.frequency_hz = frequency_hz;
        p.voltage_v = voltage_v;
        const auto n = archmodel::crossover_n(p);
        return n ? py::cast(*n) : py::none();
      },
      py::arg("p_dac_w") = 5e-3, py::arg("p_sram_static_w") = 10e-6,
      py::arg("p_sram_dynamic_w") = 1e-3, py::arg("activity") = 1.0,
      py::arg("capacitance_f") = 14.005e-12, py::arg("frequency_hz") = 7.9e6,
      py::arg("voltage_v") = 2.0);
  m.def("max_rings", &archmodel::max_rings, py::arg("finesse"),
        py::arg("spacing_factor") = archmodel::kDefaultRingSpacingFactor);
  m.def(
      "map_network",
      [](const std::vector<std::size_t>& dims, std::uint64_t mrrs_per_bank,
         std::uint64_t ring_limit) {
        const auto s = archmodel::map_network(dims, mrrs_per_bank, ring_limit);
        py::dict d;
        d["cores"] = s.cores;
        d["rows_per_core"] = s.rows_per_core;
        d["mrrs_per_bank"] = s.mrrs_per_bank;
        d["wavelengths_per_core"] = s.wavelengths_per_core;
        d["soas"] = s.soas;
        d["pds"] = s.pds;
        d["tias"] = s.tias;
        d["modulators"] = s.modulators;
        d["memory_cells"] = s.memory_cells;
        d["thermal"] = s.thermal;
        return d;
      },
      py::arg("layer_dims"), py::arg("mrrs_per_bank"), py::arg("ring_limit") = 108);
  m.def("weight_updates", &archmodel::weight_updates, py::arg("dataset_size"),
        py::arg("batch_size"), py::arg("epochs"));
  m.def(
      "training_cost",
      [](std::uint64_t updates, const std::string& technology,
         const std::vector<std::size_t>& dims, std::uint64_t mrrs_per_bank) {
        const auto arch = archmodel::map_network(dims, mrrs_per_bank);
        const auto r = archmodel::training_cost(updates, devices::technology(technology), arch);
        py::dict d;
        d["technology"] = r.technology;
        d["updates"] = r.updates;
        d["train_time_s"] = r.train_time_s ? py::cast(*r.train_time_s) : py::none();
        d["energy_per_cell_j"] =
            r.energy_per_cell_j ? py::cast(*r.energy_per_cell_j) : py::none();
        d["memory_energy_j"] = r.memory_energy_j ? py::cast(*r.memory_energy_j) : py::none();
        d["endurance_margin"] = r.endurance_margin ? py::cast(*r.endurance_margin) : py::none();
        d["fails_before_training"] = r.fails_before_training;
        py::dict groups;
        for (const auto& g : r.breakdown)
          groups[py::str(g.group)] =
              py::make_tuple(g.count, py::make_tuple(g.energy_j.lo, g.energy_j.hi));
        d["breakdown"] = groups;
        return d;
      },
      py::arg("updates"), py::arg("technology"),
      py::arg("layer_dims") = std::vector<std::size_t>{784, 50, 10},
      py::arg("mrrs_per_bank") = 80);

  // experiments
  m.def(
      "default_config",
      [](const std::string& kind) {
        const auto k = experiments::kind_from_name(kind);
        if (!k) throw std::invalid_argument("unknown experiment kind: " + kind);
        return experiments::config_to_json_string(experiments::default_config(*k));
      },
      py::arg("kind"));
  m.def(
      "run_experiment",
      [](const std::string& config_json, std::optional<std::string> out_dir) {
        auto cfg = experiments::config_from_json_string(config_json);
        if (out_dir) cfg.out_dir = *out_dir;
        const auto result = experiments::run(cfg);
        py::list files;
        for (const auto& f : result.files) files.append(f.string());
        py::dict d;
        d["out_dir"] = result.out_dir.string();
        d["manifest"] = result.manifest.string();
        d["files"] = files;
        return d;
      },
      py::arg("config_json"), py::arg("out_dir") = std::nullopt);
  m.def(
      "threshold_finder",
      [](const std::vector<std::pair<double, double>>& curve, double degradation) -> py::object {
        const auto t = experiments::threshold_finder(curve, degradation);
        return t ? py::cast(*t) : py::none();
      },
      py::arg("curve"), py::arg("degradation") = 0.1);

  // quick train/eval on a small net, exercised by the smoke tests
  m.def(
      "quantize_matrix",
      [](std::vector<std::vector<double>> w, int bits, double w_max) {
        for (auto& row : w)
          for (double& v : row) v = nonideal::quantize(v, bits, w_max);
        return w;
      },
      py::arg("weights"), py::arg("bits"), py::arg("w_max") = 3.0);
  m.def(
      "mnist_sha256",
      [] {
        py::dict d;
        d["train-images-idx3-ubyte"] = nncore::kMnistTrainImagesSha256;
        d["train-labels-idx1-ubyte"] = nncore::kMnistTrainLabelsSha256;
        d["t10k-images-idx3-ubyte"] = nncore::kMnistTestImagesSha256;
        d["t10k-labels-idx1-ubyte"] = nncore::kMnistTestLabelsSha256;
        return d;
      });

#ifdef VERSION_INFO
  m.attr("__version__") = VERSION_INFO;
#else
  m.attr("__version__") = "dev";
#endif
}
