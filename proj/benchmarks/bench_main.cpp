#include "bellsim/circuit_doc.hpp"
#include "bellsim/circuits.hpp"
#include "bellsim/detection.hpp"
#include "bellsim/fock.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace bellsim;

constexpr Complex kEps{0.01, 0.0};

void BM_CreatorCircuit(benchmark::State& state) {
  const Circuit circuit = bell_creator(kEps);
  const PairState input = make_downconversion_state(kEps, rect_vector(RectLabel::HH));
  for (auto _ : state) {
    PairState out = run_circuit(input, circuit);
    benchmark::DoNotOptimize(out);
  }
}
BENCHMARK(BM_CreatorCircuit);

void BM_MappingReport(benchmark::State& state) {
  for (auto _ : state) {
    MappingReport report = mapping_report(Device::analyzer, kEps, 1e-12);
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(BM_MappingReport);

void BM_ValidateSwitch(benchmark::State& state) {
  PairState point;
  point.pair_amps(0) = Complex{1e-3, 0.0};
  const int n_max = int(state.range(0));
  for (auto _ : state) {
    ValidityReport report = validate_switch(point, Complex{-2e-3, 0.0}, n_max);
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(BM_ValidateSwitch)->Arg(2)->Arg(3)->Arg(4);

void BM_SampleShots(benchmark::State& state) {
  const PairState created = make_downconversion_state(
      Complex{-0.1, 0.0}, bell_vector(BellLabel::psi_minus));
  const BellIdentification id = identify_bell(created, Complex{0.1, 0.0});
  const std::uint64_t shots = std::uint64_t(state.range(0));
  for (auto _ : state) {
    ShotCounts counts = sample_shots(id.distribution, shots, 1);
    benchmark::DoNotOptimize(counts);
  }
  state.SetItemsProcessed(std::int64_t(state.iterations()) * std::int64_t(shots));
}
BENCHMARK(BM_SampleShots)->Arg(10000)->Arg(100000);

void BM_DocRoundTrip(benchmark::State& state) {
  const std::string text = serialize_circuit_doc(describe_analyzer(kEps));
  for (auto _ : state) {
    CircuitDoc doc = parse_circuit_doc(text);
    std::string out = serialize_circuit_doc(doc);
    benchmark::DoNotOptimize(out);
  }
}
BENCHMARK(BM_DocRoundTrip);

}  // namespace

BENCHMARK_MAIN();
