/*
 * Copyright 2026 The adaudit Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <benchmark/benchmark.h>

#include <random>
#include <string>

#include "adaudit/entry_index.h"
#include "adaudit/pooling.h"
#include "adaudit/snapshot.h"
#include "adaudit/stats.h"

namespace adaudit {
namespace {

std::shared_ptr<const CrawlSnapshot> Corpus(size_t publishers) {
  std::mt19937_64 rng(7);
  CrawlSnapshot s;
  for (size_t p = 0; p < publishers; ++p) {
    std::string body;
    for (int r = 0; r < 40; ++r) {
      body += "net" + std::to_string(rng() % 50) + ".com, " + std::to_string(rng() % 2000) +
              (rng() % 4 ? ", DIRECT\n" : ", RESELLER\n");
    }
    FetchedBody b;
    b.url = "https://site" + std::to_string(p) + ".com/ads.txt";
    b.body = std::move(body);
    s.AddBody("site" + std::to_string(p) + ".com", FileKind::kAdsTxt, std::move(b));
  }
  s.Seal();
  return std::make_shared<const CrawlSnapshot>(std::move(s));
}

void BM_BuildPools(benchmark::State& state) {
  auto snap = Corpus(static_cast<size_t>(state.range(0)));
  for (auto _ : state) {
    EntryIndex index(snap);
    benchmark::DoNotOptimize(BuildPools(index));
  }
}
BENCHMARK(BM_BuildPools)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_KsTwoSample(benchmark::State& state) {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> n(0, 1);
  std::vector<double> a(static_cast<size_t>(state.range(0))), b(a.size());
  for (auto& x : a) x = n(rng);
  for (auto& x : b) x = n(rng) + 0.1;
  for (auto _ : state) benchmark::DoNotOptimize(KsTwoSample(a, b));
}
BENCHMARK(BM_KsTwoSample)->Arg(1000)->Arg(100000);

void BM_Pearson(benchmark::State& state) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(0, 1);
  std::vector<double> x(static_cast<size_t>(state.range(0))), y(x.size());
  for (size_t i = 0; i < x.size(); ++i) {
    x[i] = u(rng);
    y[i] = x[i] + u(rng);
  }
  for (auto _ : state) benchmark::DoNotOptimize(Pearson(x, y));
}
BENCHMARK(BM_Pearson)->Arg(100000);

}  // namespace
}  // namespace adaudit
