#!/usr/bin/env python3
# Copyright 2026 The adaudit Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Writes tests/data/stats_oracle.json from scipy.

KS: statistic from scipy.stats.ks_2samp, p-value from the limiting
Kolmogorov distribution, scipy.special.kolmogorov(sqrt(nm/(n+m)) * D).
Pearson: scipy.stats.pearsonr (two-sided, exact t distribution).
"""

import json
import math
from pathlib import Path

import numpy as np
import scipy
from scipy import special, stats

OUT = Path(__file__).resolve().parents[1] / "data" / "stats_oracle.json"


def main() -> None:
    rng = np.random.default_rng(20231001)
    ks_cases = []
    for i in range(100):
        n, m = rng.integers(3, 60, size=2)
        a = rng.normal(0.0, 1.0, n)
        b = rng.normal(rng.uniform(-1.0, 1.0), rng.uniform(0.5, 2.0), m)
        if i % 4 == 0:  # ties within and across samples
            a, b = np.round(a, 1), np.round(b, 1)
        d = float(stats.ks_2samp(a, b).statistic)
        p = float(special.kolmogorov(math.sqrt(n * m / (n + m)) * d))
        ks_cases.append({"a": a.tolist(), "b": b.tolist(), "statistic": d, "p_value": p})

    pearson_cases = []
    for i in range(100):
        n = int(rng.integers(3, 60))
        x = rng.normal(0.0, 1.0, n)
        rho = rng.uniform(-0.95, 0.95)
        y = rho * x + math.sqrt(1 - rho * rho) * rng.normal(0.0, 1.0, n)
        if i % 5 == 0:
            x = np.round(x * 10)  # integer-valued ranks-like data
        r, p = stats.pearsonr(x, y)
        pearson_cases.append({"x": x.tolist(), "y": y.tolist(),
                              "statistic": float(r), "p_value": float(p)})

    OUT.parent.mkdir(parents=True, exist_ok=True)
    OUT.write_text(json.dumps({
        "generator": f"scipy {scipy.__version__}",
        "ks": ks_cases,
        "pearson": pearson_cases,
    }, indent=1) + "\n")


if __name__ == "__main__":
    main()
