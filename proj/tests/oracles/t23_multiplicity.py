#!/usr/bin/env python3
# Copyright 2026 The NMP Authors.
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
"""Exhaustive search for multiplicity functions on T_{2,3}.

Edges x0y0, x0y1, x1y0, x1y2; rows must sum to 3 and columns to 2.
Prints every solution; the tree forces exactly one.
"""

import itertools

EDGES = [(0, 0), (0, 1), (1, 0), (1, 2)]


def main():
    solutions = []
    for weights in itertools.product(range(4), repeat=len(EDGES)):
        rows = [0, 0]
        cols = [0, 0, 0]
        for (x, y), w in zip(EDGES, weights):
            rows[x] += w
            cols[y] += w
        if rows == [3, 3] and cols == [2, 2, 2]:
            solutions.append(weights)
    for s in solutions:
        print(" ".join(f"m(x{x}y{y})={w}" for (x, y), w in zip(EDGES, s)))
    print(f"solutions={len(solutions)}")


if __name__ == "__main__":
    main()
