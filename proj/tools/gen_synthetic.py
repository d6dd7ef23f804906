#!/usr/bin/env python3
# Copyright 2026 The textlens Authors
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
"""Generates the synthetic Vietnamese throughput corpus.

Sentences mix dictionary words with frequent single syllables so that the
segmenter exercises both matched and unmatched paths. Output is
deterministic for a given seed.

Usage: gen_synthetic.py DICT REFERENCE N OUT [SEED]
"""

import random
import sys


def main(argv):
    dict_path, ref_path, n, out_path = argv[1], argv[2], int(argv[3]), argv[4]
    seed = int(argv[5]) if len(argv) > 5 else 20260101
    words = []
    with open(dict_path, encoding="utf-8") as f:
        for line in f:
            line = line.strip()
            if line and not line.startswith("#"):
                words.append(line.lower())
    syllables = []
    with open(ref_path, encoding="utf-8") as f:
        next(f)
        for line in f:
            term = line.split("\t")[0]
            if " " not in term:
                syllables.append(term)
            if len(syllables) >= 600:
                break
    rng = random.Random(seed)
    with open(out_path, "w", encoding="utf-8") as out:
        for _ in range(n):
            length = rng.randint(8, 20)
            toks = []
            for i in range(length):
                toks.append(rng.choice(words) if rng.random() < 0.4
                            else rng.choice(syllables))
                if i + 1 < length and rng.random() < 0.06:
                    toks[-1] += ","
            s = " ".join(toks)
            out.write(s[0].upper() + s[1:] + rng.choice([".", ".", ".", "!", "?"]) + "\n")


if __name__ == "__main__":
    main(sys.argv)
