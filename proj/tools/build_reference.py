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

"""Builds the bundled top-5,000 reference frequency lists from wordfreq.

Counts are word frequencies scaled to a nominal 100,000,000-token corpus.
For Vietnamese, multi-syllable dictionary words are added with wordfreq's
phrase estimate so that segmented tokens can be looked up. Phrase estimates
overlap their syllables' counts, so the declared total is raised to the sum
of the listed counts when that sum is larger.

Usage: build_reference.py LANG OUT [DICT]
"""

import sys
import unicodedata

from wordfreq import top_n_list, word_frequency

SCALE = 100_000_000
SIZE = 5000


def main(argv):
    lang, out = argv[1], argv[2]
    candidates = set(top_n_list(lang, SIZE + 1000))
    if len(argv) > 3:
        with open(argv[3], encoding="utf-8") as f:
            for line in f:
                line = unicodedata.normalize("NFC", line.strip()).lower()
                if line and not line.startswith("#") and " " in line:
                    candidates.add(line)
    counts = {}
    for term in candidates:
        count = round(word_frequency(term, lang) * SCALE)
        if count > 0:
            counts[term] = count
    ranked = sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))[:SIZE]
    total = max(SCALE, sum(c for _, c in ranked))
    with open(out, "w", encoding="utf-8") as f:
        f.write(f"refcorpus-v1 wordfreq-{lang} {total}\n")
        for term, count in ranked:
            f.write(f"{term}\t{count}\n")


if __name__ == "__main__":
    main(sys.argv)
