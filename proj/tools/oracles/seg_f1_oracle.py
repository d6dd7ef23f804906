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
"""Independent span-set F1 oracle for the Vietnamese segmentation fixtures.

Re-implements greedy maximum matching and boundary-span scoring from scratch
(no shared code with the C++ library) and prints micro-averaged precision,
recall and F1 for three configurations:

  full       the bundled dictionary
  reduced    the bundled dictionary minus every entry whose index in
             code-point-sorted order satisfies index % 10 == 9
  whitespace an empty dictionary (every syllable is a token)

Usage: seg_f1_oracle.py DICT GOLD [--conflicts]
"""

import sys
import unicodedata


def load_dictionary(path):
    entries = set()
    with open(path, encoding="utf-8") as f:
        for line in f:
            line = unicodedata.normalize("NFC", line.strip())
            if not line or line.startswith("#"):
                continue
            syllables = line.lower().split()
            if len(syllables) >= 2:
                entries.add(" ".join(syllables))
    return entries


def reduced(entries):
    ordered = sorted(entries)
    return {e for i, e in enumerate(ordered) if i % 10 != 9}


def load_gold(path):
    sentences = []
    with open(path, encoding="utf-8") as f:
        for line in f:
            line = unicodedata.normalize("NFC", line.rstrip("\n"))
            if not line.strip() or line.startswith("#"):
                continue
            sentences.append(line.split("|"))
    return sentences


def char_kind(ch):
    cat = unicodedata.category(ch)
    if ch.isspace():
        return "space"
    if cat[0] in ("L", "M"):
        return "letter"
    if cat == "Nd":
        return "digit"
    return "punct"


def pieces(text):
    """Yields (kind, start, end) over maximal letter/digit runs and single
    punctuation characters."""
    out = []
    i = 0
    n = len(text)
    while i < n:
        kind = char_kind(text[i])
        if kind == "space":
            i += 1
            continue
        j = i + 1
        if kind in ("letter", "digit"):
            while j < n and char_kind(text[j]) == kind:
                j += 1
        out.append((kind, i, j))
        i = j
    return out


def max_match_spans(text, entries, max_len):
    ps = pieces(text)
    spans = []
    i = 0
    while i < len(ps):
        kind, s, e = ps[i]
        if kind != "letter":
            spans.append((s, e))
            i += 1
            continue
        # run of consecutive syllables separated only by whitespace
        run = [ps[i]]
        k = i + 1
        while k < len(ps) and ps[k][0] == "letter" and len(run) < max_len:
            gap = text[run[-1][2]:ps[k][1]]
            if not gap or not gap.isspace():
                break
            run.append(ps[k])
            k += 1
        taken = 1
        for n in range(len(run), 1, -1):
            key = " ".join(text[a:b].lower() for _, a, b in run[:n])
            if key in entries:
                taken = n
                break
        spans.append((run[0][1], run[taken - 1][2]))
        i += taken
    return spans


def gold_spans(words):
    spans = []
    pos = 0
    for w in words:
        spans.append((pos, pos + len(w)))
        pos += len(w) + 1
    return spans


def score(sentences, entries):
    max_len = max((len(e.split()) for e in entries), default=1)
    inter = pred_n = gold_n = 0
    for words in sentences:
        text = " ".join(words)
        pred = set(max_match_spans(text, entries, max_len))
        gold = set(gold_spans(words))
        inter += len(pred & gold)
        pred_n += len(pred)
        gold_n += len(gold)
    p = inter / pred_n if pred_n else 1.0
    r = inter / gold_n if gold_n else 1.0
    f = 2 * p * r / (p + r) if p + r > 0 else 0.0
    return p * 100, r * 100, f * 100


def conflicts(sentences, entries):
    max_len = max((len(e.split()) for e in entries), default=1)
    for n, words in enumerate(sentences, 1):
        text = " ".join(words)
        pred = max_match_spans(text, entries, max_len)
        gold = gold_spans(words)
        if pred != gold:
            print(f"line {n}: gold={words}")
            print(f"        pred={[text[a:b] for a, b in pred]}")


def main(argv):
    entries = load_dictionary(argv[1])
    sentences = load_gold(argv[2])
    if "--conflicts" in argv:
        conflicts(sentences, entries)
        return
    for name, ents in (("full", entries), ("reduced", reduced(entries)),
                       ("whitespace", set())):
        p, r, f = score(sentences, ents)
        print(f"{name}\tP={p:.10f}\tR={r:.10f}\tF1={f:.10f}")


if __name__ == "__main__":
    main(sys.argv)
